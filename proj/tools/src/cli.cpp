#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "report.hpp"
#include "tileforge_cli/cli.hpp"

namespace tileforge::cli {

namespace {

struct Common {
  std::string matrix;
  std::string json_out;
  unsigned threads = 1;
  bool timings = false;
};

struct Settings {
  Common common;
  std::size_t n = 3;
  std::size_t depth = 6;
  std::string size = "256x256";
  std::string out;
  std::string points_out;
};

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled) {}
  template <class F>
  auto time(const std::string& stage, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    if (enabled_) {
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      stages_[stage] = elapsed.count();
    }
    return result;
  }
  void attach(Json& report) const {
    if (enabled_) report["timings_ms"] = stages_;
  }

 private:
  bool enabled_;
  Json stages_ = Json::object();
};

ExecutionOptions execution_options(const Common& c) {
  ExecutionOptions options;
  options.threads = std::max(1U, c.threads);
  if (const char* env = std::getenv("TILEFORGE_BUDGET")) {
    const std::string text(env);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("invalid TILEFORGE_BUDGET '" + text + "', expected a positive integer");
    options.point_budget = std::stoull(text);
    if (options.point_budget == 0) throw ParseError("invalid TILEFORGE_BUDGET '0', expected a positive integer");
  }
  return options;
}

std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
  const auto x = text.find('x');
  auto number = [&](const std::string& part) -> std::size_t {
    if (part.empty() || part.size() > 6 || part.find_first_not_of("0123456789") != std::string::npos || std::stoul(part) == 0)
      throw ParseError("invalid image size '" + text + "', expected WxH with positive integers");
    return std::stoul(part);
  };
  if (x == std::string::npos) number("");
  return {number(text.substr(0, x)), number(text.substr(x + 1))};
}

void emit(const Json& report, const Common& c, std::ostream& out) {
  const std::string text = format(report) + "\n";
  if (c.json_out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.json_out, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + c.json_out + "'");
  file << text;
}

Json eigen_json(const EigenStructure& es) {
  Json out = Json::array();
  for (const auto& ev : es.eigenvalues) out.push_back({{"value", to_json(ev.value)}, {"multiplicity", ev.multiplicity}});
  return out;
}

int analyze(const IntMatrix& a, const Settings& s, std::ostream& out) {
  const ExecutionOptions options = execution_options(s.common);
  Stopwatch watch(s.common.timings);
  Json r;
  r["matrix"] = to_json(a);
  r["dimension"] = a.rows();
  r["determinant"] = to_json(det(a));

  const EigenStructure es = watch.time("spectrum", [&] { return integer_eigenvalues(a); });
  require_dilation(a);
  r["characteristic_polynomial"] = to_json(es.characteristic_polynomial.coefficients);
  r["eigenvalues"] = eigen_json(es);

  const JordanDecomposition dec = watch.time("jordan", [&] { return jordan_decompose(a); });
  r["jordan"] = to_json(dec);
  r["jordan"]["similarity_verified"] = verify_similarity(a, dec);

  const DigitSet digits = watch.time("digits", [&] { return centered_digit_set(a, options); });
  std::optional<PipelineResult> pipeline;
  std::string pipeline_error;
  try {
    pipeline = watch.time("pipeline", [&] { return pipeline_connected_digits(a); });
  } catch (const CertificateFailure& e) {
    pipeline_error = e.what();
  }
  r["digits"]["canonical"] = to_json(digits);
  r["digits"]["jordan"] = pipeline ? to_json(pipeline->jordan_digits) : Json(nullptr);
  r["digits"]["pipeline"] = pipeline ? to_json(pipeline->digits) : Json(nullptr);

  std::optional<Lattice> lattice;
  try {
    lattice = watch.time("lattice", [&] { return translation_lattice(a, digits); });
    r["lattice"] = to_json(*lattice);
    r["lattice"]["invariant"] = is_invariant_lattice(a, *lattice);
  } catch (const NonConvergence& e) {
    r["lattice"] = {{"error", e.what()}};
  }

  Json verdicts;
  if (lattice) {
    const ComponentReport comp = is_B_connected(digits.as_point_set(), AdjacencyBasis::of(*lattice));
    verdicts["digit_connectivity"] = {{"connected", comp.connected}, {"components", comp.component_count}};
  }
  verdicts["sufficient_condition"] = to_json(watch.time("sufficient_condition", [&] { return sufficient_condition(a, options); }));

  // Levels past the point budget are reported as truncated rather than failing the whole report.
  constexpr std::size_t kMaxLevel = 4;
  const Integer q = abs(det(a));
  std::size_t reachable = 0;
  Integer size = 1;
  while (reachable < kMaxLevel && (size *= q) <= Integer(std::to_string(options.point_budget))) ++reachable;
  Json levels = Json::array();
  if (lattice && reachable > 0)
    for (const auto& c : watch.time("levels", [&] { return check_level_connectivity(a, digits, *lattice, reachable, options); }))
      levels.push_back(to_json(c));
  for (std::size_t n = levels.size() + 1; n <= kMaxLevel; ++n) levels.push_back({{"depth", n}, {"truncated", true}});
  verdicts["level_checks"] = std::move(levels);

  Json certificates = Json::array();
  for (const auto& b : dec.blocks) certificates.push_back(to_json(evaluate_shell_certificate(b.eigenvalue, b.size)));
  verdicts["shell_certificates"] = std::move(certificates);
  if (pipeline)
    verdicts["pipeline"] = to_json(pipeline->verdict);
  else
    verdicts["pipeline"] = {{"status", "failed"}, {"error", pipeline_error}};
  r["verdicts"] = std::move(verdicts);

  r["residue"]["canonical"] = to_json(is_complete_residue_system(a, digits));
  r["residue"]["pipeline"] = pipeline ? to_json(pipeline->residue) : Json(nullptr);
  r["diameter_bound"] = to_json(diameter_bound(a, digits));
  watch.attach(r);
  emit(r, s.common, out);
  return ExitCode::ok;
}

int digits(const IntMatrix& a, const Settings& s, std::ostream& out) {
  const DigitSet d = centered_digit_set(a, execution_options(s.common));
  if (!s.common.json_out.empty()) {
    Json r;
    r["matrix"] = to_json(a);
    r["determinant"] = to_json(det(a));
    r["digits"] = to_json(d);
    r["residue"] = to_json(is_complete_residue_system(a, d));
    emit(r, s.common, out);
    return ExitCode::ok;
  }
  for (std::size_t k = 0; k < d.dim(); ++k) out << (k ? ",x" : "x") << k + 1;
  out << '\n';
  for (const auto& p : d.digits()) {
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << p[k];
    out << '\n';
  }
  return ExitCode::ok;
}

int jordan(const IntMatrix& a, const Settings& s, std::ostream& out) {
  Json r;
  r["matrix"] = to_json(a);
  r["eigenvalues"] = eigen_json(integer_eigenvalues(a));
  const JordanDecomposition dec = jordan_decompose(a);
  r["jordan"] = to_json(dec);
  r["jordan"]["similarity_verified"] = verify_similarity(a, dec);
  emit(r, s.common, out);
  return ExitCode::ok;
}

int check(const IntMatrix& a, const Settings& s, std::ostream& out) {
  require_dilation(a);
  const ConnectivityVerdict v = sufficient_condition(a, execution_options(s.common));
  Json r;
  r["sufficient_condition"] = to_string(v.status);
  r["matrix"] = to_json(a);
  r["verdict"] = to_json(v);
  emit(r, s.common, out);
  return ExitCode::ok;
}

int levels(const IntMatrix& a, const Settings& s, std::ostream& out) {
  require_dilation(a);
  if (s.n == 0) throw ParseError("--n must be at least 1");
  const ExecutionOptions options = execution_options(s.common);
  const DigitSet d = centered_digit_set(a, options);
  const Lattice lattice = translation_lattice(a, d);
  Json r;
  r["matrix"] = to_json(a);
  r["lattice"] = to_json(lattice);
  Json checks = Json::array();
  for (const auto& c : check_level_connectivity(a, d, lattice, s.n, options)) checks.push_back(to_json(c));
  r["levels"] = std::move(checks);
  emit(r, s.common, out);
  return ExitCode::ok;
}

void write_pgm(const RasterImage& img, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << "P5\n" << img.width << ' ' << img.height << "\n255\n";
  std::string bytes(img.pixels.size(), '\0');
  for (std::size_t i = 0; i < img.pixels.size(); ++i) bytes[i] = img.pixels[i] ? static_cast<char>(255) : '\0';
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

int render(const IntMatrix& a, const Settings& s, std::ostream& out) {
  if (s.out.empty() && s.points_out.empty()) throw ParseError("render needs --out and/or --points");
  if (s.depth == 0) throw ParseError("--depth must be at least 1");
  const auto [width, height] = parse_size(s.size);
  require_dilation(a);
  const ExecutionOptions options = execution_options(s.common);
  const TileCloud cloud = approximate(a, centered_digit_set(a, options), s.depth, options);
  Json r;
  r["matrix"] = to_json(a);
  r["depth"] = s.depth;
  r["points"] = cloud.size();
  r["gap_bound"] = to_json(cloud.gap_bound());
  if (!s.points_out.empty()) {
    std::ofstream file(s.points_out, std::ios::binary);
    if (!file) throw ParseError("cannot write '" + s.points_out + "'");
    export_points(cloud, file);
    r["points_file"] = s.points_out;
  }
  if (!s.out.empty()) {
    const RasterImage img = rasterize(cloud, width, height, std::nullopt, options);
    write_pgm(img, s.out);
    r["image"] = s.out;
    r["width"] = width;
    r["height"] = height;
    r["occupied"] = img.occupied();
    r["viewport"] = {to_json(img.viewport.xmin), to_json(img.viewport.xmax), to_json(img.viewport.ymin),
                     to_json(img.viewport.ymax)};
  }
  emit(r, s.common, out);
  return ExitCode::ok;
}

int pipeline(const IntMatrix& a, const Settings& s, std::ostream& out) {
  require_dilation(a);
  Json r;
  r["matrix"] = to_json(a);
  const Json result = to_json(pipeline_connected_digits(a));
  for (const auto& [key, value] : result.items()) r[key] = value;
  emit(r, s.common, out);
  return ExitCode::ok;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return ExitCode::usage;
    case ErrorKind::scope: return ExitCode::scope;
    case ErrorKind::budget: return ExitCode::budget;
    case ErrorKind::internal: break;
  }
  return ExitCode::internal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact digit sets, connectivity checks and renders for self-affine tiles", "tileforge"};
  app.require_subcommand(1);
  Settings s;

  using Handler = int (*)(const IntMatrix&, const Settings&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--matrix", s.common.matrix, "integer matrix, rows ';'-separated, entries ','-separated")->required();
    sub->add_option("--json", s.common.json_out, "write the JSON report to this file instead of stdout");
    sub->add_option("--threads", s.common.threads, "worker threads (results do not depend on it)")->check(CLI::Range(1U, 256U));
    commands.emplace_back(sub, h);
    return sub;
  };
  add("analyze", "full report: spectrum, Jordan form, digit sets, lattice and all verdicts", analyze)
      ->add_flag("--timings", s.common.timings, "include wall-clock stage timings (breaks byte-identical output)");
  add("digits", "centered canonical digit set as CSV", digits);
  add("jordan", "integral Jordan decomposition", jordan);
  add("check", "sufficient-condition connectivity test", check);
  add("levels", "connectivity of the level sets D_1..D_n", levels)->add_option("--n", s.n, "deepest level");
  CLI::App* r = add("render", "rasterize the depth-n approximation to a PGM image", render);
  r->add_option("--depth", s.depth, "approximation depth");
  r->add_option("--size", s.size, "image size WxH");
  r->add_option("--out", s.out, "output PGM path");
  r->add_option("--points", s.points_out, "also export the exact points, one per line");
  add("pipeline", "Jordan-route digit set with block certificates", pipeline);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  try {
    const IntMatrix a = parse_matrix(s.common.matrix);
    for (const auto& [sub, handler] : commands)
      if (sub->parsed()) return handler(a, s, out);
    return ExitCode::usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return ExitCode::budget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitCode::internal;
  }
}

}  // namespace tileforge::cli
