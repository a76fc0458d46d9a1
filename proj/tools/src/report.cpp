#include "report.hpp"

#include <algorithm>

namespace tileforge::cli {

namespace {

constexpr std::int64_t kSafe = std::int64_t{1} << 53;

}  // namespace

Json to_json(std::int64_t v) {
  if (v > kSafe || v < -kSafe) return std::to_string(v);
  return v;
}

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return to_json(static_cast<std::int64_t>(v.get_si()));
  return v.get_str();
}

Json to_json(const Rational& v) {
  if (v.get_den() == 1) return to_json(Integer(v.get_num()));
  return to_string(v);
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Point& p) {
  Json out = Json::array();
  for (auto x : p) out.push_back(to_json(x));
  return out;
}

Json to_json(const std::vector<Point>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

Json to_json(const DigitSet& d) {
  Json out;
  out["provenance"] = describe(d.provenance());
  out["size"] = d.size();
  out["digits"] = to_json(d.digits());
  return out;
}

Json to_json(const Lattice& l) {
  Json out;
  out["basis"] = to_json(l.basis());
  out["index"] = to_json(l.index());
  return out;
}

Json to_json(const JordanDecomposition& dec) {
  Json out;
  out["J"] = to_json(dec.jordan);
  out["P"] = to_json(dec.similarity);
  Json blocks = Json::array();
  for (const auto& b : dec.blocks) {
    Json block;
    block["eigenvalue"] = to_json(b.eigenvalue);
    block["size"] = b.size;
    block["columns"] = b.chain_columns;
    blocks.push_back(std::move(block));
  }
  out["blocks"] = std::move(blocks);
  return out;
}

Json to_json(const ResidueCheck& r) {
  Json out;
  out["complete"] = r.complete;
  if (r.colliding_pair) out["colliding_pair"] = {to_json(r.colliding_pair->first), to_json(r.colliding_pair->second)};
  if (r.cardinality_gap)
    out["cardinality_gap"] = {{"digits", r.cardinality_gap->first}, {"abs_det", to_json(r.cardinality_gap->second)}};
  return out;
}

Json to_json(const ConnectivityVerdict& v) {
  Json out;
  out["status"] = to_string(v.status);
  out["criterion"] = to_string(v.criterion);
  out["witness"] = v.witness;
  if (v.separated) out["separated"] = {to_json(v.separated->first), to_json(v.separated->second)};
  if (!v.edge_tests.empty()) {
    Json tests = Json::array();
    for (const auto& t : v.edge_tests) {
      Json test;
      test["g"] = to_json(t.g);
      test["connected"] = t.connected;
      test["points"] = t.points;
      test["components"] = t.components;
      tests.push_back(std::move(test));
    }
    out["edge_tests"] = std::move(tests);
  }
  return out;
}

Json to_json(const ShellCertificate& c) {
  Json out;
  out["eigenvalue"] = to_json(c.eigenvalue);
  out["size"] = c.size;
  out["passed"] = c.passed();
  out["inner_points"] = c.inner_points.size();
  out["outer_points"] = c.outer_count;
  out["shell_points"] = c.shell_count;
  out["digits"] = c.digit_count;
  Json checks = Json::array();
  for (const ShellCheck* check : {&c.sandwich, &c.shell_adjacency, &c.digit_connectivity})
    checks.push_back({{"name", check->name}, {"passed", check->passed}, {"detail", check->detail}});
  out["checks"] = std::move(checks);
  return out;
}

Json to_json(const LevelCheck& c) {
  Json out;
  out["depth"] = c.depth;
  out["points"] = c.points;
  out["components"] = c.components;
  out["connected"] = c.connected;
  return out;
}

Json to_json(const PipelineResult& r) {
  Json out;
  out["jordan"] = to_json(r.decomposition);
  Json certificates = Json::array();
  for (const auto& c : r.certificates) certificates.push_back(to_json(c));
  out["shell_certificates"] = std::move(certificates);
  out["D_J"] = to_json(r.jordan_digits);
  out["D_A"] = to_json(r.digits);
  out["residue"] = to_json(r.residue);
  out["verdict"] = to_json(r.verdict);
  return out;
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const Json& e) {
    return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) { return x.is_primitive(); }));
  });
}

void format_into(const Json& j, std::size_t depth, std::string& out) {
  if (is_flat(j)) {
    out += j.dump();
    return;
  }
  const std::string pad(2 * (depth + 1), ' ');
  const bool object = j.is_object();
  out += object ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (object) out += Json(it.key()).dump() + ": ";
    format_into(it.value(), depth + 1, out);
  }
  out += "\n" + std::string(2 * depth, ' ') + (object ? "}" : "]");
}

}  // namespace

std::string format(const Json& j) {
  if (j.empty() && j.is_structured()) return j.dump();
  std::string out;
  format_into(j, 0, out);
  return out;
}

}  // namespace tileforge::cli
