#include "tileforge/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace tileforge {

namespace {

constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

AdjacencyBasis::AdjacencyBasis(std::vector<Point> vectors) : vectors_(std::move(vectors)) {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (std::all_of(vectors_[i].begin(), vectors_[i].end(), [](std::int64_t x) { return x == 0; }))
      throw std::invalid_argument("adjacency vector must be nonzero");
    for (std::size_t j = 0; j < i; ++j)
      if (vectors_[i] == vectors_[j]) throw std::invalid_argument("adjacency vectors must be distinct");
  }
}

AdjacencyBasis AdjacencyBasis::standard(std::size_t dim) {
  std::vector<Point> vs;
  for (std::size_t i = 0; i < dim; ++i) {
    Point e(dim, 0);
    e[i] = 1;
    vs.push_back(std::move(e));
  }
  return AdjacencyBasis(std::move(vs));
}

AdjacencyBasis AdjacencyBasis::of(const Lattice& lattice) {
  std::vector<Point> vs;
  for (const auto& b : lattice.basis_vectors()) vs.push_back(to_point(b));
  return AdjacencyBasis(std::move(vs));
}

ComponentReport is_B_connected(const PointSet& points, const AdjacencyBasis& basis) {
  const std::size_t n = points.size();
  if (n == 0) throw std::invalid_argument("connectivity of an empty set");
  if (n >= kAbsent) throw BudgetExceeded("point set too large for connectivity analysis");
  const std::size_t m = points.dim();
  for (const auto& b : basis.vectors())
    if (b.size() != m) throw DimensionError("adjacency vector dimension mismatch");

  DisjointSets sets(n);
  Point probe(m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = points[i];
    for (const auto& b : basis.vectors()) {
      bool overflow = false;
      for (std::size_t k = 0; k < m; ++k) overflow |= __builtin_add_overflow(p[k], b[k], &probe[k]);
      if (overflow) continue;
      const std::size_t j = points.find(probe);
      if (j != n) sets.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }

  ComponentReport report;
  report.component.assign(n, kAbsent);
  std::vector<std::uint32_t> label_of_root(n, kAbsent);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t root = sets.find(static_cast<std::uint32_t>(i));
    if (label_of_root[root] == kAbsent) {
      label_of_root[root] = static_cast<std::uint32_t>(report.representatives.size());
      const auto p = points[i];
      report.representatives.emplace_back(p.begin(), p.end());
      report.sizes.push_back(0);
    }
    report.component[i] = label_of_root[root];
    ++report.sizes[label_of_root[root]];
  }
  report.component_count = report.representatives.size();
  report.connected = report.component_count == 1;
  return report;
}

LevelSet next_level_set(const IntMatrix& a, const DigitSet& digits, const LevelSet& previous,
                        const ExecutionOptions& options) {
  const std::size_t m = digits.dim();
  if (!a.is_square() || a.rows() != m || previous.points.dim() != m)
    throw DimensionError("level set dimension does not match matrix");
  const std::size_t prev = previous.size();
  const std::size_t nd = digits.size();
  if (nd != 0 && prev > options.point_budget / nd)
    throw BudgetExceeded("level set of depth " + std::to_string(previous.depth + 1) + " would exceed the point budget of " +
                         std::to_string(options.point_budget) + " points");
  const SmallMatrix matrix(a);
  std::vector<std::int64_t> coords(prev * nd * m);
  parallel_chunks(prev, options.threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    std::vector<std::int64_t> image(m);
    for (std::size_t i = begin; i < end; ++i) {
      matrix.apply(previous.points[i], image);
      for (std::size_t j = 0; j < nd; ++j) {
        std::int64_t* out = coords.data() + (i * nd + j) * m;
        const auto& d = digits.digits()[j];
        for (std::size_t k = 0; k < m; ++k) out[k] = checked_add(image[k], d[k]);
      }
    }
  });
  return LevelSet{previous.depth + 1, PointSet(m, std::move(coords))};
}

LevelSet level_set(const IntMatrix& a, const DigitSet& digits, std::size_t n, const ExecutionOptions& options) {
  if (n == 0) throw std::invalid_argument("level set depth must be at least 1");
  if (digits.size() > options.point_budget) throw BudgetExceeded("digit set exceeds the point budget");
  LevelSet current{1, digits.as_point_set()};
  while (current.depth < n) current = next_level_set(a, digits, current, options);
  return current;
}

std::vector<LevelCheck> check_level_connectivity(const IntMatrix& a, const DigitSet& digits, const Lattice& lattice,
                                                 std::size_t n_max, const ExecutionOptions& options) {
  if (lattice.dim() != digits.dim()) throw DimensionError("lattice dimension does not match digit set");
  const AdjacencyBasis basis = AdjacencyBasis::of(lattice);
  std::vector<LevelCheck> out;
  if (n_max == 0) return out;
  LevelSet current = level_set(a, digits, 1, options);
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > 1) current = next_level_set(a, digits, current, options);
    if (lattice.index() != 1)
      for (std::size_t i = 0; i < current.size(); ++i)
        if (!lattice.contains(current.points[i]))
          throw InvariantViolation("level set D_" + std::to_string(n) + " leaves the lattice at " +
                                   format_point(current.points[i]));
    const ComponentReport r = is_B_connected(current.points, basis);
    out.push_back({n, current.size(), r.component_count, r.connected});
  }
  return out;
}

EdgeNeighbors edge_neighbors(const IntMatrix& a, const Lattice& lattice) {
  if (!a.is_square() || a.rows() != lattice.dim()) throw DimensionError("lattice dimension does not match matrix");
  EdgeNeighbors out;
  for (const auto& b : lattice.basis_vectors()) {
    IntVector g = a * b;
    IntVector neg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
    out.all.push_back(g);
    out.all.push_back(std::move(neg));
    out.positive.push_back(std::move(g));
  }
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::connected: return "connected";
    case Status::disconnected: return "disconnected";
    case Status::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::digit_connectivity: return "digit-B-connectivity";
    case Criterion::sufficient_condition: return "sufficient-condition";
    case Criterion::level_sets: return "level-sets";
    case Criterion::shell_certificate: return "shell-certificate";
    case Criterion::pipeline: return "pipeline";
  }
  return "unknown";
}

ConnectivityVerdict sufficient_condition(const IntMatrix& a, const ExecutionOptions& options) {
  ConnectivityVerdict verdict;
  verdict.criterion = Criterion::sufficient_condition;
  const std::size_t m = a.rows();
  const DigitSet digits = centered_digit_set(a, options);

  std::optional<Lattice> lattice;
  try {
    lattice = translation_lattice(a, digits);
  } catch (const NonConvergence& e) {
    verdict.witness = e.what();
    return verdict;
  }
  if (!is_invariant_lattice(a, *lattice)) {
    verdict.witness = "lattice of translations is not A-invariant";
    return verdict;
  }

  // In lattice coordinates c (z = B c) the parallelepiped AF becomes A'F0 with
  // A' = B^{-1} A B, and Gamma-adjacency becomes unit-step adjacency.
  const IntMatrix& b = lattice->basis();
  const IntMatrix a_lat = to_integer(inverse(b) * to_rational(a) * to_rational(b));
  const DigitSet lat_digits = lattice->index() == 1 ? digits : centered_digit_set(a_lat, options);
  const AdjacencyBasis unit = AdjacencyBasis::standard(m);
  const SmallMatrix to_original(b);

  std::vector<Point> base = lat_digits.digits();
  bool all_connected = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (int sign : {1, -1}) {
      Point shift = to_point(a_lat.column(i));
      for (auto& x : shift) x *= sign;
      std::vector<Point> pts = base;
      for (const auto& d : base) {
        Point s(m);
        for (std::size_t k = 0; k < m; ++k) s[k] = checked_add(d[k], shift[k]);
        pts.push_back(std::move(s));
      }
      const PointSet set = PointSet::from_points(m, pts);
      const ComponentReport r = is_B_connected(set, unit);
      IntVector g = a * b.column(i);
      if (sign < 0)
        for (auto& x : g) x = -x;
      verdict.edge_tests.push_back({g, r.connected, set.size(), r.component_count});
      if (!r.connected && all_connected) {
        all_connected = false;
        Point first(m), second(m);
        to_original.apply(r.representatives[0], first);
        to_original.apply(r.representatives[1], second);
        verdict.separated = std::make_pair(first, second);
        std::ostringstream os;
        os << "(AF u (g + AF)) cut with the lattice is lattice-disconnected for g = "
           << format_point(to_point(g)) << " (" << r.component_count << " components)";
        verdict.witness = os.str();
      }
    }
  }
  if (all_connected) {
    verdict.status = Status::connected;
    verdict.witness = "all " + std::to_string(2 * m) + " unions (AF u (g + AF)) with g in S_AF are lattice-connected";
  }
  return verdict;
}

namespace {

// Integer points of a half-open interval: (lo, hi] when !mirrored, [-hi, -lo) when mirrored.
std::pair<std::int64_t, std::int64_t> integer_range(const Rational& lo, const Rational& hi, bool mirrored) {
  const std::int64_t first = to_int64(floor(lo)) + 1;
  const std::int64_t last = to_int64(floor(hi));
  if (!mirrored) return {first, last};
  return {-last, -first};
}

std::vector<Point> box_points(const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges) {
  std::vector<Point> out{Point{}};
  for (const auto& [lo, hi] : ranges) {
    std::vector<Point> next;
    for (const auto& prefix : out)
      for (std::int64_t x = lo; x <= hi; ++x) {
        Point p = prefix;
        p.push_back(x);
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

ShellCertificate evaluate_shell_certificate(const Integer& lambda, std::size_t k) {
  const DigitSet digits = block_digit_set(lambda, k);
  ShellCertificate cert;
  cert.eigenvalue = lambda;
  cert.size = k;
  cert.digit_count = digits.size();

  // Cube bounds use |lambda|; a negative eigenvalue flips which end of each
  // half-open interval is closed.
  const Rational half_abs = make_rational(abs(lambda), 2);
  const Rational half(1, 2);
  const bool mirrored = lambda < 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> inner, outer;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    inner.push_back(integer_range(-half_abs + half, half_abs - half, mirrored));
    outer.push_back(integer_range(-half_abs - half, half_abs + half, mirrored));
  }
  inner.push_back(integer_range(-half_abs, half_abs, mirrored));
  outer.push_back(integer_range(-half_abs, half_abs, mirrored));

  cert.inner_points = box_points(inner);
  const std::vector<Point> outer_points = box_points(outer);
  const PointSet inner_set = PointSet::from_points(k, cert.inner_points);
  const PointSet outer_set = PointSet::from_points(k, outer_points);
  cert.outer_count = outer_set.size();

  cert.sandwich.name = "sandwich";
  cert.sandwich.passed = true;
  for (const auto& p : cert.inner_points)
    if (!digits.contains(p)) {
      cert.sandwich.passed = false;
      cert.sandwich.detail = "C_inner point " + format_point(p) + " is not a digit";
      break;
    }
  if (cert.sandwich.passed)
    for (const auto& d : digits.digits())
      if (!outer_set.contains(d)) {
        cert.sandwich.passed = false;
        cert.sandwich.detail = "digit " + format_point(d) + " lies outside C_outer";
        break;
      }

  cert.shell_adjacency.name = "shell-adjacency";
  cert.shell_adjacency.passed = true;
  std::size_t unattached = 0;
  std::string first_unattached;
  for (const auto& p : outer_points) {
    if (inner_set.contains(p)) continue;
    ++cert.shell_count;
    bool adjacent = false;
    Point q = p;
    for (std::size_t i = 0; i < k && !adjacent; ++i)
      for (int step : {-1, 1}) {
        q[i] = p[i] + step;
        adjacent = adjacent || inner_set.contains(q);
        q[i] = p[i];
      }
    if (!adjacent) {
      if (unattached++ == 0) first_unattached = format_point(p);
      cert.shell_adjacency.passed = false;
    }
  }
  if (!cert.shell_adjacency.passed)
    cert.shell_adjacency.detail = std::to_string(unattached) + " shell point(s) at taxicab distance > 1 from C_inner, first " +
                                  first_unattached;

  cert.digit_connectivity.name = "digit-connectivity";
  const ComponentReport r = is_B_connected(digits.as_point_set(), AdjacencyBasis::standard(k));
  cert.digit_connectivity.passed = r.connected;
  if (!r.connected)
    cert.digit_connectivity.detail = "block digit set has " + std::to_string(r.component_count) + " components";
  return cert;
}

ShellCertificate shell_certificate(const Integer& lambda, std::size_t k) {
  ShellCertificate cert = evaluate_shell_certificate(lambda, k);
  for (const ShellCheck* c : {&cert.sandwich, &cert.shell_adjacency, &cert.digit_connectivity})
    if (!c->passed)
      throw CertificateFailure(c->name, "shell certificate for Jordan block (" + lambda.get_str() + ", " +
                                            std::to_string(k) + ") failed check '" + c->name + "': " + c->detail);
  return cert;
}

}  // namespace tileforge
