#include "tileforge/digitset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tileforge/jordan.hpp"

namespace tileforge {

namespace {

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
  }
  return os.str();
}

}  // namespace

std::string describe(const Provenance& p) {
  struct Visitor {
    std::string operator()(const provenance::CenteredCanonical& c) const {
      return "centered-canonical(" + format_matrix(c.matrix) + ")";
    }
    std::string operator()(const provenance::Block& b) const {
      return "block(" + b.eigenvalue.get_str() + "," + std::to_string(b.size) + ")";
    }
    std::string operator()(const provenance::Product& p) const {
      std::string s = "product(";
      for (std::size_t i = 0; i < p.parts.size(); ++i) s += (i ? "," : "") + p.parts[i];
      return s + ")";
    }
    std::string operator()(const provenance::Mapped& m) const {
      return "mapped(" + format_matrix(m.map) + "," + m.source + ")";
    }
  };
  return std::visit(Visitor{}, p);
}

DigitSet::DigitSet(std::size_t dim, std::vector<Point> digits, Provenance provenance)
    : dim_(dim), digits_(std::move(digits)), provenance_(std::move(provenance)) {
  for (const auto& d : digits_)
    if (d.size() != dim_) throw DimensionError("digit dimension mismatch");
  std::sort(digits_.begin(), digits_.end());
  if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end())
    throw std::invalid_argument("digit set contains a repeated digit");
}

bool DigitSet::contains(const Point& p) const { return std::binary_search(digits_.begin(), digits_.end(), p); }

bool in_centered_image(const IntMatrix& a, const IntVector& z) {
  const RatVector x = inverse(a) * to_rational(z);
  const Rational half(1, 2);
  return std::all_of(x.begin(), x.end(), [&](const Rational& v) { return -half < v && v <= half; });
}

DigitSet centered_digit_set(const IntMatrix& a, const ExecutionOptions& options) {
  if (!a.is_square()) throw DimensionError("digit set of a non-square matrix");
  const std::size_t m = a.rows();
  const Integer q = det(a);
  if (q == 0) throw SingularMatrixError("matrix is singular; no digit set");

  // A^{-1} z = adj(A) z / q, so x_i in (-1/2, 1/2] iff -|q| < 2 sign(q) (adj z)_i <= |q|.
  const SmallMatrix adj(adjugate(a));
  const std::int64_t abs_q = to_int64(abs(q));
  const std::int64_t sign = q < 0 ? -1 : 1;

  std::vector<std::int64_t> bound(m);
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < m; ++i) {
    Integer row_sum = 0;
    for (std::size_t j = 0; j < m; ++j) row_sum += abs(a(i, j));
    bound[i] = to_int64((row_sum + 1) / 2);
    const auto width = static_cast<std::uint64_t>(2 * bound[i] + 1);
    if (candidates > options.point_budget / width)
      throw BudgetExceeded("digit enumeration box exceeds the point budget");
    candidates *= width;
  }

  std::vector<std::vector<Point>> found(chunk_count(candidates, options.threads));
  parallel_chunks(candidates, options.threads, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    Point z(m);
    std::vector<std::int64_t> image(m);
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = m; i-- > 0;) {
        const auto width = static_cast<std::size_t>(2 * bound[i] + 1);
        z[i] = static_cast<std::int64_t>(rest % width) - bound[i];
        rest /= width;
      }
      adj.apply(z, image);
      bool inside = true;
      for (std::size_t i = 0; i < m && inside; ++i) {
        const std::int64_t s = checked_mul(2 * sign, image[i]);
        inside = -abs_q < s && s <= abs_q;
      }
      if (inside) found[chunk].push_back(z);
    }
  });
  std::vector<Point> digits;
  for (auto& part : found) digits.insert(digits.end(), part.begin(), part.end());
  if (Integer(static_cast<unsigned long>(digits.size())) != abs(q))
    throw InvariantViolation("centered digit set has " + std::to_string(digits.size()) + " digits, expected |det A| = " +
                             Integer(abs(q)).get_str());
  return DigitSet(m, std::move(digits), provenance::CenteredCanonical{a});
}

ResidueCheck is_complete_residue_system(const IntMatrix& a, const DigitSet& digits) {
  if (!a.is_square() || a.rows() != digits.dim()) throw DimensionError("digit set dimension does not match matrix");
  const std::size_t m = a.rows();
  const Integer q = abs(det(a));
  ResidueCheck check;
  if (Integer(static_cast<unsigned long>(digits.size())) != q) check.cardinality_gap = {digits.size(), q};
  if (q == 0) return check;

  std::vector<IntVector> columns;
  for (std::size_t j = 0; j < m; ++j) columns.push_back(a.column(j));
  const IntMatrix h = hermite_normal_form(columns, m);

  // Reduction against the lower-triangular basis gives the canonical coset representative.
  std::map<IntVector, const Point*> seen;
  for (const auto& d : digits.digits()) {
    IntVector v = to_int_vector(d);
    for (std::size_t i = 0; i < m; ++i) {
      Integer t;
      mpz_fdiv_q(t.get_mpz_t(), v[i].get_mpz_t(), h(i, i).get_mpz_t());
      if (t == 0) continue;
      for (std::size_t r = i; r < m; ++r) v[r] -= t * h(r, i);
    }
    auto [it, inserted] = seen.emplace(std::move(v), &d);
    if (!inserted && !check.colliding_pair) check.colliding_pair = std::make_pair(*it->second, d);
  }
  check.complete = !check.cardinality_gap && !check.colliding_pair;
  return check;
}

DigitSet block_digit_set(const Integer& lambda, std::size_t k) {
  if (abs(lambda) < 2) throw NotDilation("not a dilation matrix: eigenvalue " + lambda.get_str());
  if (k == 0) throw DimensionError("Jordan block size must be positive");
  DigitSet d = centered_digit_set(jordan_block_matrix(lambda, k));
  return DigitSet(k, d.digits(), provenance::Block{lambda, k});
}

DigitSet product_digit_set(const std::vector<DigitSet>& parts) {
  if (parts.empty()) throw DimensionError("product of zero digit sets");
  std::vector<Point> acc{Point{}};
  std::size_t dim = 0;
  provenance::Product prov;
  for (const auto& part : parts) {
    std::vector<Point> next;
    next.reserve(acc.size() * part.size());
    for (const auto& prefix : acc)
      for (const auto& d : part.digits()) {
        Point p = prefix;
        p.insert(p.end(), d.begin(), d.end());
        next.push_back(std::move(p));
      }
    acc = std::move(next);
    dim += part.dim();
    prov.parts.push_back(describe(part.provenance()));
  }
  if (parts.size() == 1) return parts.front();
  return DigitSet(dim, std::move(acc), std::move(prov));
}

DigitSet map_digit_set(const IntMatrix& p, const DigitSet& digits) {
  if (!p.is_square() || p.rows() != digits.dim()) throw DimensionError("map dimension does not match digit set");
  if (det(p) == 0) throw SingularMatrixError("digit map is singular");
  const SmallMatrix map(p);
  std::vector<Point> out;
  out.reserve(digits.size());
  for (const auto& d : digits.digits()) {
    Point image(p.rows());
    map.apply(d, image);
    out.push_back(std::move(image));
  }
  return DigitSet(digits.dim(), std::move(out), provenance::Mapped{p, describe(digits.provenance())});
}

std::vector<RatVector> parallelepiped_corners(const Integer& lambda, std::size_t k) {
  if (k == 0) throw DimensionError("Jordan block size must be positive");
  if (k >= 63) throw BudgetExceeded("too many parallelepiped corners");
  std::vector<RatVector> corners;
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<int> eps(k);
    for (std::size_t j = 0; j < k; ++j) eps[j] = (mask >> (k - 1 - j)) & 1U ? -1 : 1;
    RatVector c(k);
    for (std::size_t j = 0; j < k; ++j) {
      Integer num = lambda * eps[j];
      if (j + 1 < k) num += eps[j + 1];
      c[j] = make_rational(num, 2);
    }
    corners.push_back(std::move(c));
  }
  return corners;
}

}  // namespace tileforge
