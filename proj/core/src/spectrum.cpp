#include "tileforge/spectrum.hpp"

#include <algorithm>
#include <sstream>

namespace tileforge {

namespace {

// Divides p (low-to-high coefficients) by (x - r) when r is a root.
bool deflate(IntVector& p, const Integer& r) {
  if (p.size() < 2) return false;
  const std::size_t deg = p.size() - 1;
  IntVector q(deg);
  Integer carry = p[deg];
  for (std::size_t i = deg; i-- > 0;) {
    q[i] = carry;
    carry = p[i] + carry * r;
  }
  if (carry != 0) return false;
  p = std::move(q);
  return true;
}

std::vector<Integer> positive_divisors(Integer n) {
  std::vector<Integer> small, large;
  if (n < 0) n = -n;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    Integer other = n / d;
    if (other != d) large.push_back(other);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::string format_poly(const IntVector& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    Integer c = p[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    if (c != 1 || i == 0) os << c.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

EigenStructure integer_eigenvalues(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("eigenvalues of a non-square matrix");
  EigenStructure out;
  out.characteristic_polynomial = char_poly(a);
  IntVector p = out.characteristic_polynomial.coefficients;

  std::size_t zero_mult = 0;
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.eigenvalues.push_back({Integer(0), zero_mult});

  if (p.size() > 1) {
    for (const Integer& d : positive_divisors(p[0])) {
      for (const Integer& r : {Integer(-d), d}) {
        std::size_t mult = 0;
        while (deflate(p, r)) ++mult;
        if (mult > 0) out.eigenvalues.push_back({r, mult});
      }
      if (p.size() == 1) break;
    }
  }
  if (p.size() > 1)
    throw NotRationalSpectrum("characteristic polynomial has a factor " + format_poly(p) +
                              " without integer roots (eigenvalues are not all rational)");
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const Eigenvalue& x, const Eigenvalue& y) { return x.value < y.value; });
  return out;
}

DilationCheck is_dilation(const IntMatrix& a) {
  const EigenStructure es = integer_eigenvalues(a);
  DilationCheck check;
  check.is_dilation = true;
  for (const auto& ev : es.eigenvalues) {
    if (abs(ev.value) < 2) {
      check.is_dilation = false;
      check.offending_eigenvalue = ev.value;
      break;
    }
  }
  return check;
}

EigenStructure require_dilation(const IntMatrix& a) {
  EigenStructure es = integer_eigenvalues(a);
  for (const auto& ev : es.eigenvalues)
    if (abs(ev.value) < 2) throw NotDilation("not a dilation matrix: eigenvalue " + ev.value.get_str());
  return es;
}

}  // namespace tileforge
