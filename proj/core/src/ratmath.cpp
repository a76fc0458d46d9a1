#include "tileforge/ratmath.hpp"

#include <algorithm>
#include <utility>

namespace tileforge {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw InvariantViolation("matrix entry " + to_string(m(i, j)) + " is not integral");
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

Integer trace(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("trace of a non-square matrix");
  Integer t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

namespace {

template <typename T>
Matrix<T> power_impl(const Matrix<T>& m, unsigned exponent) {
  if (!m.is_square()) throw DimensionError("power of a non-square matrix");
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace

IntMatrix power(const IntMatrix& m, unsigned exponent) { return power_impl(m, exponent); }
RatMatrix power(const RatMatrix& m, unsigned exponent) { return power_impl(m, exponent); }

Rational det(const RatMatrix& input) {
  if (!input.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  RatMatrix a = input;
  Rational prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev_pivot;
      }
      a(i, k) = 0;
    }
    prev_pivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev_pivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RatMatrix inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Integer cof = det(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? cof : Integer(-cof);
    }
  return adj;
}

Rational infinity_norm(const RatMatrix& m) {
  Rational best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational row_sum = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row_sum += abs(m(i, j));
    if (row_sum > best) best = row_sum;
  }
  return best;
}

Integer Polynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntMatrix Polynomial::evaluate(const IntMatrix& m) const {
  if (!m.is_square()) throw DimensionError("polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix acc(n, n);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  const RatMatrix a = to_rational(m);
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    RatMatrix am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<unsigned long>(k));
  }
  Polynomial p;
  p.coefficients.reserve(n + 1);
  for (const auto& q : c) {
    if (q.get_den() != 1) throw InvariantViolation("non-integral characteristic polynomial coefficient");
    p.coefficients.push_back(q.get_num());
  }
  return p;
}

IntMatrix hermite_normal_form(const std::vector<IntVector>& generators, std::size_t dim) {
  for (const auto& g : generators)
    if (g.size() != dim) throw DimensionError("generator length does not match lattice dimension");
  std::vector<IntVector> cols;
  cols.reserve(generators.size());
  for (const auto& g : generators)
    if (std::any_of(g.begin(), g.end(), [](const Integer& x) { return x != 0; })) cols.push_back(g);

  auto combine = [dim](IntVector& u, IntVector& v, const Integer& a, const Integer& b, const Integer& c,
                       const Integer& d) {
    // (u, v) <- (a u + b v, c u + d v), a unimodular column operation
    for (std::size_t r = 0; r < dim; ++r) {
      Integer nu = a * u[r] + b * v[r];
      Integer nv = c * u[r] + d * v[r];
      u[r] = std::move(nu);
      v[r] = std::move(nv);
    }
  };

  std::vector<IntVector> basis;
  basis.reserve(dim);
  std::size_t start = 0;
  for (std::size_t row = 0; row < dim; ++row) {
    std::size_t pivot = cols.size();
    for (std::size_t j = start; j < cols.size(); ++j) {
      if (cols[j][row] == 0) continue;
      if (pivot == cols.size()) {
        pivot = j;
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), cols[pivot][row].get_mpz_t(),
                 cols[j][row].get_mpz_t());
      Integer a_over_g = cols[pivot][row] / g;
      Integer b_over_g = cols[j][row] / g;
      // [s t; -b/g a/g] has determinant 1 and zeroes the entry of column j.
      combine(cols[pivot], cols[j], s, t, Integer(-b_over_g), a_over_g);
    }
    if (pivot == cols.size()) throw RankDeficientError("generators do not span a full-rank lattice");
    if (cols[pivot][row] < 0)
      for (auto& x : cols[pivot]) x = -x;
    std::swap(cols[start], cols[pivot]);
    basis.push_back(cols[start]);
    ++start;
  }

  // Reduce entries left of the diagonal, row by row.
  for (std::size_t row = 1; row < dim; ++row) {
    const Integer& diag = basis[row][row];
    for (std::size_t j = 0; j < row; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), basis[j][row].get_mpz_t(), diag.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t r = row; r < dim; ++r) basis[j][r] -= q * basis[row][r];
    }
  }
  return IntMatrix::from_columns(basis, dim);
}

namespace {

struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form of [m | extra], pivoting only within the first `m.cols()` columns.
RowEchelon rref(RatMatrix a, std::size_t pivot_limit) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_limit && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(p, j));
    const Rational pv = a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) /= pv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

}  // namespace

LinearSolution solve_linear(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match matrix rows");
  const std::size_t n = m.cols();
  RatMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const RowEchelon e = rref(std::move(aug), n);
  const std::size_t rank = e.pivot_cols.size();
  for (std::size_t i = rank; i < m.rows(); ++i)
    if (e.reduced(i, n) != 0) throw NoSolutionError("inconsistent linear system");

  LinearSolution sol;
  sol.particular.assign(n, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) sol.particular[e.pivot_cols[r]] = e.reduced(r, n);

  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

std::size_t rank(const RatMatrix& m) { return rref(m, m.cols()).pivot_cols.size(); }

}  // namespace tileforge
