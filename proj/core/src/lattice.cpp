#include "tileforge/lattice.hpp"

#include <optional>

namespace tileforge {

namespace {

// Forward substitution against the lower-triangular basis.
std::optional<IntVector> solve_coordinates(const IntMatrix& basis, const IntVector& z) {
  const std::size_t m = basis.rows();
  if (z.size() != m) throw DimensionError("vector dimension does not match lattice");
  IntVector c(m);
  for (std::size_t i = 0; i < m; ++i) {
    Integer rest = z[i];
    for (std::size_t j = 0; j < i; ++j) rest -= basis(i, j) * c[j];
    if (!mpz_divisible_p(rest.get_mpz_t(), basis(i, i).get_mpz_t())) return std::nullopt;
    mpz_divexact(c[i].get_mpz_t(), rest.get_mpz_t(), basis(i, i).get_mpz_t());
  }
  return c;
}

}  // namespace

Lattice::Lattice(IntMatrix basis) : basis_(std::move(basis)), index_(1) {
  for (std::size_t i = 0; i < basis_.rows(); ++i) index_ *= basis_(i, i);
}

Lattice Lattice::standard(std::size_t dim) { return Lattice(IntMatrix::identity(dim)); }

Lattice Lattice::from_generators(const std::vector<IntVector>& generators, std::size_t dim) {
  return Lattice(hermite_normal_form(generators, dim));
}

std::vector<IntVector> Lattice::basis_vectors() const {
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < basis_.cols(); ++j) out.push_back(basis_.column(j));
  return out;
}

bool Lattice::contains(const IntVector& z) const {
  if (index_ == 1) {
    if (z.size() != dim()) throw DimensionError("vector dimension does not match lattice");
    return true;
  }
  return solve_coordinates(basis_, z).has_value();
}

bool Lattice::contains(std::span<const std::int64_t> z) const {
  if (index_ == 1) {
    if (z.size() != dim()) throw DimensionError("vector dimension does not match lattice");
    return true;
  }
  return contains(to_int_vector(z));
}

IntVector Lattice::coordinates(const IntVector& z) const {
  auto c = solve_coordinates(basis_, z);
  if (!c) throw NoSolutionError("vector is not a lattice point");
  return *c;
}

Lattice hnf(const std::vector<IntVector>& generators, std::size_t dim) {
  return Lattice::from_generators(generators, dim);
}

bool lattice_contains(const Lattice& lattice, const IntVector& z) { return lattice.contains(z); }

Lattice translation_lattice(const IntMatrix& a, const DigitSet& digits, std::size_t max_iter) {
  if (!a.is_square() || a.rows() != digits.dim()) throw DimensionError("digit set dimension does not match matrix");
  const std::size_t m = a.rows();
  std::vector<IntVector> digit_vectors;
  for (const auto& d : digits.digits()) digit_vectors.push_back(to_int_vector(d));

  // The lattice generated by D already contains every difference d - d'.
  Lattice current = Lattice::standard(m);
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    std::vector<IntVector> generators = digit_vectors;
    for (const auto& b : current.basis_vectors()) generators.push_back(a * b);
    Lattice next = Lattice::from_generators(generators, m);
    if (next == current) {
      for (const auto& d : digit_vectors)
        if (!current.contains(d)) throw InvariantViolation("translation lattice misses a digit");
      if (!is_invariant_lattice(a, current)) throw InvariantViolation("translation lattice is not A-invariant");
      return current;
    }
    current = std::move(next);
  }
  throw NonConvergence("translation lattice did not reach a fixed point within " + std::to_string(max_iter) +
                       " iterations (no A-invariant lattice of translations found; possible stretched tile)");
}

bool is_invariant_lattice(const IntMatrix& a, const Lattice& lattice) {
  if (!a.is_square() || a.rows() != lattice.dim()) throw DimensionError("lattice dimension does not match matrix");
  for (const auto& b : lattice.basis_vectors())
    if (!lattice.contains(a * b)) return false;
  return true;
}

bool digits_contain_standard_basis(const DigitSet& digits) {
  for (std::size_t i = 0; i < digits.dim(); ++i) {
    Point e(digits.dim(), 0);
    e[i] = 1;
    if (!digits.contains(e)) return false;
  }
  return true;
}

}  // namespace tileforge
