#pragma once

#include <span>
#include <vector>

#include "tileforge/digitset.hpp"
#include "tileforge/ratmath.hpp"

namespace tileforge {

/// Full-rank sublattice of Z^m, stored by its canonical column Hermite basis,
/// so two lattices are equal exactly when their bases are.
class Lattice {
 public:
  /// Z^m.
  static Lattice standard(std::size_t dim);
  static Lattice from_generators(const std::vector<IntVector>& generators, std::size_t dim);

  std::size_t dim() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  const Integer& index() const noexcept { return index_; }
  std::vector<IntVector> basis_vectors() const;

  bool contains(const IntVector& z) const;
  bool contains(std::span<const std::int64_t> z) const;

  /// Lattice coordinates of z, or nullopt-equivalent failure via contains().
  IntVector coordinates(const IntVector& z) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  explicit Lattice(IntMatrix basis);

  IntMatrix basis_;
  Integer index_;
};

/// Free function spelling of Lattice::from_generators.
Lattice hnf(const std::vector<IntVector>& generators, std::size_t dim);

bool lattice_contains(const Lattice& lattice, const IntVector& z);

/// Fixed point of G <- lattice generated by (A G) and D, starting from Z^m.
/// Throws NonConvergence when no fixed point appears within max_iter steps.
Lattice translation_lattice(const IntMatrix& a, const DigitSet& digits, std::size_t max_iter = 64);

/// True iff A b lies in the lattice for every basis vector b.
bool is_invariant_lattice(const IntMatrix& a, const Lattice& lattice);

bool digits_contain_standard_basis(const DigitSet& digits);

}  // namespace tileforge
