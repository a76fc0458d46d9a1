#pragma once

#include <optional>
#include <vector>

#include "tileforge/ratmath.hpp"

namespace tileforge {

struct Eigenvalue {
  Integer value;
  std::size_t multiplicity = 0;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Integer spectrum of an integer matrix. Eigenvalues ascend; multiplicities sum to the dimension.
struct EigenStructure {
  std::vector<Eigenvalue> eigenvalues;
  Polynomial characteristic_polynomial;
};

/// Factors the characteristic polynomial over Z by trial division of the
/// divisors of its constant term. Throws NotRationalSpectrum when a non-linear
/// factor remains.
EigenStructure integer_eigenvalues(const IntMatrix& a);

struct DilationCheck {
  bool is_dilation = false;
  std::optional<Integer> offending_eigenvalue;
  explicit operator bool() const noexcept { return is_dilation; }
};

/// True iff every eigenvalue has absolute value at least 2. Propagates NotRationalSpectrum.
DilationCheck is_dilation(const IntMatrix& a);

/// Throws NotDilation (naming the offending eigenvalue) unless is_dilation holds.
EigenStructure require_dilation(const IntMatrix& a);

}  // namespace tileforge
