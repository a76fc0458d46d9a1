#pragma once

#include <vector>

#include "tileforge/ratmath.hpp"

namespace tileforge {

struct JordanBlock {
  Integer eigenvalue;
  std::size_t size = 0;
  /// Columns of P forming this block's chain, eigenvector first.
  std::vector<std::size_t> chain_columns;
  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// A = P J P^{-1} with J in Jordan form and P an integer matrix.
///
/// Each chain w_1..w_k satisfies (A - lambda I) w_1 = 0 and
/// (A - lambda I) w_{j+1} = w_j; the chain is scaled to integers with
/// chain-wide gcd 1 and a positive leading entry in w_1. Blocks are ordered by
/// ascending eigenvalue, then descending size.
struct JordanDecomposition {
  IntMatrix jordan;
  IntMatrix similarity;
  std::vector<JordanBlock> blocks;
};

/// k x k Jordan block with `eigenvalue` on the diagonal and ones above it.
IntMatrix jordan_block_matrix(const Integer& eigenvalue, std::size_t k);

/// Throws NotRationalSpectrum for matrices whose eigenvalues are not all integers.
JordanDecomposition jordan_decompose(const IntMatrix& a);

/// True iff A P = P J exactly and det P != 0.
bool verify_similarity(const IntMatrix& a, const IntMatrix& jordan, const IntMatrix& similarity);
bool verify_similarity(const IntMatrix& a, const JordanDecomposition& dec);

}  // namespace tileforge
