#include "tileforge/jordan.hpp"

#include "tileforge/spectrum.hpp"

namespace tileforge {

namespace {

RatMatrix shifted(const IntMatrix& a, const Integer& lambda) {
  RatMatrix n = to_rational(a);
  for (std::size_t i = 0; i < n.rows(); ++i) n(i, i) -= lambda;
  return n;
}

RatMatrix stack_columns(const std::vector<RatVector>& vectors, std::size_t dim) {
  return RatMatrix::from_columns(vectors, dim);
}

std::size_t span_rank(const std::vector<RatVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(stack_columns(vectors, dim));
}

// Scales a chain by one positive rational so every entry is an integer and the
// chain-wide gcd is 1, then fixes the sign by the eigenvector's first nonzero entry.
std::vector<IntVector> integerize_chain(const std::vector<RatVector>& chain) {
  Integer den_lcm = 1;
  for (const auto& v : chain)
    for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<IntVector> out;
  Integer g = 0;
  for (const auto& v : chain) {
    IntVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational scaled = v[i] * Rational(den_lcm);
      w[i] = scaled.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    out.push_back(std::move(w));
  }
  if (g == 0) throw InvariantViolation("zero Jordan chain");
  int sign = 1;
  for (const auto& x : out.front())
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  for (auto& w : out)
    for (auto& x : w) {
      x /= g;
      if (sign < 0) x = -x;
    }
  return out;
}

}  // namespace

IntMatrix jordan_block_matrix(const Integer& eigenvalue, std::size_t k) {
  IntMatrix j(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    j(i, i) = eigenvalue;
    if (i + 1 < k) j(i, i + 1) = 1;
  }
  return j;
}

JordanDecomposition jordan_decompose(const IntMatrix& a) {
  const EigenStructure es = integer_eigenvalues(a);
  const std::size_t m = a.rows();

  std::vector<std::vector<IntVector>> chains;  // canonical block order
  std::vector<Integer> chain_eigenvalues;

  for (const auto& ev : es.eigenvalues) {
    const RatMatrix nil = shifted(a, ev.value);
    // Kernels of nil^k until their dimension reaches the algebraic multiplicity.
    std::vector<std::vector<RatVector>> kernels{{}};
    RatMatrix nil_power = RatMatrix::identity(m);
    while (kernels.back().size() < ev.multiplicity) {
      nil_power = nil_power * nil;
      kernels.push_back(solve_linear(nil_power, RatVector(m, Rational(0))).kernel);
      if (kernels.size() > m + 1) throw InvariantViolation("generalized eigenspace failed to stabilize");
    }
    const std::size_t depth = kernels.size() - 1;

    // level_vectors[k] holds the vectors of already chosen chains that sit in
    // ker(nil^k) \ ker(nil^{k-1}).
    std::vector<std::vector<RatVector>> level_vectors(depth + 1);
    std::vector<std::vector<RatVector>> tops_by_level(depth + 1);
    for (std::size_t level = depth; level >= 1; --level) {
      std::vector<RatVector> span = kernels[level - 1];
      span.insert(span.end(), level_vectors[level].begin(), level_vectors[level].end());
      std::size_t current = span_rank(span, m);
      for (const auto& candidate : kernels[level]) {
        span.push_back(candidate);
        const std::size_t r = span_rank(span, m);
        if (r == current) {
          span.pop_back();
          continue;
        }
        current = r;
        tops_by_level[level].push_back(candidate);
        RatVector v = candidate;
        for (std::size_t l = level; l >= 1; --l) {
          level_vectors[l].push_back(v);
          if (l > 1) v = nil * v;
        }
      }
    }
    for (std::size_t level = depth; level >= 1; --level) {
      for (const auto& top : tops_by_level[level]) {
        std::vector<RatVector> chain(level);
        chain[level - 1] = top;
        for (std::size_t l = level - 1; l >= 1; --l) chain[l - 1] = nil * chain[l];
        chains.push_back(integerize_chain(chain));
        chain_eigenvalues.push_back(ev.value);
      }
    }
  }

  JordanDecomposition dec;
  dec.jordan = IntMatrix(m, m);
  dec.similarity = IntMatrix(m, m);
  std::size_t col = 0;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    JordanBlock block{chain_eigenvalues[c], chains[c].size(), {}};
    for (std::size_t j = 0; j < chains[c].size(); ++j, ++col) {
      if (col >= m) throw InvariantViolation("Jordan chains exceed the matrix dimension");
      for (std::size_t r = 0; r < m; ++r) dec.similarity(r, col) = chains[c][j][r];
      dec.jordan(col, col) = block.eigenvalue;
      if (j > 0) dec.jordan(col - 1, col) = 1;
      block.chain_columns.push_back(col);
    }
    dec.blocks.push_back(std::move(block));
  }
  if (col != m) throw InvariantViolation("Jordan chains do not fill the matrix dimension");
  if (!verify_similarity(a, dec)) throw InvariantViolation("Jordan certificate A*P == P*J failed");
  return dec;
}

bool verify_similarity(const IntMatrix& a, const IntMatrix& jordan, const IntMatrix& similarity) {
  if (!a.is_square() || a.rows() != jordan.rows() || !jordan.is_square() || similarity.rows() != a.rows() ||
      !similarity.is_square())
    return false;
  if (det(similarity) == 0) return false;
  return a * similarity == similarity * jordan;
}

bool verify_similarity(const IntMatrix& a, const JordanDecomposition& dec) {
  return verify_similarity(a, dec.jordan, dec.similarity);
}

}  // namespace tileforge
