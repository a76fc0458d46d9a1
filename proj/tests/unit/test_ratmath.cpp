#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/oracles.hpp"
#include "tileforge/ratmath.hpp"

using namespace tileforge;

TEST_CASE("rationals are kept in lowest terms") {
  const Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(to_string(Rational(1, 3) + Rational(1, 6)) == "1/2");
  CHECK_THROWS(make_rational(1, 0));
  CHECK(floor(make_rational(-3, 2)) == -2);
  CHECK(ceil(make_rational(-3, 2)) == -1);
}

TEST_CASE("det") {
  CHECK(det(to_rational(IntMatrix{{3, 10}, {0, 3}})) == 9);
  CHECK(det(RatMatrix::identity(3)) == 1);
  CHECK(det(IntMatrix{{3, 4}, {0, 3}}) == 9);
  CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), DimensionError);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = oracle::random_matrix(rng, 1 + trial % 4, -9, 9);
    CHECK(det(m) == oracle::leibniz_det(m));
    CHECK(det(to_rational(m)) == Rational(oracle::leibniz_det(m)));
  }
}

TEST_CASE("inverse") {
  const RatMatrix inv = inverse(IntMatrix{{3, 1}, {0, 3}});
  CHECK(inv == RatMatrix{{Rational(1, 3), Rational(-1, 9)}, {0, Rational(1, 3)}});
  CHECK(inverse(RatMatrix::identity(3)) == RatMatrix::identity(3));
  CHECK(inverse(IntMatrix{{2, 0}, {0, 2}}) == RatMatrix{{Rational(1, 2), 0}, {0, Rational(1, 2)}});
  CHECK_THROWS_AS(inverse(IntMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST_CASE("inverse times matrix is the identity") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 100) {
    const IntMatrix m = oracle::random_matrix(rng, 1 + checked % 4, -7, 7);
    if (det(m) == 0) continue;
    const RatMatrix inv = inverse(m);
    CHECK(to_rational(m) * inv == RatMatrix::identity(m.rows()));
    CHECK(inv == oracle::cofactor_inverse(m));
    ++checked;
  }
}

TEST_CASE("adjugate satisfies m * adj(m) = det(m) I") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = oracle::random_matrix(rng, 1 + trial % 4, -6, 6);
    IntMatrix expected = IntMatrix::identity(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) expected(i, i) = det(m);
    CHECK(m * adjugate(m) == expected);
  }
}

TEST_CASE("char_poly") {
  CHECK(char_poly(IntMatrix{{3, 1}, {0, 3}}).coefficients == IntVector{9, -6, 1});
  // det(xI - [[4,1],[1,4]]) = (x-4)^2 - 1 = x^2 - 8x + 15
  CHECK(char_poly(IntMatrix{{4, 1}, {1, 4}}).coefficients == IntVector{15, -8, 1});
  CHECK(char_poly(IntMatrix{{2}}).coefficients == IntVector{-2, 1});
}

TEST_CASE("Cayley-Hamilton up to 4x4") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix m = oracle::random_matrix(rng, n, -8, 8);
    const Polynomial p = char_poly(m);
    CHECK(p.coefficients.back() == 1);
    CHECK(p.degree() == n);
    CHECK(p.evaluate(m) == IntMatrix(n, n));
    // constant term is (-1)^n det
    CHECK(p.coefficients.front() == (n % 2 ? Integer(-det(m)) : det(m)));
  }
}

TEST_CASE("hermite_normal_form") {
  CHECK(hermite_normal_form({{1, 0}, {0, 1}}, 2) == IntMatrix{{1, 0}, {0, 1}});
  // columns (1,3), (0,9)
  const IntMatrix h = hermite_normal_form({{3, 0}, {4, 3}}, 2);
  CHECK(h == IntMatrix{{1, 0}, {3, 9}});
  CHECK(hermite_normal_form({{2, 0}, {0, 2}, {1, 1}}, 2) == IntMatrix{{1, 0}, {1, 2}});
  CHECK_THROWS_AS(hermite_normal_form({{1, 1}, {2, 2}}, 2), RankDeficientError);
  CHECK_THROWS_AS(hermite_normal_form({}, 2), RankDeficientError);
  CHECK_THROWS_AS(hermite_normal_form({{1, 2, 3}}, 2), DimensionError);
}

namespace {

bool is_canonical_hnf(const IntMatrix& h) {
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h(i, i) <= 0) return false;
    for (std::size_t j = i + 1; j < h.cols(); ++j)
      if (h(i, j) != 0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (h(i, j) < 0 || h(i, j) >= h(i, i)) return false;
  }
  return true;
}

// z lies in the column span of h with integer coefficients.
bool in_lattice(const IntMatrix& h, const IntVector& z) {
  const RatVector c = oracle::apply_rat(oracle::cofactor_inverse(h), to_rational(z));
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.get_den() == 1; });
}

}  // namespace

TEST_CASE("hnf is canonical, idempotent and order independent") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t m = 1 + trial % 3;
    const std::size_t g = m + trial % 3;
    std::vector<IntVector> gens;
    std::uniform_int_distribution<int> dist(-9, 9);
    for (std::size_t k = 0; k < g; ++k) {
      IntVector v(m);
      for (auto& x : v) x = dist(rng);
      gens.push_back(v);
    }
    IntMatrix h;
    try {
      h = hermite_normal_form(gens, m);
    } catch (const RankDeficientError&) {
      continue;
    }
    CHECK(is_canonical_hnf(h));
    for (const auto& v : gens) CHECK(in_lattice(h, v));
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < m; ++j) cols.push_back(h.column(j));
    CHECK(hermite_normal_form(cols, m) == h);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(hermite_normal_form(shuffled, m) == h);
    if (g == m) {
      // square generator matrix: index equals |det| of the generators
      CHECK(abs(det(IntMatrix::from_columns(gens, m))) == det(h));
    }
  }
}

TEST_CASE("solve_linear") {
  // (A - 3I) w = (1, 0) with A = [[3,10],[0,3]]
  const LinearSolution s = solve_linear(to_rational(IntMatrix{{0, 10}, {0, 0}}), {1, 0});
  CHECK(s.particular == RatVector{0, Rational(1, 10)});
  REQUIRE(s.kernel.size() == 1);
  CHECK(s.kernel[0] == RatVector{1, 0});

  const LinearSolution id = solve_linear(RatMatrix::identity(3), {4, Rational(-1, 2), 7});
  CHECK(id.particular == RatVector{4, Rational(-1, 2), 7});
  CHECK(id.kernel.empty());

  const LinearSolution zero = solve_linear(RatMatrix(2, 2), {0, 0});
  CHECK(zero.particular == RatVector{0, 0});
  CHECK(zero.kernel == std::vector<RatVector>{{1, 0}, {0, 1}});

  CHECK_THROWS_AS(solve_linear(to_rational(IntMatrix{{1, 1}, {1, 1}}), {1, 2}), NoSolutionError);
}

TEST_CASE("solve_linear solutions satisfy the system") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = oracle::random_matrix(rng, 3, -2, 2);
    IntVector x0{1, -2, 3};
    const RatVector b = to_rational(m * x0);
    const LinearSolution s = solve_linear(to_rational(m), b);
    CHECK(to_rational(m) * s.particular == b);
    for (const auto& k : s.kernel) CHECK(to_rational(m) * k == RatVector(3, Rational(0)));
    CHECK(s.kernel.size() + rank(to_rational(m)) == 3);
  }
}
