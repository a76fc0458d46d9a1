#include <doctest.h>

#include "support/oracles.hpp"
#include "tileforge/digitset.hpp"
#include "tileforge/jordan.hpp"
#include "tileforge/spectrum.hpp"

using namespace tileforge;

namespace {

std::vector<Point> grid(std::initializer_list<std::int64_t> xs, std::initializer_list<std::int64_t> ys) {
  std::vector<Point> out;
  for (auto x : xs)
    for (auto y : ys) out.push_back({x, y});
  return out;
}

}  // namespace

TEST_CASE("centered_digit_set examples") {
  CHECK(centered_digit_set(IntMatrix{{3, 1}, {0, 3}}).digits() == grid({-1, 0, 1}, {-1, 0, 1}));
  CHECK(centered_digit_set(IntMatrix{{2, 1}, {0, 2}}).digits() == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(centered_digit_set(IntMatrix{{-2, 1}, {0, -2}}).digits() ==
        std::vector<Point>{{-1, 0}, {0, -1}, {0, 0}, {1, -1}});
  CHECK(centered_digit_set(IntMatrix{{2}}).digits() == std::vector<Point>{{0}, {1}});
  CHECK(centered_digit_set(IntMatrix{{3, 10}, {0, 3}}).digits() ==
        std::vector<Point>{{-4, -1}, {-3, -1}, {-2, -1}, {-1, 0}, {0, 0}, {1, 0}, {2, 1}, {3, 1}, {4, 1}});
  CHECK_THROWS_AS(centered_digit_set(IntMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST_CASE("centered digits agree with the brute-force oracle, including the half-open boundary") {
  for (const IntMatrix& a : {IntMatrix{{3, 1}, {0, 3}}, IntMatrix{{2, 1}, {0, 2}}, IntMatrix{{-2, 1}, {0, -2}},
                             IntMatrix{{4, 1}, {1, 4}}, IntMatrix{{0, -2}, {1, 3}}, IntMatrix{{2, 0}, {0, 2}},
                             IntMatrix{{1, -3}, {2, 1}}, IntMatrix{{2, 1, 0}, {0, 2, 1}, {0, 0, 2}}}) {
    const DigitSet d = centered_digit_set(a);
    CHECK(d.digits() == oracle::centered_digits(a, 12));
    CHECK(d.contains(Point(a.rows(), 0)));
  }
}

TEST_CASE("is_complete_residue_system") {
  const IntMatrix a{{3, 1}, {0, 3}};
  CHECK(is_complete_residue_system(a, centered_digit_set(a)).complete);

  const ResidueCheck even = is_complete_residue_system(IntMatrix{{2}}, DigitSet(1, {{0}, {2}}, provenance::Product{}));
  CHECK_FALSE(even.complete);
  REQUIRE(even.colliding_pair);
  CHECK(even.colliding_pair->first == Point{0});
  CHECK(even.colliding_pair->second == Point{2});

  CHECK(is_complete_residue_system(IntMatrix{{3}}, DigitSet(1, {{-1}, {0}, {1}}, provenance::Product{})).complete);

  const ResidueCheck short_set = is_complete_residue_system(IntMatrix{{3}}, DigitSet(1, {{0}, {1}}, provenance::Product{}));
  CHECK_FALSE(short_set.complete);
  REQUIRE(short_set.cardinality_gap);
  CHECK(short_set.cardinality_gap->first == 2);
  CHECK(short_set.cardinality_gap->second == 3);
}

TEST_CASE("residue check agrees with pairwise brute force") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int trial = 0; trial < 120; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, 2, -3, 3);
    const Integer q = abs(det(a));
    if (q == 0 || q > 12) continue;
    std::set<Point> pts;
    while (pts.size() < q.get_ui()) pts.insert({coord(rng), coord(rng)});
    const std::vector<Point> v(pts.begin(), pts.end());
    CHECK(is_complete_residue_system(a, DigitSet(2, v, provenance::Product{})).complete ==
          oracle::pairwise_residue_system(a, v));
  }
}

TEST_CASE("digit cardinality and residue property on sampled dilations") {
  for (const auto& a : oracle::sample_dilations(43, 60, 2, -10, 10)) {
    const DigitSet d = centered_digit_set(a);
    CHECK(Integer(static_cast<unsigned long>(d.size())) == abs(det(a)));
    CHECK(is_complete_residue_system(a, d).complete);
  }
  for (const auto& a : oracle::sample_dilations(47, 15, 3, -10, 10, 2000)) {
    const DigitSet d = centered_digit_set(a);
    CHECK(Integer(static_cast<unsigned long>(d.size())) == abs(det(a)));
    CHECK(is_complete_residue_system(a, d).complete);
  }
}

TEST_CASE("block_digit_set") {
  CHECK(block_digit_set(3, 1).digits() == std::vector<Point>{{-1}, {0}, {1}});
  CHECK(block_digit_set(2, 2).digits() == centered_digit_set(IntMatrix{{2, 1}, {0, 2}}).digits());
  CHECK(block_digit_set(3, 2).digits() == grid({-1, 0, 1}, {-1, 0, 1}));
  CHECK(describe(block_digit_set(3, 2).provenance()) == "block(3,2)");
  CHECK_THROWS_AS(block_digit_set(1, 2), NotDilation);
  CHECK_THROWS_AS(block_digit_set(-1, 1), NotDilation);
  for (int lambda : {-4, -3, -2, 2, 3, 4})
    for (std::size_t k = 1; k <= 3; ++k) {
      const DigitSet d = block_digit_set(lambda, k);
      CHECK(d.digits() == centered_digit_set(jordan_block_matrix(lambda, k)).digits());
      Integer expected = 1;
      for (std::size_t i = 0; i < k; ++i) expected *= std::abs(lambda);
      CHECK(Integer(static_cast<unsigned long>(d.size())) == expected);
    }
}

TEST_CASE("product_digit_set") {
  const DigitSet bin(1, {{0}, {1}}, provenance::Block{2, 1});
  CHECK(product_digit_set({bin, bin}).digits() == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(product_digit_set({bin}).digits() == bin.digits());
  const DigitSet tern = block_digit_set(3, 1);
  const DigitSet mixed = product_digit_set({tern, bin});
  CHECK(mixed.size() == 6);
  CHECK(mixed.digits() == centered_digit_set(IntMatrix{{3, 0}, {0, 2}}).digits());
  CHECK_THROWS(product_digit_set({}));

  // blocks (2,1) and (3,2) of a block-diagonal J
  const IntMatrix j{{2, 0, 0}, {0, 3, 1}, {0, 0, 3}};
  CHECK(product_digit_set({block_digit_set(2, 1), block_digit_set(3, 2)}).digits() ==
        centered_digit_set(j).digits());
}

TEST_CASE("map_digit_set") {
  const DigitSet d = block_digit_set(3, 2);
  CHECK(map_digit_set(IntMatrix::identity(2), d).digits() == d.digits());
  CHECK(map_digit_set(IntMatrix{{10, 0}, {0, 1}}, d).digits() == grid({-10, 0, 10}, {-1, 0, 1}));
  std::vector<Point> expected;
  for (std::int64_t a : {-1, 0, 1})
    for (std::int64_t b : {-1, 0, 1}) expected.push_back({10 * a + 10 * b, b});
  std::sort(expected.begin(), expected.end());
  CHECK(map_digit_set(IntMatrix{{10, 10}, {0, 1}}, d).digits() == expected);
  CHECK_THROWS_AS(map_digit_set(IntMatrix{{1, 1}, {1, 1}}, d), SingularMatrixError);
}

TEST_CASE("parallelepiped_corners") {
  CHECK(parallelepiped_corners(2, 1) == std::vector<RatVector>{{1}, {-1}});
  CHECK(parallelepiped_corners(2, 2) == std::vector<RatVector>{{Rational(3, 2), 1},
                                                                {Rational(1, 2), -1},
                                                                {Rational(-1, 2), 1},
                                                                {Rational(-3, 2), -1}});
  CHECK(parallelepiped_corners(3, 2) == std::vector<RatVector>{{2, Rational(3, 2)},
                                                                {1, Rational(-3, 2)},
                                                                {-1, Rational(3, 2)},
                                                                {-2, Rational(-3, 2)}});
  // corners are J applied to the cube vertices (eps / 2)
  for (int lambda : {-3, 2, 4})
    for (std::size_t k = 1; k <= 3; ++k) {
      const RatMatrix j = to_rational(jordan_block_matrix(lambda, k));
      const auto corners = parallelepiped_corners(lambda, k);
      CHECK(corners.size() == (std::size_t{1} << k));
      for (std::size_t mask = 0; mask < corners.size(); ++mask) {
        RatVector v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = ((mask >> (k - 1 - i)) & 1U) ? Rational(-1, 2) : Rational(1, 2);
        CHECK(j * v == corners[mask]);
      }
    }
}

TEST_CASE("half-open convention") {
  // A = [2]: A^{-1} z = z/2, so 1 (=> 1/2) is in and -1 (=> -1/2) is out
  CHECK(in_centered_image(IntMatrix{{2}}, {1}));
  CHECK_FALSE(in_centered_image(IntMatrix{{2}}, {-1}));
  CHECK(in_centered_image(IntMatrix{{-2}}, {-1}));
  CHECK_FALSE(in_centered_image(IntMatrix{{-2}}, {1}));
}
