#include <doctest.h>

#include "support/oracles.hpp"
#include "tileforge/connectivity.hpp"
#include "tileforge/spectrum.hpp"

using namespace tileforge;

namespace {

PointSet pts2(std::vector<Point> v) { return PointSet::from_points(v.empty() ? 2 : v.front().size(), v); }

}  // namespace

TEST_CASE("is_B_connected") {
  const auto unit = AdjacencyBasis::standard(2);
  CHECK(is_B_connected(pts2({{0, 0}, {0, 1}, {1, 0}, {1, 1}}), unit).connected);

  const ComponentReport gap = is_B_connected(pts2({{0, 0}, {2, 0}}), unit);
  CHECK_FALSE(gap.connected);
  CHECK(gap.component_count == 2);
  CHECK(gap.representatives == std::vector<Point>{{0, 0}, {2, 0}});
  CHECK(gap.sizes == std::vector<std::size_t>{1, 1});

  const DigitSet skew = centered_digit_set(IntMatrix{{3, 10}, {0, 3}});
  const ComponentReport rows = is_B_connected(skew.as_point_set(), unit);
  CHECK_FALSE(rows.connected);
  CHECK(rows.component_count == 3);
  CHECK(rows.representatives == std::vector<Point>{{-4, -1}, {-1, 0}, {2, 1}});

  // a lattice basis as adjacency: (0,0) and (1,3) are adjacent along (1,3)
  const auto lat = AdjacencyBasis::of(hnf({{1, 3}, {0, 9}}, 2));
  CHECK(is_B_connected(pts2({{0, 0}, {1, 3}, {1, 12}}), lat).connected);
  CHECK_FALSE(is_B_connected(pts2({{0, 0}, {1, 0}}), lat).connected);

  CHECK_THROWS(AdjacencyBasis({{0, 0}}));
  CHECK_THROWS(AdjacencyBasis({{1, 0}, {1, 0}}));
}

TEST_CASE("union-find agrees with breadth-first search") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<Point> s;
    const std::size_t n = 1 + rng() % 20;
    while (s.size() < n) s.insert({coord(rng), coord(rng)});
    const std::vector<Point> v(s.begin(), s.end());
    CHECK(is_B_connected(pts2(v), AdjacencyBasis::standard(2)).connected ==
          oracle::bfs_connected(v, oracle::unit_basis(2)));
  }
}

TEST_CASE("level_set examples") {
  const DigitSet tern(1, {{-1}, {0}, {1}}, provenance::Block{3, 1});
  CHECK(level_set(IntMatrix{{3}}, tern, 1).points.to_points() == tern.digits());
  std::vector<Point> interval;
  for (std::int64_t x = -4; x <= 4; ++x) interval.push_back({x});
  CHECK(level_set(IntMatrix{{3}}, tern, 2).points.to_points() == interval);

  const IntMatrix a{{2, 1}, {0, 2}};
  const LevelSet l2 = level_set(a, centered_digit_set(a), 2);
  CHECK(l2.depth == 2);
  CHECK(l2.size() == 16);
  CHECK_THROWS(level_set(a, centered_digit_set(a), 0));
}

TEST_CASE("level_set recursion equals the explicit digit sums") {
  for (const auto& a : oracle::sample_dilations(71, 25, 2, -4, 4)) {
    const DigitSet d = centered_digit_set(a);
    for (std::size_t n = 1; n <= 3; ++n) {
      const LevelSet l = level_set(a, d, n);
      CHECK(l.points.to_points() == oracle::level_set_by_sums(a, d.digits(), n));
      if (n > 1) {
        // D_n = A D_{n-1} + D pointwise
        std::set<Point> step;
        for (const auto& x : level_set(a, d, n - 1).points.to_points())
          for (const auto& digit : d.digits()) {
            Point y = oracle::apply_int(a, x);
            for (std::size_t k = 0; k < y.size(); ++k) y[k] += digit[k];
            step.insert(y);
          }
        CHECK(l.points.to_points() == std::vector<Point>(step.begin(), step.end()));
      }
      // |D_n| = |det A|^n for complete residue systems
      Integer expected;
      mpz_pow_ui(expected.get_mpz_t(), Integer(abs(det(a))).get_mpz_t(), n);
      CHECK(Integer(static_cast<unsigned long>(l.size())) == expected);
    }
  }
}

TEST_CASE("level set budget and thread independence") {
  const IntMatrix a{{3, 1}, {0, 3}};
  const DigitSet d = centered_digit_set(a);
  ExecutionOptions tight;
  tight.point_budget = 100;
  CHECK_THROWS_AS(level_set(a, d, 3, tight), BudgetExceeded);
  ExecutionOptions four;
  four.threads = 4;
  CHECK(level_set(a, d, 4, four).points == level_set(a, d, 4).points);
}

TEST_CASE("check_level_connectivity") {
  const IntMatrix a{{3, 1}, {0, 3}};
  const auto checks = check_level_connectivity(a, centered_digit_set(a), Lattice::standard(2), 3);
  REQUIRE(checks.size() == 3);
  for (const auto& c : checks) CHECK(c.connected);
  CHECK(checks[2].points == 729);

  const DigitSet tern(1, {{-1}, {0}, {1}}, provenance::Block{3, 1});
  for (const auto& c : check_level_connectivity(IntMatrix{{3}}, tern, Lattice::standard(1), 4)) CHECK(c.connected);

  const IntMatrix skew{{3, 10}, {0, 3}};
  const auto bad = check_level_connectivity(skew, centered_digit_set(skew), Lattice::standard(2), 1);
  REQUIRE(bad.size() == 1);
  CHECK_FALSE(bad[0].connected);

  // a lattice that does not contain D_n is a precondition violation
  CHECK_THROWS_AS(check_level_connectivity(IntMatrix{{3}}, tern, hnf({{2}}, 1), 1), InvariantViolation);

  // digits on 2Z with Gamma = 2Z: connectivity is measured in lattice steps
  const DigitSet even(1, {{-2}, {0}, {2}}, provenance::Product{});
  for (const auto& c : check_level_connectivity(IntMatrix{{3}}, even, hnf({{2}}, 1), 3)) CHECK(c.connected);
}

TEST_CASE("edge_neighbors") {
  const EdgeNeighbors fig = edge_neighbors(IntMatrix{{3, 4}, {0, 3}}, Lattice::standard(2));
  CHECK(fig.positive == std::vector<IntVector>{{3, 0}, {4, 3}});
  CHECK(fig.all == std::vector<IntVector>{{3, 0}, {-3, 0}, {4, 3}, {-4, -3}});
  const EdgeNeighbors diag = edge_neighbors(IntMatrix{{3, 0}, {0, 3}}, Lattice::standard(2));
  CHECK(diag.all == std::vector<IntVector>{{3, 0}, {-3, 0}, {0, 3}, {0, -3}});
  CHECK(edge_neighbors(IntMatrix{{2, 1}, {0, 2}}, Lattice::standard(2)).positive ==
        std::vector<IntVector>{{2, 0}, {1, 2}});
}

TEST_CASE("sufficient_condition examples") {
  const ConnectivityVerdict three = sufficient_condition(IntMatrix{{3, 0}, {0, 3}});
  CHECK(three.status == Status::connected);
  CHECK(three.criterion == Criterion::sufficient_condition);
  CHECK(three.edge_tests.size() == 4);

  const ConnectivityVerdict fig = sufficient_condition(IntMatrix{{3, 4}, {0, 3}});
  CHECK(fig.status == Status::connected);

  const ConnectivityVerdict skew = sufficient_condition(IntMatrix{{3, 10}, {0, 3}});
  CHECK(skew.status == Status::inconclusive);
  REQUIRE(skew.edge_tests.size() == 4);
  CHECK(skew.edge_tests[0].connected);
  CHECK(skew.edge_tests[1].connected);
  CHECK_FALSE(skew.edge_tests[2].connected);
  CHECK(skew.edge_tests[2].g == IntVector{10, 3});
  CHECK_FALSE(skew.edge_tests[3].connected);
  CHECK(skew.separated.has_value());
}

TEST_CASE("sufficient_condition agrees with a brute-force union test and is one-sided") {
  for (const auto& a : oracle::sample_dilations(73, 60, 2, -6, 6)) {
    const ConnectivityVerdict v = sufficient_condition(a);
    CHECK(v.status != Status::disconnected);
    const auto digits = oracle::centered_digits(a, 8);
    bool all = true;
    for (std::size_t i = 0; i < 2; ++i)
      for (int s : {1, -1}) {
        std::vector<Point> u = digits;
        for (const auto& d : digits) u.push_back({d[0] + s * a(0, i).get_si(), d[1] + s * a(1, i).get_si()});
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        all = all && oracle::bfs_connected(u, oracle::unit_basis(2));
      }
    CHECK((v.status == Status::connected) == all);
  }
}

TEST_CASE("shell_certificate examples") {
  const ShellCertificate c32 = shell_certificate(3, 2);
  CHECK(c32.passed());
  // (-1, 1] x (-3/2, 3/2]
  CHECK(c32.inner_points == std::vector<Point>{{0, -1}, {0, 0}, {0, 1}, {1, -1}, {1, 0}, {1, 1}});
  CHECK(c32.outer_count == 12);

  const ShellCertificate c21 = shell_certificate(2, 1);
  CHECK(c21.passed());
  CHECK(c21.inner_points == std::vector<Point>{{0}, {1}});

  const ShellCertificate n22 = shell_certificate(-2, 2);
  CHECK(n22.passed());
  CHECK(n22.digit_count == 4);

  CHECK_THROWS_AS(shell_certificate(1, 2), NotDilation);
}

TEST_CASE("shell certificate sandwich and connectivity for all small blocks") {
  for (int lambda : {-4, -3, -2, 2, 3, 4})
    for (std::size_t k = 1; k <= 3; ++k) {
      const ShellCertificate c = evaluate_shell_certificate(lambda, k);
      INFO("lambda=" << lambda << " k=" << k);
      CHECK(c.sandwich.passed);
      CHECK(c.digit_connectivity.passed);
      CHECK(oracle::bfs_connected(block_digit_set(lambda, k).digits(), oracle::unit_basis(k)));
      if (k <= 2) CHECK(c.shell_adjacency.passed);
    }
}

TEST_CASE("shell adjacency fails on cube edges for three-dimensional blocks") {
  // Shell points with two coordinates in the outer layer sit at taxicab
  // distance 2 from C_inner; the check reports them instead of passing.
  const ShellCertificate c = evaluate_shell_certificate(2, 3);
  CHECK_FALSE(c.shell_adjacency.passed);
  CHECK(c.digit_connectivity.passed);
  try {
    shell_certificate(2, 3);
    FAIL("expected a certificate failure");
  } catch (const CertificateFailure& e) {
    CHECK(e.check() == "shell-adjacency");
  }
}

TEST_CASE("neighbor_set_bounded") {
  const NeighborSet bin = neighbor_set_bounded(IntMatrix{{2}}, DigitSet(1, {{0}, {1}}, provenance::Block{2, 1}));
  CHECK(bin.neighbors == std::vector<Point>{{-1}, {1}});
  CHECK(bin.radius == 2);

  const NeighborSet tern = neighbor_set_bounded(IntMatrix{{3}}, DigitSet(1, {{-1}, {0}, {1}}, provenance::Block{3, 1}));
  CHECK(tern.neighbors == std::vector<Point>{{-1}, {1}});

  const IntMatrix two{{2, 0}, {0, 2}};
  const NeighborSet square = neighbor_set_bounded(two, centered_digit_set(two));
  std::vector<Point> ring;
  for (std::int64_t x = -1; x <= 1; ++x)
    for (std::int64_t y = -1; y <= 1; ++y)
      if (x || y) ring.push_back({x, y});
  CHECK(square.neighbors == ring);

  // a larger seed radius gives the same fixed point
  CHECK(neighbor_set_bounded(IntMatrix{{2}}, DigitSet(1, {{0}, {1}}, provenance::Block{2, 1}), Integer(6)).neighbors ==
        bin.neighbors);

  ExecutionOptions tight;
  tight.point_budget = 10;
  CHECK_THROWS_AS(neighbor_set_bounded(two, centered_digit_set(two), Integer(5), tight), BudgetExceeded);
}

TEST_CASE("neighbour sets are symmetric") {
  for (const auto& a : oracle::sample_dilations(79, 12, 2, -4, 4, 20)) {
    const NeighborSet s = neighbor_set_bounded(a, centered_digit_set(a));
    for (const auto& p : s.neighbors) {
      Point neg = p;
      for (auto& x : neg) x = -x;
      CHECK(std::binary_search(s.neighbors.begin(), s.neighbors.end(), neg));
    }
  }
}

TEST_CASE("pipeline_connected_digits examples") {
  const PipelineResult skew = pipeline_connected_digits(IntMatrix{{3, 10}, {0, 3}});
  CHECK(skew.decomposition.jordan == IntMatrix{{3, 1}, {0, 3}});
  CHECK(skew.jordan_digits.digits() == block_digit_set(3, 2).digits());
  std::vector<Point> mapped;
  for (std::int64_t x : {-10, 0, 10})
    for (std::int64_t y : {-1, 0, 1}) mapped.push_back({x, y});
  CHECK(skew.digits.digits() == mapped);
  CHECK(skew.verdict.status == Status::connected);
  CHECK(skew.verdict.criterion == Criterion::pipeline);
  CHECK(skew.residue.complete == oracle::pairwise_residue_system(IntMatrix{{3, 10}, {0, 3}}, mapped));

  const PipelineResult diag = pipeline_connected_digits(IntMatrix{{2, 0}, {0, 3}});
  CHECK(diag.decomposition.similarity == IntMatrix::identity(2));
  CHECK(diag.digits.digits() == std::vector<Point>{{0, -1}, {0, 0}, {0, 1}, {1, -1}, {1, 0}, {1, 1}});
  CHECK(diag.verdict.status == Status::connected);
  CHECK(diag.residue.complete);

  const IntMatrix sym{{4, 1}, {1, 4}};
  const PipelineResult s = pipeline_connected_digits(sym);
  CHECK(s.decomposition.jordan == IntMatrix{{3, 0}, {0, 5}});
  std::vector<Point> dj;
  for (std::int64_t x = -1; x <= 1; ++x)
    for (std::int64_t y = -2; y <= 2; ++y) dj.push_back({x, y});
  CHECK(s.jordan_digits.digits() == dj);
  CHECK(s.verdict.status == Status::connected);
  CHECK(s.residue.complete == oracle::pairwise_residue_system(sym, s.digits.digits()));

  CHECK_THROWS_AS(pipeline_connected_digits(IntMatrix::identity(2)), NotDilation);
  CHECK_THROWS_AS(pipeline_connected_digits(IntMatrix{{0, -1}, {1, 0}}), NotRationalSpectrum);
  CHECK_THROWS_AS(pipeline_connected_digits(IntMatrix{{2, 1, 0}, {0, 2, 1}, {0, 0, 2}}), CertificateFailure);
}

TEST_CASE("sufficient condition implies connected level sets") {
  int connected = 0;
  for (const auto& a : oracle::sample_dilations(83, 80, 2, -6, 6)) {
    if (sufficient_condition(a).status != Status::connected) continue;
    ++connected;
    const DigitSet d = centered_digit_set(a);
    for (const auto& c : check_level_connectivity(a, d, translation_lattice(a, d), 3)) CHECK(c.connected);
  }
  CHECK(connected > 10);
}

TEST_CASE("similarity transport of level sets") {
  for (const auto& a : oracle::sample_dilations(89, 15, 2, -5, 5)) {
    const PipelineResult r = pipeline_connected_digits(a);
    const IntMatrix& p = r.decomposition.similarity;
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<Point> image;
      for (const auto& x : level_set(r.decomposition.jordan, r.jordan_digits, n).points.to_points())
        image.push_back(oracle::apply_int(p, x));
      std::sort(image.begin(), image.end());
      CHECK(image == level_set(a, r.digits, n).points.to_points());
    }
  }
}
