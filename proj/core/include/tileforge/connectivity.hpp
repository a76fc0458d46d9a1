#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tileforge/digitset.hpp"
#include "tileforge/jordan.hpp"
#include "tileforge/lattice.hpp"
#include "tileforge/points.hpp"

namespace tileforge {

/// Edge generators for lattice-graph connectivity; edges join s and s +/- b.
class AdjacencyBasis {
 public:
  explicit AdjacencyBasis(std::vector<Point> vectors);
  static AdjacencyBasis standard(std::size_t dim);
  static AdjacencyBasis of(const Lattice& lattice);

  const std::vector<Point>& vectors() const noexcept { return vectors_; }

 private:
  std::vector<Point> vectors_;
};

struct ComponentReport {
  bool connected = false;
  std::size_t component_count = 0;
  /// component[i] is the component index of the i-th point of the input set.
  /// Components are numbered in order of their lexicographically smallest point.
  std::vector<std::uint32_t> component;
  /// Lexicographically smallest point and size of each component.
  std::vector<Point> representatives;
  std::vector<std::size_t> sizes;
};

/// Union-find over the graph on `points` with edges {s, s + b}, b in the basis.
ComponentReport is_B_connected(const PointSet& points, const AdjacencyBasis& basis);

struct LevelSet {
  std::size_t depth = 0;
  PointSet points;
  std::size_t size() const { return points.size(); }
};

/// D_n = A D_{n-1} + D with D_1 = D; all expansions sum_{i<n} A^i d_i.
LevelSet level_set(const IntMatrix& a, const DigitSet& digits, std::size_t n, const ExecutionOptions& options = {});

/// One further step of the level-set recursion.
LevelSet next_level_set(const IntMatrix& a, const DigitSet& digits, const LevelSet& previous,
                        const ExecutionOptions& options = {});

struct LevelCheck {
  std::size_t depth = 0;
  std::size_t points = 0;
  std::size_t components = 0;
  bool connected = false;
};

/// Gamma-connectivity of D_1..D_{n_max}. Throws InvariantViolation if some D_n leaves Gamma.
std::vector<LevelCheck> check_level_connectivity(const IntMatrix& a, const DigitSet& digits, const Lattice& lattice,
                                                 std::size_t n_max, const ExecutionOptions& options = {});

struct EdgeNeighbors {
  /// g_i = A b_i for the Hermite basis b_i; a basis of A Gamma.
  std::vector<IntVector> positive;
  /// +g_1, -g_1, +g_2, -g_2, ...
  std::vector<IntVector> all;
};

EdgeNeighbors edge_neighbors(const IntMatrix& a, const Lattice& lattice);

enum class Status { connected, disconnected, inconclusive };
enum class Criterion { digit_connectivity, sufficient_condition, level_sets, shell_certificate, pipeline };

std::string to_string(Status s);
std::string to_string(Criterion c);

struct EdgeTest {
  IntVector g;
  bool connected = false;
  std::size_t points = 0;
  std::size_t components = 0;
};

struct ConnectivityVerdict {
  Status status = Status::inconclusive;
  Criterion criterion = Criterion::sufficient_condition;
  /// Human-readable certificate or the reason the test did not decide.
  std::string witness;
  /// Representatives of two separated components, for disconnected or failing cases.
  std::optional<std::pair<Point, Point>> separated;
  std::vector<EdgeTest> edge_tests;
};

/// For the centered canonical digit set of A: tests whether
/// (AF u (g + AF)) cut with Gamma_A is Gamma_A-connected for every g in S_AF.
/// Returns connected or inconclusive, never disconnected.
ConnectivityVerdict sufficient_condition(const IntMatrix& a, const ExecutionOptions& options = {});

struct ShellCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cube-sandwich evidence that a Jordan block's digit set is lattice-connected.
struct ShellCertificate {
  Integer eigenvalue;
  std::size_t size = 0;
  std::vector<Point> inner_points;
  std::size_t outer_count = 0;
  std::size_t shell_count = 0;
  std::size_t digit_count = 0;
  ShellCheck sandwich;          // C_inner points within digits within C_outer points
  ShellCheck shell_adjacency;   // every shell point at taxicab distance 1 from C_inner
  ShellCheck digit_connectivity;
  bool passed() const { return sandwich.passed && shell_adjacency.passed && digit_connectivity.passed; }
};

/// Evaluates all three checks without throwing on failure.
ShellCertificate evaluate_shell_certificate(const Integer& lambda, std::size_t k);

/// As evaluate_shell_certificate, but throws CertificateFailure naming the first failed check.
ShellCertificate shell_certificate(const Integer& lambda, std::size_t k);

struct NeighborSet {
  std::vector<Point> neighbors;
  Integer radius;
  Lattice lattice = Lattice::standard(1);
};

/// Greatest subset R of the seed box in Gamma_A \ {0} such that every s in R
/// has digits d, d' with A s + d' - d in R u {0}. Contains every true neighbour
/// whenever the radius covers the tile's diameter. radius = nullopt uses
/// ceil(diameter_bound(A, D)).
NeighborSet neighbor_set_bounded(const IntMatrix& a, const DigitSet& digits,
                                 std::optional<Integer> radius = std::nullopt, const ExecutionOptions& options = {});

struct PipelineResult {
  JordanDecomposition decomposition;
  std::vector<DigitSet> block_digits;
  std::vector<ShellCertificate> certificates;
  DigitSet jordan_digits;
  DigitSet digits;
  ResidueCheck residue;
  ConnectivityVerdict verdict;
};

/// Jordan route: block digit sets, their product D_J, certificates for every
/// block, and D_A = P D_J. Throws CertificateFailure if a block certificate fails.
PipelineResult pipeline_connected_digits(const IntMatrix& a);

}  // namespace tileforge
