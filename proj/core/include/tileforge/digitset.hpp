#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tileforge/points.hpp"
#include "tileforge/ratmath.hpp"

namespace tileforge {

namespace provenance {
struct CenteredCanonical {
  IntMatrix matrix;
};
struct Block {
  Integer eigenvalue;
  std::size_t size = 0;
};
struct Product {
  std::vector<std::string> parts;
};
struct Mapped {
  IntMatrix map;
  std::string source;
};
}  // namespace provenance

using Provenance =
    std::variant<provenance::CenteredCanonical, provenance::Block, provenance::Product, provenance::Mapped>;

std::string describe(const Provenance& p);

/// Distinct integer vectors in lexicographic order, tagged with how they were built.
class DigitSet {
 public:
  DigitSet(std::size_t dim, std::vector<Point> digits, Provenance provenance);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return digits_.size(); }
  const std::vector<Point>& digits() const noexcept { return digits_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  bool contains(const Point& p) const;
  PointSet as_point_set() const { return PointSet::from_points(dim_, digits_); }

 private:
  std::size_t dim_;
  std::vector<Point> digits_;
  Provenance provenance_;
};

/// D = A(-1/2, 1/2]^m cut with Z^m, by exact half-open membership over the
/// row-sum bounding box. Throws SingularMatrixError for singular A.
DigitSet centered_digit_set(const IntMatrix& a, const ExecutionOptions& options = {});

/// True iff every coordinate of A^{-1} z lies in (-1/2, 1/2].
bool in_centered_image(const IntMatrix& a, const IntVector& z);

struct ResidueCheck {
  bool complete = false;
  /// Two digits in the same coset of A Z^m, when found.
  std::optional<std::pair<Point, Point>> colliding_pair;
  /// (digit count, |det A|) when they differ.
  std::optional<std::pair<std::size_t, Integer>> cardinality_gap;
  explicit operator bool() const noexcept { return complete; }
};

/// Complete-residue-system test for Z^m / A Z^m.
ResidueCheck is_complete_residue_system(const IntMatrix& a, const DigitSet& digits);

/// Centered canonical digit set of the k x k Jordan block. Requires |lambda| >= 2.
DigitSet block_digit_set(const Integer& lambda, std::size_t k);

/// Cartesian product, coordinates concatenated in part order.
DigitSet product_digit_set(const std::vector<DigitSet>& parts);

/// {P g : g in D}. Does not check the residue-system property.
DigitSet map_digit_set(const IntMatrix& p, const DigitSet& digits);

/// Vertices (1/2)(l e1 + e2, ..., l e_{k-1} + e_k, l e_k) of the block's image
/// of the centered cube, for e in {+1,-1}^k with +1 ordered first.
std::vector<RatVector> parallelepiped_corners(const Integer& lambda, std::size_t k);

}  // namespace tileforge
