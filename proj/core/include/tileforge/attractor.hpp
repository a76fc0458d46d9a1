#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "tileforge/digitset.hpp"
#include "tileforge/points.hpp"
#include "tileforge/ratmath.hpp"

namespace tileforge {

/// Exact finite approximation {sum_{j=1..n} A^{-j} d_j} of the attractor.
///
/// Points share one positive denominator: point i is numerators()[i] / denominator().
/// Numerator order is therefore the lexicographic order of the rational points.
class TileCloud {
 public:
  TileCloud(std::size_t depth, PointSet numerators, Integer denominator, Rational gap_bound);

  std::size_t depth() const noexcept { return depth_; }
  std::size_t dim() const noexcept { return numerators_.dim(); }
  std::size_t size() const noexcept { return numerators_.size(); }
  const PointSet& numerators() const noexcept { return numerators_; }
  const Integer& denominator() const noexcept { return denominator_; }
  /// Upper bound on the sup-norm distance between the cloud and the attractor.
  const Rational& gap_bound() const noexcept { return gap_bound_; }

  RatVector point(std::size_t i) const;
  std::vector<RatVector> points() const;

 private:
  std::size_t depth_;
  PointSet numerators_;
  Integer denominator_;
  Rational gap_bound_;
};

/// Upper bound on the sup-norm diameter of T(A, D): with k the least power
/// such that ||A^{-k}|| < 1, returns 2 max||d|| (sum_{j<=k} ||A^{-j}||) / (1 - ||A^{-k}||).
Rational diameter_bound(const IntMatrix& a, const DigitSet& digits);

/// Depth-n cloud, computed as A^{-n} D_n with D_n the level set.
TileCloud approximate(const IntMatrix& a, const DigitSet& digits, std::size_t n, const ExecutionOptions& options = {});

struct Viewport {
  Rational xmin, xmax, ymin, ymax;
  friend bool operator==(const Viewport&, const Viewport&) = default;
};

struct RasterImage {
  std::size_t width = 0;
  std::size_t height = 0;
  Viewport viewport;
  /// Row-major, row 0 at ymax; 1 = occupied.
  std::vector<std::uint8_t> pixels;
  std::size_t occupied() const;
};

/// Default viewport: the cloud's bounding box padded by its gap bound.
Viewport default_viewport(const TileCloud& cloud);

/// Exact rasterization of a planar cloud. Points outside an explicit viewport are skipped.
RasterImage rasterize(const TileCloud& cloud, std::size_t width, std::size_t height,
                      const std::optional<Viewport>& viewport = std::nullopt, const ExecutionOptions& options = {});

/// One point per line, coordinates as reduced fractions, lexicographic order.
void export_points(const TileCloud& cloud, std::ostream& out);

}  // namespace tileforge
