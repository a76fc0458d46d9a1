#include <algorithm>

#include "tileforge/attractor.hpp"
#include "tileforge/connectivity.hpp"

namespace tileforge {

NeighborSet neighbor_set_bounded(const IntMatrix& a, const DigitSet& digits, std::optional<Integer> radius,
                                 const ExecutionOptions& options) {
  const std::size_t m = digits.dim();
  if (!a.is_square() || a.rows() != m) throw DimensionError("digit set dimension does not match matrix");

  NeighborSet out;
  out.lattice = translation_lattice(a, digits);
  out.radius = radius ? *radius : ceil(diameter_bound(a, digits));
  if (out.radius < 0) throw std::invalid_argument("neighbour radius must be non-negative");
  const std::int64_t r = to_int64(out.radius);

  const auto width = static_cast<std::uint64_t>(2 * r + 1);
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (box > options.point_budget / width)
      throw BudgetExceeded("neighbour seed box of radius " + out.radius.get_str() + " exceeds the point budget");
    box *= width;
  }

  std::vector<std::int64_t> seed;
  Point z(m);
  for (std::uint64_t idx = 0; idx < box; ++idx) {
    std::uint64_t rest = idx;
    bool zero = true;
    for (std::size_t i = m; i-- > 0;) {
      z[i] = static_cast<std::int64_t>(rest % width) - r;
      rest /= width;
      zero = zero && z[i] == 0;
    }
    if (zero || !out.lattice.contains(z)) continue;
    seed.insert(seed.end(), z.begin(), z.end());
  }
  PointSet candidates(m, std::move(seed));

  std::vector<Point> differences;
  for (const auto& d : digits.digits())
    for (const auto& e : digits.digits()) {
      Point diff(m);
      for (std::size_t k = 0; k < m; ++k) diff[k] = checked_add(e[k], -d[k]);
      differences.push_back(std::move(diff));
    }
  std::sort(differences.begin(), differences.end());
  differences.erase(std::unique(differences.begin(), differences.end()), differences.end());

  // Delete candidates without a successor until nothing changes; the greatest
  // fixed point does not depend on deletion order.
  const SmallMatrix matrix(a);
  for (;;) {
    std::vector<std::int64_t> kept;
    Point image(m), target(m);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      matrix.apply(candidates[i], image);
      bool has_successor = false;
      for (const auto& e : differences) {
        bool zero = true;
        bool far = false;
        for (std::size_t k = 0; k < m; ++k) {
          target[k] = checked_add(image[k], e[k]);
          zero = zero && target[k] == 0;
          far = far || target[k] > r || target[k] < -r;
        }
        if (zero || (!far && candidates.contains(target))) {
          has_successor = true;
          break;
        }
      }
      if (has_successor) kept.insert(kept.end(), candidates[i].begin(), candidates[i].end());
    }
    PointSet next(m, std::move(kept));
    if (next.size() == candidates.size()) break;
    candidates = std::move(next);
  }
  out.neighbors = candidates.to_points();
  return out;
}

}  // namespace tileforge
