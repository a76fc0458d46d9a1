#pragma once

// Integer point storage for the enumeration-heavy paths (digit sets, level
// sets, tile clouds). Coordinates are signed 64-bit; every arithmetic step that
// could leave that range is checked and throws CoordinateOverflow.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tileforge/ratmath.hpp"

namespace tileforge {

using Point = std::vector<std::int64_t>;

/// Execution knobs shared by the enumeration routines.
struct ExecutionOptions {
  /// Worker threads; results never depend on this value.
  unsigned threads = 1;
  /// Maximum number of points any single enumeration may materialize.
  std::uint64_t point_budget = std::uint64_t{1} << 22;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Converts to int64 or throws CoordinateOverflow.
std::int64_t to_int64(const Integer& z);
Point to_point(const IntVector& v);
IntVector to_int_vector(std::span<const std::int64_t> p);

/// Small dense integer matrix with checked products, for inner loops.
class SmallMatrix {
 public:
  SmallMatrix() = default;
  explicit SmallMatrix(const IntMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// out = M * p (+ offset when given). `out` must have rows() entries.
  void apply(std::span<const std::int64_t> p, std::span<std::int64_t> out) const;
  void apply_add(std::span<const std::int64_t> p, std::span<const std::int64_t> offset,
                 std::span<std::int64_t> out) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Flat, lexicographically sorted set of integer points of one dimension.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim) : dim_(dim) {}
  /// Takes raw coordinates (size a multiple of dim) and canonicalizes them.
  PointSet(std::size_t dim, std::vector<std::int64_t> coords);
  static PointSet from_points(std::size_t dim, const std::vector<Point>& points);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const noexcept { return coords_.empty(); }

  std::span<const std::int64_t> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  /// Binary search; the set is always canonical.
  bool contains(std::span<const std::int64_t> p) const;
  /// Index of p, or size() when absent.
  std::size_t find(std::span<const std::int64_t> p) const;

  std::vector<Point> to_points() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_;
  }

 private:
  void canonicalize();

  std::size_t dim_ = 0;
  std::vector<std::int64_t> coords_;
};

bool lex_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Splits [0, n) into contiguous chunks and runs fn(begin, end, chunk) on up to
/// `threads` workers. Chunk boundaries depend only on n and threads.
void parallel_chunks(std::size_t n, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

/// Number of chunks parallel_chunks will use for (n, threads).
std::size_t chunk_count(std::size_t n, unsigned threads);

std::string format_point(std::span<const std::int64_t> p);

}  // namespace tileforge
