#include "tileforge/points.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

namespace tileforge {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw CoordinateOverflow("coordinate exceeds the 64-bit range");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw CoordinateOverflow("coordinate exceeds the 64-bit range");
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw CoordinateOverflow("integer " + z.get_str() + " exceeds the 64-bit range");
  return static_cast<std::int64_t>(z.get_si());
}

Point to_point(const IntVector& v) {
  Point p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = to_int64(v[i]);
  return p;
}

IntVector to_int_vector(std::span<const std::int64_t> p) {
  IntVector v;
  v.reserve(p.size());
  for (auto x : p) v.emplace_back(static_cast<long>(x));
  return v;
}

SmallMatrix::SmallMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), data_(m.rows() * m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = to_int64(m(i, j));
}

void SmallMatrix::apply(std::span<const std::int64_t> p, std::span<std::int64_t> out) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::int64_t a = data_[i * cols_ + j];
      if (a != 0) acc = checked_add(acc, checked_mul(a, p[j]));
    }
    out[i] = acc;
  }
}

void SmallMatrix::apply_add(std::span<const std::int64_t> p, std::span<const std::int64_t> offset,
                            std::span<std::int64_t> out) const {
  apply(p, out);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = checked_add(out[i], offset[i]);
}

bool lex_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PointSet::PointSet(std::size_t dim, std::vector<std::int64_t> coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0 ? !coords_.empty() : coords_.size() % dim_ != 0)
    throw DimensionError("coordinate buffer is not a whole number of points");
  canonicalize();
}

PointSet PointSet::from_points(std::size_t dim, const std::vector<Point>& points) {
  std::vector<std::int64_t> coords;
  coords.reserve(dim * points.size());
  for (const auto& p : points) {
    if (p.size() != dim) throw DimensionError("point dimension mismatch");
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PointSet(dim, std::move(coords));
}

void PointSet::canonicalize() {
  const std::size_t n = size();
  if (n < 2) return;
  const std::size_t d = dim_;
  if (d == 1) {
    std::sort(coords_.begin(), coords_.end());
    coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
    return;
  }
  if (n > UINT32_MAX) throw BudgetExceeded("point set too large to sort");
  const std::int64_t* base = coords_.data();
  auto at = [base, d](std::uint32_t i) { return std::span<const std::int64_t>(base + std::size_t{i} * d, d); };
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return lex_less(at(a), at(b)); });
  std::vector<std::int64_t> sorted;
  sorted.reserve(coords_.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto p = at(order[k]);
    if (k > 0 && std::equal(p.begin(), p.end(), sorted.end() - static_cast<std::ptrdiff_t>(d))) continue;
    sorted.insert(sorted.end(), p.begin(), p.end());
  }
  coords_ = std::move(sorted);
}

std::size_t PointSet::find(std::span<const std::int64_t> p) const {
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (lex_less((*this)[mid], p))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size()) {
    auto q = (*this)[lo];
    if (std::equal(q.begin(), q.end(), p.begin(), p.end())) return lo;
  }
  return size();
}

bool PointSet::contains(std::span<const std::int64_t> p) const { return find(p) != size(); }

std::vector<Point> PointSet::to_points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto p = (*this)[i];
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

std::size_t chunk_count(std::size_t n, unsigned threads) {
  if (n == 0) return 0;
  return std::min<std::size_t>(n, std::max(1U, threads));
}

void parallel_chunks(std::size_t n, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  const std::size_t chunks = chunk_count(n, threads);
  if (chunks == 0) return;
  auto bounds = [n, chunks](std::size_t c) { return n * c / chunks; };
  if (chunks == 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        try {
          fn(bounds(c), bounds(c + 1), c);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string format_point(std::span<const std::int64_t> p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

}  // namespace tileforge
