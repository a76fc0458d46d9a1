#include "tileforge/attractor.hpp"

#include <algorithm>
#include <ostream>

#include "tileforge/connectivity.hpp"

namespace tileforge {

TileCloud::TileCloud(std::size_t depth, PointSet numerators, Integer denominator, Rational gap_bound)
    : depth_(depth), numerators_(std::move(numerators)), denominator_(std::move(denominator)),
      gap_bound_(std::move(gap_bound)) {
  if (denominator_ <= 0) throw std::invalid_argument("tile cloud denominator must be positive");
}

RatVector TileCloud::point(std::size_t i) const {
  const auto n = numerators_[i];
  RatVector p;
  p.reserve(n.size());
  for (auto x : n) p.push_back(make_rational(Integer(static_cast<long>(x)), denominator_));
  return p;
}

std::vector<RatVector> TileCloud::points() const {
  std::vector<RatVector> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

Rational diameter_bound(const IntMatrix& a, const DigitSet& digits) {
  if (!a.is_square() || a.rows() != digits.dim()) throw DimensionError("digit set dimension does not match matrix");
  const RatMatrix inv = inverse(a);
  Rational max_digit = 0;
  for (const auto& d : digits.digits())
    for (auto x : d) max_digit = std::max(max_digit, Rational(abs(Integer(static_cast<long>(x)))));

  constexpr std::size_t kMaxPower = 4096;
  RatMatrix power = inv;
  Rational norm_sum = 0;
  for (std::size_t k = 1; k <= kMaxPower; ++k) {
    const Rational norm = infinity_norm(power);
    norm_sum += norm;
    if (norm < 1) return 2 * max_digit * norm_sum / (1 - norm);
    power = power * inv;
  }
  throw InvariantViolation("no power of A^{-1} contracts in the infinity norm; A is not a dilation");
}

TileCloud approximate(const IntMatrix& a, const DigitSet& digits, std::size_t n, const ExecutionOptions& options) {
  const LevelSet level = level_set(a, digits, n, options);
  const std::size_t m = digits.dim();

  // A^{-n} = adj(A)^n / det(A)^n; keep a positive common denominator.
  const Integer q = det(a);
  Integer denominator;
  mpz_pow_ui(denominator.get_mpz_t(), q.get_mpz_t(), n);
  IntMatrix numerator_map = power(adjugate(a), static_cast<unsigned>(n));
  if (denominator < 0) {
    denominator = -denominator;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) numerator_map(i, j) = -numerator_map(i, j);
  }
  const SmallMatrix map(numerator_map);

  std::vector<std::int64_t> coords(level.size() * m);
  parallel_chunks(level.size(), options.threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i)
      map.apply(level.points[i], std::span<std::int64_t>(coords.data() + i * m, m));
  });

  const Rational contraction = infinity_norm(to_rational(numerator_map)) / Rational(denominator);
  const Rational gap = contraction * diameter_bound(a, digits) / 2;
  return TileCloud(n, PointSet(m, std::move(coords)), denominator, gap);
}

std::size_t RasterImage::occupied() const {
  return static_cast<std::size_t>(std::count(pixels.begin(), pixels.end(), std::uint8_t{1}));
}

Viewport default_viewport(const TileCloud& cloud) {
  if (cloud.dim() != 2) throw UnsupportedDimension("rasterization needs a planar cloud; use point export instead");
  if (cloud.size() == 0) throw std::invalid_argument("empty tile cloud");
  std::int64_t xlo = cloud.numerators()[0][0], xhi = xlo;
  std::int64_t ylo = cloud.numerators()[0][1], yhi = ylo;
  for (std::size_t i = 1; i < cloud.size(); ++i) {
    const auto p = cloud.numerators()[i];
    xlo = std::min(xlo, p[0]);
    xhi = std::max(xhi, p[0]);
    ylo = std::min(ylo, p[1]);
    yhi = std::max(yhi, p[1]);
  }
  auto as_rational = [&](std::int64_t v) { return make_rational(Integer(static_cast<long>(v)), cloud.denominator()); };
  Viewport vp{as_rational(xlo) - cloud.gap_bound(), as_rational(xhi) + cloud.gap_bound(),
              as_rational(ylo) - cloud.gap_bound(), as_rational(yhi) + cloud.gap_bound()};
  const Rational half(1, 2);
  if (vp.xmin == vp.xmax) {
    vp.xmin -= half;
    vp.xmax += half;
  }
  if (vp.ymin == vp.ymax) {
    vp.ymin -= half;
    vp.ymax += half;
  }
  return vp;
}

namespace {

// Maps numerator/denominator coordinates onto pixel indices along one axis:
// index = floor((x - origin) * cells / extent) with x = numerator / denominator.
// `flipped` measures from the far edge instead (rows count down from ymax).
class AxisMap {
 public:
  AxisMap(const Rational& lo, const Rational& hi, std::size_t cells, const Integer& denominator, bool flipped)
      : cells_(cells) {
    const Rational origin = flipped ? hi : lo;
    const Rational extent = hi - lo;
    // t = sign * (x - origin) * cells / extent
    //   = sign * (num * ob - oa * den) * cells * ee / (den * ob * ea)
    origin_num_ = origin.get_num();
    origin_den_ = origin.get_den();
    den_ = denominator;
    scale_ = Integer(static_cast<unsigned long>(cells)) * extent.get_den();
    divisor_ = denominator * origin.get_den() * extent.get_num();
    limit_ = divisor_ * Integer(static_cast<unsigned long>(cells));
    sign_ = flipped ? -1 : 1;
  }

  /// Pixel index, or nullopt when the coordinate is outside [lo, hi].
  std::optional<std::size_t> index(std::int64_t numerator, Integer& scratch) const {
    scratch = Integer(static_cast<long>(numerator)) * origin_den_ - origin_num_ * den_;
    if (sign_ < 0) scratch = -scratch;
    scratch *= scale_;
    if (scratch < 0 || scratch > limit_) return std::nullopt;
    mpz_fdiv_q(scratch.get_mpz_t(), scratch.get_mpz_t(), divisor_.get_mpz_t());
    return std::min<std::size_t>(scratch.get_ui(), cells_ - 1);
  }

 private:
  std::size_t cells_;
  Integer origin_num_, origin_den_, den_, scale_, divisor_, limit_;
  int sign_ = 1;
};

}  // namespace

RasterImage rasterize(const TileCloud& cloud, std::size_t width, std::size_t height,
                      const std::optional<Viewport>& viewport, const ExecutionOptions& options) {
  if (cloud.dim() != 2) throw UnsupportedDimension("rasterization needs a planar cloud; use point export instead");
  if (width == 0 || height == 0) throw std::invalid_argument("image size must be positive");
  RasterImage image;
  image.width = width;
  image.height = height;
  image.viewport = viewport ? *viewport : default_viewport(cloud);
  const Viewport& vp = image.viewport;
  if (!(vp.xmin < vp.xmax) || !(vp.ymin < vp.ymax)) throw std::invalid_argument("viewport must have positive extent");

  const AxisMap columns(vp.xmin, vp.xmax, width, cloud.denominator(), false);
  const AxisMap rows(vp.ymin, vp.ymax, height, cloud.denominator(), true);

  const std::size_t chunks = chunk_count(cloud.size(), options.threads);
  std::vector<std::vector<std::uint8_t>> partial(chunks, std::vector<std::uint8_t>(width * height, 0));
  parallel_chunks(cloud.size(), options.threads, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    Integer scratch;
    auto& grid = partial[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      const auto p = cloud.numerators()[i];
      const auto col = columns.index(p[0], scratch);
      if (!col) continue;
      const auto row = rows.index(p[1], scratch);
      if (!row) continue;
      grid[*row * width + *col] = 1;
    }
  });
  image.pixels.assign(width * height, 0);
  for (const auto& grid : partial)
    for (std::size_t k = 0; k < grid.size(); ++k) image.pixels[k] |= grid[k];
  return image;
}

void export_points(const TileCloud& cloud, std::ostream& out) {
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto n = cloud.numerators()[i];
    for (std::size_t k = 0; k < n.size(); ++k) {
      if (k) out << ',';
      out << to_string(make_rational(Integer(static_cast<long>(n[k])), cloud.denominator()));
    }
    out << '\n';
  }
}

}  // namespace tileforge
