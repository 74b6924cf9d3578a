#pragma once

#include <cstdint>
#include <string>

#include "twodir/mask.hpp"

namespace twodir {

enum class FunctionKind { Phi, Psi };

/// Values of a length-r vector function (phi, psi^(s), or an n-th derivative of
/// either) on the grid {a + i d^-L : i = 0 .. (b-a) d^L}. Column i of values()
/// holds the value at x(i). Points outside [a, b] read as zero.
class PointValueTable {
public:
  PointValueTable(int a, int b, int dilation, int level, int multiplicity, FunctionKind kind,
                  int derivative = 0, int wavelet = 0);

  int a() const { return a_; }
  int b() const { return b_; }
  int dilation() const { return d_; }
  int level() const { return level_; }
  int multiplicity() const { return static_cast<int>(values_.rows()); }
  FunctionKind kind() const { return kind_; }
  int derivative() const { return derivative_; }
  /// Wavelet index s (>= 1) for Psi tables, 0 for Phi.
  int wavelet() const { return wavelet_; }
  bool normalized() const { return normalized_; }
  void set_normalized(bool n) { normalized_ = n; }

  std::int64_t size() const { return values_.cols(); }
  /// d^L.
  std::int64_t denominator() const { return denom_; }
  double x(std::int64_t i) const;

  Matrix& values() { return values_; }
  const Matrix& values() const { return values_; }
  auto value(std::int64_t i) const { return values_.col(i); }

  /// Value at x = p / d^L (absolute numerator p); zero off the table.
  Vector at_numerator(std::int64_t p) const;
  /// Value at x = p / d^level for any level: exact when the point lies on this
  /// grid, otherwise linear interpolation between the two neighbouring grid points.
  Vector sample(std::int64_t p, int level) const;

  /// The same function on the coarser grid of the given level.
  PointValueTable restricted(int level) const;

  /// Short label such as "phi", "psi:1", "D1phi", "D2psi:1".
  std::string label() const;

private:
  int a_, b_, d_, level_;
  FunctionKind kind_;
  int derivative_, wavelet_;
  bool normalized_ = false;
  std::int64_t denom_;
  Matrix values_;
};

/// Largest grid the library will allocate, in points.
inline constexpr std::int64_t kMaxGridPoints = std::int64_t{1} << 24;

/// Throws DomainError when the level-L grid over [a, b] would exceed kMaxGridPoints.
void check_grid_size(int a, int b, int dilation, int level);

/// d^n for small non-negative n.
std::int64_t ipow(std::int64_t d, int n);

/// Block transfer matrix over the integer grid [a, b]:
/// block (l, k) = sqrt(d) * (plus_{d l - k} + sign * minus_{d l + k}).
struct TransferMatrix {
  int a = 0;
  int b = 0;
  int r = 1;
  Matrix matrix;

  Matrix block(int l, int k) const { return matrix.block((l - a) * r, (k - a) * r, r, r); }
};

TransferMatrix assemble_transfer(const MaskPair& mask, int dilation, int a, int b, double sign);

/// One application of a two-scale relation on a dyadic grid:
///   out(x) = scale * sum_k [plus_k src(d x - k) + sign * minus_k src(k - d x)]
/// for every x on [src.a(), src.b()] at target_level, where target_level <= src.level() + 1
/// guarantees that every argument is an exact grid hit. The result carries src's
/// metadata; callers adjust kind/derivative as needed.
PointValueTable apply_two_scale(const PointValueTable& src, const MaskPair& mask, double scale, double sign,
                                int target_level);

}  // namespace twodir
