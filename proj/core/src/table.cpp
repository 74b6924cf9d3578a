#include "twodir/table.hpp"

#include <cmath>

#include "twodir/errors.hpp"

namespace twodir {

std::int64_t ipow(std::int64_t d, int n) {
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) r *= d;
  return r;
}

void check_grid_size(int a, int b, int dilation, int level) {
  if (dilation < 2) throw DomainError("dilation must be at least 2");
  const double points = (b - a) * std::pow(static_cast<double>(dilation), level) + 1.0;
  if (points > static_cast<double>(kMaxGridPoints))
    throw DomainError("grid at level " + std::to_string(level) + " would exceed " +
                      std::to_string(kMaxGridPoints) + " points");
}

PointValueTable::PointValueTable(int a, int b, int dilation, int level, int multiplicity, FunctionKind kind,
                                 int derivative, int wavelet)
    : a_(a), b_(b), d_(dilation), level_(level), kind_(kind), derivative_(derivative), wavelet_(wavelet) {
  if (b < a) throw DomainError("grid bounds out of order");
  if (level < 0) throw DomainError("grid level must be non-negative");
  check_grid_size(a, b, dilation, level);
  denom_ = ipow(dilation, level);
  values_ = Matrix::Zero(multiplicity, (b - a) * denom_ + 1);
}

double PointValueTable::x(std::int64_t i) const {
  return static_cast<double>(a_ * denom_ + i) / static_cast<double>(denom_);
}

Vector PointValueTable::at_numerator(std::int64_t p) const {
  const std::int64_t i = p - a_ * denom_;
  if (i < 0 || i >= size()) return Vector::Zero(values_.rows());
  return values_.col(i);
}

Vector PointValueTable::sample(std::int64_t p, int level) const {
  if (level <= level_) return at_numerator(p * ipow(d_, level_ - level));
  const std::int64_t ratio = ipow(d_, level - level_);
  // floor division toward -infinity
  std::int64_t lo = p / ratio;
  std::int64_t rem = p % ratio;
  if (rem < 0) {
    rem += ratio;
    --lo;
  }
  if (rem == 0) return at_numerator(lo);
  const double t = static_cast<double>(rem) / static_cast<double>(ratio);
  return (1.0 - t) * at_numerator(lo) + t * at_numerator(lo + 1);
}

PointValueTable PointValueTable::restricted(int level) const {
  if (level > level_) throw DomainError("cannot restrict to a finer level");
  PointValueTable out(a_, b_, d_, level, multiplicity(), kind_, derivative_, wavelet_);
  out.normalized_ = normalized_;
  const std::int64_t stride = ipow(d_, level_ - level);
  for (std::int64_t i = 0; i < out.size(); ++i) out.values_.col(i) = values_.col(i * stride);
  return out;
}

std::string PointValueTable::label() const {
  std::string s = derivative_ > 0 ? "D" + std::to_string(derivative_) : "";
  s += kind_ == FunctionKind::Phi ? "phi" : "psi:" + std::to_string(wavelet_);
  return s;
}

TransferMatrix assemble_transfer(const MaskPair& mask, int dilation, int a, int b, double sign) {
  const int r = mask.plus.multiplicity();
  const int n = b - a + 1;
  const double root = std::sqrt(static_cast<double>(dilation));
  TransferMatrix t;
  t.a = a;
  t.b = b;
  t.r = r;
  t.matrix = Matrix::Zero(n * r, n * r);
  for (int l = a; l <= b; ++l)
    for (int k = a; k <= b; ++k)
      t.matrix.block((l - a) * r, (k - a) * r, r, r) =
          root * (mask.plus.at(dilation * l - k) + sign * mask.minus.at(dilation * l + k));
  return t;
}

PointValueTable apply_two_scale(const PointValueTable& src, const MaskPair& mask, double scale, double sign,
                                int target_level) {
  if (target_level > src.level() + 1)
    throw DomainError("two-scale step can only raise the level by one");
  const std::int64_t d = src.dilation();
  PointValueTable out(src.a(), src.b(), src.dilation(), target_level, src.multiplicity(), src.kind(),
                      src.derivative(), src.wavelet());
  out.set_normalized(src.normalized());

  // Argument d*x - k for x = p / d^Lt, expressed as a numerator at the source level Ls:
  //   p * d^(Ls - Lt + 1) - k * d^Ls.
  const std::int64_t p_factor = ipow(d, src.level() - target_level + 1);
  const std::int64_t k_factor = ipow(d, src.level());
  const std::int64_t first = static_cast<std::int64_t>(src.a()) * out.denominator();

  const std::int64_t src_first = static_cast<std::int64_t>(src.a()) * src.denominator();
  const Matrix& sv = src.values();
  auto add = [&](Vector& acc, const Matrix& coef, std::int64_t num, double w) {
    const std::int64_t j = num - src_first;
    if (j >= 0 && j < src.size()) acc.noalias() += w * (coef * sv.col(j));
  };
  Vector acc(src.multiplicity());
  for (std::int64_t i = 0; i < out.size(); ++i) {
    const std::int64_t p = first + i;
    acc.setZero();
    for (const auto& [k, coef] : mask.plus.entries()) add(acc, coef, p * p_factor - k * k_factor, 1.0);
    for (const auto& [k, coef] : mask.minus.entries()) add(acc, coef, k * k_factor - p * p_factor, sign);
    out.values().col(i) = scale * acc;
  }
  return out;
}

}  // namespace twodir
