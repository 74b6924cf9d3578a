#include "twodir/moments.hpp"

#include <cmath>
#include <complex>

#include <Eigen/LU>

#include "twodir/errors.hpp"
#include "twodir/linalg.hpp"

namespace twodir {

namespace {

constexpr double kUnitEigenvalueTol = 1e-6;

double int_pow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (n < 0 || n > 60) throw DomainError("binomial: n out of range");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;  // exact: c * (n-k+i) is divisible by i
  return c;
}

DiscreteMoments discrete_moments(const TwoDirectionSystem& sys, int order) {
  if (order < 0) throw DomainError("moment order must be non-negative");
  const double scale = 1.0 / std::sqrt(static_cast<double>(sys.dilation()));
  DiscreteMoments dm;
  for (int j = 0; j <= order; ++j) {
    dm.plus.push_back(scale * sys.phi_plus().weighted_sum(j));
    dm.minus.push_back(scale * sys.phi_minus().weighted_sum(j));
  }
  return dm;
}

Vector zeroth_moment(const TwoDirectionSystem& sys) {
  const Matrix m0 = discrete_moments(sys, 0).total(0);
  const auto spectrum = eigenvalues(m0);
  auto nearest = spectrum.front();
  for (const auto& z : spectrum)
    if (std::abs(z - 1.0) < std::abs(nearest - 1.0)) nearest = z;
  if (std::abs(nearest - 1.0) > kUnitEigenvalueTol) {
    Eigen::JacobiSVD<Matrix> svd(m0 - Matrix::Identity(m0.rows(), m0.cols()));
    const auto& sv = svd.singularValues();
    throw NotAnEigenvalue("M_0 has no eigenvalue within 1e-6 of 1", 1.0,
                          std::vector<double>(sv.data(), sv.data() + sv.size()), kUnitEigenvalueTol);
  }
  Vector v = eigenvector_for(m0, nearest.real()).vector;
  v *= std::sqrt(0.5) / v.norm();
  Eigen::Index big = 0;
  v.cwiseAbs().maxCoeff(&big);
  if (v(big) < 0) v = -v;
  return v;
}

MomentTable continuous_moments(const TwoDirectionSystem& sys, int order) {
  if (order < 0 || order > kMaxMomentOrder)
    throw DomainError("moment order must lie in [0, " + std::to_string(kMaxMomentOrder) + "]");
  MomentTable t;
  const auto ce = condition_e(sys);
  if (!ce.satisfied) t.warnings.push_back("Condition E is not satisfied; moments may be meaningless");

  t.discrete = discrete_moments(sys, order);
  t.m.push_back(zeroth_moment(sys));
  const int r = sys.multiplicity();
  const double d = sys.dilation();
  for (int j = 1; j <= order; ++j) {
    const double sj = (j % 2 == 0) ? 1.0 : -1.0;
    Vector rhs = Vector::Zero(r);
    for (int l = 0; l < j; ++l) {
      const double sl = (l % 2 == 0) ? 1.0 : -1.0;
      rhs += static_cast<double>(binomial(j, l)) * (t.discrete.plus[j - l] + sl * t.discrete.minus[j - l]) * t.m[l];
    }
    const Matrix lhs = int_pow(d, j) * Matrix::Identity(r, r) - (t.discrete.plus[0] + sj * t.discrete.minus[0]);
    Eigen::FullPivLU<Matrix> lu(lhs);
    if (!lu.isInvertible())
      throw SingularMomentSystem("moment recursion matrix is singular at order " + std::to_string(j), j);
    t.m.push_back(lu.solve(rhs));
  }
  return t;
}

double moment_recursion_residual(const MomentTable& table, int dilation, int j) {
  const auto& dm = table.discrete;
  Vector acc = Vector::Zero(table.m.at(0).size());
  for (int l = 0; l <= j; ++l) {
    const double sl = (l % 2 == 0) ? 1.0 : -1.0;
    acc += static_cast<double>(binomial(j, l)) * (dm.plus.at(j - l) + sl * dm.minus.at(j - l)) * table.m.at(l);
  }
  return (table.m.at(j) - acc / int_pow(dilation, j)).norm();
}

ApproxCoefficients approx_coefficients(const MomentTable& table, int j, int k) {
  if (j < 0 || j > table.order())
    throw DomainError("approximation order " + std::to_string(j) + " exceeds moment table order " +
                      std::to_string(table.order()));
  const Eigen::Index r = table.m.front().size();
  ApproxCoefficients c{Vector::Zero(r), Vector::Zero(r)};
  for (int l = 0; l <= j; ++l) {
    const double w = static_cast<double>(binomial(j, l)) * int_pow(k, j - l);
    c.plus += w * table.m[l];
    c.minus += ((l % 2 == 0) ? w : -w) * table.m[l];
  }
  return c;
}

}  // namespace twodir
