#pragma once

// Shared helpers for the eigenvalue-approach solvers (phi and its derivatives).

#include <cmath>

#include "twodir/linalg.hpp"
#include "twodir/pointvals.hpp"

namespace twodir::detail {

inline constexpr double kDegenerateTol = 1e-12;
inline constexpr double kEndpointZeroTol = 1e-10;

struct RawSolve {
  SpectralReport report;
};

/// Spectrum plus the target eigenvector, scaled so that its last entry exceeding
/// 1e-10 * max|v| equals 1.
inline RawSolve solve_transfer(const TransferMatrix& t, double target, double tol) {
  RawSolve out;
  SpectralReport& rep = out.report;
  rep.eigenvalues = eigenvalues(t.matrix);
  rep.target = target;
  NullVector nv = eigenvector_for(t.matrix, target, tol);
  rep.residual = nv.residual;
  rep.singular_values = std::move(nv.singular_values);
  rep.threshold = nv.threshold;

  Vector v = std::move(nv.vector);
  const double cutoff = 1e-10 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = v.size() - 1; i >= 0; --i) {
    if (std::abs(v(i)) > cutoff) {
      v /= v(i);
      break;
    }
  }
  rep.raw_vector = std::move(v);
  return out;
}

/// sum_k v(k) for a flattened block vector with r entries per grid point.
inline Vector block_sum(const Vector& v, int r) {
  Vector s = Vector::Zero(r);
  for (Eigen::Index i = 0; i < v.size(); ++i) s(i % r) += v(i);
  return s;
}

/// sum_k k^p v(k) over the integer grid starting at a.
inline Vector weighted_block_sum(const Vector& v, int r, int a, int p) {
  Vector s = Vector::Zero(r);
  for (Eigen::Index i = 0; i < v.size(); ++i) s(i % r) += std::pow(static_cast<double>(a + i / r), p) * v(i);
  return s;
}

inline Vector flatten(const PointValueTable& t) {
  return Eigen::Map<const Vector>(t.values().data(), t.values().size());
}

inline void fill_integer_table(PointValueTable& t, const Vector& flat) {
  t.values() = Eigen::Map<const Matrix>(flat.data(), t.multiplicity(), t.size());
}

/// Components at the two grid endpoints below 1e-10 in magnitude are exact zeros.
inline void zero_endpoints(PointValueTable& t) {
  for (Eigen::Index i : {Eigen::Index{0}, static_cast<Eigen::Index>(t.size() - 1)})
    for (Eigen::Index c = 0; c < t.values().rows(); ++c)
      if (std::abs(t.values()(c, i)) < kEndpointZeroTol) t.values()(c, i) = 0.0;
}

}  // namespace twodir::detail
