#pragma once

#include "twodir/linalg.hpp"
#include "twodir/moments.hpp"
#include "twodir/pointvals.hpp"

namespace twodir {

inline constexpr int kMaxDerivativeOrder = 8;

/// (T_{D^n phi})_{lk} = sqrt(d) (P^+_{dl-k} + (-1)^n P^-_{dl+k}); n = 0 is T_phi.
TransferMatrix assemble_T_deriv(const TwoDirectionSystem& sys, int n);

/// D^n phi at the integers: eigenvector of T_{D^n phi} for eigenvalue d^-n, scaled so
///   sum_l C(n,l) (-1)^(n-l) m_l . (sum_k k^(n-l) D^n phi(k)) = n!/2.
/// NotAnEigenvalue here means phi is not n times differentiable in the spectral sense.
PointValueResult derivative_integer_values(const TwoDirectionSystem& sys, int n, const MomentTable& moments,
                                           double tol = kDefaultEigTol);

/// Left-hand side of the derivative normalization minus n!/2, evaluated on an
/// integer-level D^n phi table.
double derivative_normalization_residual(const PointValueTable& dphi, const MomentTable& moments);

/// One dyadic step of D^n phi(x) = d^n sqrt(d) sum_k [P_k^+ D^n phi(dx-k) + (-1)^n P_k^- D^n phi(k-dx)].
PointValueTable refine_derivative(const TwoDirectionSystem& sys, const PointValueTable& dphi);

PointValueTable refine_derivative_to(const TwoDirectionSystem& sys, const PointValueTable& dphi, int level);

/// D^n psi^(s) on the grid of dphi (same level): d^n T_{D^n psi} D^n phi at level 0,
/// the differentiated wavelet relation at finer levels. n is taken from dphi.
PointValueTable derivative_wavelet_values(const TwoDirectionSystem& sys, int s, const PointValueTable& dphi);

}  // namespace twodir
