#pragma once

#include <complex>
#include <string>
#include <vector>

#include "twodir/linalg.hpp"
#include "twodir/mask.hpp"
#include "twodir/table.hpp"

namespace twodir {

/// Diagnostics from one eigenvalue-approach solve.
struct SpectralReport {
  std::vector<std::complex<double>> eigenvalues;  // full spectrum of the transfer matrix
  double target = 1.0;                            // eigenvalue used (1 or d^-n)
  /// Eigenvector before normalization. For scalar phi it is pre-scaled so the
  /// integer values sum to sqrt(2)/2; otherwise its last nonzero entry is 1.
  Vector raw_vector;
  /// Factor applied to raw_vector to produce the normalized integer values.
  double normalizing_constant = 1.0;
  double residual = 0.0;  // ||A v - target v|| for the unit eigenvector
  std::vector<double> singular_values;
  double threshold = 0.0;
  std::vector<std::string> warnings;
};

struct PointValueResult {
  PointValueTable table;  // level 0
  SpectralReport report;
};

/// (T_phi)_{lk} = sqrt(d) (P^+_{dl-k} + P^-_{dl+k}) on the support hull grid.
TransferMatrix assemble_T_phi(const TwoDirectionSystem& sys);

/// (T_psi)_{lk} = sqrt(d) (Q^+_{dl-k} + (-1)^n Q^-_{dl+k}); n = 0 gives the plain wavelet matrix.
TransferMatrix assemble_T_wavelet(const TwoDirectionSystem& sys, int s, int n = 0);

/// phi at the integers of the support hull: eigenvector of T_phi for eigenvalue 1,
/// scaled so that m_0 . sum_k phi(k) = m_0 . m_0. Endpoint components below 1e-10
/// are set to zero.
PointValueResult integer_values(const TwoDirectionSystem& sys, double tol = kDefaultEigTol);

/// One dyadic subdivision step of a normalized phi table via the refinement equation.
/// Points already on the coarse grid are recomputed, not copied.
PointValueTable refine(const TwoDirectionSystem& sys, const PointValueTable& phi);

/// Repeated refine() up to the given level.
PointValueTable refine_to(const TwoDirectionSystem& sys, const PointValueTable& phi, int level);

/// psi^(s) on the grid of phi_table (same level): T_psi * phi at level 0, the
/// wavelet two-scale relation at finer levels.
PointValueTable wavelet_values(const TwoDirectionSystem& sys, int s, const PointValueTable& phi_table);

}  // namespace twodir
