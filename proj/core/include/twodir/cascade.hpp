#pragma once

#include "twodir/mask.hpp"
#include "twodir/table.hpp"

namespace twodir {

inline constexpr double kDefaultCascadeTol = 1e-10;
inline constexpr int kDefaultCascadeIterations = 60;

/// One iterate phi^(n) of the cascade algorithm, sampled on a fixed level-L grid.
struct CascadeState {
  int iteration = 0;
  PointValueTable table;
  double delta = 0.0;  // sup-norm change produced by the last step
  bool converged = false;
};

/// Hat function max(1 - |x|, 0) in every component on the support hull grid at
/// level L >= 1, scaled so that m_0 . sum_k value(k) = 1/2.
CascadeState cascade_init(const TwoDirectionSystem& sys, int level);

/// phi^(n+1)(x) = sqrt(d) sum_k [P_k^+ phi^(n)(dx-k) + P_k^- phi^(n)(k-dx)].
/// Arguments off the grid are linearly interpolated; outside [a, b] they read as zero.
CascadeState cascade_step(const TwoDirectionSystem& sys, const CascadeState& state);

/// Steps until delta <= tol or max_iter steps have been taken (max_iter >= 1).
CascadeState cascade_run(const TwoDirectionSystem& sys, int level, int max_iter = kDefaultCascadeIterations,
                         double tol = kDefaultCascadeTol);

}  // namespace twodir
