#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twodir/mask.hpp"

namespace twodir {

/// Exact binomial coefficient; n must lie in [0, 60].
std::int64_t binomial(int n, int k);

inline constexpr int kMaxMomentOrder = 30;

/// M_j^+ = d^{-1/2} sum_k k^j P_k^+ and likewise M_j^-, for j = 0..J.
struct DiscreteMoments {
  std::vector<Matrix> plus;
  std::vector<Matrix> minus;

  int order() const { return static_cast<int>(plus.size()) - 1; }
  Matrix total(int j) const { return plus.at(j) + minus.at(j); }
};

DiscreteMoments discrete_moments(const TwoDirectionSystem& sys, int order);

/// Continuous moments m_j = int x^j phi(x) dx together with the discrete moments
/// they were computed from.
struct MomentTable {
  DiscreteMoments discrete;
  std::vector<Vector> m;
  std::vector<std::string> warnings;

  int order() const { return static_cast<int>(m.size()) - 1; }
};

/// Eigenvector of M_0 for its eigenvalue nearest 1 (which must be within 1e-6),
/// scaled to ||m_0||^2 = 1/2 with its largest-magnitude entry positive.
Vector zeroth_moment(const TwoDirectionSystem& sys);

/// m_0 from zeroth_moment, then m_1..m_J from
///   (d^j I - [M_0^+ + (-1)^j M_0^-]) m_j = sum_{l<j} C(j,l) [M_{j-l}^+ + (-1)^l M_{j-l}^-] m_l.
/// Throws SingularMomentSystem naming the first order whose matrix is singular.
/// A failed Condition E is reported in `warnings`, not thrown.
MomentTable continuous_moments(const TwoDirectionSystem& sys, int order);

/// Norm of m_j - d^{-j} sum_{l<=j} C(j,l) [M_{j-l}^+ + (-1)^l M_{j-l}^-] m_l.
double moment_recursion_residual(const MomentTable& table, int dilation, int j);

struct ApproxCoefficients {
  Vector plus;   // c_{j,k}^+
  Vector minus;  // c_{j,k}^-
};

/// Polynomial-reproduction coefficients: x^j = sum_k c_{j,k}^+ . phi(x-k) + c_{j,k}^- . phi(k-x).
ApproxCoefficients approx_coefficients(const MomentTable& table, int j, int k);

}  // namespace twodir
