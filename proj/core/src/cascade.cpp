#include "twodir/cascade.hpp"

#include <cmath>

#include "twodir/errors.hpp"
#include "twodir/moments.hpp"

namespace twodir {

CascadeState cascade_init(const TwoDirectionSystem& sys, int level) {
  if (level < 1) throw DomainError("cascade level must be at least 1");
  const auto hull = support_hull(sys);
  PointValueTable table(hull.a, hull.b, sys.dilation(), level, sys.multiplicity(), FunctionKind::Phi);
  for (std::int64_t i = 0; i < table.size(); ++i)
    table.values().col(i).setConstant(std::max(1.0 - std::abs(table.x(i)), 0.0));

  // Only x = 0 carries hat mass among the integers, so the sum is the value there.
  const Vector m0 = zeroth_moment(sys);
  const double s = m0.dot(table.at_numerator(0));
  if (std::abs(s) < 1e-12)
    throw NormalizationDegenerate("cannot scale the cascade start: m_0 . hat(0) vanishes");
  table.values() *= 0.5 / s;
  table.set_normalized(true);
  return {0, std::move(table), 0.0, false};
}

CascadeState cascade_step(const TwoDirectionSystem& sys, const CascadeState& state) {
  const PointValueTable& src = state.table;
  const std::int64_t d = src.dilation();
  const int level = src.level();
  const std::int64_t dl = src.denominator();
  const double root = std::sqrt(static_cast<double>(d));

  CascadeState next{state.iteration + 1, src, 0.0, false};
  PointValueTable& out = next.table;
  const std::int64_t first = static_cast<std::int64_t>(src.a()) * dl;
  Vector acc(src.multiplicity());
  for (std::int64_t i = 0; i < out.size(); ++i) {
    const std::int64_t p = first + i;
    acc.setZero();
    for (const auto& [k, coef] : sys.phi_plus().entries()) acc += coef * src.sample(d * p - k * dl, level);
    for (const auto& [k, coef] : sys.phi_minus().entries()) acc += coef * src.sample(k * dl - d * p, level);
    out.values().col(i) = root * acc;
  }
  next.delta = (out.values() - src.values()).cwiseAbs().maxCoeff();
  return next;
}

CascadeState cascade_run(const TwoDirectionSystem& sys, int level, int max_iter, double tol) {
  if (max_iter < 1) throw DomainError("cascade needs at least one iteration");
  CascadeState state = cascade_init(sys, level);
  for (int it = 0; it < max_iter; ++it) {
    state = cascade_step(sys, state);
    if (state.delta <= tol) {
      state.converged = true;
      break;
    }
  }
  return state;
}

}  // namespace twodir
