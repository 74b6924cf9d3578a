#include "twodir/derivs.hpp"

#include <cmath>
#include <sstream>

#include "solve_detail.hpp"
#include "twodir/errors.hpp"

namespace twodir {

namespace {

double sign_of(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_order(int n, int lo) {
  if (n < lo || n > kMaxDerivativeOrder)
    throw DomainError("derivative order " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(kMaxDerivativeOrder) + "]");
}

/// sum_l C(n,l) (-1)^(n-l) m_l . (sum_k k^(n-l) v(k)) for a flattened integer vector.
double normalization_sum(const Vector& v, int r, int a, int n, const MomentTable& moments) {
  double total = 0.0;
  for (int l = 0; l <= n; ++l)
    total += static_cast<double>(binomial(n, l)) * sign_of(n - l) *
             moments.m.at(l).dot(detail::weighted_block_sum(v, r, a, n - l));
  return total;
}

}  // namespace

TransferMatrix assemble_T_deriv(const TwoDirectionSystem& sys, int n) {
  check_order(n, 0);
  const auto hull = support_hull(sys);
  return assemble_transfer(sys.phi(), sys.dilation(), hull.a, hull.b, sign_of(n));
}

PointValueResult derivative_integer_values(const TwoDirectionSystem& sys, int n, const MomentTable& moments,
                                           double tol) {
  check_order(n, 1);
  if (moments.order() < n)
    throw DomainError("derivative order " + std::to_string(n) + " needs moments up to order " + std::to_string(n));
  const TransferMatrix t = assemble_T_deriv(sys, n);
  const int r = sys.multiplicity();
  const double target = 1.0 / static_cast<double>(ipow(sys.dilation(), n));

  detail::RawSolve raw;
  try {
    raw = detail::solve_transfer(t, target, tol);
  } catch (const NotAnEigenvalue& e) {
    std::ostringstream os;
    os << "T_{D^" << n << " phi} has no eigenvalue " << target << " = d^-" << n << ", so D^" << n
       << " phi has no point values: " << e.what();
    throw NotAnEigenvalue(os.str(), e.target(), e.singular_values(), e.threshold());
  }
  SpectralReport& rep = raw.report;
  const double denom = normalization_sum(rep.raw_vector, r, t.a, n, moments);
  if (std::abs(denom) < detail::kDegenerateTol) {
    std::ostringstream os;
    os << "cannot normalize D^" << n << " phi: normalization sum of the eigenvector is " << denom;
    throw NormalizationDegenerate(os.str());
  }
  rep.normalizing_constant = factorial(n) / 2.0 / denom;

  PointValueTable table(t.a, t.b, sys.dilation(), 0, r, FunctionKind::Phi, n);
  detail::fill_integer_table(table, rep.normalizing_constant * rep.raw_vector);
  detail::zero_endpoints(table);
  table.set_normalized(true);
  return {std::move(table), std::move(rep)};
}

double derivative_normalization_residual(const PointValueTable& dphi, const MomentTable& moments) {
  const PointValueTable ints = dphi.restricted(0);
  const int n = dphi.derivative();
  return normalization_sum(detail::flatten(ints), ints.multiplicity(), ints.a(), n, moments) - factorial(n) / 2.0;
}

PointValueTable refine_derivative(const TwoDirectionSystem& sys, const PointValueTable& dphi) {
  if (dphi.kind() != FunctionKind::Phi) throw DomainError("refine_derivative expects a D^n phi table");
  const int n = dphi.derivative();
  const double scale = static_cast<double>(ipow(sys.dilation(), n)) * std::sqrt(static_cast<double>(sys.dilation()));
  return apply_two_scale(dphi, sys.phi(), scale, sign_of(n), dphi.level() + 1);
}

PointValueTable refine_derivative_to(const TwoDirectionSystem& sys, const PointValueTable& dphi, int level) {
  check_grid_size(dphi.a(), dphi.b(), dphi.dilation(), level);
  PointValueTable t = dphi;
  while (t.level() < level) t = refine_derivative(sys, t);
  return t;
}

PointValueTable derivative_wavelet_values(const TwoDirectionSystem& sys, int s, const PointValueTable& dphi) {
  if (dphi.kind() != FunctionKind::Phi) throw DomainError("derivative_wavelet_values expects a D^n phi table");
  const int n = dphi.derivative();
  if (n == 0) return wavelet_values(sys, s, dphi);
  const MaskPair& mask = sys.wavelet(s);
  const double dn = static_cast<double>(ipow(sys.dilation(), n));

  PointValueTable out(dphi.a(), dphi.b(), dphi.dilation(), dphi.level(), dphi.multiplicity(), FunctionKind::Psi, n,
                      s);
  if (dphi.level() == 0) {
    const TransferMatrix t = assemble_transfer(mask, sys.dilation(), dphi.a(), dphi.b(), sign_of(n));
    detail::fill_integer_table(out, dn * (t.matrix * detail::flatten(dphi)));
  } else {
    out.values() =
        apply_two_scale(dphi, mask, dn * std::sqrt(static_cast<double>(sys.dilation())), sign_of(n), dphi.level())
            .values();
  }
  out.set_normalized(dphi.normalized());
  return out;
}

}  // namespace twodir
