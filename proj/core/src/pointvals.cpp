#include "twodir/pointvals.hpp"

#include <cmath>
#include <sstream>

#include "twodir/errors.hpp"
#include "twodir/moments.hpp"
#include "solve_detail.hpp"

namespace twodir {

TransferMatrix assemble_T_phi(const TwoDirectionSystem& sys) {
  const auto hull = support_hull(sys);
  return assemble_transfer(sys.phi(), sys.dilation(), hull.a, hull.b, 1.0);
}

TransferMatrix assemble_T_wavelet(const TwoDirectionSystem& sys, int s, int n) {
  const auto hull = support_hull(sys);
  return assemble_transfer(sys.wavelet(s), sys.dilation(), hull.a, hull.b, (n % 2 == 0) ? 1.0 : -1.0);
}

PointValueResult integer_values(const TwoDirectionSystem& sys, double tol) {
  const TransferMatrix t = assemble_T_phi(sys);
  const int r = sys.multiplicity();

  detail::RawSolve raw = detail::solve_transfer(t, 1.0, tol);
  SpectralReport& rep = raw.report;
  if (!condition_e(sys).satisfied) rep.warnings.push_back("Condition E is not satisfied");

  const Vector m0 = zeroth_moment(sys);
  const Vector block_sum = detail::block_sum(raw.report.raw_vector, r);
  if (r == 1) {
    // Scalar case: the normalization reduces to sum_k phi(k) = sqrt(2)/2, which
    // fixes the raw vector by itself.
    if (std::abs(block_sum(0)) >= detail::kDegenerateTol)
      rep.raw_vector *= (std::sqrt(0.5) / block_sum(0));
  }
  const double denom = m0.dot(detail::block_sum(rep.raw_vector, r));
  if (std::abs(denom) < detail::kDegenerateTol) {
    std::ostringstream os;
    os << "cannot normalize phi: m_0 . sum_k v(k) = " << denom;
    throw NormalizationDegenerate(os.str());
  }
  rep.normalizing_constant = m0.squaredNorm() / denom;

  PointValueTable table(t.a, t.b, sys.dilation(), 0, r, FunctionKind::Phi);
  detail::fill_integer_table(table, rep.normalizing_constant * rep.raw_vector);
  detail::zero_endpoints(table);
  table.set_normalized(true);
  return {std::move(table), std::move(rep)};
}

PointValueTable refine(const TwoDirectionSystem& sys, const PointValueTable& phi) {
  if (phi.kind() != FunctionKind::Phi || phi.derivative() != 0)
    throw DomainError("refine expects a phi table; use refine_derivative for derivatives");
  return apply_two_scale(phi, sys.phi(), std::sqrt(static_cast<double>(sys.dilation())), 1.0, phi.level() + 1);
}

PointValueTable refine_to(const TwoDirectionSystem& sys, const PointValueTable& phi, int level) {
  check_grid_size(phi.a(), phi.b(), phi.dilation(), level);
  PointValueTable t = phi;
  while (t.level() < level) t = refine(sys, t);
  return t;
}

PointValueTable wavelet_values(const TwoDirectionSystem& sys, int s, const PointValueTable& phi_table) {
  if (phi_table.kind() != FunctionKind::Phi || phi_table.derivative() != 0)
    throw DomainError("wavelet_values expects a phi table");
  const MaskPair& mask = sys.wavelet(s);
  PointValueTable out(phi_table.a(), phi_table.b(), phi_table.dilation(), phi_table.level(),
                      phi_table.multiplicity(), FunctionKind::Psi, 0, s);
  if (phi_table.level() == 0) {
    const TransferMatrix t = assemble_transfer(mask, sys.dilation(), phi_table.a(), phi_table.b(), 1.0);
    detail::fill_integer_table(out, t.matrix * detail::flatten(phi_table));
  } else {
    out.values() =
        apply_two_scale(phi_table, mask, std::sqrt(static_cast<double>(sys.dilation())), 1.0, phi_table.level())
            .values();
  }
  out.set_normalized(phi_table.normalized());
  return out;
}

}  // namespace twodir
