#include "twodir/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "twodir/errors.hpp"

namespace twodir {

namespace {

void require_finite(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DomainError("expected a non-empty square matrix");
  if (!a.allFinite()) throw DomainError("matrix has non-finite entries");
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& a) {
  require_finite(a);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw DomainError("eigenvalue iteration did not converge");
  const auto& ev = solver.eigenvalues();
  std::vector<std::complex<double>> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const double mx = std::abs(x), my = std::abs(y);
    if (mx != my) return mx > my;
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return out;
}

double norm_scale(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 1.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const double s = svd.singularValues()(0);
  return s > 0.0 ? s : 1.0;
}

NullVector eigenvector_for(const Eigen::MatrixXd& a, double lambda, double tol) {
  require_finite(a);
  if (!(tol > 0.0)) throw DomainError("eigenvector tolerance must be positive");
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXd shifted = a - lambda * Eigen::MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullV);

  NullVector out;
  out.threshold = tol * norm_scale(a);
  const auto& sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const auto small = std::count_if(out.singular_values.begin(), out.singular_values.end(),
                                   [&](double s) { return s <= out.threshold; });

  auto describe = [&](const char* what) {
    std::ostringstream os;
    os.precision(6);
    os << what << " (target " << lambda << ", threshold " << out.threshold << ", smallest singular values";
    for (std::size_t i = out.singular_values.size() >= 2 ? out.singular_values.size() - 2 : 0;
         i < out.singular_values.size(); ++i)
      os << ' ' << out.singular_values[i];
    os << ')';
    return os.str();
  };
  if (small == 0)
    throw NotAnEigenvalue(describe("not an eigenvalue"), lambda, out.singular_values, out.threshold);
  if (small > 1)
    throw NotSimple(describe("eigenvalue is not simple"), lambda, out.singular_values, out.threshold);

  out.vector = svd.matrixV().col(n - 1);
  Eigen::Index big = 0;
  out.vector.cwiseAbs().maxCoeff(&big);
  if (out.vector(big) < 0) out.vector = -out.vector;
  out.residual = (a * out.vector - lambda * out.vector).norm();
  return out;
}

}  // namespace twodir
