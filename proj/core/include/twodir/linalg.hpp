#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace twodir {

inline constexpr double kDefaultEigTol = 1e-7;

/// All n eigenvalues with multiplicity, sorted by descending modulus, then
/// descending real part, then descending imaginary part. Throws DomainError on
/// non-finite input.
std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& a);

struct NullVector {
  Eigen::VectorXd vector;               // unit 2-norm
  double residual = 0.0;                // ||A v - lambda v||
  std::vector<double> singular_values;  // of A - lambda I, descending
  double threshold = 0.0;               // tol * ||A||
};

/// Unit null vector of A - lambda*I when that matrix has numerical rank n-1,
/// i.e. exactly one singular value at or below tol * ||A||_2.
/// Throws NotAnEigenvalue when none is, NotSimple when two or more are.
/// The sign is fixed so the largest-magnitude entry is positive.
NullVector eigenvector_for(const Eigen::MatrixXd& a, double lambda, double tol = kDefaultEigTol);

/// Spectral norm; 1 for the zero matrix so relative thresholds stay meaningful.
double norm_scale(const Eigen::MatrixXd& a);

}  // namespace twodir
