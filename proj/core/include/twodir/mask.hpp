#pragma once

#include <complex>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace twodir {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Finitely supported sequence k -> r x r matrix for one direction sign.
/// All-zero matrices are never stored, so kmin()/kmax() describe the true support.
class CoeffSeq {
public:
  explicit CoeffSeq(int multiplicity = 1);

  /// Stores m at index k, or erases k when m is identically zero.
  /// Throws MaskError if m is not r x r.
  void set(int k, const Matrix& m);

  /// Coefficient at k; the zero matrix outside the support.
  const Matrix& at(int k) const;

  bool empty() const { return entries_.empty(); }
  int multiplicity() const { return r_; }
  int kmin() const { return kmin_; }
  int kmax() const { return kmax_; }
  const std::map<int, Matrix>& entries() const { return entries_; }

  CoeffSeq scaled(double c) const;
  /// Same coefficients re-indexed at k + offset.
  CoeffSeq shifted(int offset) const;
  /// Sum over the support of k^j * P_k (with 0^0 = 1).
  Matrix weighted_sum(int j) const;

private:
  int r_;
  std::map<int, Matrix> entries_;
  Matrix zero_;
  int kmin_ = 0;
  int kmax_ = 0;
};

struct MaskPair {
  CoeffSeq plus;
  CoeffSeq minus;
};

/// Dilation d, multiplicity r, the scaling-function mask pair and 0 or d-1 wavelet
/// mask pairs. Immutable after construction; the constructor enforces the invariants.
class TwoDirectionSystem {
public:
  TwoDirectionSystem(std::string name, int dilation, int multiplicity, MaskPair phi,
                     std::vector<MaskPair> wavelets = {});

  const std::string& name() const { return name_; }
  int dilation() const { return d_; }
  int multiplicity() const { return r_; }
  const CoeffSeq& phi_plus() const { return phi_.plus; }
  const CoeffSeq& phi_minus() const { return phi_.minus; }
  const MaskPair& phi() const { return phi_; }
  bool has_wavelets() const { return !wavelets_.empty(); }
  /// Wavelet mask pair for s in [1, d-1]; throws MissingWavelet otherwise.
  const MaskPair& wavelet(int s) const;
  const std::vector<MaskPair>& wavelets() const { return wavelets_; }

  /// Largest |k| over the supports of both scaling-function sequences.
  int max_index() const;

private:
  std::string name_;
  int d_;
  int r_;
  MaskPair phi_;
  std::vector<MaskPair> wavelets_;
};

/// Reads a mask file (JSON). Throws InputError/MaskError naming the offending key.
TwoDirectionSystem load_system(const std::filesystem::path& path);
/// Same as load_system, from the file contents.
TwoDirectionSystem parse_system(std::string_view json_text);

/// Block coefficient of the deduced one-direction refinement equation:
/// [[P_k^+, P_k^-], [P_{-k}^-, P_{-k}^+]].
Matrix deduced_block_coeff(const TwoDirectionSystem& sys, int k);

struct ConditionEReport {
  Matrix matrix;                                  // 2r x 2r symbol at z = 1
  std::vector<std::complex<double>> eigenvalues;  // sorted as in linalg::eigenvalues
  bool satisfied = false;
  double gap = 0.0;  // 1 - second-largest modulus
};

inline constexpr double kConditionEEigTol = 1e-8;
inline constexpr double kConditionEGapTol = 1e-8;

/// Builds (1/sqrt d) * sum_k [[P_k^+, P_k^-], [P_k^-, P_k^+]] and tests it for a simple
/// eigenvalue 1 with every other eigenvalue strictly inside the unit disk.
ConditionEReport condition_e(const TwoDirectionSystem& sys, double tol_eig = kConditionEEigTol,
                             double tol_gap = kConditionEGapTol);

struct SupportHull {
  int a = 0;
  int b = 0;
  double lower = 0.0;  // converged interval bounds
  double upper = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Integer hull of the fixed point of the interval map induced by the refinement
/// equation, started from [-N/(d-1), N/(d-1)].
SupportHull support_hull(const TwoDirectionSystem& sys);

}  // namespace twodir
