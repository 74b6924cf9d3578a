#include "twodir/mask.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "twodir/errors.hpp"
#include "twodir/expr.hpp"
#include "twodir/linalg.hpp"

namespace twodir {

// ---------------------------------------------------------------------------
// CoeffSeq

CoeffSeq::CoeffSeq(int multiplicity) : r_(multiplicity), zero_(Matrix::Zero(multiplicity, multiplicity)) {
  if (multiplicity < 1) throw MaskError("multiplicity must be at least 1");
}

void CoeffSeq::set(int k, const Matrix& m) {
  if (m.rows() != r_ || m.cols() != r_) {
    std::ostringstream os;
    os << "coefficient at k=" << k << " is " << m.rows() << "x" << m.cols() << ", expected " << r_
       << "x" << r_;
    throw MaskError(os.str());
  }
  if (m.isZero(0.0))
    entries_.erase(k);
  else
    entries_[k] = m;
  if (!entries_.empty()) {
    kmin_ = entries_.begin()->first;
    kmax_ = entries_.rbegin()->first;
  } else {
    kmin_ = kmax_ = 0;
  }
}

const Matrix& CoeffSeq::at(int k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? zero_ : it->second;
}

CoeffSeq CoeffSeq::scaled(double c) const {
  CoeffSeq out(r_);
  for (const auto& [k, m] : entries_) out.set(k, c * m);
  return out;
}

CoeffSeq CoeffSeq::shifted(int offset) const {
  CoeffSeq out(r_);
  for (const auto& [k, m] : entries_) out.set(k + offset, m);
  return out;
}

Matrix CoeffSeq::weighted_sum(int j) const {
  Matrix acc = Matrix::Zero(r_, r_);
  for (const auto& [k, m] : entries_) {
    double w = 1.0;
    for (int p = 0; p < j; ++p) w *= k;
    acc += w * m;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// TwoDirectionSystem

TwoDirectionSystem::TwoDirectionSystem(std::string name, int dilation, int multiplicity, MaskPair phi,
                                       std::vector<MaskPair> wavelets)
    : name_(std::move(name)), d_(dilation), r_(multiplicity), phi_(std::move(phi)), wavelets_(std::move(wavelets)) {
  if (d_ < 2) throw MaskError("dilation must be at least 2");
  if (r_ < 1) throw MaskError("multiplicity must be at least 1");
  auto check = [this](const CoeffSeq& s, const std::string& where) {
    if (s.multiplicity() != r_)
      throw MaskError(where + ": coefficient size " + std::to_string(s.multiplicity()) +
                      " does not match multiplicity " + std::to_string(r_));
  };
  check(phi_.plus, "phi.plus");
  check(phi_.minus, "phi.minus");
  if (phi_.plus.empty() && phi_.minus.empty()) throw MaskError("phi: mask has no nonzero coefficients");
  if (!wavelets_.empty() && static_cast<int>(wavelets_.size()) != d_ - 1)
    throw MaskError("psi: expected " + std::to_string(d_ - 1) + " wavelet masks, got " +
                    std::to_string(wavelets_.size()));
  for (std::size_t s = 0; s < wavelets_.size(); ++s) {
    check(wavelets_[s].plus, "psi[" + std::to_string(s) + "].plus");
    check(wavelets_[s].minus, "psi[" + std::to_string(s) + "].minus");
  }
}

const MaskPair& TwoDirectionSystem::wavelet(int s) const {
  if (wavelets_.empty()) throw MissingWavelet("system '" + name_ + "' has no wavelet masks");
  if (s < 1 || s > d_ - 1)
    throw MissingWavelet("wavelet index " + std::to_string(s) + " outside [1, " + std::to_string(d_ - 1) + "]");
  return wavelets_[static_cast<std::size_t>(s - 1)];
}

int TwoDirectionSystem::max_index() const {
  int n = 0;
  for (const CoeffSeq* s : {&phi_.plus, &phi_.minus}) {
    if (s->empty()) continue;
    n = std::max({n, std::abs(s->kmin()), std::abs(s->kmax())});
  }
  return n;
}

// ---------------------------------------------------------------------------
// JSON reader

namespace {

using nlohmann::json;

double read_coef(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return evaluate(j.get<std::string>());
    } catch (const InputError& e) {
      throw MaskError(where + ": " + e.what());
    }
  }
  throw MaskError(where + ": coefficient must be a number or an expression string");
}

int parse_index(const std::string& key, const std::string& where) {
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) throw MaskError(where + ": index key '" + key + "' is not an integer");
  return k;
}

CoeffSeq read_seq(const json& j, int r, const std::string& where) {
  if (!j.is_object()) throw MaskError(where + ": expected an object mapping index to matrix");
  CoeffSeq seq(r);
  for (const auto& [key, mat] : j.items()) {
    const std::string at = where + "[\"" + key + "\"]";
    const int k = parse_index(key, where);
    if (!mat.is_array() || static_cast<int>(mat.size()) != r)
      throw MaskError(at + ": dimension mismatch, expected " + std::to_string(r) + " rows");
    Matrix m(r, r);
    for (int i = 0; i < r; ++i) {
      const json& row = mat[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != r)
        throw MaskError(at + ": dimension mismatch, row " + std::to_string(i) + " must have " + std::to_string(r) +
                        " entries");
      for (int c = 0; c < r; ++c)
        m(i, c) = read_coef(row[static_cast<std::size_t>(c)],
                            at + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
    seq.set(k, m);
  }
  return seq;
}

MaskPair read_pair(const json& j, int r, const std::string& where) {
  if (!j.is_object()) throw MaskError(where + ": expected an object with \"plus\" and \"minus\"");
  for (const auto& [key, _] : j.items())
    if (key != "plus" && key != "minus") throw MaskError(where + ": unknown key \"" + key + "\"");
  MaskPair p{CoeffSeq(r), CoeffSeq(r)};
  if (j.contains("plus")) p.plus = read_seq(j.at("plus"), r, where + ".plus");
  if (j.contains("minus")) p.minus = read_seq(j.at("minus"), r, where + ".minus");
  return p;
}

int read_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw MaskError(std::string("missing required key \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw MaskError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

TwoDirectionSystem parse_system(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MaskError("mask file must contain a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "name" && key != "dilation" && key != "multiplicity" && key != "phi" && key != "psi")
      throw MaskError("unknown key \"" + key + "\"");

  if (!doc.contains("name") || !doc.at("name").is_string()) throw MaskError("\"name\" must be a string");
  const std::string name = doc.at("name").get<std::string>();
  const int d = read_int(doc, "dilation");
  const int r = read_int(doc, "multiplicity");
  if (d < 2) throw MaskError("\"dilation\" must be at least 2");
  if (r < 1) throw MaskError("\"multiplicity\" must be at least 1");
  if (!doc.contains("phi")) throw MaskError("missing required key \"phi\"");

  MaskPair phi = read_pair(doc.at("phi"), r, "phi");
  std::vector<MaskPair> psi;
  if (doc.contains("psi")) {
    const json& arr = doc.at("psi");
    if (!arr.is_array()) throw MaskError("\"psi\" must be an array");
    for (std::size_t s = 0; s < arr.size(); ++s) psi.push_back(read_pair(arr[s], r, "psi[" + std::to_string(s) + "]"));
  }
  return TwoDirectionSystem(name, d, r, std::move(phi), std::move(psi));
}

TwoDirectionSystem load_system(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open mask file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

// ---------------------------------------------------------------------------
// Derived quantities

Matrix deduced_block_coeff(const TwoDirectionSystem& sys, int k) {
  const int r = sys.multiplicity();
  Matrix out(2 * r, 2 * r);
  out.topLeftCorner(r, r) = sys.phi_plus().at(k);
  out.topRightCorner(r, r) = sys.phi_minus().at(k);
  out.bottomLeftCorner(r, r) = sys.phi_minus().at(-k);
  out.bottomRightCorner(r, r) = sys.phi_plus().at(-k);
  return out;
}

ConditionEReport condition_e(const TwoDirectionSystem& sys, double tol_eig, double tol_gap) {
  const int r = sys.multiplicity();
  const double scale = 1.0 / std::sqrt(static_cast<double>(sys.dilation()));
  const Matrix plus = scale * sys.phi_plus().weighted_sum(0);
  const Matrix minus = scale * sys.phi_minus().weighted_sum(0);

  ConditionEReport rep;
  rep.matrix.resize(2 * r, 2 * r);
  rep.matrix << plus, minus, minus, plus;
  rep.eigenvalues = eigenvalues(rep.matrix);

  int near_one = 0;
  bool others_inside = true;
  for (const auto& z : rep.eigenvalues) {
    if (std::abs(z - 1.0) <= tol_eig)
      ++near_one;
    else if (std::abs(z) > 1.0 - tol_gap)
      others_inside = false;
  }
  rep.satisfied = near_one == 1 && others_inside;
  rep.gap = rep.eigenvalues.size() > 1 ? 1.0 - std::abs(rep.eigenvalues[1]) : 1.0;
  return rep;
}

SupportHull support_hull(const TwoDirectionSystem& sys) {
  const double d = sys.dilation();
  const double n = sys.max_index();
  const CoeffSeq& plus = sys.phi_plus();
  const CoeffSeq& minus = sys.phi_minus();

  SupportHull h;
  double lo = -n / (d - 1.0);
  double hi = n / (d - 1.0);
  constexpr int kMaxIter = 200;
  constexpr double kTol = 1e-12;
  for (h.iterations = 1; h.iterations <= kMaxIter; ++h.iterations) {
    double nlo = std::numeric_limits<double>::infinity();
    double nhi = -std::numeric_limits<double>::infinity();
    if (!plus.empty()) {
      nlo = std::min(nlo, (lo + plus.kmin()) / d);
      nhi = std::max(nhi, (hi + plus.kmax()) / d);
    }
    if (!minus.empty()) {
      nlo = std::min(nlo, (minus.kmin() - hi) / d);
      nhi = std::max(nhi, (minus.kmax() - lo) / d);
    }
    const double change = std::max(std::abs(nlo - lo), std::abs(nhi - hi));
    lo = nlo;
    hi = nhi;
    if (change <= kTol) {
      h.converged = true;
      break;
    }
  }
  if (h.converged) {
    // The iteration approaches integer endpoints from outside; absorb that tail.
    constexpr double kSnap = 1e-9;
    h.lower = lo;
    h.upper = hi;
    h.a = static_cast<int>(std::floor(lo + kSnap));
    h.b = static_cast<int>(std::ceil(hi - kSnap));
  } else {
    h.iterations = kMaxIter;
    h.lower = -n / (d - 1.0);
    h.upper = n / (d - 1.0);
    h.a = static_cast<int>(std::floor(h.lower));
    h.b = static_cast<int>(std::ceil(h.upper));
  }
  return h;
}

}  // namespace twodir
