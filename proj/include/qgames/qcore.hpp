#pragma once

// Dense complex state vectors and small unitary matrices for few-qubit
// circuit evaluation. Qubits are numbered 1..n left to right as written in
// kets; qubit 1 is the most significant bit of the amplitude index, so
// |b1 b2 ... bn> sits at index sum_i b_i * 2^(n-i).

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgames {

using cplx = std::complex<double>;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kStateTol = 1e-10;
inline constexpr int kMaxQubits = 12;

inline bool is_finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Probability of each bitstring on a declared qubit subset.
using ProbabilityMap = std::map<std::string, double>;

struct StateVector {
  int n_qubits = 0;
  std::vector<cplx> amps;

  std::size_t dim() const { return amps.size(); }

  double norm_sq() const {
    double s = 0.0;
    for (cplx a : amps) s += std::norm(a);
    return s;
  }
};

struct UnitaryMatrix {
  int dim = 0;
  std::vector<cplx> entries;  // row-major, dim*dim

  cplx& at(int r, int c) { return entries[static_cast<std::size_t>(r) * dim + c]; }
  cplx at(int r, int c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }

  static UnitaryMatrix zero(int dim) {
    UnitaryMatrix m;
    m.dim = dim;
    m.entries.assign(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
    return m;
  }

  static UnitaryMatrix identity(int dim) {
    UnitaryMatrix m = zero(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

inline void require_finite(const StateVector& s) {
  for (cplx a : s.amps)
    if (!is_finite(a)) throw std::invalid_argument("state contains NaN/Inf amplitude");
}

inline void require_finite(const UnitaryMatrix& m) {
  for (cplx a : m.entries)
    if (!is_finite(a)) throw std::invalid_argument("matrix contains NaN/Inf entry");
}

inline StateVector make_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::length_error("n_qubits must be in [1, 12]");
  StateVector s;
  s.n_qubits = n_qubits;
  s.amps.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  s.amps[0] = 1.0;
  return s;
}

inline bool check_unitary(const UnitaryMatrix& m, double tol) {
  const int d = m.dim;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      cplx s{0.0, 0.0};
      for (int k = 0; k < d; ++k) s += std::conj(m.at(k, i)) * m.at(k, j);
      if (i == j) s -= 1.0;
      if (std::abs(s) > tol) return false;
    }
  }
  return true;
}

inline UnitaryMatrix dagger(const UnitaryMatrix& m) {
  UnitaryMatrix r = UnitaryMatrix::zero(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) r.at(i, j) = std::conj(m.at(j, i));
  return r;
}

inline UnitaryMatrix multiply(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("matrix dimension mismatch");
  UnitaryMatrix r = UnitaryMatrix::zero(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      cplx aik = a.at(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (int j = 0; j < a.dim; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

inline UnitaryMatrix tensor_product(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  require_finite(a);
  require_finite(b);
  UnitaryMatrix r = UnitaryMatrix::zero(a.dim * b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < b.dim; ++k)
        for (int l = 0; l < b.dim; ++l)
          r.at(i * b.dim + k, j * b.dim + l) = a.at(i, j) * b.at(k, l);
  return r;
}

// Applies U to the listed qubits, identity elsewhere. The first listed
// target is the most significant bit of U's local basis.
inline StateVector apply_unitary(const StateVector& state, const UnitaryMatrix& u,
                                 const std::vector<int>& targets) {
  require_finite(state);
  require_finite(u);
  const int n = state.n_qubits;
  const int k = static_cast<int>(targets.size());
  if (k == 0 || u.dim != (1 << k))
    throw std::invalid_argument("gate dimension does not match target count");
  std::vector<int> shifts(k);
  unsigned target_mask = 0;
  for (int j = 0; j < k; ++j) {
    int q = targets[j];
    if (q < 1 || q > n) throw std::out_of_range("target qubit out of range");
    int sh = n - q;
    if (target_mask & (1u << sh)) throw std::invalid_argument("duplicate target qubit");
    target_mask |= 1u << sh;
    shifts[j] = sh;
  }

  const std::size_t dim = state.dim();
  const int d = u.dim;
  // offset of local basis state l within a fixed non-target configuration
  std::vector<std::size_t> offset(d, 0);
  for (int l = 0; l < d; ++l)
    for (int j = 0; j < k; ++j)
      if ((l >> (k - 1 - j)) & 1) offset[l] |= std::size_t{1} << shifts[j];

  StateVector out = state;
  std::vector<cplx> sub(d);
  for (std::size_t g = 0; g < dim; ++g) {
    if (g & target_mask) continue;
    for (int l = 0; l < d; ++l) sub[l] = state.amps[g | offset[l]];
    for (int r = 0; r < d; ++r) {
      cplx acc{0.0, 0.0};
      for (int c = 0; c < d; ++c) acc += u.at(r, c) * sub[c];
      out.amps[g | offset[r]] = acc;
    }
  }
  return out;
}

inline ProbabilityMap outcome_probabilities(const StateVector& state,
                                            const std::vector<int>& subset) {
  require_finite(state);
  if (subset.empty()) throw std::invalid_argument("empty measurement subset");
  const int n = state.n_qubits;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > n) throw std::out_of_range("subset qubit out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (subset[i] == subset[j]) throw std::invalid_argument("duplicate subset qubit");
  }
  ProbabilityMap probs;
  std::string key(subset.size(), '0');
  for (std::size_t g = 0; g < state.dim(); ++g) {
    double p = std::norm(state.amps[g]);
    if (p == 0.0) continue;
    for (std::size_t j = 0; j < subset.size(); ++j)
      key[j] = ((g >> (n - subset[j])) & 1) ? '1' : '0';
    probs[key] += p;
  }
  // keep zero-probability entries out; callers treat missing keys as 0
  return probs;
}

inline cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits != b.n_qubits) throw std::invalid_argument("state dimension mismatch");
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
  return s;
}

// Multiplies by a unit scalar so the first nonzero amplitude is real-positive.
inline StateVector align_global_phase(const StateVector& s) {
  StateVector out = s;
  for (cplx a : s.amps) {
    if (std::abs(a) > 1e-14) {
      cplx phase = std::conj(a) / std::abs(a);
      for (cplx& x : out.amps) x *= phase;
      break;
    }
  }
  return out;
}

inline double max_componentwise_distance(const StateVector& a, const StateVector& b) {
  if (a.n_qubits != b.n_qubits) throw std::invalid_argument("state dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
  return m;
}

// Builds the unitary sending each input to its paired output. Inputs and
// outputs must each be orthonormal. Both sets are completed to full bases by
// projecting canonical basis vectors in index order, and the completion
// vectors are paired in the order they appear, so the result is
// bit-reproducible across calls.
inline UnitaryMatrix complete_unitary(
    const std::vector<std::pair<StateVector, StateVector>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("complete_unitary needs at least one pair");
  const std::size_t d = pairs.front().first.dim();
  std::vector<std::vector<cplx>> vin, vout;
  for (const auto& [in, out] : pairs) {
    if (in.dim() != d || out.dim() != d)
      throw std::invalid_argument("complete_unitary: mixed dimensions");
    vin.push_back(in.amps);
    vout.push_back(out.amps);
  }
  auto check_orthonormal = [&](const std::vector<std::vector<cplx>>& vs, const char* what) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        cplx g{0.0, 0.0};
        for (std::size_t k = 0; k < d; ++k) g += std::conj(vs[i][k]) * vs[j][k];
        if (i == j) g -= 1.0;
        if (std::abs(g) > kStateTol)
          throw std::invalid_argument(std::string("complete_unitary: ") + what +
                                      " vectors are not orthonormal");
      }
  };
  check_orthonormal(vin, "input");
  check_orthonormal(vout, "output");

  auto complete = [&](std::vector<std::vector<cplx>>& vs) {
    for (std::size_t e = 0; e < d && vs.size() < d; ++e) {
      std::vector<cplx> cand(d, cplx{0.0, 0.0});
      cand[e] = 1.0;
      for (const auto& v : vs) {
        cplx ov{0.0, 0.0};
        for (std::size_t k = 0; k < d; ++k) ov += std::conj(v[k]) * cand[k];
        for (std::size_t k = 0; k < d; ++k) cand[k] -= ov * v[k];
      }
      double nrm = 0.0;
      for (cplx x : cand) nrm += std::norm(x);
      nrm = std::sqrt(nrm);
      if (nrm < 1e-6) continue;
      for (cplx& x : cand) x /= nrm;
      vs.push_back(std::move(cand));
    }
    if (vs.size() != d)
      throw std::logic_error("complete_unitary: basis completion failed");
  };
  complete(vin);
  complete(vout);

  UnitaryMatrix w = UnitaryMatrix::zero(static_cast<int>(d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) {
      if (vout[k][i] == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < d; ++j)
        w.at(static_cast<int>(i), static_cast<int>(j)) += vout[k][i] * std::conj(vin[k][j]);
    }
  if (!check_unitary(w, kUnitaryTol))
    throw std::logic_error("complete_unitary: completed matrix is not unitary");
  return w;
}

// Embeds a gate acting on the listed qubits into the full 2^n space.
inline UnitaryMatrix embed_gate(const UnitaryMatrix& u, const std::vector<int>& targets,
                                int n_qubits) {
  const int d = 1 << n_qubits;
  UnitaryMatrix m = UnitaryMatrix::zero(d);
  StateVector basis;
  basis.n_qubits = n_qubits;
  basis.amps.assign(d, cplx{0.0, 0.0});
  for (int j = 0; j < d; ++j) {
    basis.amps[j] = 1.0;
    StateVector col = apply_unitary(basis, u, targets);
    for (int i = 0; i < d; ++i) m.at(i, j) = col.amps[i];
    basis.amps[j] = 0.0;
  }
  return m;
}

}  // namespace qgames
