#pragma once

// The five game engines: the entangle/strategize/disentangle prisoner's
// dilemma, its classical mixed-strategy baseline and equivalence analysis,
// the entangled-payoff prisoner's dilemma, the bipartite zero-sum game, and
// the entangled-payoff zero-sum game.

#include <array>
#include <functional>
#include <optional>
#include <variant>

#include "qgames/gates.hpp"
#include "qgames/qcore.hpp"

namespace qgames {

// 2x2 bimatrix, rows = player A (C/D or S1/S2), cols = player B.
struct PayoffTable {
  std::array<std::array<std::pair<double, double>, 2>, 2> entries{};

  std::pair<double, double> at(int row, int col) const { return entries[row][col]; }

  static PayoffTable prisoners_dilemma() {
    PayoffTable t;
    t.entries = {{{{{3, 3}, {0, 5}}}, {{{5, 0}, {1, 1}}}}};
    return t;
  }

  static PayoffTable zero_sum() {
    PayoffTable t;
    t.entries = {{{{{0, 0}, {-2, 2}}}, {{{1, -1}, {0, 0}}}}};
    return t;
  }
};

// Decodes a 2-bit payoff-register bitstring into a (payA, payB) pair.
struct PayoffCoding {
  std::map<std::string, std::pair<double, double>> table;

  std::pair<double, double> decode(const std::string& bits) const {
    auto it = table.find(bits);
    if (it == table.end()) throw std::out_of_range("payoff coding has no entry for " + bits);
    return it->second;
  }

  static PayoffCoding entangled_pd() {
    return PayoffCoding{{{"00", {1, 1}}, {"01", {0, 5}}, {"10", {5, 0}}, {"11", {3, 3}}}};
  }

  static PayoffCoding entangled_zero_sum() {
    return PayoffCoding{{{"00", {0, 0}}, {"01", {-1, 1}}, {"10", {2, -2}}, {"11", {0, 0}}}};
  }
};

struct GameResult {
  ProbabilityMap register_probs;  // payoff-register marginal, keyed by bitstring
  std::map<std::pair<double, double>, double> payoff_distribution;
  std::pair<double, double> expected_payoffs{0.0, 0.0};
  StateVector final_state;
};

struct EquivalenceReport {
  std::optional<bool> literal_inequality_holds;  // nullopt when gamma_a == 0
  std::optional<std::pair<double, double>> solver_solution;  // (r, q)
  double alpha_a = 0, beta_a = 0, gamma_a = 0;
  double alpha_b = 0, beta_b = 0, gamma_b = 0;
};

// A player's move: a named classical gate (I or X) or a parameterized gate.
using Strategy = std::variant<std::string, StrategyParams>;

inline UnitaryMatrix strategy_unitary(const Strategy& s) {
  if (const auto* name = std::get_if<std::string>(&s)) {
    if (*name != "I" && *name != "X")
      throw std::domain_error("named strategies are restricted to I and X");
    return named_gate(*name);
  }
  return strategy_gate(std::get<StrategyParams>(s));
}

// ---------------------------------------------------------------------------
// EWL prisoner's dilemma: |Psi> = Jdag (U_A (x) U_B) J |00>

inline StateVector ewl_final_state(EntanglerParam gamma, const StrategyParams& pa,
                                   const StrategyParams& pb) {
  UnitaryMatrix j = entangler(gamma);
  StateVector s = make_state(2);
  s = apply_unitary(s, j, {1, 2});
  s = apply_unitary(s, strategy_gate(pa), {1});
  s = apply_unitary(s, strategy_gate(pb), {2});
  s = apply_unitary(s, dagger(j), {1, 2});
  return s;
}

// Eq.-(3)-style average payoff: basis order 00,01,10,11 <-> CC,CD,DC,DD.
inline std::pair<double, double> expected_payoff_quantum(const StateVector& state,
                                                         const PayoffTable& table) {
  if (state.n_qubits != 2) throw std::invalid_argument("payoff decoding expects 2 qubits");
  double a = 0.0, b = 0.0;
  for (int k = 0; k < 4; ++k) {
    double p = std::norm(state.amps[k]);
    auto [pa, pb] = table.at(k >> 1, k & 1);
    a += pa * p;
    b += pb * p;
  }
  return {a, b};
}

// Classical mixed-strategy payoff; r (q) is A's (B's) cooperation probability.
inline std::pair<double, double> expected_payoff_classical(const PayoffTable& t, double r,
                                                           double q) {
  if (r < 0.0 || r > 1.0 || q < 0.0 || q > 1.0)
    throw std::domain_error("mixing probabilities must be in [0, 1]");
  double a = 0.0, b = 0.0;
  const double w[2] = {r, 1.0 - r};
  const double v[2] = {q, 1.0 - q};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto [pa, pb] = t.at(i, j);
      a += pa * w[i] * v[j];
      b += pb * w[i] * v[j];
    }
  return {a, b};
}

namespace detail {

// Finds (r, q) in [0,1]^2 with expected_payoff_classical(t, r, q) == target,
// by scanning the curve that solves player A's bilinear equation exactly and
// bisecting player B's residual along it, with a 200x200 grid-and-zoom
// fallback for the cases the curve scan misses.
inline std::optional<std::pair<double, double>> solve_bilinear(const PayoffTable& t,
                                                               std::pair<double, double> target,
                                                               double tol = 1e-9) {
  auto residual = [&](double r, double q) {
    auto [a, b] = expected_payoff_classical(t, r, q);
    return std::max(std::abs(a - target.first), std::abs(b - target.second));
  };

  // coefficients of f(r, q) = g*r*q + al*r + be*q + dd
  auto coeffs = [&](auto pick) {
    double cc = pick(t.at(0, 0)), cd = pick(t.at(0, 1));
    double dc = pick(t.at(1, 0)), dd = pick(t.at(1, 1));
    return std::array<double, 4>{cc - cd - dc + dd, cd - dd, dc - dd, dd};
  };
  auto first = [](std::pair<double, double> p) { return p.first; };
  auto second = [](std::pair<double, double> p) { return p.second; };

  for (int swap = 0; swap < 2; ++swap) {
    // solve the A-equation for q as a function of r (or B's when swapped)
    auto [g, al, be, dd] = swap ? coeffs(second) : coeffs(first);
    double ta = (swap ? target.second : target.first) - dd;
    auto q_of_r = [&](double r) -> std::optional<double> {
      double den = g * r + be;
      if (std::abs(den) < 1e-14) return std::nullopt;
      double q = (ta - al * r) / den;
      if (q < -1e-12 || q > 1.0 + 1e-12) return std::nullopt;
      return std::clamp(q, 0.0, 1.0);
    };
    auto other_residual = [&](double r) -> std::optional<double> {
      auto q = q_of_r(r);
      if (!q) return std::nullopt;
      auto [a, b] = expected_payoff_classical(t, r, *q);
      return swap ? a - target.first : b - target.second;
    };
    const int n = 2000;
    std::optional<double> prev;
    double prev_r = 0.0;
    for (int i = 0; i <= n; ++i) {
      double r = static_cast<double>(i) / n;
      auto res = other_residual(r);
      if (res && std::abs(*res) <= tol) {
        auto q = q_of_r(r);
        if (residual(r, *q) <= tol) return std::make_pair(r, *q);
      }
      if (res && prev && (*res <= 0.0) != (*prev <= 0.0)) {
        double lo = prev_r, hi = r;
        for (int it = 0; it < 100; ++it) {
          double mid = 0.5 * (lo + hi);
          auto rm = other_residual(mid);
          if (!rm) break;
          if ((*rm <= 0.0) == (*prev <= 0.0))
            lo = mid;
          else
            hi = mid;
        }
        double rr = 0.5 * (lo + hi);
        if (auto q = q_of_r(rr); q && residual(rr, *q) <= tol)
          return std::make_pair(rr, *q);
      }
      prev = res;
      prev_r = r;
    }
  }

  // grid scan with local zoom
  double best_r = 0.0, best_q = 0.0, best = residual(0.0, 0.0);
  double lo_r = 0.0, hi_r = 1.0, lo_q = 0.0, hi_q = 1.0;
  for (int round = 0; round < 10; ++round) {
    const int n = 200;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        double r = lo_r + (hi_r - lo_r) * i / n;
        double q = lo_q + (hi_q - lo_q) * j / n;
        double res = residual(r, q);
        if (res < best) {
          best = res;
          best_r = r;
          best_q = q;
        }
      }
    if (best <= tol) return std::make_pair(best_r, best_q);
    double wr = (hi_r - lo_r) / n * 4.0, wq = (hi_q - lo_q) / n * 4.0;
    lo_r = std::max(0.0, best_r - wr);
    hi_r = std::min(1.0, best_r + wr);
    lo_q = std::max(0.0, best_q - wq);
    hi_q = std::min(1.0, best_q + wq);
  }
  return std::nullopt;
}

}  // namespace detail

inline EquivalenceReport classical_equivalence(const PayoffTable& t,
                                               std::pair<double, double> target) {
  if (!(std::isfinite(target.first) && std::isfinite(target.second)))
    throw std::invalid_argument("equivalence targets must be finite");
  EquivalenceReport rep;
  auto [cc_a, cc_b] = t.at(0, 0);
  auto [cd_a, cd_b] = t.at(0, 1);
  auto [dc_a, dc_b] = t.at(1, 0);
  auto [dd_a, dd_b] = t.at(1, 1);
  rep.alpha_a = cd_a - dd_a;
  rep.alpha_b = cd_b - dd_b;
  rep.beta_a = dc_a - dd_a;
  rep.beta_b = dc_b - dd_b;
  rep.gamma_a = cc_a - cd_a - dc_a + dd_a;
  rep.gamma_b = cc_b - cd_b - dc_b + dd_b;

  // literal inequality chain, reported verbatim; not used as an oracle
  if (rep.gamma_a != 0.0 && rep.alpha_a != 0.0 && rep.beta_a != 0.0 &&
      target.first != dd_a) {
    double lhs = std::max((target.second - dd_b) / (target.first - dd_a),
                          rep.alpha_b / rep.alpha_a);
    double mid = rep.gamma_b / rep.gamma_a;
    double rhs = rep.beta_b / rep.beta_a;
    rep.literal_inequality_holds = (lhs <= mid && mid <= rhs);
  }

  rep.solver_solution = detail::solve_bilinear(t, target);
  return rep;
}

// ---------------------------------------------------------------------------
// Entangled-payoff prisoner's dilemma (payoff qubits 1,2; strategy qubits 3,4)

namespace detail {

inline StateVector ewl_strategy_state(const UnitaryMatrix& ua, const UnitaryMatrix& ub) {
  StateVector s = make_state(2);
  s = apply_unitary(s, entangler({std::numbers::pi / 2}), {1, 2});
  s = apply_unitary(s, ua, {1});
  s = apply_unitary(s, ub, {2});
  return s;
}

inline StateVector with_payoff_register(const StateVector& strat) {
  StateVector s = make_state(4);
  s.amps.assign(16, cplx{0.0, 0.0});
  for (int k = 0; k < 4; ++k) s.amps[k] = strat.amps[k];  // payoff register |00>
  return s;
}

inline StateVector four_qubit_state(std::initializer_list<std::pair<int, cplx>> terms) {
  StateVector s = make_state(4);
  s.amps.assign(16, cplx{0.0, 0.0});
  for (auto [idx, amp] : terms) s.amps[idx] = amp;
  return s;
}

}  // namespace detail

// The game unitary of the strategies-and-payoffs-entangled prisoner's
// dilemma, defined by its action on the four classically reachable inputs:
//   |00>(x)(U_A(x)U_B) J(pi/2)|00>  for (U_A, U_B) in {I,X}^2
// maps to
//   (II):  [|00>(|00>+i|11>)/sqrt2 + |11>(|00>-i|11>)/sqrt2] / sqrt2
//   (IX):  |11>|01>
//   (XI):  |11>|10>
//   (XX):  [|00>(|00>+i|11>)/sqrt2 - |11>(|00>-i|11>)/sqrt2] / sqrt2
// The completion outside the payoff-|00> sector is the deterministic rule of
// complete_unitary and is never reached by valid plays.
inline UnitaryMatrix entangled_pd_unitary() {
  const UnitaryMatrix id = named_gate("I");
  const UnitaryMatrix x = named_gate("X");
  const cplx i{0.0, 1.0};
  const double h = 0.5;

  std::vector<std::pair<StateVector, StateVector>> pairs;
  pairs.emplace_back(detail::with_payoff_register(detail::ewl_strategy_state(id, id)),
                     detail::four_qubit_state({{0, h}, {3, i * h}, {12, h}, {15, -i * h}}));
  pairs.emplace_back(detail::with_payoff_register(detail::ewl_strategy_state(id, x)),
                     detail::four_qubit_state({{13, 1.0}}));  // |11>|01>
  pairs.emplace_back(detail::with_payoff_register(detail::ewl_strategy_state(x, id)),
                     detail::four_qubit_state({{14, 1.0}}));  // |11>|10>
  pairs.emplace_back(detail::with_payoff_register(detail::ewl_strategy_state(x, x)),
                     detail::four_qubit_state({{0, h}, {3, i * h}, {12, -h}, {15, i * h}}));
  return complete_unitary(pairs);
}

inline GameResult decode_payoff_register(const StateVector& state,
                                         const std::vector<int>& payoff_qubits,
                                         const PayoffCoding& coding) {
  GameResult res;
  res.final_state = state;
  res.register_probs = outcome_probabilities(state, payoff_qubits);
  for (const auto& [bits, p] : res.register_probs) {
    auto pay = coding.decode(bits);
    res.payoff_distribution[pay] += p;
    res.expected_payoffs.first += pay.first * p;
    res.expected_payoffs.second += pay.second * p;
  }
  return res;
}

inline GameResult entangled_pd_play(const Strategy& sa, const Strategy& sb,
                                    const PayoffCoding& coding = PayoffCoding::entangled_pd()) {
  static const UnitaryMatrix w = entangled_pd_unitary();
  StateVector s = detail::with_payoff_register(
      detail::ewl_strategy_state(strategy_unitary(sa), strategy_unitary(sb)));
  s = apply_unitary(s, w, {1, 2, 3, 4});
  return decode_payoff_register(s, {1, 2}, coding);
}

// Both players pick I or X uniformly; averages the four payoff distributions.
inline std::map<std::pair<double, double>, double> entangled_pd_uniform_mix(
    const PayoffCoding& coding = PayoffCoding::entangled_pd()) {
  std::map<std::pair<double, double>, double> mix;
  for (const char* a : {"I", "X"})
    for (const char* b : {"I", "X"}) {
      GameResult r = entangled_pd_play(std::string(a), std::string(b), coding);
      for (const auto& [pay, p] : r.payoff_distribution) mix[pay] += 0.25 * p;
    }
  return mix;
}

// ---------------------------------------------------------------------------
// Bipartite zero-sum game (Fig.-4-style, qubits 1,2 to A and 3,4 to B)

// U_AB = CNOT(1->3) . CNOT(2->4) . SWAP(2,3) . (I (x) H (x) I (x) H); maps
// (a|0>+b|1>)|+>(c|0>+d|1>)|+> to ac|0000> + bc|1010> + ad|0101> + bd|1111>.
inline UnitaryMatrix zero_sum_uab() {
  const UnitaryMatrix h = named_gate("H");
  const UnitaryMatrix cnot = named_gate("CNOT");
  const UnitaryMatrix swap = named_gate("SWAP");
  UnitaryMatrix m = multiply(embed_gate(h, {2}, 4), embed_gate(h, {4}, 4));
  m = multiply(embed_gate(swap, {2, 3}, 4), m);
  m = multiply(embed_gate(cnot, {2, 4}, 4), m);
  m = multiply(embed_gate(cnot, {1, 3}, 4), m);
  if (!check_unitary(m, kUnitaryTol)) throw std::logic_error("U_AB is not unitary");
  return m;
}

struct ZeroSumResult {
  double p_a = 0.0;  // probability A's two measurements agree
  double p_b = 0.0;
  StateVector final_state;
};

// A wins when qubits 1 and 2 measure equal; P_A = 1 - (|a|^2 - 2|a|^2|c|^2 + |c|^2)
// with a, c the |0> amplitudes of U_A|0>, U_B|0>. Computed both by formula and
// from the simulated marginal; the two must agree to 1e-12.
inline ZeroSumResult zero_sum_play(const StrategyParams& pa, const StrategyParams& pb) {
  static const UnitaryMatrix uab = zero_sum_uab();
  const UnitaryMatrix ua = strategy_gate(pa);
  const UnitaryMatrix ub = strategy_gate(pb);

  StateVector s = make_state(4);
  s = apply_unitary(s, ua, {1});
  s = apply_unitary(s, named_gate("H"), {2});
  s = apply_unitary(s, ub, {3});
  s = apply_unitary(s, named_gate("H"), {4});
  s = apply_unitary(s, uab, {1, 2, 3, 4});

  ProbabilityMap m = outcome_probabilities(s, {1, 2});
  auto get = [&](const char* k) {
    auto it = m.find(k);
    return it == m.end() ? 0.0 : it->second;
  };
  double p_sim = get("00") + get("11");

  double a2 = std::norm(ua.at(0, 0));
  double c2 = std::norm(ub.at(0, 0));
  double p_formula = 1.0 - (a2 - 2.0 * a2 * c2 + c2);
  if (std::abs(p_sim - p_formula) > 1e-12)
    throw std::logic_error("zero-sum win probability disagrees with closed form");

  return {p_formula, 1.0 - p_formula, std::move(s)};
}

// Classical baseline: A plays I with probability p, B with probability q.
inline double zero_sum_classical(double p, double q) {
  if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0)
    throw std::domain_error("mixing probabilities must be in [0, 1]");
  return p - 2.0 * p * q + q;
}

// ---------------------------------------------------------------------------
// Entangled-payoff zero-sum game (payoff qubits 1,2; players on 3..6)

inline GameResult entangled_zero_sum_play(
    const StrategyParams& pa, const StrategyParams& pb,
    const PayoffCoding& coding = PayoffCoding::entangled_zero_sum()) {
  static const UnitaryMatrix uab = zero_sum_uab();
  const UnitaryMatrix ua = strategy_gate(pa);
  const UnitaryMatrix ub = strategy_gate(pb);
  const cplx a = ua.at(0, 0), b = ua.at(1, 0);
  const cplx c = ub.at(0, 0), d = ub.at(1, 0);
  const double r = 1.0 / std::sqrt(2.0);

  StateVector s = make_state(6);
  s = apply_unitary(s, ua, {3});
  s = apply_unitary(s, named_gate("H"), {4});
  s = apply_unitary(s, ub, {5});
  s = apply_unitary(s, named_gate("H"), {6});

  // |00> (x) (a|0>+b|1>)|+>(c|0>+d|1>)|+>
  {
    StateVector expect = make_state(6);
    expect.amps.assign(64, cplx{0.0, 0.0});
    const cplx q3[2] = {a, b}, q5[2] = {c, d};
    for (int i3 = 0; i3 < 2; ++i3)
      for (int i4 = 0; i4 < 2; ++i4)
        for (int i5 = 0; i5 < 2; ++i5)
          for (int i6 = 0; i6 < 2; ++i6)
            expect.amps[(i3 << 3) | (i4 << 2) | (i5 << 1) | i6] =
                q3[i3] * r * q5[i5] * r;
    if (max_componentwise_distance(s, expect) > 1e-12)
      throw std::logic_error("entangled zero-sum: preparation state mismatch");
  }

  s = apply_unitary(s, uab, {3, 4, 5, 6});

  // |00> (x) (ac|0000> + bc|1010> + ad|0101> + bd|1111>)
  {
    StateVector expect = make_state(6);
    expect.amps.assign(64, cplx{0.0, 0.0});
    expect.amps[0b0000] = a * c;
    expect.amps[0b1010] = b * c;
    expect.amps[0b0101] = a * d;
    expect.amps[0b1111] = b * d;
    if (max_componentwise_distance(s, expect) > 1e-12)
      throw std::logic_error("entangled zero-sum: post-U_AB state mismatch");
  }

  s = apply_unitary(s, named_gate("CNOT"), {3, 1});
  s = apply_unitary(s, named_gate("CNOT"), {3, 2});

  // ac|000000> + bc|111010> + ad|000101> + bd|111111>
  {
    StateVector expect = make_state(6);
    expect.amps.assign(64, cplx{0.0, 0.0});
    expect.amps[0b000000] = a * c;
    expect.amps[0b111010] = b * c;
    expect.amps[0b000101] = a * d;
    expect.amps[0b111111] = b * d;
    if (max_componentwise_distance(s, expect) > 1e-12)
      throw std::logic_error("entangled zero-sum: final state mismatch");
  }

  return decode_payoff_register(s, {1, 2}, coding);
}

}  // namespace qgames
