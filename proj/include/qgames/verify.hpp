#pragma once

// Reproduction checks for every quantitative claim the games implement.
// Shared by the `verify-paper` CLI subcommand and the acceptance suite.

#include <random>
#include <sstream>

#include "qgames/equilibrium.hpp"
#include "qgames/games.hpp"

namespace qgames {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured vs expected
};

namespace detail {

inline StrategyParams random_strategy(std::mt19937_64& rng) {
  constexpr double pi = std::numbers::pi;
  std::uniform_real_distribution<double> th(0.0, pi), ph(-pi, pi);
  return {th(rng), ph(rng), ph(rng)};
}

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

}  // namespace detail

inline std::vector<CheckResult> run_paper_checks(
    const PayoffCoding& pd_coding = PayoffCoding::entangled_pd(),
    std::uint64_t seed = 20260823) {
  constexpr double pi = std::numbers::pi;
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };

  // 1. entangled-PD final states match the four closed-form outputs
  {
    const cplx i{0.0, 1.0};
    const double h = 0.5;
    struct Case {
      const char* a;
      const char* b;
      StateVector expect;
    };
    std::vector<Case> cases;
    cases.push_back({"I", "I", detail::four_qubit_state({{0, h}, {3, i * h}, {12, h}, {15, -i * h}})});
    cases.push_back({"I", "X", detail::four_qubit_state({{13, 1.0}})});
    cases.push_back({"X", "I", detail::four_qubit_state({{14, 1.0}})});
    cases.push_back({"X", "X", detail::four_qubit_state({{0, h}, {3, i * h}, {12, -h}, {15, i * h}})});
    double worst = 0.0;
    for (const auto& c : cases) {
      GameResult r = entangled_pd_play(std::string(c.a), std::string(c.b), pd_coding);
      worst = std::max(worst, max_componentwise_distance(align_global_phase(r.final_state),
                                                         align_global_phase(c.expect)));
    }
    add("entangled-pd final states (4 classical pairs)", worst <= 1e-12,
        "max deviation " + detail::fmt(worst) + ", expected <= 1e-12");
  }

  // 2. uniform classical mixing: Pareto 0.75, Nash 0.25
  {
    auto mix = entangled_pd_uniform_mix(pd_coding);
    double p33 = mix.count({3, 3}) ? mix[{3, 3}] : 0.0;
    double p11 = mix.count({1, 1}) ? mix[{1, 1}] : 0.0;
    bool pass = std::abs(p33 - 0.75) <= 1e-12 && std::abs(p11 - 0.25) <= 1e-12 &&
                mix.size() == 2;
    add("entangled-pd uniform mix {(3,3): 0.75, (1,1): 0.25}", pass,
        "P(3,3)=" + detail::fmt(p33) + " P(1,1)=" + detail::fmt(p11));
  }

  // 3. (5,0) and (0,5) are forbidden for classical strategy pairs
  {
    double worst = 0.0;
    for (const char* a : {"I", "X"})
      for (const char* b : {"I", "X"}) {
        GameResult r = entangled_pd_play(std::string(a), std::string(b), pd_coding);
        for (auto pay : {std::pair<double, double>{5, 0}, {0, 5}})
          if (auto it = r.payoff_distribution.find(pay); it != r.payoff_distribution.end())
            worst = std::max(worst, it->second);
      }
    add("entangled-pd forbidden outcomes (5,0)/(0,5)", worst <= 1e-12,
        "max forbidden probability " + detail::fmt(worst));
  }

  // 4. zero-sum win probability vs closed form, 500 random pairs
  {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    std::string err;
    try {
      for (int k = 0; k < 500; ++k) {
        StrategyParams pa = detail::random_strategy(rng);
        StrategyParams pb = detail::random_strategy(rng);
        ZeroSumResult r = zero_sum_play(pa, pb);  // asserts sim == formula internally
        double a2 = std::cos(pa.theta / 2.0) * std::cos(pa.theta / 2.0);
        double c2 = std::cos(pb.theta / 2.0) * std::cos(pb.theta / 2.0);
        double formula = 1.0 - (a2 - 2.0 * a2 * c2 + c2);
        worst = std::max(worst, std::abs(r.p_a - formula));
        // B-side rule: qubits 3,4 differ
        ProbabilityMap m = outcome_probabilities(r.final_state, {3, 4});
        double pb_sim = (m.count("01") ? m["01"] : 0.0) + (m.count("10") ? m["10"] : 0.0);
        worst = std::max(worst, std::abs(pb_sim - (1.0 - r.p_a)));
      }
    } catch (const std::exception& e) {
      err = e.what();
    }
    add("zero-sum P_A matches closed form, P_B = 1 - P_A (500 pairs)",
        err.empty() && worst <= 1e-12,
        err.empty() ? "max deviation " + detail::fmt(worst) : err);
  }

  // 5. entangled zero-sum: payoff always (0,0); intermediate states checked
  //    inside entangled_zero_sum_play (a mismatch throws)
  {
    std::mt19937_64 rng(seed + 1);
    double worst = 0.0;
    std::string err;
    try {
      for (int k = 0; k < 500; ++k) {
        GameResult r = entangled_zero_sum_play(detail::random_strategy(rng),
                                               detail::random_strategy(rng));
        worst = std::max(worst, std::max(std::abs(r.expected_payoffs.first),
                                         std::abs(r.expected_payoffs.second)));
      }
    } catch (const std::exception& e) {
      err = e.what();
    }
    add("entangled zero-sum payoff (0,0) + state evolution (500 pairs)",
        err.empty() && worst <= 1e-12,
        err.empty() ? "max |payoff| " + detail::fmt(worst) : err);
  }

  // 6. classical embedding of the zero-phase quantum game
  {
    double worst = 0.0;
    for (int gi = 0; gi < 10; ++gi) {
      EntanglerParam g{pi / 2.0 * gi / 9.0};
      for (int ai = 0; ai < 20; ++ai)
        for (int bi = 0; bi < 20; ++bi) {
          double ta = pi * ai / 19.0, tb = pi * bi / 19.0;
          StateVector s = ewl_final_state(g, {ta, 0, 0}, {tb, 0, 0});
          double r = std::cos(ta / 2) * std::cos(ta / 2);
          double q = std::cos(tb / 2) * std::cos(tb / 2);
          double expect[4] = {r * q, r * (1 - q), (1 - r) * q, (1 - r) * (1 - q)};
          for (int k = 0; k < 4; ++k)
            worst = std::max(worst, std::abs(std::norm(s.amps[k]) - expect[k]));
        }
    }
    add("quantum/classical embedding over gamma x theta grid", worst <= 1e-9,
        "max deviation " + detail::fmt(worst) + ", expected <= 1e-9");
  }

  // 7. entangler equals its CNOT decomposition
  {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      EntanglerParam g{pi / 2.0 * k / 49.0};
      UnitaryMatrix a = entangler(g), b = entangler_decomposed(g);
      for (std::size_t e = 0; e < a.entries.size(); ++e)
        worst = std::max(worst, std::abs(a.entries[e] - b.entries[e]));
    }
    add("entangler == CNOT decomposition (50 gammas)", worst <= 1e-12,
        "max entry deviation " + detail::fmt(worst));
  }

  // 8. classical PD: unique Nash (D,D), Pareto structure
  {
    PayoffTable t = PayoffTable::prisoners_dilemma();
    PayoffFn fn = [&](std::size_t a, std::size_t b) { return t.at((int)a, (int)b); };
    auto profiles = nash_profiles(fn, 2, 2);
    bool pass = profiles.size() == 1 && profiles[0].strategy_a == 1 &&
                profiles[0].strategy_b == 1 && profiles[0].payoffs == std::pair{1.0, 1.0} &&
                !profiles[0].is_pareto_optimal;
    auto mask = pareto_optimal({{3, 3}, {0, 5}, {5, 0}, {1, 1}});
    pass = pass && mask[0] && mask[1] && mask[2] && !mask[3];
    add("classical PD: Nash = {(D,D)}, (1,1) not Pareto, (3,3) Pareto", pass,
        std::to_string(profiles.size()) + " Nash profile(s) found");
  }

  // 9. equivalence solver recovers (r, q) from Eq.-(4)-generated targets
  {
    std::mt19937_64 rng(seed + 2);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    PayoffTable t = PayoffTable::prisoners_dilemma();
    double worst = 0.0;
    int solved = 0;
    for (int k = 0; k < 100; ++k) {
      double r = uni(rng), q = uni(rng);
      auto target = expected_payoff_classical(t, r, q);
      EquivalenceReport rep = classical_equivalence(t, target);
      if (!rep.solver_solution) continue;
      ++solved;
      auto [rr, qq] = *rep.solver_solution;
      auto got = expected_payoff_classical(t, rr, qq);
      worst = std::max({worst, std::abs(got.first - target.first),
                        std::abs(got.second - target.second)});
    }
    add("equivalence solver recovers targets (100 seeded points)",
        solved == 100 && worst <= 1e-9,
        std::to_string(solved) + "/100 solved, max residual " + detail::fmt(worst));
  }

  // 10 (in-process part). unitarity, norm preservation, determinism
  {
    bool pass = true;
    std::string why = "ok";
    std::mt19937_64 rng(seed + 3);
    for (const char* n : {"I", "X", "Y", "Z", "H", "CNOT", "SWAP"})
      pass = pass && check_unitary(named_gate(n), 1e-10);
    for (int k = 0; k < 200; ++k)
      pass = pass && check_unitary(strategy_gate(detail::random_strategy(rng)), 1e-10);
    pass = pass && check_unitary(entangled_pd_unitary(), 1e-10);
    pass = pass && check_unitary(zero_sum_uab(), 1e-10);
    if (!pass) why = "unitarity violation";

    for (int k = 0; k < 100 && pass; ++k) {
      StateVector s = ewl_final_state({pi / 2 * std::uniform_real_distribution<>(0, 1)(rng)},
                                      detail::random_strategy(rng),
                                      detail::random_strategy(rng));
      if (std::abs(s.norm_sq() - 1.0) > 1e-12) {
        pass = false;
        why = "norm drift " + detail::fmt(std::abs(s.norm_sq() - 1.0));
      }
    }

    UnitaryMatrix w1 = entangled_pd_unitary(), w2 = entangled_pd_unitary();
    if (pass && w1.entries != w2.entries) {
      pass = false;
      why = "complete_unitary is not bit-reproducible";
    }
    add("property suite: unitarity, norm preservation, determinism", pass, why);
  }

  return out;
}

}  // namespace qgames
