#pragma once

// Discrete equilibrium analysis over finite strategy grids: best responses,
// pure Nash profiles by exhaustive enumeration, and Pareto dominance masks.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qgames {

inline constexpr double kPayoffTieTol = 1e-9;

// payoff_fn(ia, ib) -> (payoff A, payoff B) at grid indices ia, ib
using PayoffFn = std::function<std::pair<double, double>(std::size_t, std::size_t)>;

template <typename S>
struct StrategyGrid {
  std::vector<S> points;
  std::size_t size() const { return points.size(); }
};

enum class Player { A, B };

struct EquilibriumProfile {
  std::size_t strategy_a = 0;
  std::size_t strategy_b = 0;
  std::pair<double, double> payoffs{0.0, 0.0};
  bool is_pareto_optimal = false;
};

// All strategies maximizing the player's payoff against a fixed opponent
// strategy; ties within kPayoffTieTol are all returned.
inline std::vector<std::size_t> best_response(const PayoffFn& payoff_fn, Player player,
                                              std::size_t opponent_strategy,
                                              std::size_t grid_size,
                                              double tol = kPayoffTieTol) {
  if (grid_size == 0) throw std::invalid_argument("empty strategy grid");
  std::vector<double> vals(grid_size);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_size; ++i) {
    auto [pa, pb] = player == Player::A ? payoff_fn(i, opponent_strategy)
                                        : payoff_fn(opponent_strategy, i);
    vals[i] = player == Player::A ? pa : pb;
    best = std::max(best, vals[i]);
  }
  std::vector<std::size_t> argmax;
  for (std::size_t i = 0; i < grid_size; ++i)
    if (vals[i] >= best - tol) argmax.push_back(i);
  return argmax;
}

// Marks each outcome Pareto optimal iff no other outcome is >= in both
// coordinates and > in at least one.
inline std::vector<bool> pareto_optimal(const std::vector<std::pair<double, double>>& outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("empty outcome list");
  std::vector<bool> mask(outcomes.size(), true);
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    for (std::size_t j = 0; j < outcomes.size(); ++j) {
      if (i == j) continue;
      bool geq = outcomes[j].first >= outcomes[i].first &&
                 outcomes[j].second >= outcomes[i].second;
      bool gt = outcomes[j].first > outcomes[i].first ||
                outcomes[j].second > outcomes[i].second;
      if (geq && gt) {
        mask[i] = false;
        break;
      }
    }
  return mask;
}

// Pure Nash profiles: mutual best responses over the full grid product.
// Each profile's Pareto flag is relative to all grid-product outcomes.
inline std::vector<EquilibriumProfile> nash_profiles(const PayoffFn& payoff_fn,
                                                     std::size_t grid_a_size,
                                                     std::size_t grid_b_size,
                                                     double tol = kPayoffTieTol) {
  if (grid_a_size == 0 || grid_b_size == 0) throw std::invalid_argument("empty strategy grid");
  std::vector<std::pair<double, double>> outcomes;
  outcomes.reserve(grid_a_size * grid_b_size);
  for (std::size_t ia = 0; ia < grid_a_size; ++ia)
    for (std::size_t ib = 0; ib < grid_b_size; ++ib) outcomes.push_back(payoff_fn(ia, ib));
  std::vector<bool> pareto = pareto_optimal(outcomes);

  std::vector<EquilibriumProfile> profiles;
  for (std::size_t ia = 0; ia < grid_a_size; ++ia)
    for (std::size_t ib = 0; ib < grid_b_size; ++ib) {
      auto [pa, pb] = outcomes[ia * grid_b_size + ib];
      bool a_best = true, b_best = true;
      for (std::size_t k = 0; k < grid_a_size && a_best; ++k)
        if (payoff_fn(k, ib).first > pa + tol) a_best = false;
      for (std::size_t k = 0; k < grid_b_size && b_best; ++k)
        if (payoff_fn(ia, k).second > pb + tol) b_best = false;
      if (a_best && b_best)
        profiles.push_back({ia, ib, {pa, pb}, pareto[ia * grid_b_size + ib]});
    }
  return profiles;
}

}  // namespace qgames
