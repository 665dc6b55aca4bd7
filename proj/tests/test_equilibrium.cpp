#include <doctest.h>

#include <algorithm>
#include <random>

#include "qgames/equilibrium.hpp"
#include "qgames/games.hpp"

using namespace qgames;

namespace {

PayoffFn table_fn(const PayoffTable& t) {
  return [t](std::size_t a, std::size_t b) { return t.at((int)a, (int)b); };
}

}  // namespace

TEST_CASE("best_response on the PD table") {
  PayoffFn pd = table_fn(PayoffTable::prisoners_dilemma());
  // against C (index 0), A defects: 5 > 3
  CHECK(best_response(pd, Player::A, 0, 2) == std::vector<std::size_t>{1});
  // against D, A defects: 1 > 0
  CHECK(best_response(pd, Player::A, 1, 2) == std::vector<std::size_t>{1});

  PayoffFn flat = [](std::size_t, std::size_t) { return std::pair{1.0, 1.0}; };
  CHECK(best_response(flat, Player::B, 0, 3) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("nash_profiles: PD has the single (D,D) equilibrium") {
  auto profiles = nash_profiles(table_fn(PayoffTable::prisoners_dilemma()), 2, 2);
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0].strategy_a == 1);
  CHECK(profiles[0].strategy_b == 1);
  CHECK(profiles[0].payoffs == std::pair{1.0, 1.0});
  CHECK_FALSE(profiles[0].is_pareto_optimal);  // the dilemma
}

TEST_CASE("nash_profiles: constant game makes every profile Nash") {
  PayoffFn zero = [](std::size_t, std::size_t) { return std::pair{0.0, 0.0}; };
  CHECK(nash_profiles(zero, 3, 3).size() == 9);
}

TEST_CASE("nash_profiles: entangled zero-sum over a strategy grid is all-Nash") {
  constexpr double pi = std::numbers::pi;
  std::vector<StrategyParams> grid = {{0, 0, 0}, {pi / 3, 0, 0}, {pi, 0, 0}};
  PayoffFn fn = [&](std::size_t a, std::size_t b) {
    return entangled_zero_sum_play(grid[a], grid[b]).expected_payoffs;
  };
  auto profiles = nash_profiles(fn, grid.size(), grid.size());
  CHECK(profiles.size() == grid.size() * grid.size());
  for (const auto& p : profiles) CHECK(p.payoffs == std::pair{0.0, 0.0});
}

TEST_CASE("nash_profiles: dominant diagonal") {
  PayoffFn fn = [](std::size_t a, std::size_t b) {
    return a == 0 && b == 0 ? std::pair{1.0, 1.0} : std::pair{0.0, 0.0};
  };
  auto profiles = nash_profiles(fn, 2, 2);
  // (0,0) is the only profile where neither side gains by deviating alone:
  // from (0,1)/(1,0) one player can switch back to reach (1,1)
  REQUIRE(profiles.size() == 2);
  CHECK(profiles[0].strategy_a == 0);
  CHECK(profiles[0].strategy_b == 0);
  CHECK(profiles[0].payoffs == std::pair{1.0, 1.0});
  CHECK(profiles[1].strategy_a == 1);
  CHECK(profiles[1].strategy_b == 1);
}

TEST_CASE("nash_profiles: strictly dominant strategies give a unique profile") {
  PayoffFn fn = [](std::size_t a, std::size_t b) {
    return std::pair{a == 0 ? 1.0 : 0.0, b == 0 ? 1.0 : 0.0};
  };
  auto profiles = nash_profiles(fn, 2, 2);
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0].strategy_a == 0);
  CHECK(profiles[0].strategy_b == 0);
  CHECK(profiles[0].payoffs == std::pair{1.0, 1.0});
}

TEST_CASE("pareto_optimal") {
  auto mask = pareto_optimal({{3, 3}, {0, 5}, {5, 0}, {1, 1}});
  CHECK(mask == std::vector<bool>{true, true, true, false});
  CHECK(pareto_optimal({{2, 7}}) == std::vector<bool>{true});
  CHECK(pareto_optimal({{1, 1}, {2, 2}}) == std::vector<bool>{false, true});
  CHECK_THROWS_AS(pareto_optimal({}), std::invalid_argument);
}

TEST_CASE("pareto_optimal: strictly dominating element wins alone") {
  auto mask = pareto_optimal({{1, 2}, {4, 5}, {0, 0}, {3, 4}});
  CHECK(mask == std::vector<bool>{false, true, false, false});
}

TEST_CASE("nash profile set is invariant under grid reordering") {
  PayoffTable t = PayoffTable::prisoners_dilemma();
  PayoffFn fwd = table_fn(t);
  PayoffFn rev = [&](std::size_t a, std::size_t b) { return t.at(1 - (int)a, 1 - (int)b); };
  auto p1 = nash_profiles(fwd, 2, 2);
  auto p2 = nash_profiles(rev, 2, 2);
  REQUIRE(p1.size() == p2.size());
  // same payoff multiset
  CHECK(p1[0].payoffs == p2[0].payoffs);
}

TEST_CASE("best responses invariant under positive affine payoff rescaling") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<std::vector<std::pair<double, double>>> payoffs(4,
                                                              std::vector<std::pair<double, double>>(4));
  for (auto& row : payoffs)
    for (auto& p : row) p = {uni(rng), uni(rng)};
  PayoffFn base = [&](std::size_t a, std::size_t b) { return payoffs[a][b]; };
  PayoffFn scaled = [&](std::size_t a, std::size_t b) {
    auto [x, y] = payoffs[a][b];
    return std::pair{2.5 * x + 7.0, 2.5 * y + 7.0};
  };
  for (std::size_t opp = 0; opp < 4; ++opp) {
    CHECK(best_response(base, Player::A, opp, 4) == best_response(scaled, Player::A, opp, 4));
    CHECK(best_response(base, Player::B, opp, 4) == best_response(scaled, Player::B, opp, 4));
  }
  auto n1 = nash_profiles(base, 4, 4);
  auto n2 = nash_profiles(scaled, 4, 4);
  REQUIRE(n1.size() == n2.size());
  for (std::size_t k = 0; k < n1.size(); ++k) {
    CHECK(n1[k].strategy_a == n2[k].strategy_a);
    CHECK(n1[k].strategy_b == n2[k].strategy_b);
  }
}
