// Command-line front end: play each game once, sweep a parameter, draw
// seeded measurement samples, or re-check every reproduced claim.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgames/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qgames;

namespace {

constexpr const char* kBasisNote =
    "qubit 1 is the most significant bit; |b1..bn> has amplitude index sum b_i*2^(n-i)";

// 15 significant digits, round-tripped so JSON carries the rounded value
double sig15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string fmt15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

struct Options {
  std::string game;
  double gamma = std::numbers::pi / 2.0;
  StrategyParams pa, pb;
  std::string named_a, named_b;  // I or X, overrides params when set
  std::string table_path;
  std::string format = "json";
};

Strategy strategy_a(const Options& o) {
  if (!o.named_a.empty()) return o.named_a;
  return o.pa;
}

Strategy strategy_b(const Options& o) {
  if (!o.named_b.empty()) return o.named_b;
  return o.pb;
}

StrategyParams params_or_named(const StrategyParams& p, const std::string& named) {
  if (named.empty()) return p;
  if (named == "I") return {0, 0, 0};
  if (named == "X") return {std::numbers::pi, 0, 0};
  throw std::domain_error("named strategies are restricted to I and X");
}

std::pair<double, double> pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::runtime_error("payoff entry must be [a, b]");
  return {j[0].get<double>(), j[1].get<double>()};
}

PayoffTable load_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open payoff table file: " + path);
  json j = json::parse(f);
  const char* keys_pd[4] = {"CC", "CD", "DC", "DD"};
  const char* keys_zs[4] = {"S1S1", "S1S2", "S2S1", "S2S2"};
  const char** keys = j.contains("CC") ? keys_pd : keys_zs;
  PayoffTable t;
  for (int k = 0; k < 4; ++k) {
    if (!j.contains(keys[k]))
      throw std::runtime_error(std::string("payoff table is missing key ") + keys[k]);
    t.entries[k >> 1][k & 1] = pair_from_json(j[keys[k]]);
  }
  return t;
}

PayoffCoding coding_from_table(const PayoffCoding& fallback, const std::string& path) {
  if (path.empty()) return fallback;
  PayoffTable o = load_table(path);
  PayoffCoding c;
  const char* bits[4] = {"00", "01", "10", "11"};
  for (int k = 0; k < 4; ++k) c.table[bits[k]] = o.at(k >> 1, k & 1);
  return c;
}

json state_json(const StateVector& s) {
  StateVector a = align_global_phase(s);
  json amps = json::array();
  for (cplx z : a.amps) amps.push_back({sig15(z.real()), sig15(z.imag())});
  return {{"n_qubits", a.n_qubits}, {"basis_convention", kBasisNote}, {"amplitudes", amps}};
}

json result_json(const GameResult& r) {
  json dist = json::array();
  for (const auto& [pay, p] : r.payoff_distribution)
    dist.push_back({{"payoff", {pay.first, pay.second}}, {"probability", p}});
  json reg;
  for (const auto& [bits, p] : r.register_probs) reg[bits] = p;
  return {{"payoff_register_probabilities", reg},
          {"payoff_distribution", dist},
          {"expected_payoffs", {r.expected_payoffs.first, r.expected_payoffs.second}},
          {"final_state", state_json(r.final_state)}};
}

GameResult ewl_result(const Options& o, const PayoffTable& table) {
  StateVector s = ewl_final_state({o.gamma}, params_or_named(o.pa, o.named_a),
                                  params_or_named(o.pb, o.named_b));
  GameResult r;
  r.final_state = s;
  r.register_probs = outcome_probabilities(s, {1, 2});
  for (const auto& [bits, p] : r.register_probs) {
    int row = bits[0] - '0', col = bits[1] - '0';
    auto pay = table.at(row, col);
    r.payoff_distribution[pay] += p;
    r.expected_payoffs.first += pay.first * p;
    r.expected_payoffs.second += pay.second * p;
  }
  return r;
}

json play_game(const Options& o) {
  json rep;
  rep["game"] = o.game;
  if (o.game == "pd-quantum") {
    PayoffTable t = o.table_path.empty() ? PayoffTable::prisoners_dilemma()
                                         : load_table(o.table_path);
    rep["gamma"] = o.gamma;
    rep.update(result_json(ewl_result(o, t)));
  } else if (o.game == "pd-entangled") {
    PayoffCoding c = coding_from_table(PayoffCoding::entangled_pd(), o.table_path);
    rep.update(result_json(entangled_pd_play(strategy_a(o), strategy_b(o), c)));
  } else if (o.game == "zerosum") {
    ZeroSumResult r = zero_sum_play(params_or_named(o.pa, o.named_a),
                                    params_or_named(o.pb, o.named_b));
    StrategyParams pa = params_or_named(o.pa, o.named_a);
    StrategyParams pb = params_or_named(o.pb, o.named_b);
    double p = std::cos(pa.theta / 2) * std::cos(pa.theta / 2);
    double q = std::cos(pb.theta / 2) * std::cos(pb.theta / 2);
    rep["p_a_quantum"] = r.p_a;
    rep["p_b_quantum"] = r.p_b;
    rep["p_a_classical"] = zero_sum_classical(p, q);
    rep["convention_note"] =
        "quantum rule: A wins when its two measurements agree (P_A = 1 at p = q = 1); "
        "the classical formula p - 2pq + q gives 0 there; both reported verbatim";
    rep["final_state"] = state_json(r.final_state);
  } else if (o.game == "zerosum-entangled") {
    PayoffCoding c = coding_from_table(PayoffCoding::entangled_zero_sum(), o.table_path);
    rep.update(result_json(entangled_zero_sum_play(params_or_named(o.pa, o.named_a),
                                                   params_or_named(o.pb, o.named_b), c)));
  } else if (o.game == "equivalence") {
    PayoffTable t = o.table_path.empty() ? PayoffTable::prisoners_dilemma()
                                         : load_table(o.table_path);
    GameResult g = ewl_result(o, t);
    EquivalenceReport e = classical_equivalence(t, g.expected_payoffs);
    rep["gamma"] = o.gamma;
    rep["target_payoffs"] = {g.expected_payoffs.first, g.expected_payoffs.second};
    rep["alpha"] = {e.alpha_a, e.alpha_b};
    rep["beta"] = {e.beta_a, e.beta_b};
    rep["gamma_coefficients"] = {e.gamma_a, e.gamma_b};
    rep["literal_inequality_holds"] =
        e.literal_inequality_holds ? json(*e.literal_inequality_holds) : json(nullptr);
    if (e.solver_solution) {
      rep["solver_solution"] = {{"r", e.solver_solution->first},
                                {"q", e.solver_solution->second}};
    } else {
      rep["solver_solution"] = nullptr;
    }
  } else {
    throw std::domain_error("unknown game: " + o.game);
  }
  return rep;
}

void print_run(const json& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.dump(2) << "\n";
    return;
  }
  // flat key,value CSV
  std::cout << "key,value\n";
  for (auto& [k, v] : rep.items())
    std::cout << k << ",\"" << v.dump() << "\"\n";
}

// exact outcome distribution over the register a measurer would read
ProbabilityMap measured_distribution(const Options& o) {
  if (o.game == "pd-quantum") {
    StateVector s = ewl_final_state({o.gamma}, params_or_named(o.pa, o.named_a),
                                    params_or_named(o.pb, o.named_b));
    return outcome_probabilities(s, {1, 2});
  }
  if (o.game == "pd-entangled")
    return entangled_pd_play(strategy_a(o), strategy_b(o)).register_probs;
  if (o.game == "zerosum") {
    ZeroSumResult r = zero_sum_play(params_or_named(o.pa, o.named_a),
                                    params_or_named(o.pb, o.named_b));
    return outcome_probabilities(r.final_state, {1, 2, 3, 4});
  }
  if (o.game == "zerosum-entangled")
    return entangled_zero_sum_play(params_or_named(o.pa, o.named_a),
                                   params_or_named(o.pb, o.named_b))
        .register_probs;
  throw std::domain_error("sample does not support game: " + o.game);
}

int cmd_sample(const Options& o, long long shots, std::uint64_t seed) {
  ProbabilityMap exact = measured_distribution(o);
  std::vector<std::pair<std::string, double>> cdf(exact.begin(), exact.end());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::map<std::string, long long> counts;
  for (long long k = 0; k < shots; ++k) {
    double u = uni(rng), acc = 0.0;
    std::string hit = cdf.back().first;
    for (const auto& [bits, p] : cdf) {
      acc += p;
      if (u < acc) {
        hit = bits;
        break;
      }
    }
    ++counts[hit];
  }
  json rep;
  rep["game"] = o.game;
  rep["shots"] = shots;
  rep["seed"] = seed;
  json rows = json::array();
  for (const auto& [bits, p] : exact) {
    long long c = counts.count(bits) ? counts[bits] : 0;
    rows.push_back({{"outcome", bits},
                    {"exact_probability", p},
                    {"count", c},
                    {"empirical_frequency", static_cast<double>(c) / shots}});
  }
  rep["outcomes"] = rows;
  if (o.format == "json") {
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "outcome,exact_probability,count,empirical_frequency\n";
    for (const auto& row : rep["outcomes"])
      std::cout << row["outcome"].get<std::string>() << ","
                << fmt15(row["exact_probability"].get<double>()) << ","
                << row["count"].get<long long>() << ","
                << fmt15(row["empirical_frequency"].get<double>()) << "\n";
  }
  return 0;
}

int cmd_sweep(Options o, const std::string& param, double lo, double hi, int steps) {
  if (steps < 2) throw CLI::ValidationError("--steps", "step count must be at least 2");
  if (lo > hi) throw CLI::ValidationError("--lo/--hi", "lo must not exceed hi");

  auto slot = [&]() -> double* {
    if (param == "theta_a") return &o.pa.theta;
    if (param == "theta_b") return &o.pb.theta;
    if (param == "phi_a") return &o.pa.phi;
    if (param == "phi_b") return &o.pb.phi;
    if (param == "psi_a") return &o.pa.psi;
    if (param == "psi_b") return &o.pb.psi;
    if (param == "gamma") return &o.gamma;
    throw CLI::ValidationError("--param", "unknown sweep parameter: " + param);
  }();

  bool zerosum = o.game == "zerosum";
  json rows = json::array();
  for (int k = 0; k < steps; ++k) {
    *slot = lo + (hi - lo) * k / (steps - 1);
    json rep = play_game(o);
    json row;
    row[param] = *slot;
    if (zerosum) {
      row["p_a_quantum"] = rep["p_a_quantum"];
      row["p_a_classical"] = rep["p_a_classical"];
    } else {
      row["payoff_a"] = rep["expected_payoffs"][0];
      row["payoff_b"] = rep["expected_payoffs"][1];
    }
    rows.push_back(row);
  }

  if (o.format == "json") {
    std::cout << json{{"game", o.game}, {"param", param}, {"rows", rows}}.dump(2) << "\n";
  } else {
    if (zerosum)
      std::cout << param << ",p_a_quantum,p_a_classical\n";
    else
      std::cout << param << ",payoff_a,payoff_b\n";
    for (const auto& row : rows) {
      std::cout << fmt15(row[param].get<double>());
      if (zerosum)
        std::cout << "," << fmt15(row["p_a_quantum"].get<double>()) << ","
                  << fmt15(row["p_a_classical"].get<double>());
      else
        std::cout << "," << fmt15(row["payoff_a"].get<double>()) << ","
                  << fmt15(row["payoff_b"].get<double>());
      std::cout << "\n";
    }
  }
  return 0;
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}

int cmd_verify(const char* argv0) {
  auto checks = run_paper_checks();

  // CLI-output determinism: same sweep twice must be byte-identical
  {
    std::string cmd = std::string("'") + argv0 +
                      "' sweep pd-quantum --param theta_a --lo 0 --hi 3.141592653589793"
                      " --steps 9 --format csv 2>/dev/null";
    std::string a = capture(cmd), b = capture(cmd);
    checks.push_back({"CLI sweep output is reproducible",
                      !a.empty() && a == b,
                      a.empty() ? "could not re-invoke CLI" : "two runs byte-identical"});
  }

  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.detail << "]\n";
  }
  std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return all ? 0 : 1;
}

void add_common_flags(CLI::App* cmd, Options& o, bool need_game) {
  auto* pos = cmd->add_option("GAME", o.game,
                              "game: pd-quantum|pd-entangled|zerosum|zerosum-entangled|equivalence");
  auto* flag = cmd->add_option("--game", o.game, "same as the positional game argument");
  pos->excludes(flag);
  if (need_game) {
    // one of the two spellings must supply the game
    cmd->callback([&o]() {
      if (o.game.empty()) throw CLI::ValidationError("GAME", "a game must be specified");
    });
  }
  cmd->add_option("--gamma", o.gamma, "entangler parameter in [0, pi/2]")
      ->capture_default_str();
  cmd->add_option("--theta-a", o.pa.theta, "player A theta in [0, pi]");
  cmd->add_option("--phi-a", o.pa.phi, "player A phi in [-pi, pi]");
  cmd->add_option("--psi-a", o.pa.psi, "player A psi in [-pi, pi]");
  cmd->add_option("--theta-b", o.pb.theta, "player B theta in [0, pi]");
  cmd->add_option("--phi-b", o.pb.phi, "player B phi in [-pi, pi]");
  cmd->add_option("--psi-b", o.pb.psi, "player B psi in [-pi, pi]");
  cmd->add_option("--a", o.named_a, "player A named strategy (I or X)")
      ->check(CLI::IsMember({"I", "X"}));
  cmd->add_option("--b", o.named_b, "player B named strategy (I or X)")
      ->check(CLI::IsMember({"I", "X"}));
  cmd->add_option("--table", o.table_path, "payoff table/coding override (JSON file)");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum game laboratory"};
  app.require_subcommand(1);

  Options run_opts;
  auto* run = app.add_subcommand("run", "play a game once and report the result");
  add_common_flags(run, run_opts, true);

  Options sweep_opts;
  std::string sweep_param;
  double sweep_lo = 0, sweep_hi = 0;
  int sweep_steps = 0;
  auto* sweep = app.add_subcommand("sweep", "evaluate a game over a parameter grid");
  add_common_flags(sweep, sweep_opts, true);
  sweep->add_option("--param", sweep_param, "theta_a|theta_b|phi_a|phi_b|psi_a|psi_b|gamma")
      ->required();
  sweep->add_option("--lo", sweep_lo, "lower bound")->required();
  sweep->add_option("--hi", sweep_hi, "upper bound")->required();
  sweep->add_option("--steps", sweep_steps, "number of grid points (>= 2)")->required();

  Options sample_opts;
  long long shots = 0;
  std::uint64_t seed = 0;
  auto* sample = app.add_subcommand("sample", "draw seeded measurement samples");
  add_common_flags(sample, sample_opts, true);
  sample->add_option("--shots", shots, "number of samples (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "RNG seed (required: runs must be reproducible)")
      ->required();

  auto* verify = app.add_subcommand("verify-paper", "re-check every reproduced claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*run) {
      print_run(play_game(run_opts), run_opts.format);
      return 0;
    }
    if (*sweep) return cmd_sweep(sweep_opts, sweep_param, sweep_lo, sweep_hi, sweep_steps);
    if (*sample) return cmd_sample(sample_opts, shots, seed);
    if (*verify) return cmd_verify(argv[0]);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
