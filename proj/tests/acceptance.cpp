// Acceptance suite: one pass/fail line per reproduced claim, plus CLI
// output determinism. Exits nonzero on any failure.

#include <cstdio>
#include <iostream>
#include <string>

#include "qgames/verify.hpp"

#ifndef QGAMES_CLI_PATH
#error "QGAMES_CLI_PATH must point at the CLI binary"
#endif

namespace {

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

bool deterministic(const std::string& args, std::string& first) {
  std::string cmd = std::string("'") + QGAMES_CLI_PATH + "' " + args + " 2>/dev/null";
  first = capture(cmd);
  return !first.empty() && first == capture(cmd);
}

}  // namespace

int main() {
  auto checks = qgames::run_paper_checks();

  {
    std::string out;
    bool ok = true;
    for (const char* args :
         {"sweep pd-quantum --param theta_a --lo 0 --hi 3.141592653589793 --steps 9 --format csv",
          "sweep zerosum --param theta_b --lo 0 --hi 3.141592653589793 --steps 5 --format csv",
          "run pd-entangled --a I --b X --format json",
          "run zerosum-entangled --theta-a 1.0 --theta-b 0.5 --format json",
          "sample pd-entangled --a I --b I --shots 1000 --seed 7 --format csv"})
      ok = ok && deterministic(args, out);
    checks.push_back({"CLI outputs byte-identical across two consecutive runs", ok,
                      ok ? "5 commands re-run and compared" : "mismatch or empty output"});
  }

  int criterion = 0;
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    std::printf("criterion %2d: %s  %s  [%s]\n", ++criterion, c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.detail.c_str());
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
