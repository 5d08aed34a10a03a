#include <cstdio>

#include "dalie/harness/harness.hpp"

using namespace dalie::harness;

int main() {
  bool all = true;
  run_suite([&](const CriterionResult& r) {
    bool ok = r.passed();
    all = all && ok;
    std::printf("criterion %2d %s  %s  [%.1fs, limit %.0fs]\n", r.number, ok ? "PASS" : "FAIL", r.title.c_str(),
                r.seconds, r.time_limit);
    for (auto& rep : r.reports)
      if (rep.verdict != Verdict::pass)
        std::printf("    %s: %s %s\n", rep.name.c_str(), to_string(rep.verdict).c_str(), rep.witness.c_str());
    std::fflush(stdout);
  });
  return all ? 0 : 1;
}
