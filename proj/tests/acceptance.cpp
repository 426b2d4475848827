// Acceptance gate: one line per criterion, exit 1 when any fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "coinv/graded.hpp"
#include "coinv/partition.hpp"
#include "coinv/verify.hpp"

#ifndef COINV_GOLDEN_DIR
#define COINV_GOLDEN_DIR "tests/golden"
#endif

namespace {

int failures = 0;

struct SuiteOutcome {
  coinv::VerificationReport report;
  double ms = 0;
};

SuiteOutcome timed(const std::string& suite, const coinv::VerifyOptions& opts) {
  const auto begin = std::chrono::steady_clock::now();
  SuiteOutcome out;
  out.report = coinv::run_suite(suite, opts);
  const auto end = std::chrono::steady_clock::now();
  out.ms = std::chrono::duration<double, std::milli>(end - begin).count();
  return out;
}

std::string first_failure(const coinv::VerificationReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return c.name + " " + c.params + ": " + c.counterexample;
  return "suite reported failure without a counterexample";
}

void emit(const std::string& name, const std::string& scale, bool pass,
          const std::string& detail, double ms, std::size_t checks) {
  if (pass) {
    std::printf("PASS %s [%s] (%zu checks, %ld ms)\n", name.c_str(), scale.c_str(), checks,
                static_cast<long>(ms));
  } else {
    std::printf("FAIL %s [%s]: %s\n", name.c_str(), scale.c_str(), detail.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

void run_criterion(const std::string& name, const std::string& scale, const std::string& suite,
                   const coinv::VerifyOptions& opts, double ms_limit = 0) {
  const SuiteOutcome out = timed(suite, opts);
  bool pass = out.report.pass() && !out.report.checks.empty();
  std::string detail = pass ? "" : first_failure(out.report);
  if (pass && ms_limit > 0 && out.ms >= ms_limit) {
    pass = false;
    char buf[96];
    std::snprintf(buf, sizeof buf, "wall time %.0f ms exceeds the %.0f ms limit", out.ms,
                  ms_limit);
    detail = buf;
  }
  emit(name, scale, pass, detail, out.ms, out.report.checks.size());
}

}  // namespace

int main() {
  coinv::VerifyOptions base;
  base.fixtures_dir = COINV_GOLDEN_DIR;

  {
    auto o = base;
    run_criterion("golden-fixtures", "pinned worked examples, under 1 s", "golden", o, 1000);
  }
  {
    auto o = base;
    o.max_n = 6;
    run_criterion("code-bijection", "all shapes, n <= 6; shuffle oracle n <= 5", "bijection", o);
  }
  {
    auto o = base;
    o.max_n = 5;
    const SuiteOutcome out = timed("hilbert", o);
    bool pass = out.report.pass() && !out.report.checks.empty();
    std::string detail = pass ? "" : first_failure(out.report);
    if (pass) {
      long expect = 1;
      for (int n = 1; n <= 5 && pass; ++n) {
        expect *= n;
        const auto series =
            coinv::hilbert_by_coinv(n, coinv::Partition(std::vector<int>(n, 1)));
        const long total = std::accumulate(series.begin(), series.end(), 0L);
        if (total != expect) {
          pass = false;
          detail = "series for n distinct singleton blocks sums to " + std::to_string(total) +
                   ", expected " + std::to_string(expect);
        }
      }
    }
    emit("hilbert-series", "all shapes, n <= 5; factorial totals", pass, detail, out.ms,
         out.report.checks.size());
  }
  {
    auto o = base;
    o.max_n = 5;
    run_criterion("delta-annihilation", "all shapes and tableaux, n <= 5", "harmonic", o);
  }
  {
    auto o = base;
    o.max_n = 4;
    run_criterion("staircase-expansion", "all shapes at n = 4, under 1 min", "staircase", o,
                  60000);
  }
  {
    auto o = base;
    o.max_n = 5;
    run_criterion("harmonic-basis", "all shapes, n <= 5", "leading", o);
  }
  {
    auto o = base;
    o.max_n = 4;
    run_criterion("module-closure", "all shapes, n <= 4, under 1 min", "module", o, 60000);
  }
  {
    auto o = base;
    o.max_n = 4;
    o.max_s = 4;
    o.random_trials = 100;
    run_criterion("power-ideal", "k <= n <= 4, s <= 4; 100 random rewrites", "power-ideal", o);
  }

  if (failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
  } else {
    std::printf("acceptance: %d of 8 criteria failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
