#ifndef COINV_VERIFY_HPP
#define COINV_VERIFY_HPP

#include <string>
#include <vector>

#include "coinv/partition.hpp"
#include "coinv/polynomial.hpp"

namespace coinv {

struct CheckResult {
  std::string name;
  std::string params;
  bool pass = false;
  std::string counterexample;  // empty when passing
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<double> wall_ms;  // parallel to checks, reported separately
  bool truncated = false;       // a budget cut the sweep short

  bool pass() const;
  long failures() const;
};

struct VerifyOptions {
  int max_n = 4;        // sweep bound on the number of letters
  int max_s = 0;        // power bound for the power-ideal sweep; 0 means max_n
  long budget = 0;      // 0 = unlimited, else cap on checks per suite
  long random_trials = 25;
  unsigned long seed = 20250814;
  std::string fixtures_dir;
  int only_n = 0;          // restrict sweeps to a single n (0 = sweep 1..max_n)
  std::string only_shape;  // restrict sweeps to a single shape (empty = all)
  int only_k = 0;          // restrict the power-ideal sweep to a single k
  int only_s = 0;          // restrict the power-ideal sweep to a single s
};

// Suites, each sweeping every shape of weight <= n for the relevant n range:
//   bijection: code/insert round trips, code-family membership vs the
//              shuffle oracle (n <= 5), maxcode domination;
//   hilbert:   coinv generating function vs exact elimination;
//   harmonic:  factored deltas vs antisymmetrization, generator annihilation;
//   staircase: dotted-staircase expansion vs e_d(S) (.) delta_T at n = max_n;
//   leading:   delta_sigma family and harmonic-space leading exponents;
//   module:    closure dimension = number of ordered set partitions;
//   power-ideal: power/elementary ideal vs shape ideal, telescoping samples;
//   golden:    replay of the pinned worked examples from the fixtures file.
VerificationReport suite_bijection(const VerifyOptions& opts);
VerificationReport suite_hilbert(const VerifyOptions& opts);
VerificationReport suite_harmonic(const VerifyOptions& opts);
VerificationReport suite_staircase(const VerifyOptions& opts);
VerificationReport suite_leading(const VerifyOptions& opts);
VerificationReport suite_module(const VerifyOptions& opts);
VerificationReport suite_power_ideal(const VerifyOptions& opts);
VerificationReport suite_golden(const VerifyOptions& opts);

// Dispatch by name; "all" concatenates every suite above.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts);
std::vector<std::string> suite_names();

}  // namespace coinv

#endif
