#pragma once

// Randomized verification suite. Every check runs once per trial with its own
// seeded sampler, so a report depends only on (algebra, seed, trials, tol).

#include <cstdint>
#include <string>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

struct CheckRecord {
  std::string check;
  std::string anchor;  // the identity being tested
  int trial = 0;
  double residual = 0.0;  // NaN when the check threw
  double tolerance = 0.0;
  bool pass = false;
  std::string error;
};

struct VerificationReport {
  std::string suite;
  Algebra algebra;
  std::uint64_t seed = 0;
  int trials = 0;
  double tol = kDefaultTol;
  std::vector<CheckRecord> records;  // sorted by (check, trial)
  double wall_time_seconds = 0.0;    // not part of the JSON form

  bool passed() const;
  int failures() const;
};

// Names of the checks run for an algebra, in report order.
std::vector<std::string> suite_checks(const Algebra& a);

// Throws DomainViolation when trials < 1.
VerificationReport run_suite(const Algebra& a, std::uint64_t seed, int trials, double tol = kDefaultTol);

// Deterministic JSON (no timing information).
std::string report_to_json(const VerificationReport& r);

}  // namespace jordan
