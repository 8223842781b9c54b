#pragma once

// The acceptance suite: one entry per criterion, each with its pinned
// configuration and tolerance (all tolerances are exact here), producing a
// deterministic report.

#include <string>
#include <vector>

#include "dhs/fq.hpp"
#include "dhs/prng.hpp"

namespace dhs {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;      // counts, witnesses, adjudicated conventions
  double seconds = 0.0;    // wall time; excluded from the serialized report
};

struct AcceptanceReport {
  std::string profile;
  u64 seed = 0;
  std::vector<CriterionResult> results;
  bool all_pass() const;
  /// Deterministic serialization (no timings, stable field order).
  std::string to_json() const;
};

AcceptanceReport run_acceptance(const std::string& profile, u64 seed);

}  // namespace dhs
