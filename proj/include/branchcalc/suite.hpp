#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "branchcalc/json_io.hpp"
#include "branchcalc/universe.hpp"

namespace branchcalc {

struct SuiteConfig {
  /// truncation-lemma | duality | quotient | ext | hecke
  std::string mode;
  UniverseSpec universe;
  int jobs = 1;
  std::uint64_t seed = 1;
  /// duality: twists applied to every enumerated datum.
  std::vector<Exponent> twists{Exponent(0), half()};
  /// ext: also certify generic m1 against non-generic m2 and audit the FAIL extractor.
  bool inject_nongeneric = false;
  /// ext: also run the longest-segment choice and record its FAIL count.
  bool compare_longest = false;
  /// hecke: random triples for associativity, random characters per rank.
  int hecke_trials = 1000;
  int hecke_characters = 20;
  Rational hecke_q = 4;
};

struct RunReport {
  std::string mode;
  Json config;
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  Json first_counterexample;  ///< null when none
  Json stats = Json::object();
  double seconds = 0;

  int exit_code() const { return failed ? 2 : 0; }
  /// Byte-stable unless `timing` adds the wall time.
  Json to_json(bool timing = false) const;
};

RunReport run_suite(const SuiteConfig& config);

/// Number of worker threads from BRANCHCALC_JOBS, defaulting to 1.
int default_jobs();

}  // namespace branchcalc
