#pragma once

// Randomized verification of the invariance theorems on small instances.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "slidepol/io.hpp"

namespace slidepol {

inline constexpr const char* kVersion = "0.1.0";

struct HarnessConfig {
  std::string suite = "prop22";
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t n = 4;          // variables drawn uniformly from 1..n
  int max_exponent = 3;
  std::size_t max_gens = 5;
  Limits limits;
  int characteristic = 0;
  unsigned workers = 1;
  double max_skip_ratio = 0.5;  // more skipped trials than this is fatal
};

/// Deterministic generator for one trial: splitmix64 of (seed, trial) seeds
/// an mt19937_64, and bounded draws use rejection sampling.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);
  /// Uniform on [lo, hi].
  int uniform(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

struct RandomInstance {
  MonomialIdeal ideal;
  ExponentVector a;  // lcm v 1
  std::size_t axis = 0;
  int threshold = 1;  // uniform on 1..a_axis + 1
};

/// The ideal of trial `trial`; never zero or the unit ideal.
RandomInstance random_instance(const HarnessConfig& cfg, std::uint64_t trial);

struct Violation {
  std::uint64_t trial = 0;
  std::string property;
  std::string detail;
  IdealDocument instance;
  std::size_t axis = 0;
  int threshold = 0;
};

struct HarnessReport {
  HarnessConfig config;
  std::uint64_t completed = 0;
  std::uint64_t skipped = 0;
  std::vector<Violation> violations;
  std::vector<Violation> findings;  // observations on open conjectures
  bool cap_fatal = false;
};

const std::vector<std::string>& suite_names();

/// Runs cfg.trials trials of cfg.suite. Trials that hit a resource cap are
/// skipped and counted. Throws Errc::invalid_argument for an unknown suite.
HarnessReport verify_suite(const HarnessConfig& cfg);

std::string to_json(const HarnessReport& report);

}  // namespace slidepol
