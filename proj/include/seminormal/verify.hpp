// Verification suites shared by the CLI and the acceptance harness.
#pragma once

#include <cstdint>
#include <string>

#include "seminormal/modular.hpp"

namespace seminormal {

struct SuiteResult {
  explicit SuiteResult(std::string suite_name = "") : name(std::move(suite_name)) {}
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> messages;  // first few failures, human-readable
  bool passed() const { return failures == 0; }
  void note_failure(const std::string& msg);
  void merge(const SuiteResult& other);
};

// Four-way agreement of the seminormal constructions for all shapes of n <= max_n.
SuiteResult suite_agreement(int max_n, int jobs);
// Jucys-Murphy eigenvalue law and unitriangularity.
SuiteResult suite_eigen(int max_n);
// Form invariance, orthogonality against the small-n oracle form.
SuiteResult suite_orthogonality(int max_n);
// Denominator certificates for every removable node of every shape.
SuiteResult suite_denominators(int max_n);
// Generator relations, q = 1 specialization, oracle matrix comparison.
SuiteResult suite_representation(int max_n);
// Submodule theorems at roots of unity.
SuiteResult suite_modular(int max_n);
// Derivation of the seminormal ascent coefficient from the projector oracle.
SuiteResult suite_ascent_fit(int deterministic_min, int random_instances, std::uint64_t seed);

std::vector<SuiteResult> run_suites(const std::string& which, int max_n, int jobs,
                                    std::uint64_t seed);

// Deterministic PRNG for reproducible randomized checks.
struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound);
};

// Random canonical rational function built from small quantum integers.
RatFunc random_ratfunc(SplitMix& rng);

}  // namespace seminormal
