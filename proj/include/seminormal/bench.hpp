// Term-count and wall-clock comparison of the stepwise and row-sum routes on
// the fat hook family.
#pragma once

#include "seminormal/seminormal.hpp"

namespace seminormal {

struct BenchRow {
  Partition shape;
  int lambda2 = 0;
  int k2 = 0;
  std::string method;   // "stepwise" | "fast"
  long long terms = 0;  // stepwise: formal walk terms; fast: recursion e-terms
  double millis = 0.0;
};

// Runs both methods on the James-Murphy vector of (lambda2+1, lambda2^k2);
// wall clock is the best of `reps` fresh runs.
std::vector<BenchRow> fat_hook_bench(const std::vector<std::pair<int, int>>& cases, int reps);

std::string bench_csv(const std::vector<BenchRow>& rows);  // header shape,method,terms,millis

}  // namespace seminormal
