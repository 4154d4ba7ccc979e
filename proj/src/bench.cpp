#include "seminormal/bench.hpp"

#include <chrono>
#include <sstream>

namespace seminormal {

namespace {

double run_millis(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

std::vector<BenchRow> fat_hook_bench(const std::vector<std::pair<int, int>>& cases, int reps) {
  std::vector<BenchRow> rows;
  for (const auto& [lambda2, k2] : cases) {
    std::vector<int> parts = {lambda2 + 1};
    for (int i = 0; i < k2; ++i) parts.push_back(lambda2);
    Partition shape(parts);
    Node node{1, lambda2 + 1};
    Tableau target = james_murphy_tableau(shape, node);

    BenchRow fast{shape, lambda2, k2, "fast", 0, 0.0};
    BenchRow step{shape, lambda2, k2, "stepwise", 0, 0.0};
    for (int rep = 0; rep < reps; ++rep) {
      {
        SpechtModule module(shape);
        GeneralFnResult result;
        double ms = run_millis([&] { result = general_fn(module, node); });
        long long fcount = static_cast<long long>(result.f.terms.size()) - 1;
        if (rep == 0 || ms < fast.millis) fast.millis = ms;
        fast.terms = fcount;
      }
      {
        SpechtModule module(shape);
        StepwiseResult result;
        double ms = run_millis([&] { result = seminormal_stepwise(module, target); });
        if (rep == 0 || ms < step.millis) step.millis = ms;
        step.terms = result.term_count_trace.empty() ? 1 : result.term_count_trace.back();
      }
    }
    rows.push_back(step);
    rows.push_back(fast);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "shape,method,terms,millis\n";
  for (const auto& r : rows)
    os << '"' << r.shape.str() << '"' << "," << r.method << "," << r.terms << "," << r.millis
       << "\n";
  return os.str();
}

}  // namespace seminormal
