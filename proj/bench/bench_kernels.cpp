// Serial against OpenMP timings for the search and suite kernels.
// Usage: narhoop_bench [size] [threads]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "narhoop/axioms.hpp"
#include "narhoop/enumerate.hpp"
#include "narhoop/suite.hpp"

using namespace narhoop;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& what, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(34) << what << std::right << std::fixed << std::setprecision(3) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(9) << (parallel > 0 ? serial / parallel : 0.0) << "x"
            << (same ? "" : "  RESULTS DIFFER") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  const int width = argc > 2 ? std::atoi(argv[2]) : std::max(2, default_parallel_width());
  std::cout << "size " << n << ", " << width << " threads\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "omp" << std::setw(10) << "speedup" << '\n';
  bool ok = true;

  for (ModelClass c : all_model_classes()) {
    std::vector<FiniteMagma> a, b;
    const double s = seconds([&] { a = backtrack_serial(n, c); });
    const double p = seconds([&] { b = backtrack_parallel(n, c, width); });
    row("backtrack " + std::string(model_class_name(c)), s, p, a == b);
    ok = ok && a == b;
  }

  for (ModelClass c : all_model_classes()) {
    if (!generate_and_filter_feasible(n, c) || (n == 3 && c != ModelClass::narhoop)) continue;
    const ModelClass one[] = {c};
    std::vector<std::vector<FiniteMagma>> a, b;
    const double s = seconds([&] { a = generate_and_filter_serial(n, one); });
    const double p = seconds([&] { b = generate_and_filter_parallel(n, one, width); });
    row("generate " + std::string(model_class_name(c)), s, p, a == b);
    ok = ok && a == b;
  }

  const auto corpus = verification_corpus(n);
  SuiteReport a, b;
  const double s = seconds([&] { a = run_suite_serial(corpus, all_cases()); });
  const double p = seconds([&] { b = run_suite(corpus, all_cases(), width); });
  const bool same = a.to_json() == b.to_json();
  row("suite (" + std::to_string(corpus.size()) + " models)", s, p, same);
  ok = ok && same;
  return ok ? 0 : 1;
}
