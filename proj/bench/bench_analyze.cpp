// Times analyze_items (OpenMP) against analyze_items_serial on a synthetic
// corpus and checks that both produce the same results.
//
//   bench_analyze [items] [repetitions]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>

#include "sentcx/analysis.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif
#include "support/generators.hpp"

using namespace sentcx;

namespace {

std::vector<CorpusItem> corpus(std::size_t count) {
  std::mt19937_64 rng(2024);
  testing::GenParams params;
  params.max_depth = 10;
  params.max_quantifiers = 30;
  params.leaf_rate = 0.05;
  testing::FormulaGen gen(rng, params);
  std::vector<CorpusItem> items;
  items.reserve(count);
  while (items.size() < count) {
    Formula f = gen.next();
    if (f.size() > 200) continue;
    items.push_back(CorpusItem{"b" + std::to_string(items.size()),
                               ItemKind::Theorem, f, "", std::nullopt});
  }
  return items;
}

template <class F>
double best_of(int repetitions, F&& run) {
  double best = 1e300;
  for (int i = 0; i < repetitions; ++i) {
    auto start = std::chrono::steady_clock::now();
    run();
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    best = std::min(best, d.count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t count = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 50000;
  int repetitions = argc > 2 ? std::atoi(argv[2]) : 3;
  std::vector<CorpusItem> items = corpus(count);
  AnalyzeOptions options;
  options.surface = true;
  options.internal = true;

  std::vector<ItemResult> serial;
  std::vector<ItemResult> parallel;
  double t_serial = best_of(repetitions, [&] {
    serial = analyze_items_serial(items, options);
  });
  double t_parallel = best_of(repetitions, [&] {
    parallel = analyze_items(items, options);
  });

#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  std::cout << std::fixed << std::setprecision(3) << "items " << count
            << ", threads " << threads << '\n'
            << "serial   " << t_serial << " s\n"
            << "parallel " << t_parallel << " s\n"
            << "speedup  " << t_serial / t_parallel << "x\n";
  if (serial != parallel) {
    std::cerr << "serial and parallel results differ\n";
    return 1;
  }
  return 0;
}
