#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "rootclust/solver.hpp"

namespace rootclust {

struct BenchCase {
  std::string label;
  std::string family;
  std::map<std::string, long> params;
  Box roi;
  long eps_exp = 53;
};

struct BenchRow {
  std::string label;
  int degree = 0;
  std::size_t clusters = 0;
  long total_multiplicity = 0;
  /// Per configuration t1 = t-star, t2 = real, t3 = real-ps (the real
  /// variants fall back to their plain counterparts on non-real inputs).
  struct Run {
    std::string algo;
    long depth = 0;
    long tree_size = 0;
    double seconds = 0;
    long tstar_calls = 0;
    long pstar_calls = 0;
    long pstar_approx_calls = 0;
  };
  std::vector<Run> runs;
  double t1_over_t2 = 0;
  double t2_over_t3 = 0;
  double t1_over_t3 = 0;
  /// True when all configurations returned the same multiplicity multiset.
  bool consistent = true;
};

/// Names: "paper-table3", "paper-table1", "quick".
std::vector<BenchCase> suite_cases(const std::string& suite);

/// Solves every case of the suite with the three configurations.
std::vector<BenchRow> benchmark_run(const std::string& suite, std::ostream* progress = nullptr);

/// One CSV line per case with counts, timings and speedup ratios.
std::string bench_csv(const std::vector<BenchRow>& rows);

/// SolverConfig for an algorithm name ("t-star", "ps", "real", "real-ps").
SolverConfig config_for(const std::string& algo, const Box& roi, long eps_exp);

}  // namespace rootclust
