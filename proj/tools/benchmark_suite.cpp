#include "benchmark_suite.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace rootclust {

namespace {

Box square(long cx_num, long cy_num, long w, long scale_exp = 0) {
  return Box{{Dyadic(cx_num).mul_2exp(scale_exp), Dyadic(cy_num).mul_2exp(scale_exp)},
             Dyadic(w).mul_2exp(scale_exp)};
}

BenchCase make_case(std::string label, std::string family, std::map<std::string, long> params, Box roi) {
  return BenchCase{std::move(label), std::move(family), std::move(params), std::move(roi), 53};
}

std::vector<long> multiset(const ClusterReport& r) {
  std::vector<long> m;
  for (const auto& c : r.clusters) m.push_back(c.multiplicity);
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

SolverConfig config_for(const std::string& algo, const Box& roi, long eps_exp) {
  SolverConfig cfg;
  cfg.roi = roi;
  cfg.eps_exp = eps_exp;
  if (algo == "t-star") {
    cfg.mode = CountingMode::tstar_only;
  } else if (algo == "ps") {
    cfg.mode = CountingMode::pstar_filtered;
  } else if (algo == "real") {
    cfg.mode = CountingMode::tstar_only;
    cfg.real_symmetry = true;
  } else if (algo == "real-ps") {
    cfg.mode = CountingMode::pstar_filtered;
    cfg.real_symmetry = true;
  } else {
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
  }
  return cfg;
}

std::vector<BenchCase> suite_cases(const std::string& suite) {
  const Box big = square(0, 0, 1000);
  if (suite == "paper-table3") {
    return {make_case("Ber128", "bernoulli", {{"d", 128}}, big),
            make_case("Ber256", "bernoulli", {{"d", 256}}, big),
            make_case("Mig128", "mignotte", {{"a", 14}, {"d", 128}}, big),
            make_case("Mig256", "mignotte", {{"a", 14}, {"d", 256}}, big),
            make_case("Man7", "mandelbrot", {{"k", 7}}, big),
            make_case("Man8", "mandelbrot", {{"k", 8}}, big),
            make_case("Run8", "runnels", {{"k", 8}}, big),
            make_case("Run9", "runnels", {{"k", 9}}, big)};
  }
  if (suite == "paper-table1") {
    // Local regions around the hard parts: the Mignotte cluster near 0 and
    // the real-axis cusp of the Mandelbrot set.
    const Box mig_local = square(0, 0, 1, -10);
    const Box man_local = square(-28, 0, 1, -4);
    return {make_case("Mig64-local", "mignotte", {{"a", 14}, {"d", 64}}, mig_local),
            make_case("Mig128-local", "mignotte", {{"a", 14}, {"d", 128}}, mig_local),
            make_case("Mig256-local", "mignotte", {{"a", 14}, {"d", 256}}, mig_local),
            make_case("Man6-local", "mandelbrot", {{"k", 6}}, man_local),
            make_case("Man7-local", "mandelbrot", {{"k", 7}}, man_local),
            make_case("Man8-local", "mandelbrot", {{"k", 8}}, man_local)};
  }
  if (suite == "quick") {
    return {make_case("Ber32", "bernoulli", {{"d", 32}}, big),
            make_case("Mig32", "mignotte", {{"a", 14}, {"d", 32}}, square(0, 0, 4)),
            make_case("Man5", "mandelbrot", {{"k", 5}}, big),
            make_case("Run6", "runnels", {{"k", 6}}, big)};
  }
  throw std::invalid_argument("unknown benchmark suite '" + suite + "'");
}

std::vector<BenchRow> benchmark_run(const std::string& suite, std::ostream* progress) {
  std::vector<BenchRow> rows;
  for (const auto& bc : suite_cases(suite)) {
    const PolyPtr p = make_family(bc.family, bc.params);
    BenchRow row;
    row.label = bc.label;
    row.degree = p->degree();
    std::vector<long> reference;
    for (const char* algo : {"t-star", "real", "real-ps"}) {
      std::string name = algo;
      if (!p->is_real() && name == "real") name = "t-star";
      if (!p->is_real() && name == "real-ps") name = "ps";
      const ClusterReport r = solve(*p, config_for(name, bc.roi, bc.eps_exp));
      BenchRow::Run run;
      run.algo = name;
      run.depth = r.stats.depth;
      run.tree_size = r.stats.tree_size;
      run.seconds = r.stats.wall_ms / 1000.0;
      run.tstar_calls = r.stats.counts.tstar_calls;
      run.pstar_calls = r.stats.counts.pstar_calls;
      run.pstar_approx_calls = r.stats.counts.pstar_approx_calls;
      if (row.runs.empty()) {
        row.clusters = r.clusters.size();
        row.total_multiplicity = r.total_multiplicity();
        reference = multiset(r);
      } else if (multiset(r) != reference) {
        row.consistent = false;
      }
      row.runs.push_back(run);
      if (progress) {
        *progress << bc.label << " " << name << ": " << r.clusters.size() << " clusters, "
                  << r.total_multiplicity() << " roots, tree " << run.tree_size << ", " << std::fixed
                  << std::setprecision(2) << run.seconds << " s" << std::endl;
      }
    }
    auto ratio = [](double a, double b) { return b > 0 ? a / b : 0.0; };
    row.t1_over_t2 = ratio(row.runs[0].seconds, row.runs[1].seconds);
    row.t2_over_t3 = ratio(row.runs[1].seconds, row.runs[2].seconds);
    row.t1_over_t3 = ratio(row.runs[0].seconds, row.runs[2].seconds);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "label,degree,clusters,roots";
  for (const char* t : {"t1", "t2", "t3"}) {
    out << "," << t << "_algo," << t << "_depth," << t << "_tree," << t << "_seconds," << t << "_tstar," << t
        << "_pstar," << t << "_pstar_approx";
  }
  out << ",t1_over_t2,t2_over_t3,t1_over_t3,consistent\n";
  out << std::fixed;
  for (const auto& r : rows) {
    out << r.label << "," << r.degree << "," << r.clusters << "," << r.total_multiplicity;
    for (const auto& run : r.runs) {
      out << "," << run.algo << "," << run.depth << "," << run.tree_size << "," << std::setprecision(3)
          << run.seconds << "," << run.tstar_calls << "," << run.pstar_calls << "," << run.pstar_approx_calls;
    }
    out << std::setprecision(2) << "," << r.t1_over_t2 << "," << r.t2_over_t3 << "," << r.t1_over_t3 << ","
        << (r.consistent ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace rootclust
