#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "benchmark_suite.hpp"
#include "report_io.hpp"
#include "rootclust/oracle_number.hpp"
#include "rootclust/solver.hpp"

namespace rootclust {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

long parse_long(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long x = 0;
  try {
    x = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) {
    throw std::invalid_argument("parameter '" + key + "' expects an integer, got '" + v + "'");
  }
  return x;
}

}  // namespace

std::pair<std::string, std::map<std::string, long>> parse_family_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  if (name.empty()) throw std::invalid_argument("missing family name in '" + spec + "'");
  std::map<std::string, long> params;
  if (colon != std::string::npos) {
    for (const auto& kv : split(spec.substr(colon + 1), ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument("malformed family parameter '" + kv + "' (expected key=value)");
      }
      params[kv.substr(0, eq)] = parse_long(kv.substr(0, eq), kv.substr(eq + 1));
    }
  }
  return {name, params};
}

Box parse_roi(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw std::invalid_argument("region must be cx,cy,w, got '" + text + "'");
  Box b{{Dyadic::parse(parts[0]), Dyadic::parse(parts[1])}, Dyadic::parse(parts[2])};
  if (b.width.sign() <= 0) throw std::invalid_argument("region width must be positive");
  return b;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified root clustering of polynomials given by evaluation oracles"};
  app.name("rootclust");
  std::string family;
  std::string poly_path;
  std::string roi_text = "0,0,1000";
  long eps = 53;
  std::string algo;
  std::string format = "json";
  std::string out_path;
  bool check_annulus_flag = false;
  bool stats = false;
  bool verify = false;
  long max_depth = 2000;
  std::string bench;

  auto* fam_opt = app.add_option("--family", family, "Family polynomial, e.g. mignotte:a=14,d=64");
  auto* poly_opt = app.add_option("--poly", poly_path, "Coefficient file");
  fam_opt->excludes(poly_opt);
  app.add_option("--roi", roi_text, "Region of interest cx,cy,w (square)")->capture_default_str();
  app.add_option("--eps", eps, "Clusters have radius at most 2^-K")->capture_default_str()->check(
      CLI::Range(0L, 1L << 20));
  app.add_option("--algo", algo, "t-star, ps, real or real-ps (default: real-ps for real input, else ps)")
      ->check(CLI::IsMember({"t-star", "ps", "real", "real-ps"}));
  app.add_option("--out", format, "Output format")->check(CLI::IsMember({"json", "csv", "txt", "svg"}))
      ->capture_default_str();
  app.add_option("--out-path", out_path, "Write the report to a file instead of stdout");
  app.add_flag("--check-annulus", check_annulus_flag, "Certify 2*roi minus roi root-free, warn otherwise");
  app.add_flag("--stats", stats, "Include extended counters");
  app.add_flag("--verify", verify, "Re-check the report independently");
  app.add_option("--max-depth", max_depth, "Subdivision depth cap")->capture_default_str()->check(
      CLI::PositiveNumber);
  app.add_option("--bench", bench, "Run a benchmark suite: paper-table3, paper-table1, quick")
      ->check(CLI::IsMember({"paper-table3", "paper-table1", "quick"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  auto emit = [&](const std::string& text) -> bool {
    if (out_path.empty()) {
      out << text;
      return true;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return false;
    }
    f << text;
    return static_cast<bool>(f);
  };

  if (!bench.empty()) {
    try {
      const auto rows = benchmark_run(bench, &err);
      return emit(bench_csv(rows)) ? kExitOk : kExitSolver;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitSolver;
    }
  }

  if (family.empty() && poly_path.empty()) {
    err << "error: one of --family or --poly is required\n" << app.help();
    return kExitUsage;
  }

  PolyPtr p;
  Box roi;
  try {
    roi = parse_roi(roi_text);
    if (!family.empty()) {
      const auto [name, params] = parse_family_spec(family);
      p = make_family(name, params);
    } else {
      p = parse_poly_file(poly_path);
    }
  } catch (const FormatError& e) {
    err << "error: " << poly_path << ":" << e.line() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (algo.empty()) algo = p->is_real() ? "real-ps" : "ps";
  SolverConfig cfg = config_for(algo, roi, eps);
  cfg.max_depth = max_depth;
  if (cfg.real_symmetry && !p->is_real()) {
    err << "error: algorithm '" << algo << "' needs a polynomial with real coefficients\n";
    return kExitUsage;
  }
  if (cfg.real_symmetry && !roi.center.im.is_zero()) {
    err << "error: algorithm '" << algo << "' needs a region centered on the real axis\n";
    return kExitUsage;
  }

  try {
    if (check_annulus_flag) {
      const AnnulusCheck a = check_annulus(*p, roi);
      if (!a.clean) {
        err << "warning: " << a.unresolved.size()
            << " boxes of 2*roi minus roi could not be certified root-free; clusters near the boundary may "
               "be missed\n";
      }
    }
    const ClusterReport report = solve(*p, cfg);
    if (verify) {
      const VerifyResult v = verify_report(*p, report);
      for (const auto& d : v.diagnostics) err << "verify: " << d << "\n";
      if (!v.ok) return kExitSolver;
    }
    EmitOptions opt;
    opt.detailed_stats = stats;
    return emit(emit_report(report, parse_format(format), opt)) ? kExitOk : kExitSolver;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}

}  // namespace rootclust
