#include "rootclust/solver.hpp"

#include <chrono>
#include <memory>
#include <set>

namespace rootclust {

namespace {

using Clock = std::chrono::steady_clock;

struct QueueEntry {
  Dyadic key;
  Dyadic xmin;
  Dyadic ymin;
  long seq = 0;
  std::shared_ptr<Component> comp;
};

struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (auto c = a.key <=> b.key; c != 0) return c > 0;
    if (auto c = a.xmin <=> b.xmin; c != 0) return c < 0;
    if (auto c = a.ymin <=> b.ymin; c != 0) return c < 0;
    return a.seq < b.seq;
  }
};

// Components ordered widest first; iteration visits every queued component.
class WorkQueue {
 public:
  void push(Component c, const Dyadic& key) {
    QueueEntry e{key, c.xmin(), c.ymin(), seq_++, std::make_shared<Component>(std::move(c))};
    set_.insert(std::move(e));
  }
  bool empty() const { return set_.empty(); }
  std::shared_ptr<Component> pop() {
    auto it = set_.begin();
    auto c = it->comp;
    set_.erase(it);
    return c;
  }
  std::vector<const Component*> members() const {
    std::vector<const Component*> out;
    out.reserve(set_.size());
    for (const auto& e : set_) out.push_back(e.comp.get());
    return out;
  }

 private:
  std::set<QueueEntry, QueueOrder> set_;
  long seq_ = 0;
};

// Subdivision level of a box of width w below a region of width w0.
long level_of(const Dyadic& w, const Dyadic& w0) { return w0.exponent() - w.exponent(); }

void check_config(const PolynomialOracle& p, const SolverConfig& cfg) {
  if (cfg.roi.width.sign() <= 0) throw std::invalid_argument("region of interest must have positive width");
  if (cfg.eps_exp < 1) throw std::invalid_argument("epsilon exponent must be at least 1");
  if (cfg.max_depth < 1) throw std::invalid_argument("max depth must be positive");
  if (p.degree() < 1) throw std::invalid_argument("polynomial must have degree at least 1");
}

std::string algo_name(const SolverConfig& cfg) {
  if (cfg.real_symmetry) return cfg.mode == CountingMode::pstar_filtered ? "real-ps" : "real";
  return cfg.mode == CountingMode::pstar_filtered ? "ps" : "t-star";
}

Cluster make_cluster(const Component& c, long m) { return Cluster{c.disc(), m, c.component_box()}; }

}  // namespace

long ClusterReport::total_multiplicity() const {
  long s = 0;
  for (const auto& c : clusters) s += c.multiplicity;
  return s;
}

std::vector<Component> quadrisect(const Component& c, const PolynomialOracle& p, const SolverConfig& cfg,
                                  SolverStats* stats) {
  const long level = level_of(c.box_width(), cfg.roi.width) + 1;
  if (level > cfg.max_depth) throw DepthCapExceeded(cfg.max_depth);
  std::vector<Box> survivors;
  for (const Box& b : c.boxes()) {
    for (const Box& child : box_children(b)) {
      if (cfg.real_symmetry && imaginary_sign(child) == ImagSign::negative) continue;
      if (stats != nullptr) ++stats->tree_size;
      if (c0_test(p, containing_disc(child), cfg.mode, stats != nullptr ? &stats->counts : nullptr) == -1) {
        survivors.push_back(child);
      }
    }
  }
  if (stats != nullptr && !survivors.empty()) stats->depth = std::max(stats->depth, level);
  return group_components(std::move(survivors), cfg.roi);
}

ClusterReport solve_lcp(const PolynomialOracle& p, const SolverConfig& cfg, bool record_widths) {
  check_config(p, cfg);
  const auto start = Clock::now();
  ClusterReport report;
  report.degree = p.degree();
  report.roi = cfg.roi;
  report.eps_exp = cfg.eps_exp;
  report.algo = algo_name(cfg);
  SolverStats& st = report.stats;
  st.tree_size = 1;
  const Dyadic eps = cfg.epsilon();

  WorkQueue queue;
  {
    Component root({cfg.roi}, cfg.roi);
    Dyadic key = root.width();
    queue.push(std::move(root), key);
  }
  while (!queue.empty()) {
    std::shared_ptr<Component> c = queue.pop();
    if (record_widths) st.popped_widths.push_back(c->width());
    if (c->width() <= eps && is_compact(*c) && is_separated(*c, queue.members(), cfg.roi)) {
      long k = cstar_test(p, c->disc(), cfg.mode, &st.counts);
      if (k > 0) {
        report.clusters.push_back(make_cluster(*c, k));
        continue;
      }
    }
    for (Component& child : quadrisect(*c, p, cfg, &st)) {
      Dyadic key = child.width();
      queue.push(std::move(child), key);
    }
  }
  st.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

ClusterReport solve_lcp_real(const PolynomialOracle& p, const SolverConfig& cfg, bool record_widths) {
  check_config(p, cfg);
  if (!p.is_real()) throw std::invalid_argument("real-symmetric solving requires real coefficients");
  if (!cfg.roi.center.im.is_zero()) {
    throw std::invalid_argument("real-symmetric solving requires a region symmetric about the real axis");
  }
  SolverConfig rcfg = cfg;
  rcfg.real_symmetry = true;
  const auto start = Clock::now();
  ClusterReport report;
  report.degree = p.degree();
  report.roi = cfg.roi;
  report.eps_exp = cfg.eps_exp;
  report.algo = algo_name(rcfg);
  SolverStats& st = report.stats;
  st.tree_size = 1;
  const Dyadic eps = cfg.epsilon();

  // Real-intersecting components are keyed by their conjugate closure, the
  // shape they take when popped, so popped widths never increase.
  auto key_of = [](const Component& c) {
    return c.imaginary_sign() == ImagSign::positive ? c.width() : conjugate_closure(c).width();
  };

  WorkQueue queue;
  {
    Component root({cfg.roi}, cfg.roi);
    Dyadic key = root.width();
    queue.push(std::move(root), key);
  }
  while (!queue.empty()) {
    std::shared_ptr<Component> popped = queue.pop();
    Component c = *popped;
    const bool positive = c.imaginary_sign() == ImagSign::positive;
    if (!positive) c = conjugate_closure(c);
    if (record_widths) st.popped_widths.push_back(c.width());
    if (c.width() <= eps && is_compact(c)) {
      bool separated = is_separated(c, queue.members(), cfg.roi);
      if (separated && positive) {
        const Component mirror = c.conj();
        separated = !mirror.intersects(c.disc().dilated(Dyadic(4)));
      }
      if (separated) {
        long m = cstar_test(p, c.disc(), cfg.mode, &st.counts);
        if (m > 0) {
          report.clusters.push_back(make_cluster(c, m));
          if (positive) report.clusters.push_back(make_cluster(c.conj(), m));
          continue;
        }
      }
    }
    for (Component& child : quadrisect(c, p, rcfg, &st)) {
      Dyadic key = key_of(child);
      queue.push(std::move(child), key);
    }
  }
  st.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

ClusterReport solve(const PolynomialOracle& p, const SolverConfig& cfg, bool record_widths) {
  return cfg.real_symmetry ? solve_lcp_real(p, cfg, record_widths) : solve_lcp(p, cfg, record_widths);
}

VerifyResult verify_report(const PolynomialOracle& p, const ClusterReport& report) {
  VerifyResult out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.diagnostics.push_back(std::move(msg));
  };
  const Dyadic eps = Dyadic(1).mul_2exp(-report.eps_exp);
  for (std::size_t i = 0; i < report.clusters.size(); ++i) {
    const Cluster& c = report.clusters[i];
    const std::string tag = "cluster " + std::to_string(i) + ": ";
    if (c.multiplicity < 1) fail(tag + "multiplicity below 1");
    if (c.disc.radius > eps) fail(tag + "radius exceeds epsilon");
    long inner = tstar(p, c.disc);
    if (inner != c.multiplicity) {
      fail(tag + "disc count " + std::to_string(inner) + " differs from multiplicity " +
           std::to_string(c.multiplicity));
    }
    long outer = tstar(p, c.disc.dilated(Dyadic(3)));
    if (outer != c.multiplicity) {
      fail(tag + "3x disc count " + std::to_string(outer) + " differs from multiplicity " +
           std::to_string(c.multiplicity));
    }
    for (std::size_t j = i + 1; j < report.clusters.size(); ++j) {
      if (discs_intersect(c.disc, report.clusters[j].disc)) {
        fail(tag + "intersects cluster " + std::to_string(j));
      }
    }
  }
  long total = tstar(p, containing_disc(report.roi));
  if (total != report.total_multiplicity()) {
    fail("region count " + std::to_string(total) + " differs from total multiplicity " +
         std::to_string(report.total_multiplicity()));
  }
  return out;
}

AnnulusCheck check_annulus(const PolynomialOracle& p, const Box& roi, long max_level) {
  AnnulusCheck out;
  // 2*roi as a 4x4 grid of half-width boxes; the 12 outer ones cover the annulus.
  std::vector<std::pair<Box, long>> work;
  const Dyadic h = roi.width.mul_2exp(-1);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i >= 1 && i <= 2 && j >= 1 && j <= 2) continue;
      Dyadic cx = roi.center.re + h * Dyadic(2 * i - 3).mul_2exp(-1);
      Dyadic cy = roi.center.im + h * Dyadic(2 * j - 3).mul_2exp(-1);
      work.push_back({Box{{cx, cy}, h}, 0});
    }
  }
  while (!work.empty()) {
    auto [b, level] = work.back();
    work.pop_back();
    if (tstar_exclusion(p, containing_disc(b)) == 0) continue;
    if (level >= max_level) {
      out.clean = false;
      out.unresolved.push_back(b);
      continue;
    }
    for (const Box& child : box_children(b)) work.push_back({child, level + 1});
  }
  return out;
}

}  // namespace rootclust
