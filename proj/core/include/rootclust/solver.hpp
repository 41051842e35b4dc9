#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rootclust/counting.hpp"
#include "rootclust/geometry.hpp"
#include "rootclust/poly_oracle.hpp"

namespace rootclust {

/// Raised when a box deeper than SolverConfig::max_depth would be created.
class DepthCapExceeded : public std::runtime_error {
 public:
  explicit DepthCapExceeded(long depth)
      : std::runtime_error("subdivision depth cap " + std::to_string(depth) + " exceeded") {}
};

struct SolverConfig {
  Box roi;
  /// Clusters are reported once their component box has width <= 2^-eps_exp.
  long eps_exp = 53;
  CountingMode mode = CountingMode::pstar_filtered;
  bool real_symmetry = false;
  long max_depth = 2000;

  Dyadic epsilon() const { return Dyadic(1).mul_2exp(-eps_exp); }
};

struct SolverStats {
  /// Deepest subdivision level reached (the region of interest is level 0).
  long depth = 0;
  /// Number of boxes in the subdivision tree: the root plus every tested child.
  long tree_size = 0;
  CountingStats counts;
  double wall_ms = 0;
  /// Widths of the popped components, when recording is enabled.
  std::vector<Dyadic> popped_widths;
};

struct Cluster {
  Disc disc;
  long multiplicity = 0;
  Box component_box;
};

struct ClusterReport {
  int degree = 0;
  Box roi;
  long eps_exp = 0;
  std::string algo;
  std::vector<Cluster> clusters;
  SolverStats stats;

  long total_multiplicity() const;
};

/// Children of every box of c whose containing disc may hold a root (C0 = -1),
/// grouped into components. With real_symmetry, imaginary-negative children
/// are dropped before testing.
std::vector<Component> quadrisect(const Component& c, const PolynomialOracle& p, const SolverConfig& cfg,
                                  SolverStats* stats = nullptr);

/// Subdivision root clustering over the whole region of interest. Assumes p
/// has no root in 2*roi minus roi.
ClusterReport solve_lcp(const PolynomialOracle& p, const SolverConfig& cfg, bool record_widths = false);

/// Variant for real polynomials on a region symmetric about the real axis:
/// only the upper half is subdivided and conjugate clusters are mirrored.
ClusterReport solve_lcp_real(const PolynomialOracle& p, const SolverConfig& cfg,
                             bool record_widths = false);

/// Runs solve_lcp or solve_lcp_real according to cfg.real_symmetry.
ClusterReport solve(const PolynomialOracle& p, const SolverConfig& cfg, bool record_widths = false);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Independent check of a report: every disc has radius <= epsilon and
/// T*(disc) = T*(3 disc) = multiplicity, discs are pairwise disjoint, and
/// the multiplicities add up to T* of the containing disc of the region.
VerifyResult verify_report(const PolynomialOracle& p, const ClusterReport& report);

struct AnnulusCheck {
  bool clean = true;
  /// Boxes of 2*roi minus roi that could not be certified root-free.
  std::vector<Box> unresolved;
};

/// Covers 2*roi minus roi with boxes and certifies each root-free with T*,
/// subdividing up to `max_level` times where the test is inconclusive.
AnnulusCheck check_annulus(const PolynomialOracle& p, const Box& roi, long max_level = 6);

}  // namespace rootclust
