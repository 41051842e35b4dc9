#pragma once

#include <chrono>
#include <map>
#include <stdexcept>
#include <vector>

#include "rootclust/geometry.hpp"
#include "rootclust/poly_oracle.hpp"

namespace rootclust {

/// Raised by s0_star when some p(c + r w^g) enclosure contains zero.
class ContourEvaluationContainsZero : public std::runtime_error {
 public:
  ContourEvaluationContainsZero() : std::runtime_error("contour evaluation contains zero") {}
};

enum class CountKind { certified, heuristic };

struct CountResult {
  /// Root count, or -1 (no conclusion), or -2 (a contour value may vanish).
  long value = -1;
  CountKind kind = CountKind::certified;
  /// Last precision used, in bits.
  long precision_used = 0;
  /// Number of (p, p') evaluations performed.
  long evaluations = 0;
};

/// Smallest q >= 1 with (1/rho)^q <= e/(d+e), by exact rational comparison.
long choose_q(long d, const mpq_class& rho, const mpq_class& e);

/// Encloses (r/q) sum_g w^g p'(c + r w^g) / p(c + r w^g), w = exp(2 pi i/q),
/// with every intermediate computed at `prec` bits.
ComplexInterval s0_star(const PolynomialOracle& p, const Disc& delta, long q, prec_t prec);

/// Certified count of the roots in delta, valid when delta has isolation
/// ratio at least rho. Doubles the precision from 53 bits until the power
/// sum is known to within 1/2; gives up with -1 beyond kPstarMaxPrec.
CountResult pstar_count(const PolynomialOracle& p, const Disc& delta, const mpq_class& rho);
constexpr long kPstarMaxPrec = 1L << 16;

/// Heuristic variant: -2 as soon as a contour value may vanish, inflation
/// by 1/2, -1 when no unique integer results or past kPstarApproxMaxPrec.
CountResult pstar_approx(const PolynomialOracle& p, const Disc& delta, const mpq_class& rho);
constexpr long kPstarApproxMaxPrec = 1L << 12;

/// Polynomial known as explicit interval coefficients (ascending degree)
/// plus a perturbation of l1 norm at most `mass`.
struct TruncatedPoly {
  std::vector<ComplexInterval> head;
  Mag mass;
};

/// One root-squaring step: returns g with g(z^2) = p(z) p(-z).
std::vector<ComplexInterval> graeffe_iterate(const std::vector<ComplexInterval>& p, prec_t prec);
/// Same on a truncated polynomial; the head keeps its length and the mass
/// absorbs every product involving the unknown tail.
TruncatedPoly graeffe_iterate(const TruncatedPoly& p, prec_t prec);

/// Graeffe steps used by the soft Pellet test for degree d.
long graeffe_rounds(long d);
/// Dominance factor of the soft Pellet comparison.
constexpr double kPelletFactor = 1.5;
constexpr long kTstarMaxPrec = 1L << 15;

/// Soft Pellet test: returns k >= 0 only if p has exactly k roots in delta
/// (counted with multiplicity); -1 when inconclusive.
long tstar(const PolynomialOracle& p, const Disc& delta);
/// Exclusion form: 0 only if delta holds no root, otherwise -1.
long tstar_exclusion(const PolynomialOracle& p, const Disc& delta);

/// Coefficients of p(c + r z) as a truncated polynomial at `prec` bits whose
/// mass is at most 2^-target_bits times its largest head coefficient (or
/// exact when the head reaches degree d).
TruncatedPoly shifted_coefficients(const PolynomialOracle& p, const Disc& delta, prec_t prec,
                                   long target_bits);

enum class CountingMode { tstar_only, pstar_filtered };

/// Counters and timers shared by the exclusion and counting tests.
struct CountingStats {
  long c0_calls = 0;
  long cstar_calls = 0;
  long pstar_calls = 0;
  long pstar_approx_calls = 0;
  long tstar_calls = 0;
  long approx_minus1 = 0;
  long approx_minus2 = 0;
  double c0_ms = 0;
  double cstar_ms = 0;
  double tstar_ms = 0;
  double pstar_ms = 0;
  double pstar_approx_ms = 0;
  /// Final precision reached by each certified P* call: bits -> count.
  std::map<long, long> pstar_precisions;
};

/// Exclusion test: 0 only if delta contains no root, -1 otherwise.
long c0_test(const PolynomialOracle& p, const Disc& delta, CountingMode mode,
             CountingStats* stats = nullptr);
/// Counting test for validated components: k >= 0 only if delta holds k roots.
/// In pstar_filtered mode it runs certified P* on 2*delta with ratio 2, which
/// is sound when #roots(delta) = #roots(4*delta).
long cstar_test(const PolynomialOracle& p, const Disc& delta, CountingMode mode,
                CountingStats* stats = nullptr);

}  // namespace rootclust
