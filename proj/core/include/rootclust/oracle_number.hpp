#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rootclust/interval.hpp"

namespace rootclust {

/// Raised when an escalation loop hits its precision cap without meeting
/// the requested width.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Working precision used for a request of L output bits.
constexpr prec_t kGuardBits = 32;
/// Upper limit for any escalation loop on oracle numbers.
constexpr prec_t kMaxOraclePrec = prec_t{1} << 20;

/// True when the rectangle has width at most 2^-L.
bool width_at_most(const ComplexInterval& z, long L);

/// A complex number available as enclosures of any requested width. Backed
/// either by an exact dyadic value or by a procedure mapping a working
/// precision to an enclosure; refine() runs the doubling loop until the
/// enclosure is thin enough and memoizes the answer per L, so repeated
/// requests are bitwise identical. Copies share the memo; thread-safe.
class OracleNumber {
 public:
  using Procedure = std::function<ComplexInterval(prec_t)>;

  OracleNumber() : OracleNumber(DyadicComplex{}) {}
  explicit OracleNumber(DyadicComplex exact);
  explicit OracleNumber(Procedure proc);

  /// Enclosure of width <= 2^-L.
  ComplexInterval refine(long L) const;
  /// Enclosure at working precision `prec` without a width guarantee.
  ComplexInterval at_precision(prec_t prec) const;
  const std::optional<DyadicComplex>& exact() const { return exact_; }

 private:
  struct Memo {
    std::mutex mu;
    std::map<long, ComplexInterval> by_bits;
  };
  std::optional<DyadicComplex> exact_;
  Procedure proc_;
  std::shared_ptr<Memo> memo_;
};

/// Enclosure of width <= 2^-L containing the oracle's exact value.
ComplexInterval oracle_refine(const OracleNumber& o, long L);

/// Interval operation selector for interval_arith.
enum class ArithOp { add, sub, mul, div };
ComplexInterval interval_arith(ArithOp op, const ComplexInterval& x, const ComplexInterval& y);

/// Enclosure of exp(2*pi*i*g/q) of width <= 2^-L.
ComplexInterval root_of_unity(long g, long q, long L);

/// The q-th roots of unity omega^0..omega^(q-1) as balls at working
/// precision `prec` (exact where the angle is a multiple of pi/2). Cached.
std::shared_ptr<const std::vector<ComplexInterval>> roots_of_unity(long q, prec_t prec);

}  // namespace rootclust
