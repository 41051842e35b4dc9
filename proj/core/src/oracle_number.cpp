#include "rootclust/oracle_number.hpp"

#include <tuple>

namespace rootclust {

bool width_at_most(const ComplexInterval& z, long L) { return z.width() <= Mag::pow2(-L); }

OracleNumber::OracleNumber(DyadicComplex exact)
    : exact_(std::move(exact)), memo_(std::make_shared<Memo>()) {}

OracleNumber::OracleNumber(Procedure proc)
    : proc_(std::move(proc)), memo_(std::make_shared<Memo>()) {}

ComplexInterval OracleNumber::at_precision(prec_t prec) const {
  if (exact_) return ComplexInterval(*exact_, prec);
  return proc_(prec);
}

ComplexInterval OracleNumber::refine(long L) const {
  if (L < 1) throw std::invalid_argument("oracle precision must be at least 1 bit");
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->by_bits.find(L);
    if (it != memo_->by_bits.end()) return it->second;
  }
  ComplexInterval result;
  for (prec_t wp = L + kGuardBits;; wp *= 2) {
    if (wp > kMaxOraclePrec) throw PrecisionExhausted("oracle number did not converge");
    result = at_precision(wp);
    if (width_at_most(result, L)) break;
  }
  std::lock_guard<std::mutex> lock(memo_->mu);
  return memo_->by_bits.emplace(L, std::move(result)).first->second;
}

ComplexInterval oracle_refine(const OracleNumber& o, long L) { return o.refine(L); }

ComplexInterval interval_arith(ArithOp op, const ComplexInterval& x, const ComplexInterval& y) {
  switch (op) {
    case ArithOp::add:
      return x + y;
    case ArithOp::sub:
      return x - y;
    case ArithOp::mul:
      return x * y;
    case ArithOp::div:
      return x / y;
  }
  throw std::invalid_argument("unknown interval operation");
}

namespace {

void root_of_unity_at(ComplexInterval& out, long g, long q, prec_t prec) {
  g %= q;
  if (g < 0) g += q;
  out = ComplexInterval(prec);
  if ((4 * g) % q == 0) {
    switch ((4 * g) / q) {
      case 0:
        mpfr_set_ui(out.re().mid().get(), 1, MPFR_RNDN);
        break;
      case 1:
        mpfr_set_ui(out.im().mid().get(), 1, MPFR_RNDN);
        break;
      case 2:
        mpfr_set_si(out.re().mid().get(), -1, MPFR_RNDN);
        break;
      default:
        mpfr_set_si(out.im().mid().get(), -1, MPFR_RNDN);
        break;
    }
    return;
  }
  // Angle 2*pi*g/q at extra precision; pi and the scaling each contribute a
  // relative error of 2^-wp, sin and cos are 1-Lipschitz.
  const prec_t wp = prec + 16;
  Float angle(wp), s(wp), c(wp);
  mpfr_const_pi(angle.get(), MPFR_RNDN);
  mpfr_mul_si(angle.get(), angle.get(), 2 * g, MPFR_RNDN);
  mpfr_div_si(angle.get(), angle.get(), q, MPFR_RNDN);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  Mag err = Mag::pow2(-wp + 6);
  int tr = mpfr_set(out.re().mid().get(), c.get(), MPFR_RNDN);
  int ti = mpfr_set(out.im().mid().get(), s.get(), MPFR_RNDN);
  out.re().rad() = err + (tr ? Mag::pow2(-prec) : Mag());
  out.im().rad() = err + (ti ? Mag::pow2(-prec) : Mag());
}

}  // namespace

ComplexInterval root_of_unity(long g, long q, long L) {
  if (q < 1) throw std::invalid_argument("root_of_unity requires q >= 1");
  ComplexInterval out;
  root_of_unity_at(out, g, q, L + kGuardBits);
  return out;
}

std::shared_ptr<const std::vector<ComplexInterval>> roots_of_unity(long q, prec_t prec) {
  static std::mutex mu;
  static std::map<std::pair<long, prec_t>, std::shared_ptr<const std::vector<ComplexInterval>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({q, prec});
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<std::vector<ComplexInterval>>(static_cast<std::size_t>(q));
  for (long g = 0; g < q; ++g) {
    root_of_unity_at((*table)[static_cast<std::size_t>(g)], g, q, prec);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(q, prec), std::move(table)).first->second;
}

}  // namespace rootclust
