#include "rootclust/interval.hpp"

#include <cmath>

namespace rootclust {

namespace {

struct Scratch {
  Float f[4];
  ComplexInterval prod;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

Float& tmp(int i, prec_t prec) {
  Float& f = scratch().f[i];
  f.reset_prec(prec);
  return f;
}

// One ulp of a freshly rounded midpoint; zero when the rounding was exact.
Mag rounding_error(int ternary, const Float& x) {
  if (ternary == 0 || x.is_zero()) return Mag();
  return Mag::pow2(x.exponent() - x.prec());
}

void mag_to_float(Float& out, const Mag& m) {
  out.reset_prec(64);
  mpfr_set_d(out.get(), m.mantissa(), MPFR_RNDN);
  mpfr_mul_2si(out.get(), out.get(), m.exponent(), MPFR_RNDN);
}

Mag sqrt_lower(const Mag& m) {
  if (m.is_zero()) return Mag();
  double mant = m.mantissa();
  std::int64_t e = m.exponent();
  if (e % 2 != 0) {
    mant *= 2.0;
    e -= 1;
  }
  return Mag::from_parts(std::sqrt(mant) * (1.0 - 0x1p-50), e / 2);
}

}  // namespace

Mag mag_of(const Dyadic& d) {
  if (d.is_zero()) return Mag();
  long e = 0;
  double m = mpz_get_d_2exp(&e, d.mantissa().get_mpz_t());
  return Mag::from_parts(std::nextafter(std::fabs(m), 2.0), e + d.exponent());
}

Mag hypot_upper(const Mag& a, const Mag& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Mag big = max(a, b);
  double r = div(min(a, b), big).to_double();
  if (!(r <= 1.0)) r = 1.0;
  return big * Mag::from_double(std::sqrt(1.0 + r * r) * (1.0 + 0x1p-50));
}

Mag hypot_lower(const Mag& a, const Mag& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Mag big = max(a, b);
  double r = div_lower(min(a, b), big).to_double_lower();
  return mul_lower(big, Mag::from_double_lower(std::sqrt(1.0 + r * r) * (1.0 - 0x1p-50)));
}

Mag mag_of(const Float& x) {
  if (x.is_zero()) return Mag();
  long e = 0;
  double d = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDA);
  return Mag::from_parts(std::fabs(d), e);
}

Mag mag_lower_of(const Float& x) {
  if (x.is_zero()) return Mag();
  long e = 0;
  double d = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDZ);
  return Mag::from_parts(std::fabs(d), e);
}

mpq_class to_rational(const Mag& m) {
  if (m.is_zero()) return mpq_class(0);
  return Dyadic::from_double(m.mantissa()).mul_2exp(m.exponent()).to_rational();
}

// ---------------------------------------------------------------- real

RealInterval::RealInterval(const Dyadic& v, prec_t prec) : mid_(prec) { set(*this, v, prec); }

RealInterval::RealInterval(const mpq_class& v, prec_t prec) : mid_(prec) {
  int t = mpfr_set_q(mid_.get(), v.get_mpq_t(), MPFR_RNDN);
  rad_ = rounding_error(t, mid_);
}

RealInterval RealInterval::from_double(double v, prec_t prec) {
  RealInterval r(prec);
  int t = mpfr_set_d(r.mid_.get(), v, MPFR_RNDN);
  r.rad_ = rounding_error(t, r.mid_);
  return r;
}

RealInterval RealInterval::from_endpoints(const Dyadic& lo, const Dyadic& hi, prec_t prec) {
  Dyadic mid = (lo + hi).mul_2exp(-1);
  RealInterval r(mid, prec);
  r.rad_ += mag_of((hi - lo).mul_2exp(-1));
  return r;
}

Float RealInterval::lo(prec_t prec) const {
  Float r(prec);
  Float rad;
  mag_to_float(rad, rad_);
  mpfr_sub(r.get(), mid_.get(), rad.get(), MPFR_RNDD);
  return r;
}

Float RealInterval::hi(prec_t prec) const {
  Float r(prec);
  Float rad;
  mag_to_float(rad, rad_);
  mpfr_add(r.get(), mid_.get(), rad.get(), MPFR_RNDU);
  return r;
}

Mag RealInterval::mag() const { return mag_of(mid_) + rad_; }

Mag RealInterval::mig() const { return sub_lower(mag_lower_of(mid_), rad_); }

bool RealInterval::contains_zero() const { return mig().is_zero(); }

mpq_class RealInterval::lo_exact() const {
  return Dyadic::from_float(mid_).to_rational() - to_rational(rad_);
}

mpq_class RealInterval::hi_exact() const {
  return Dyadic::from_float(mid_).to_rational() + to_rational(rad_);
}

bool RealInterval::contains(const mpq_class& v) const {
  return lo_exact() <= v && v <= hi_exact();
}

bool RealInterval::contains(const RealInterval& o) const {
  return lo_exact() <= o.lo_exact() && o.hi_exact() <= hi_exact();
}

bool RealInterval::overlaps(const RealInterval& o) const {
  return lo_exact() <= o.hi_exact() && o.lo_exact() <= hi_exact();
}

void set(RealInterval& out, const Dyadic& v, prec_t prec) {
  out.mid().reset_prec(prec);
  bool exact = v.to_float(out.mid(), prec);
  out.rad() = exact ? Mag() : rounding_error(1, out.mid());
}

void add(RealInterval& out, const RealInterval& a, const RealInterval& b, prec_t prec) {
  Float& t = tmp(0, prec);
  int tern = mpfr_add(t.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Mag r = a.rad() + b.rad() + rounding_error(tern, t);
  out.mid().swap(t);
  out.rad() = r;
}

void sub(RealInterval& out, const RealInterval& a, const RealInterval& b, prec_t prec) {
  Float& t = tmp(0, prec);
  int tern = mpfr_sub(t.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Mag r = a.rad() + b.rad() + rounding_error(tern, t);
  out.mid().swap(t);
  out.rad() = r;
}

void mul(RealInterval& out, const RealInterval& a, const RealInterval& b, prec_t prec) {
  Float& t = tmp(0, prec);
  int tern = mpfr_mul(t.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Mag r = rounding_error(tern, t);
  if (!a.rad().is_zero() || !b.rad().is_zero()) {
    r += mag_of(a.mid()) * b.rad() + mag_of(b.mid()) * a.rad() + a.rad() * b.rad();
  }
  out.mid().swap(t);
  out.rad() = r;
}

void div(RealInterval& out, const RealInterval& a, const RealInterval& b, prec_t prec) {
  Mag denom = b.mig();
  if (denom.is_zero()) throw DivisionByIntervalContainingZero();
  Float& t = tmp(0, prec);
  int tern = mpfr_div(t.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Mag err = rounding_error(tern, t);
  Mag r = err;
  if (!a.rad().is_zero() || !b.rad().is_zero()) {
    r += div(a.rad() + (mag_of(t) + err) * b.rad(), denom);
  }
  out.mid().swap(t);
  out.rad() = r;
}

void sqrt(RealInterval& out, const RealInterval& a, prec_t prec) {
  if (a.mid().sign() <= 0 || a.contains_zero()) {
    throw std::domain_error("square root of an interval that is not positive");
  }
  Float& t = tmp(0, prec);
  int tern = mpfr_sqrt(t.get(), a.mid().get(), MPFR_RNDN);
  Mag r = rounding_error(tern, t);
  if (!a.rad().is_zero()) r += div(a.rad(), sqrt_lower(mag_lower_of(a.mid())));
  out.mid().swap(t);
  out.rad() = r;
}

void neg(RealInterval& out, const RealInterval& a) {
  if (&out != &a) {
    out.mid().reset_prec(a.prec());
    out.rad() = a.rad();
  }
  mpfr_neg(out.mid().get(), a.mid().get(), MPFR_RNDN);
}

void mul_2exp(RealInterval& out, const RealInterval& a, long k) {
  if (&out != &a) {
    out.mid().reset_prec(a.prec());
  }
  mpfr_mul_2si(out.mid().get(), a.mid().get(), k, MPFR_RNDN);
  out.rad() = a.rad().mul_2exp(k);
}

void add_error(RealInterval& x, const Mag& r) { x.rad() += r; }

// ---------------------------------------------------------------- complex

ComplexInterval ComplexInterval::from_doubles(double re, double im, prec_t prec) {
  return ComplexInterval(RealInterval::from_double(re, prec), RealInterval::from_double(im, prec));
}

Mag ComplexInterval::mag() const { return hypot_upper(re_.mag(), im_.mag()); }

Mag ComplexInterval::abs_lower() const { return hypot_lower(re_.mig(), im_.mig()); }

Mag ComplexInterval::mig() const { return max(re_.mig(), im_.mig()); }

void set(ComplexInterval& out, const DyadicComplex& v, prec_t prec) {
  set(out.re(), v.re, prec);
  set(out.im(), v.im, prec);
}

void add(ComplexInterval& out, const ComplexInterval& a, const ComplexInterval& b, prec_t prec) {
  add(out.re(), a.re(), b.re(), prec);
  add(out.im(), a.im(), b.im(), prec);
}

void sub(ComplexInterval& out, const ComplexInterval& a, const ComplexInterval& b, prec_t prec) {
  sub(out.re(), a.re(), b.re(), prec);
  sub(out.im(), a.im(), b.im(), prec);
}

void mul(ComplexInterval& out, const ComplexInterval& a, const ComplexInterval& b, prec_t prec) {
  const RealInterval& ar = a.re();
  const RealInterval& ai = a.im();
  const RealInterval& br = b.re();
  const RealInterval& bi = b.im();
  Float& t1 = tmp(0, prec);
  Float& t2 = tmp(1, prec);
  Float& t3 = tmp(2, prec);
  Float& t4 = tmp(3, prec);
  int e1 = mpfr_mul(t1.get(), ar.mid().get(), br.mid().get(), MPFR_RNDN);
  int e2 = mpfr_mul(t2.get(), ai.mid().get(), bi.mid().get(), MPFR_RNDN);
  int e3 = mpfr_mul(t3.get(), ar.mid().get(), bi.mid().get(), MPFR_RNDN);
  int e4 = mpfr_mul(t4.get(), ai.mid().get(), br.mid().get(), MPFR_RNDN);
  Mag err_re = rounding_error(e1, t1) + rounding_error(e2, t2);
  Mag err_im = rounding_error(e3, t3) + rounding_error(e4, t4);
  int e5 = mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  int e6 = mpfr_add(t3.get(), t3.get(), t4.get(), MPFR_RNDN);
  err_re += rounding_error(e5, t1);
  err_im += rounding_error(e6, t3);

  const Mag& rar = ar.rad();
  const Mag& rai = ai.rad();
  const Mag& rbr = br.rad();
  const Mag& rbi = bi.rad();
  if (!(rar.is_zero() && rai.is_zero() && rbr.is_zero() && rbi.is_zero())) {
    Mag mar = mag_of(ar.mid());
    Mag mai = mag_of(ai.mid());
    Mag mbr = mag_of(br.mid());
    Mag mbi = mag_of(bi.mid());
    err_re += mar * rbr + mbr * rar + rar * rbr + mai * rbi + mbi * rai + rai * rbi;
    err_im += mar * rbi + mbi * rar + rar * rbi + mai * rbr + mbr * rai + rai * rbr;
  }
  out.re().mid().swap(t1);
  out.im().mid().swap(t3);
  out.re().rad() = err_re;
  out.im().rad() = err_im;
}

void sqr(ComplexInterval& out, const ComplexInterval& a, prec_t prec) {
  const RealInterval& ar = a.re();
  const RealInterval& ai = a.im();
  Float& t1 = tmp(0, prec);
  Float& t2 = tmp(1, prec);
  Float& t3 = tmp(2, prec);
  int e1 = mpfr_sqr(t1.get(), ar.mid().get(), MPFR_RNDN);
  int e2 = mpfr_sqr(t2.get(), ai.mid().get(), MPFR_RNDN);
  int e3 = mpfr_mul(t3.get(), ar.mid().get(), ai.mid().get(), MPFR_RNDN);
  Mag err_re = rounding_error(e1, t1) + rounding_error(e2, t2);
  Mag err_im = rounding_error(e3, t3).mul_2exp(1);
  int e4 = mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  err_re += rounding_error(e4, t1);
  mpfr_mul_2ui(t3.get(), t3.get(), 1, MPFR_RNDN);
  const Mag& rr = ar.rad();
  const Mag& ri = ai.rad();
  if (!(rr.is_zero() && ri.is_zero())) {
    Mag mr = mag_of(ar.mid());
    Mag mi = mag_of(ai.mid());
    err_re += (mr * rr).mul_2exp(1) + rr * rr + (mi * ri).mul_2exp(1) + ri * ri;
    err_im += (mr * ri + mi * rr + rr * ri).mul_2exp(1);
  }
  out.re().mid().swap(t1);
  out.im().mid().swap(t3);
  out.re().rad() = err_re;
  out.im().rad() = err_im;
}

void mul(ComplexInterval& out, const ComplexInterval& a, const RealInterval& b, prec_t prec) {
  if (&b == &out.re() || &b == &out.im()) {
    RealInterval copy = b;
    mul(out.re(), a.re(), copy, prec);
    mul(out.im(), a.im(), copy, prec);
    return;
  }
  mul(out.re(), a.re(), b, prec);
  mul(out.im(), a.im(), b, prec);
}

void addmul(ComplexInterval& out, const ComplexInterval& a, const ComplexInterval& b, prec_t prec) {
  ComplexInterval& p = scratch().prod;
  mul(p, a, b, prec);
  add(out, out, p, prec);
}

void div(ComplexInterval& out, const ComplexInterval& a, const ComplexInterval& b, prec_t prec) {
  Mag delta = b.mig();
  if (delta.is_zero()) throw DivisionByIntervalContainingZero();
  prec_t wp = prec + 8;
  ComplexInterval am(RealInterval(a.re().prec()), RealInterval(a.im().prec()));
  am.re().mid() = a.re().mid();
  am.im().mid() = a.im().mid();
  ComplexInterval bc(RealInterval(b.re().prec()), RealInterval(b.im().prec()));
  bc.re().mid() = b.re().mid();
  mpfr_neg(bc.im().mid().get(), b.im().mid().get(), MPFR_RNDN);

  RealInterval den(wp), t(wp);
  mul(den, bc.re(), bc.re(), wp);
  mul(t, bc.im(), bc.im(), wp);
  add(den, den, t, wp);
  ComplexInterval q(wp);
  mul(q, am, bc, wp);
  div(q.re(), q.re(), den, prec);
  div(q.im(), q.im(), den, prec);

  if (!(a.rad_sum().is_zero() && b.rad_sum().is_zero())) {
    Mag extra = div(a.rad_sum() + q.mag() * b.rad_sum(), delta);
    q.re().rad() += extra;
    q.im().rad() += extra;
  }
  out.swap(q);
}

void neg(ComplexInterval& out, const ComplexInterval& a) {
  neg(out.re(), a.re());
  neg(out.im(), a.im());
}

void conj(ComplexInterval& out, const ComplexInterval& a) {
  if (&out != &a) out.re() = a.re();
  neg(out.im(), a.im());
}

void mul_2exp(ComplexInterval& out, const ComplexInterval& a, long k) {
  mul_2exp(out.re(), a.re(), k);
  mul_2exp(out.im(), a.im(), k);
}

void mul_i_pow(ComplexInterval& out, const ComplexInterval& a, int k) {
  k = ((k % 4) + 4) % 4;
  ComplexInterval r = a;
  switch (k) {
    case 1:  // i*(x+iy) = -y + ix
      r.re().swap(r.im());
      neg(r.re(), r.re());
      break;
    case 2:
      neg(r, r);
      break;
    case 3:  // -i*(x+iy) = y - ix
      r.re().swap(r.im());
      neg(r.im(), r.im());
      break;
    default:
      break;
  }
  out.swap(r);
}

void pow_ui(ComplexInterval& out, const ComplexInterval& a, unsigned long n, prec_t prec) {
  ComplexInterval base = a;
  ComplexInterval acc(prec);
  mpfr_set_ui(acc.re().mid().get(), 1, MPFR_RNDN);
  bool first = true;
  while (n > 0) {
    if (n & 1UL) {
      if (first) {
        acc = base;
        first = false;
      } else {
        mul(acc, acc, base, prec);
      }
    }
    n >>= 1;
    if (n > 0) sqr(base, base, prec);
  }
  out.swap(acc);
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  ComplexInterval r;
  add(r, a, b, std::max(a.prec(), b.prec()));
  return r;
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  ComplexInterval r;
  sub(r, a, b, std::max(a.prec(), b.prec()));
  return r;
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  ComplexInterval r;
  mul(r, a, b, std::max(a.prec(), b.prec()));
  return r;
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  ComplexInterval r;
  div(r, a, b, std::max(a.prec(), b.prec()));
  return r;
}

}  // namespace rootclust
