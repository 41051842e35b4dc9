#pragma once

#include <gmpxx.h>

#include <stdexcept>

#include "rootclust/dyadic.hpp"
#include "rootclust/float.hpp"
#include "rootclust/mag.hpp"

namespace rootclust {

/// Raised when a quotient is requested by an interval that may contain 0.
class DivisionByIntervalContainingZero : public std::domain_error {
 public:
  DivisionByIntervalContainingZero() : std::domain_error("division by an interval containing zero") {}
};

/// Closed real interval [mid - rad, mid + rad]. The midpoint is an MPFR
/// number, the radius an upward-rounded magnitude; every operation widens
/// the radius by its own rounding error so results always enclose the
/// exact value.
class RealInterval {
 public:
  explicit RealInterval(prec_t prec = 64) : mid_(prec) {}
  RealInterval(const Dyadic& v, prec_t prec);
  RealInterval(const mpq_class& v, prec_t prec);

  static RealInterval from_double(double v, prec_t prec);
  /// The hull of [lo, hi].
  static RealInterval from_endpoints(const Dyadic& lo, const Dyadic& hi, prec_t prec);

  const Float& mid() const { return mid_; }
  Float& mid() { return mid_; }
  const Mag& rad() const { return rad_; }
  Mag& rad() { return rad_; }
  prec_t prec() const { return mid_.prec(); }

  /// Outward-rounded endpoints at `prec` bits.
  Float lo(prec_t prec) const;
  Float hi(prec_t prec) const;
  Mag width() const { return rad_.mul_2exp(1); }
  /// Upper bound of |x| over the interval.
  Mag mag() const;
  /// Lower bound of |x| over the interval.
  Mag mig() const;

  /// Conservative: false only when 0 is certainly excluded.
  bool contains_zero() const;
  bool contains(const mpq_class& v) const;
  bool contains(const Dyadic& v) const { return contains(v.to_rational()); }
  bool contains(long v) const { return contains(mpq_class(v)); }
  /// True when every point of `other` lies in this interval.
  bool contains(const RealInterval& other) const;
  bool overlaps(const RealInterval& other) const;
  /// Exact endpoints as rationals.
  mpq_class lo_exact() const;
  mpq_class hi_exact() const;

  void swap(RealInterval& o) noexcept {
    mid_.swap(o.mid_);
    std::swap(rad_, o.rad_);
  }

 private:
  Float mid_;
  Mag rad_;
};

void set(RealInterval& out, const Dyadic& v, prec_t prec);
void add(RealInterval& out, const RealInterval& a, const RealInterval& b, prec_t prec);
void sub(RealInterval& out, const RealInterval& a, const RealInterval& b, prec_t prec);
void mul(RealInterval& out, const RealInterval& a, const RealInterval& b, prec_t prec);
/// Throws DivisionByIntervalContainingZero.
void div(RealInterval& out, const RealInterval& a, const RealInterval& b, prec_t prec);
void sqrt(RealInterval& out, const RealInterval& a, prec_t prec);
void neg(RealInterval& out, const RealInterval& a);
void mul_2exp(RealInterval& out, const RealInterval& a, long k);
/// Adds `r` to the radius.
void add_error(RealInterval& x, const Mag& r);

/// Rectangle re + i*im with independent real and imaginary intervals;
/// width is the larger of the two widths.
class ComplexInterval {
 public:
  explicit ComplexInterval(prec_t prec = 64) : re_(prec), im_(prec) {}
  ComplexInterval(RealInterval re, RealInterval im) : re_(std::move(re)), im_(std::move(im)) {}
  ComplexInterval(const DyadicComplex& v, prec_t prec) : re_(v.re, prec), im_(v.im, prec) {}
  ComplexInterval(const mpq_class& re, const mpq_class& im, prec_t prec) : re_(re, prec), im_(im, prec) {}

  static ComplexInterval from_doubles(double re, double im, prec_t prec);

  const RealInterval& re() const { return re_; }
  const RealInterval& im() const { return im_; }
  RealInterval& re() { return re_; }
  RealInterval& im() { return im_; }
  prec_t prec() const { return re_.prec(); }

  Mag width() const { return max(re_.width(), im_.width()); }
  /// Upper bound of |z| over the rectangle.
  Mag mag() const;
  /// Lower bound of |z| over the rectangle (within a factor sqrt 2).
  Mag mig() const;
  /// Tighter lower bound of |z|: hypotenuse of the componentwise bounds.
  Mag abs_lower() const;
  /// Upper bound of the largest componentwise radius sum |rad re| + |rad im|.
  Mag rad_sum() const { return re_.rad() + im_.rad(); }

  /// Conservative: false only when 0 is certainly excluded.
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool contains(const mpq_class& re, const mpq_class& im) const {
    return re_.contains(re) && im_.contains(im);
  }
  bool contains(const DyadicComplex& v) const { return re_.contains(v.re) && im_.contains(v.im); }
  bool contains(const ComplexInterval& o) const { return re_.contains(o.re_) && im_.contains(o.im_); }
  bool overlaps(const ComplexInterval& o) const { return re_.overlaps(o.re_) && im_.overlaps(o.im_); }

  void swap(ComplexInterval& o) noexcept {
    re_.swap(o.re_);
    im_.swap(o.im_);
  }

 private:
  RealInterval re_;
  RealInterval im_;
};

void set(ComplexInterval& out, const DyadicComplex& v, prec_t prec);
void add(ComplexInterval& out, const ComplexInterval& a, const ComplexInterval& b, prec_t prec);
void sub(ComplexInterval& out, const ComplexInterval& a, const ComplexInterval& b, prec_t prec);
void mul(ComplexInterval& out, const ComplexInterval& a, const ComplexInterval& b, prec_t prec);
void sqr(ComplexInterval& out, const ComplexInterval& a, prec_t prec);
void mul(ComplexInterval& out, const ComplexInterval& a, const RealInterval& b, prec_t prec);
/// out += a * b
void addmul(ComplexInterval& out, const ComplexInterval& a, const ComplexInterval& b, prec_t prec);
/// Throws DivisionByIntervalContainingZero.
void div(ComplexInterval& out, const ComplexInterval& a, const ComplexInterval& b, prec_t prec);
void neg(ComplexInterval& out, const ComplexInterval& a);
void conj(ComplexInterval& out, const ComplexInterval& a);
void mul_2exp(ComplexInterval& out, const ComplexInterval& a, long k);
/// Multiplies by i^k.
void mul_i_pow(ComplexInterval& out, const ComplexInterval& a, int k);
/// z^n by binary powering.
void pow_ui(ComplexInterval& out, const ComplexInterval& a, unsigned long n, prec_t prec);

/// Convenience value-returning forms (precision = max of operand precisions).
ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);

/// Upper bound |x| of an MPFR value.
Mag mag_of(const Float& x);
/// Lower bound |x| of an MPFR value.
Mag mag_lower_of(const Float& x);
/// Upper bound of |d|.
Mag mag_of(const Dyadic& d);
/// Bounds of sqrt(a^2 + b^2).
Mag hypot_upper(const Mag& a, const Mag& b);
Mag hypot_lower(const Mag& a, const Mag& b);
/// Exact value of a magnitude.
mpq_class to_rational(const Mag& m);

}  // namespace rootclust
