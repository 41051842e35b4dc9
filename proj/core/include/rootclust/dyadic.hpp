#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "rootclust/float.hpp"

namespace rootclust {

/// Exact binary fraction mantissa * 2^exponent, kept normalized (odd
/// mantissa, or zero with exponent 0) so equal values compare bitwise.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : man_(v) { normalize(); }  // NOLINT(implicit)
  Dyadic(mpz_class man, std::int64_t exp) : man_(std::move(man)), exp_(exp) { normalize(); }

  /// Exact conversion of a finite double.
  static Dyadic from_double(double x);
  /// Exact conversion of an MPFR value.
  static Dyadic from_float(const Float& f);
  /// Parses "123", "-0.375", "1.5e3", "3/8"; throws std::invalid_argument
  /// when the literal is malformed or not a binary fraction.
  static Dyadic parse(const std::string& text);
  /// Exact rational value; throws std::invalid_argument unless the
  /// denominator is a power of two.
  static Dyadic from_rational(const mpq_class& q);

  const mpz_class& mantissa() const { return man_; }
  std::int64_t exponent() const { return exp_; }
  bool is_zero() const { return man_ == 0; }
  int sign() const { return sgn(man_); }
  /// Number of significant bits of the mantissa.
  std::size_t bits() const;

  Dyadic operator-() const { return Dyadic(-man_, exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic mul_2exp(std::int64_t k) const { return is_zero() ? Dyadic() : Dyadic(man_, exp_ + k); }
  Dyadic abs() const { return Dyadic(man_ < 0 ? mpz_class(-man_) : man_, exp_); }

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.man_ == b.man_;
  }

  mpq_class to_rational() const;
  double to_double() const;
  /// Rounds to nearest at `prec` bits; returns true when exact.
  bool to_float(Float& out, prec_t prec) const;
  /// Exact decimal expansion (every dyadic has a finite one).
  std::string to_decimal() const;

 private:
  void normalize();

  mpz_class man_;
  std::int64_t exp_ = 0;
};

/// Parses a decimal ("-0.25", "1e-3") or rational ("num/den") literal exactly.
/// Throws std::invalid_argument on malformed input.
mpq_class parse_rational_literal(const std::string& text);

Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);

struct DyadicComplex {
  Dyadic re;
  Dyadic im;

  DyadicComplex conj() const { return {re, -im}; }
  friend DyadicComplex operator+(const DyadicComplex& a, const DyadicComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend DyadicComplex operator-(const DyadicComplex& a, const DyadicComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend bool operator==(const DyadicComplex&, const DyadicComplex&) = default;
};

}  // namespace rootclust
