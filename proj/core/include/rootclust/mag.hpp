#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace rootclust {

/// Non-negative magnitude m * 2^e with a double mantissa and a 64-bit
/// exponent. Arithmetic rounds upward unless the operation is named
/// `*_lower`, so chains of operations yield rigorous bounds without ever
/// overflowing the double exponent range.
class Mag {
 public:
  Mag() = default;

  static Mag zero() { return Mag(); }
  static Mag pow2(std::int64_t e) { return Mag(0.5, e + 1); }
  static Mag from_double(double x);        // upper bound of |x|
  static Mag from_double_lower(double x);  // lower bound of |x|
  static Mag from_parts(double m, std::int64_t e) { return Mag(m, e); }

  bool is_zero() const { return m_ == 0.0; }
  double mantissa() const { return m_; }
  std::int64_t exponent() const { return e_; }

  /// Smallest k with value <= 2^k (undefined for zero).
  std::int64_t log2_ceil() const;
  /// Largest k with 2^k <= value, minus one (undefined for zero).
  std::int64_t log2_floor() const;

  /// Upper bound as a double; +inf if out of range.
  double to_double() const;
  /// Lower bound as a double; 0 on underflow, DBL_MAX on overflow.
  double to_double_lower() const;

  Mag mul_2exp(std::int64_t k) const {
    return is_zero() ? Mag() : Mag(m_, e_ + k);
  }

  friend Mag operator+(const Mag& a, const Mag& b);
  friend Mag operator*(const Mag& a, const Mag& b);
  Mag& operator+=(const Mag& b) { return *this = *this + b; }
  Mag& operator*=(const Mag& b) { return *this = *this * b; }

  /// Upper bound of a / b where b is nonzero.
  friend Mag div(const Mag& a, const Mag& b);
  friend Mag add_lower(const Mag& a, const Mag& b);
  friend Mag mul_lower(const Mag& a, const Mag& b);
  friend Mag div_lower(const Mag& a, const Mag& b);
  /// Lower bound of max(a - b, 0).
  friend Mag sub_lower(const Mag& a, const Mag& b);

  friend bool operator<(const Mag& a, const Mag& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Mag& a, const Mag& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Mag& a, const Mag& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Mag& a, const Mag& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const Mag& a, const Mag& b) { return cmp(a, b) == 0; }

  friend Mag max(const Mag& a, const Mag& b) { return a < b ? b : a; }
  friend Mag min(const Mag& a, const Mag& b) { return a < b ? a : b; }

  std::string to_string() const;

 private:
  Mag(double m, std::int64_t e) : m_(m), e_(e) { normalize(); }
  void normalize();
  static int cmp(const Mag& a, const Mag& b);

  double m_ = 0.0;  // 0 or in [0.5, 1)
  std::int64_t e_ = 0;
};

}  // namespace rootclust
