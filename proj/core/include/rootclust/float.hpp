#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace rootclust {

using prec_t = mpfr_prec_t;

/// Owning wrapper around an MPFR number. The precision travels with the
/// value; arithmetic on midpoints is done through the raw handle.
class Float {
 public:
  explicit Float(prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Float(double x, prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  Float(const Float& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Float(Float&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Float& operator=(const Float& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Float& operator=(Float&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Float() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  prec_t prec() const { return mpfr_get_prec(v_); }
  /// Changes the precision; the value is lost.
  void reset_prec(prec_t p) {
    if (mpfr_get_prec(v_) != p) mpfr_set_prec(v_, p);
  }
  void swap(Float& o) noexcept { mpfr_swap(v_, o.v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// e with |x| in [2^(e-1), 2^e); meaningless for zero.
  std::int64_t exponent() const { return mpfr_get_exp(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Shortest-ish decimal with `digits` significant digits (0 = exact enough
  /// to round-trip at the stored precision).
  std::string to_string(int digits = 0) const;

 private:
  mpfr_t v_;
};

}  // namespace rootclust
