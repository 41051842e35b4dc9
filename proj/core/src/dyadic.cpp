#include "rootclust/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace rootclust {

namespace {

mpz_class shifted(const mpz_class& z, std::int64_t k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Accepts an optional sign (ASCII or U+2212), then digits[.digits][e[+-]digits].
mpq_class parse_decimal(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (s.compare(0, 3, "\xE2\x88\x92") == 0) {
    negative = true;
    i = 3;
  } else if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  std::int64_t scale = 0;
  bool any = false;
  while (i < s.size() && is_digit(s[i])) {
    digits += s[i++];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) {
      digits += s[i++];
      --scale;
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("malformed number '" + s + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) eneg = s[i++] == '-';
    if (i >= s.size() || !is_digit(s[i])) throw std::invalid_argument("malformed exponent in '" + s + "'");
    std::int64_t e = 0;
    while (i < s.size() && is_digit(s[i])) {
      e = e * 10 + (s[i++] - '0');
      if (e > 100000) throw std::invalid_argument("exponent out of range in '" + s + "'");
    }
    scale += eneg ? -e : e;
  }
  if (i != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
  mpz_class num(digits, 10);
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale < 0 ? mpq_class(num, ten_pow) : mpq_class(num * ten_pow);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

mpq_class parse_rational_literal(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  mpq_class num = parse_decimal(text.substr(0, slash));
  mpq_class den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  mpq_class q = num / den;
  q.canonicalize();
  return q;
}

void Dyadic::normalize() {
  if (man_ == 0) {
    exp_ = 0;
    return;
  }
  mp_bitcnt_t tz = mpz_scan1(man_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), tz);
    exp_ += static_cast<std::int64_t>(tz);
  }
}

Dyadic Dyadic::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  if (x == 0.0) return Dyadic();
  int e = 0;
  double m = std::frexp(x, &e);
  mpz_class z;
  mpz_set_d(z.get_mpz_t(), std::ldexp(m, 53));
  return Dyadic(z, static_cast<std::int64_t>(e) - 53);
}

Dyadic Dyadic::from_float(const Float& f) {
  if (f.is_zero()) return Dyadic();
  mpz_class z;
  mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), f.get());
  return Dyadic(z, e);
}

Dyadic Dyadic::from_rational(const mpq_class& q_in) {
  mpq_class q = q_in;
  q.canonicalize();
  const mpz_class& den = q.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) {
    throw std::invalid_argument("value " + q.get_str() + " is not a binary fraction");
  }
  auto k = static_cast<std::int64_t>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
  return Dyadic(q.get_num(), -k);
}

Dyadic Dyadic::parse(const std::string& text) {
  return from_rational(parse_rational_literal(text));
}

std::size_t Dyadic::bits() const {
  if (man_ == 0) return 0;
  return mpz_sizeinbase(man_.get_mpz_t(), 2);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.exp_ <= b.exp_) return Dyadic(a.man_ + shifted(b.man_, b.exp_ - a.exp_), a.exp_);
  return Dyadic(shifted(a.man_, a.exp_ - b.exp_) + b.man_, b.exp_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return Dyadic();
  return Dyadic(a.man_ * b.man_, a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign();
  int sb = b.sign();
  if (sa != sb || sa == 0) return sa <=> sb;
  int c = 0;
  if (a.exp_ <= b.exp_) {
    c = cmp(a.man_, shifted(b.man_, b.exp_ - a.exp_));
  } else {
    c = cmp(shifted(a.man_, a.exp_ - b.exp_), b.man_);
  }
  return c <=> 0;
}

Dyadic min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

mpq_class Dyadic::to_rational() const {
  if (exp_ >= 0) return mpq_class(shifted(man_, exp_));
  mpz_class den;
  mpz_setbit(den.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp_));
  mpq_class q(man_, den);
  q.canonicalize();
  return q;
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  long e = 0;
  double d = mpz_get_d_2exp(&e, man_.get_mpz_t());
  return std::ldexp(d, static_cast<int>(e + exp_));
}

bool Dyadic::to_float(Float& out, prec_t prec) const {
  out.reset_prec(prec);
  return mpfr_set_z_2exp(out.get(), man_.get_mpz_t(), exp_, MPFR_RNDN) == 0;
}

std::string Dyadic::to_decimal() const {
  if (is_zero()) return "0";
  if (exp_ >= 0) return shifted(man_, exp_).get_str();
  const auto k = static_cast<unsigned long>(-exp_);
  mpz_class five_pow;
  mpz_ui_pow_ui(five_pow.get_mpz_t(), 5, k);
  mpz_class scaled = ::abs(man_) * five_pow;
  std::string digits = scaled.get_str();
  if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
  digits.insert(digits.size() - k, ".");
  return (man_ < 0 ? "-" : "") + digits;
}

}  // namespace rootclust
