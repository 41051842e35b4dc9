#include "rootclust/mag.hpp"

#include <cfloat>
#include <sstream>
#include <utility>

namespace rootclust {

namespace {

// One rounding to nearest loses at most 2^-53 relatively; scaling by these
// factors afterwards turns the rounded value into a one-sided bound.
constexpr double kUp = 1.0 + 0x1p-50;
constexpr double kDown = 1.0 - 0x1p-50;
constexpr std::int64_t kFarShift = 1000;

}  // namespace

void Mag::normalize() {
  if (m_ == 0.0) {
    e_ = 0;
    return;
  }
  int k = 0;
  m_ = std::frexp(m_, &k);
  e_ += k;
}

Mag Mag::from_double(double x) {
  return Mag(std::fabs(x), 0);
}

Mag Mag::from_double_lower(double x) {
  return Mag(std::fabs(x), 0);
}

std::int64_t Mag::log2_ceil() const {
  return m_ == 0.5 ? e_ - 1 : e_;
}

std::int64_t Mag::log2_floor() const {
  return e_ - 1;
}

double Mag::to_double() const {
  if (m_ == 0.0) return 0.0;
  if (e_ > 1024) return std::numeric_limits<double>::infinity();
  if (e_ < -1021) {
    if (e_ < -1073) return DBL_TRUE_MIN;
    return std::nextafter(std::ldexp(m_, static_cast<int>(e_)),
                          std::numeric_limits<double>::infinity());
  }
  return std::ldexp(m_, static_cast<int>(e_));
}

double Mag::to_double_lower() const {
  if (m_ == 0.0) return 0.0;
  if (e_ > 1024) return DBL_MAX;
  if (e_ < -1021) return 0.0;
  return std::ldexp(m_, static_cast<int>(e_));
}

int Mag::cmp(const Mag& a, const Mag& b) {
  if (a.m_ == 0.0 || b.m_ == 0.0) {
    if (a.m_ == b.m_) return 0;
    return a.m_ == 0.0 ? -1 : 1;
  }
  if (a.e_ != b.e_) return a.e_ < b.e_ ? -1 : 1;
  if (a.m_ != b.m_) return a.m_ < b.m_ ? -1 : 1;
  return 0;
}

Mag operator+(const Mag& a, const Mag& b) {
  if (a.m_ == 0.0) return b;
  if (b.m_ == 0.0) return a;
  const Mag& hi = a.e_ >= b.e_ ? a : b;
  const Mag& lo = a.e_ >= b.e_ ? b : a;
  const std::int64_t shift = hi.e_ - lo.e_;
  double m = shift > kFarShift ? hi.m_ + 0x1p-1000
                               : hi.m_ + std::ldexp(lo.m_, static_cast<int>(-shift));
  return Mag(m * kUp, hi.e_);
}

Mag add_lower(const Mag& a, const Mag& b) {
  if (a.m_ == 0.0) return b;
  if (b.m_ == 0.0) return a;
  const Mag& hi = a.e_ >= b.e_ ? a : b;
  const Mag& lo = a.e_ >= b.e_ ? b : a;
  const std::int64_t shift = hi.e_ - lo.e_;
  if (shift > kFarShift) return hi;
  double m = hi.m_ + std::ldexp(lo.m_, static_cast<int>(-shift));
  return Mag(m * kDown, hi.e_);
}

Mag sub_lower(const Mag& a, const Mag& b) {
  if (b.m_ == 0.0) return a;
  if (a <= b) return Mag();
  const std::int64_t shift = a.e_ - b.e_;
  if (shift > kFarShift) return Mag(a.m_ * kDown, a.e_);
  double m = a.m_ - std::ldexp(b.m_, static_cast<int>(-shift));
  if (m <= 0.0) return Mag();
  return Mag(m * kDown, a.e_);
}

Mag operator*(const Mag& a, const Mag& b) {
  if (a.m_ == 0.0 || b.m_ == 0.0) return Mag();
  return Mag(a.m_ * b.m_ * kUp, a.e_ + b.e_);
}

Mag mul_lower(const Mag& a, const Mag& b) {
  if (a.m_ == 0.0 || b.m_ == 0.0) return Mag();
  return Mag(a.m_ * b.m_ * kDown, a.e_ + b.e_);
}

Mag div(const Mag& a, const Mag& b) {
  if (a.m_ == 0.0) return Mag();
  return Mag(a.m_ / b.m_ * kUp, a.e_ - b.e_);
}

Mag div_lower(const Mag& a, const Mag& b) {
  if (a.m_ == 0.0) return Mag();
  return Mag(a.m_ / b.m_ * kDown, a.e_ - b.e_);
}

std::string Mag::to_string() const {
  std::ostringstream os;
  os << m_ << "*2^" << e_;
  return os.str();
}

}  // namespace rootclust
