#include "rootclust/float.hpp"

#include <cmath>
#include <memory>

namespace rootclust {

std::string Float::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  std::size_t n = digits > 0 ? static_cast<std::size_t>(digits) : 0;
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, n, v_, MPFR_RNDN);
  std::unique_ptr<char, void (*)(char*)> guard(raw, mpfr_free_str);
  std::string s(raw);
  bool negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  std::string out;
  long e = static_cast<long>(exp);
  long len = static_cast<long>(s.size());
  if (e > 0 && e <= 40) {
    if (len <= e) {
      out = s + std::string(static_cast<std::size_t>(e - len), '0');
    } else {
      out = s.substr(0, static_cast<std::size_t>(e)) + "." + s.substr(static_cast<std::size_t>(e));
    }
  } else if (e <= 0 && e > -20) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + s;
  } else {
    out = s.substr(0, 1);
    if (len > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return negative ? "-" + out : out;
}

}  // namespace rootclust
