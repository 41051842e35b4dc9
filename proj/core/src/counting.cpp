#include "rootclust/counting.hpp"

#include <algorithm>
#include <cmath>

namespace rootclust {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// |midpoint| of a ball, ignoring its radius.
Mag mid_abs(const ComplexInterval& z) {
  return hypot_upper(mag_of(z.re().mid()), mag_of(z.im().mid()));
}

mpq_class ceil_q(const mpq_class& x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return mpq_class(r);
}

mpq_class floor_q(const mpq_class& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return mpq_class(r);
}

// The unique integer n in 0..d with s + [-infl, infl]^2 containing n, or -1.
long unique_integer(const ComplexInterval& s, const mpq_class& infl, long d) {
  mpq_class ilo = s.im().lo_exact() - infl;
  mpq_class ihi = s.im().hi_exact() + infl;
  if (ilo > 0 || ihi < 0) return -1;
  mpq_class lo = ceil_q(s.re().lo_exact() - infl);
  mpq_class hi = floor_q(s.re().hi_exact() + infl);
  if (lo != hi) return -1;
  long n = lo.get_num().get_si();
  if (n < 0 || n > d) return -1;
  return n;
}

// Smallest 53 * 2^k that holds the disc center to 53 bits relative to the
// radius; below it the rounded center can move by more than the radius.
prec_t start_precision(const Disc& delta) {
  const Mag cabs = max(mag_of(delta.center.re), mag_of(delta.center.im));
  const Mag r = mag_of(delta.radius);
  prec_t prec = 53;
  if (cabs.is_zero() || r.is_zero()) return prec;
  const std::int64_t need = 53 + cabs.log2_ceil() - r.log2_floor();
  while (prec < need) prec *= 2;
  return prec;
}

}  // namespace

long choose_q(long d, const mpq_class& rho, const mpq_class& e) {
  if (d < 1 || rho <= 1 || e <= 0) throw std::invalid_argument("choose_q requires d >= 1, rho > 1, e > 0");
  // theta^q <= e/(d+e)  <=>  rho^q >= (d+e)/e
  const mpq_class bound = (mpq_class(d) + e) / e;
  mpq_class power = rho;
  long q = 1;
  while (power < bound) {
    power *= rho;
    ++q;
  }
  return q;
}

ComplexInterval s0_star(const PolynomialOracle& p, const Disc& delta, long q, prec_t prec) {
  if (q < 1) throw std::invalid_argument("s0_star requires q >= 1");
  auto omega = roots_of_unity(q, prec);
  const ComplexInterval c(delta.center, prec);
  const RealInterval r(delta.radius, prec);
  ComplexInterval sum(prec), z(prec), pv(prec), dpv(prec), t(prec);
  for (long g = 0; g < q; ++g) {
    const ComplexInterval& w = (*omega)[static_cast<std::size_t>(g)];
    mul(z, w, r, prec);
    add(z, z, c, prec);
    p.eval(pv, &dpv, z, prec);
    if (pv.contains_zero()) throw ContourEvaluationContainsZero();
    div(t, dpv, pv, prec);
    mul(t, t, w, prec);
    add(sum, sum, t, prec);
  }
  mul(sum, sum, r, prec);
  mul(sum, sum, RealInterval(mpq_class(1, q), prec), prec);
  return sum;
}

CountResult pstar_count(const PolynomialOracle& p, const Disc& delta, const mpq_class& rho) {
  CountResult res;
  res.kind = CountKind::certified;
  const long d = p.degree();
  if (d == 0) {
    res.value = 0;
    return res;
  }
  const long q = choose_q(d, rho, mpq_class(1, 4));
  for (long L = start_precision(delta);; L *= 2) {
    if (L > kPstarMaxPrec) {
      res.value = -1;
      return res;
    }
    res.precision_used = L;
    res.evaluations += q;
    ComplexInterval s;
    try {
      s = s0_star(p, delta, q, L);
    } catch (const ContourEvaluationContainsZero&) {
      continue;
    } catch (const DivisionByIntervalContainingZero&) {
      continue;
    }
    if (s.width() < Mag::pow2(-1)) {
      res.value = unique_integer(s, mpq_class(1, 4), d);
      return res;
    }
  }
}

CountResult pstar_approx(const PolynomialOracle& p, const Disc& delta, const mpq_class& rho) {
  CountResult res;
  res.kind = CountKind::heuristic;
  const long d = p.degree();
  if (d == 0) {
    res.value = 0;
    return res;
  }
  const long q = choose_q(d, rho, mpq_class(1, 4));
  for (long L = start_precision(delta); L <= kPstarApproxMaxPrec; L *= 2) {
    res.precision_used = L;
    res.evaluations += q;
    ComplexInterval s;
    try {
      s = s0_star(p, delta, q, L);
    } catch (const ContourEvaluationContainsZero&) {
      res.value = -2;
      return res;
    } catch (const DivisionByIntervalContainingZero&) {
      res.value = -2;
      return res;
    }
    if (s.width() < Mag::pow2(-1)) {
      res.value = unique_integer(s, mpq_class(1, 2), d);
      return res;
    }
  }
  res.value = -1;
  return res;
}

// ------------------------------------------------------------------ Graeffe

TruncatedPoly graeffe_iterate(const TruncatedPoly& p, prec_t prec) {
  const std::size_t m = p.head.size();
  std::vector<const ComplexInterval*> e, o;
  for (std::size_t i = 0; i < m; ++i) (i % 2 == 0 ? e : o).push_back(&p.head[i]);

  // Coefficient k of a(w)^2 for the split half `a`.
  ComplexInterval cross(prec), sq(prec), term(prec);
  auto square_coeff = [&](const std::vector<const ComplexInterval*>& a, long k, ComplexInterval& out) {
    out = ComplexInterval(prec);
    if (k < 0) return;
    const long n = static_cast<long>(a.size());
    cross = ComplexInterval(prec);
    for (long i = std::max(0L, k - (n - 1)); 2 * i < k; ++i) {
      addmul(cross, *a[static_cast<std::size_t>(i)], *a[static_cast<std::size_t>(k - i)], prec);
    }
    mul_2exp(out, cross, 1);
    if (k % 2 == 0 && k / 2 < n) {
      sqr(sq, *a[static_cast<std::size_t>(k / 2)], prec);
      add(out, out, sq, prec);
    }
  };

  TruncatedPoly g;
  g.head.resize(m);
  ComplexInterval ee(prec), oo(prec);
  for (std::size_t k = 0; k < m; ++k) {
    square_coeff(e, static_cast<long>(k), ee);
    square_coeff(o, static_cast<long>(k) - 1, oo);
    sub(g.head[k], ee, oo, prec);
  }
  if (!p.mass.is_zero()) {
    Mag norm;
    for (const auto& h : p.head) norm += h.mag();
    g.mass = (norm * p.mass).mul_2exp(1) + p.mass * p.mass;
  }
  return g;
}

std::vector<ComplexInterval> graeffe_iterate(const std::vector<ComplexInterval>& p, prec_t prec) {
  return graeffe_iterate(TruncatedPoly{p, Mag()}, prec).head;
}

long graeffe_rounds(long d) {
  const double lg = std::log2(static_cast<double>(std::max(1L, d)));
  return static_cast<long>(std::ceil(std::log2(4.0 + lg))) + 2;
}

// ------------------------------------------------------------ Taylor shift

namespace {

// Inverse DFT in place: a_i <- (1/N) sum_g a_g w^(-g i), N a power of two.
void inverse_dft(std::vector<ComplexInterval>& a, prec_t prec) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) a[i].swap(a[j]);
  }
  auto w = roots_of_unity(static_cast<long>(n), prec);
  ComplexInterval tw(prec), v(prec), u(prec);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        conj(tw, (*w)[j * step]);
        mul(v, a[i + j + len / 2], tw, prec);
        u = a[i + j];
        add(a[i + j], u, v, prec);
        sub(a[i + j + len / 2], u, v, prec);
      }
    }
  }
  long shift = 0;
  while ((std::size_t{1} << shift) < n) ++shift;
  for (auto& x : a) mul_2exp(x, x, -shift);
}

// Cauchy-type bounds on the tail sum_{j>=m} |a_j| of p(c + r z): with
// B = P_abs(|c| + R) and R = r 2^s, |a_j| <= B 2^(-s j).
class TailBound {
 public:
  TailBound(const PolynomialOracle& p, const Disc& delta) : d_(p.degree()) {
    const Mag cabs = mag_of(delta.center.re) + mag_of(delta.center.im);
    const Mag r = mag_of(delta.radius);
    for (long s = 1; s <= kMaxShift; ++s) bounds_.push_back(p.abs_majorant(cabs + r.mul_2exp(s)));
  }

  Mag tail(long m) const {
    if (m > d_) return Mag();
    Mag best;
    bool first = true;
    for (long s = 1; s <= kMaxShift; ++s) {
      // sum_{j>=m} B 2^(-s j) <= 2 B 2^(-s m)
      Mag t = bounds_[static_cast<std::size_t>(s - 1)].mul_2exp(1 - s * m);
      if (first || t < best) best = t;
      first = false;
    }
    return best;
  }

  // Smallest head length whose tail is at most `target`.
  long needed(const Mag& target) const {
    if (target.is_zero()) return d_ + 1;
    long best = d_ + 1;
    for (long s = 1; s <= kMaxShift; ++s) {
      const Mag& b = bounds_[static_cast<std::size_t>(s - 1)];
      if (b.is_zero()) return 1;
      long bits = b.log2_ceil() + 1 - target.log2_floor();
      long m = bits <= 0 ? 1 : (bits + s - 1) / s;
      best = std::min(best, std::max(1L, m));
    }
    return best;
  }

 private:
  static constexpr long kMaxShift = 24;
  long d_;
  std::vector<Mag> bounds_;
};

Mag head_scale(const std::vector<ComplexInterval>& head) {
  Mag h;
  for (const auto& x : head) h = max(h, mid_abs(x));
  return h;
}

TruncatedPoly dense_shift(const PolynomialOracle& p, const Disc& delta, prec_t prec, long target_bits,
                          const TailBound& tb) {
  const long d = p.degree();
  std::vector<ComplexInterval> b = *p.coefficient_balls(prec);
  const ComplexInterval c(delta.center, prec);
  const RealInterval r(delta.radius, prec);
  TruncatedPoly out;
  RealInterval rpow(Dyadic(1), prec);
  ComplexInterval t(prec);
  auto extend_to = [&](long m) {
    for (long j = static_cast<long>(out.head.size()); j < m; ++j) {
      for (long i = d - 1; i >= j; --i) {
        mul(t, b[static_cast<std::size_t>(i + 1)], c, prec);
        add(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)], t, prec);
      }
      ComplexInterval a(prec);
      mul(a, b[static_cast<std::size_t>(j)], rpow, prec);
      out.head.push_back(std::move(a));
      mul(rpow, rpow, r, prec);
    }
  };
  extend_to(std::min(d + 1, 8L));
  long m = tb.needed(head_scale(out.head).mul_2exp(-target_bits));
  extend_to(std::min(d + 1, std::max(m, static_cast<long>(out.head.size()))));
  out.mass = tb.tail(static_cast<long>(out.head.size()));
  return out;
}

TruncatedPoly sampled_shift(const PolynomialOracle& p, const Disc& delta, prec_t prec, long n) {
  const ComplexInterval c(delta.center, prec);
  const RealInterval r(delta.radius, prec);
  auto w = roots_of_unity(n, prec);
  std::vector<ComplexInterval> v(static_cast<std::size_t>(n), ComplexInterval(prec));
  ComplexInterval z(prec);
  for (long g = 0; g < n; ++g) {
    mul(z, (*w)[static_cast<std::size_t>(g)], r, prec);
    add(z, z, c, prec);
    p.eval(v[static_cast<std::size_t>(g)], nullptr, z, prec);
  }
  inverse_dft(v, prec);
  TruncatedPoly out;
  out.head = std::move(v);
  return out;
}

TruncatedPoly blackbox_shift(const PolynomialOracle& p, const Disc& delta, prec_t prec, long target_bits,
                             const TailBound& tb) {
  const long d = p.degree();
  auto pow2_at_least = [](long m) {
    long n = 1;
    while (n < m) n <<= 1;
    return n;
  };
  long n = std::min(8L, pow2_at_least(d + 1));
  TruncatedPoly out = sampled_shift(p, delta, prec, n);
  long m = tb.needed(head_scale(out.head).mul_2exp(-target_bits));
  long n2 = pow2_at_least(std::min(m, d + 1));
  if (n2 > n) {
    n = n2;
    out = sampled_shift(p, delta, prec, n);
  }
  if (n >= d + 1) {
    out.head.resize(static_cast<std::size_t>(d + 1));
    out.mass = Mag();
  } else {
    out.mass = tb.tail(n).mul_2exp(1);
  }
  return out;
}

struct PelletOutcome {
  long certified = -1;
  // The comparison holds for some values inside the enclosures, so more bits may certify it.
  bool may_pass = false;
};

PelletOutcome pellet(const TruncatedPoly& tp, bool only_zero) {
  const std::size_t m = tp.head.size();
  const Mag factor = Mag::from_double(kPelletFactor);
  std::size_t k = 0;
  std::vector<Mag> mids(m);
  for (std::size_t i = 0; i < m; ++i) {
    mids[i] = mid_abs(tp.head[i]);
    if (!only_zero && mids[i] > mids[k]) k = i;
  }
  PelletOutcome out;
  Mag lower_others;
  Mag others;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == k) continue;
    lower_others += tp.head[i].abs_lower();
    others += tp.head[i].mag();
  }
  out.may_pass = tp.head[k].mag() > factor * lower_others;
  const Mag lhs = sub_lower(tp.head[k].abs_lower(), tp.mass);
  if (!lhs.is_zero() && lhs > factor * (others + tp.mass)) out.certified = static_cast<long>(k);
  return out;
}

long tstar_impl(const PolynomialOracle& p, const Disc& delta, bool only_zero) {
  const long d = p.degree();
  if (d == 0) return 0;
  const long rounds = graeffe_rounds(d);
  for (prec_t prec = start_precision(delta); prec <= kTstarMaxPrec; prec *= 2) {
    TruncatedPoly tp = shifted_coefficients(p, delta, prec, prec / 2 + 16);
    bool promising = false;
    for (long it = 0;; ++it) {
      PelletOutcome o = pellet(tp, only_zero);
      if (o.certified >= 0) return o.certified;
      promising = promising || o.may_pass;
      if (it == rounds) break;
      tp = graeffe_iterate(tp, prec);
    }
    if (!promising) return -1;
  }
  return -1;
}

}  // namespace

TruncatedPoly shifted_coefficients(const PolynomialOracle& p, const Disc& delta, prec_t prec,
                                   long target_bits) {
  if (p.degree() == 0) {
    TruncatedPoly out;
    out.head.push_back(ComplexInterval(prec));
    p.eval(out.head[0], nullptr, ComplexInterval(delta.center, prec), prec);
    return out;
  }
  TailBound tb(p, delta);
  if (p.coefficients() != nullptr) return dense_shift(p, delta, prec, target_bits, tb);
  return blackbox_shift(p, delta, prec, target_bits, tb);
}

long tstar(const PolynomialOracle& p, const Disc& delta) { return tstar_impl(p, delta, false); }

long tstar_exclusion(const PolynomialOracle& p, const Disc& delta) {
  return tstar_impl(p, delta, true) == 0 ? 0 : -1;
}

long c0_test(const PolynomialOracle& p, const Disc& delta, CountingMode mode, CountingStats* stats) {
  const auto start = Clock::now();
  long result = -1;
  bool run_tstar = true;
  if (mode == CountingMode::pstar_filtered) {
    const auto t0 = Clock::now();
    CountResult a = pstar_approx(p, delta, mpq_class(2));
    if (stats != nullptr) {
      ++stats->pstar_approx_calls;
      stats->pstar_approx_ms += elapsed_ms(t0);
      if (a.value == -1) ++stats->approx_minus1;
      if (a.value == -2) ++stats->approx_minus2;
    }
    run_tstar = a.value == -2 || a.value == 0;
  }
  if (run_tstar) {
    const auto t0 = Clock::now();
    result = tstar_exclusion(p, delta);
    if (stats != nullptr) {
      ++stats->tstar_calls;
      stats->tstar_ms += elapsed_ms(t0);
    }
  }
  if (stats != nullptr) {
    ++stats->c0_calls;
    stats->c0_ms += elapsed_ms(start);
  }
  return result;
}

long cstar_test(const PolynomialOracle& p, const Disc& delta, CountingMode mode, CountingStats* stats) {
  const auto start = Clock::now();
  long result = -1;
  if (mode == CountingMode::pstar_filtered) {
    const auto t0 = Clock::now();
    CountResult r = pstar_count(p, delta.dilated(Dyadic(2)), mpq_class(2));
    result = r.value;
    if (stats != nullptr) {
      ++stats->pstar_calls;
      stats->pstar_ms += elapsed_ms(t0);
      ++stats->pstar_precisions[r.precision_used];
    }
  } else {
    const auto t0 = Clock::now();
    result = tstar(p, delta);
    if (stats != nullptr) {
      ++stats->tstar_calls;
      stats->tstar_ms += elapsed_ms(t0);
    }
  }
  if (stats != nullptr) {
    ++stats->cstar_calls;
    stats->cstar_ms += elapsed_ms(start);
  }
  return result;
}

}  // namespace rootclust
