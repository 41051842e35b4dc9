#include "exact_poly.hpp"

#include <stdexcept>

namespace rootclust::reference {

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long degree(const QPoly& a) { return static_cast<long>(a.size()) - 1; }

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  trim(r);
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + scale(b, QC(-1)); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const QC& s) {
  QPoly r;
  for (const auto& c : a) r.push_back(c * s);
  trim(r);
  return r;
}

QPoly derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * QC(static_cast<long>(i)));
  trim(r);
  return r;
}

QC eval(const QPoly& a, const QC& z) {
  QC acc;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::invalid_argument("division by the zero polynomial");
  QPoly rem = a;
  QPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  const QC lead = b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const QC f = rem.back() / lead;
    quo[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] = rem[i + shift] - f * b[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quo);
  return {quo, rem};
}

namespace {

QPoly monic(const QPoly& p) { return p.empty() ? p : scale(p, QC(1) / p.back()); }

}  // namespace

QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  // Yun's algorithm.
  std::vector<QPoly> out;
  QPoly f = monic(p);
  QPoly a = gcd(f, derivative(f));
  QPoly b = divmod(f, a).first;
  QPoly c = divmod(derivative(f), a).first;
  QPoly d = c - derivative(b);
  while (degree(b) > 0) {
    QPoly g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - derivative(b);
  }
  return out;
}

QPoly from_roots(const std::vector<std::pair<QC, int>>& roots) {
  QPoly r{QC(1)};
  for (const auto& [z, m] : roots) {
    const QPoly lin{QC(0) - z, QC(1)};
    for (int i = 0; i < m; ++i) r = r * lin;
  }
  return r;
}

QPoly mignotte_exact(long a, long d) {
  mpz_class two_a;
  mpz_ui_pow_ui(two_a.get_mpz_t(), 2, static_cast<unsigned long>(a));
  const QPoly inner{QC(-1), QC(mpq_class(two_a))};
  QPoly zd(static_cast<std::size_t>(d + 1));
  zd[static_cast<std::size_t>(d)] = QC(1);
  return zd - scale(inner * inner, QC(2));
}

QPoly mandelbrot_exact(long k) {
  QPoly m{QC(1)};
  const QPoly z{QC(0), QC(1)};
  for (long j = 0; j < k; ++j) m = z * m * m + QPoly{QC(1)};
  return m;
}

QPoly runnels_exact(long k) {
  const QPoly z{QC(0), QC(1)};
  if (k == 0) return {QC(1)};
  QPoly prev{QC(1)};
  QPoly cur = z;
  for (long j = 1; j < k; ++j) {
    QPoly p2 = prev * prev;
    QPoly next = cur * cur + z * p2 * p2;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<mpq_class> bernoulli_akiyama(long n) {
  std::vector<mpq_class> b(static_cast<std::size_t>(n + 1));
  std::vector<mpq_class> a(static_cast<std::size_t>(n + 1));
  for (long m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
    for (long j = m; j >= 1; --j) {
      auto& aj = a[static_cast<std::size_t>(j - 1)];
      aj = mpq_class(j) * (aj - a[static_cast<std::size_t>(j)]);
      aj.canonicalize();
    }
    b[static_cast<std::size_t>(m)] = a[0];
  }
  // The transform yields the b_1 = +1/2 convention.
  if (n >= 1) b[1] = mpq_class(-1, 2);
  return b;
}

QPoly bernoulli_exact(long d) {
  const auto b = bernoulli_akiyama(d);
  QPoly p(static_cast<std::size_t>(d + 1));
  mpz_class binom = 1;
  for (long k = 0; k <= d; ++k) {
    p[static_cast<std::size_t>(k)] = QC(mpq_class(binom) * b[static_cast<std::size_t>(d - k)]);
    binom = binom * (d - k) / (k + 1);
  }
  trim(p);
  return p;
}

std::vector<RationalComplex> to_rational_complex(const QPoly& p) {
  std::vector<RationalComplex> out;
  for (const auto& c : p) out.push_back(RationalComplex{c.re, c.im});
  return out;
}

}  // namespace rootclust::reference
