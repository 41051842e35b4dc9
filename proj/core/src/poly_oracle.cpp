#include "rootclust/poly_oracle.hpp"

#include <fstream>
#include <sstream>

namespace rootclust {

std::string Provenance::describe() const {
  std::string s = family;
  if (params.empty()) return s;
  s += "(";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) s += ",";
    s += k + "=" + std::to_string(v);
    first = false;
  }
  return s + ")";
}

std::shared_ptr<const std::vector<ComplexInterval>> PolynomialOracle::coefficient_balls(
    prec_t prec) const {
  const auto* coeffs = coefficients();
  if (coeffs == nullptr) throw std::logic_error("oracle has no dense coefficients");
  {
    std::lock_guard<std::mutex> lock(ball_mu_);
    auto it = ball_cache_.find(prec);
    if (it != ball_cache_.end()) return it->second;
  }
  auto balls = std::make_shared<std::vector<ComplexInterval>>();
  balls->reserve(coeffs->size());
  for (const auto& c : *coeffs) balls->emplace_back(c.re, c.im, prec);
  std::lock_guard<std::mutex> lock(ball_mu_);
  return ball_cache_.emplace(prec, std::move(balls)).first->second;
}

ComplexInterval PolynomialOracle::eval_escalating(const OracleNumber& a, long L,
                                                  bool derivative) const {
  if (L < 1) throw std::invalid_argument("oracle precision must be at least 1 bit");
  ComplexInterval p, dp;
  for (prec_t wp = L + kGuardBits;; wp *= 2) {
    if (wp > kMaxOraclePrec) throw PrecisionExhausted("polynomial evaluation did not converge");
    ComplexInterval z = a.refine(wp);
    eval(p, derivative ? &dp : nullptr, z, wp);
    const ComplexInterval& r = derivative ? dp : p;
    if (width_at_most(r, L)) return r;
  }
}

ComplexInterval PolynomialOracle::eval_p(const OracleNumber& a, long L) const {
  return eval_escalating(a, L, false);
}

ComplexInterval PolynomialOracle::eval_dp(const OracleNumber& a, long L) const {
  return eval_escalating(a, L, true);
}

namespace {

ComplexInterval constant(long v, prec_t prec) {
  ComplexInterval c(prec);
  mpfr_set_si(c.re().mid().get(), v, MPFR_RNDN);
  return c;
}

void add_real(ComplexInterval& z, long v, prec_t prec) {
  RealInterval c(prec);
  mpfr_set_si(c.mid().get(), v, MPFR_RNDN);
  add(z.re(), z.re(), c, prec);
}

Mag mag_of_rational(const mpq_class& q) { return RealInterval(q, 64).mag(); }

class DenseOracle final : public PolynomialOracle {
 public:
  DenseOracle(std::vector<RationalComplex> coeffs, bool is_real, Provenance prov)
      : PolynomialOracle(static_cast<int>(coeffs.size()) - 1, is_real, std::move(prov)),
        coeffs_(std::move(coeffs)) {
    abs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) abs_.push_back(mag_of_rational(c.re) + mag_of_rational(c.im));
  }

  void eval(ComplexInterval& p, ComplexInterval* dp, const ComplexInterval& z,
            prec_t prec) const override {
    auto balls = coefficient_balls(prec);
    const auto& c = *balls;
    ComplexInterval acc = c.back();
    ComplexInterval dacc(prec);
    for (std::size_t j = c.size() - 1; j-- > 0;) {
      if (dp != nullptr) {
        mul(dacc, dacc, z, prec);
        add(dacc, dacc, acc, prec);
      }
      mul(acc, acc, z, prec);
      add(acc, acc, c[j], prec);
    }
    p.swap(acc);
    if (dp != nullptr) dp->swap(dacc);
  }

  Mag abs_majorant(const Mag& x) const override {
    Mag acc = abs_.back();
    for (std::size_t j = abs_.size() - 1; j-- > 0;) acc = acc * x + abs_[j];
    return acc;
  }

  const std::vector<RationalComplex>* coefficients() const override { return &coeffs_; }

 private:
  std::vector<RationalComplex> coeffs_;
  std::vector<Mag> abs_;
};

class MignotteOracle final : public PolynomialOracle {
 public:
  MignotteOracle(long a, long d)
      : PolynomialOracle(static_cast<int>(d), true, Provenance{"mignotte", {{"a", a}, {"d", d}}}),
        a_(a), d_(d) {}

  void eval(ComplexInterval& p, ComplexInterval* dp, const ComplexInterval& z,
            prec_t prec) const override {
    ComplexInterval zd1(prec), zd(prec), t(prec), t2(prec);
    pow_ui(zd1, z, static_cast<unsigned long>(d_ - 1), prec);
    mul(zd, zd1, z, prec);
    mul_2exp(t, z, a_);
    add_real(t, -1, prec);
    sqr(t2, t, prec);
    mul_2exp(t2, t2, 1);
    if (dp != nullptr) {
      ComplexInterval lin(prec);
      mul_2exp(lin, t, a_ + 2);
      RealInterval dd(mpq_class(d_), prec);
      mul(*dp, zd1, dd, prec);
      sub(*dp, *dp, lin, prec);
    }
    sub(p, zd, t2, prec);
  }

  Mag abs_majorant(const Mag& x) const override {
    Mag xd = Mag::from_double(1.0);
    Mag base = x;
    for (long n = d_; n > 0; n >>= 1) {
      if (n & 1) xd = xd * base;
      if (n > 1) base = base * base;
    }
    Mag lin = x.mul_2exp(a_) + Mag::from_double(1.0);
    return xd + (lin * lin).mul_2exp(1);
  }

 private:
  long a_;
  long d_;
};

class MandelbrotOracle final : public PolynomialOracle {
 public:
  explicit MandelbrotOracle(long k)
      : PolynomialOracle(static_cast<int>((1L << k) - 1), true, Provenance{"mandelbrot", {{"k", k}}}),
        k_(k) {}

  void eval(ComplexInterval& p, ComplexInterval* dp, const ComplexInterval& z,
            prec_t prec) const override {
    ComplexInterval m = constant(1, prec);
    ComplexInterval dm(prec), m2(prec), t(prec);
    for (long j = 1; j <= k_; ++j) {
      sqr(m2, m, prec);
      if (dp != nullptr) {
        // Man'_j = Man_{j-1}^2 + 2 z Man_{j-1} Man'_{j-1}
        mul(t, m, dm, prec);
        mul(t, t, z, prec);
        mul_2exp(t, t, 1);
        add(dm, m2, t, prec);
      }
      mul(m, m2, z, prec);
      add_real(m, 1, prec);
    }
    p.swap(m);
    if (dp != nullptr) dp->swap(dm);
  }

  Mag abs_majorant(const Mag& x) const override {
    Mag m = Mag::from_double(1.0);
    for (long j = 1; j <= k_; ++j) m = x * m * m + Mag::from_double(1.0);
    return m;
  }

 private:
  long k_;
};

class RunnelsOracle final : public PolynomialOracle {
 public:
  explicit RunnelsOracle(long k)
      : PolynomialOracle(static_cast<int>(runnels_degree(k)), true, Provenance{"runnels", {{"k", k}}}),
        k_(k) {}

  void eval(ComplexInterval& p, ComplexInterval* dp, const ComplexInterval& z,
            prec_t prec) const override {
    if (k_ == 0) {
      p = constant(1, prec);
      if (dp != nullptr) *dp = ComplexInterval(prec);
      return;
    }
    ComplexInterval qm = constant(1, prec);
    ComplexInterval dqm(prec);
    ComplexInterval q = z;
    ComplexInterval dq = constant(1, prec);
    ComplexInterval s2(prec), s4(prec), s3(prec), qn(prec), dqn(prec), t(prec);
    for (long j = 1; j < k_; ++j) {
      sqr(s2, qm, prec);
      sqr(s4, s2, prec);
      // q_{j+1} = q_j^2 + z q_{j-1}^4
      sqr(qn, q, prec);
      mul(t, z, s4, prec);
      add(qn, qn, t, prec);
      if (dp != nullptr) {
        // q'_{j+1} = 2 q_j q'_j + q_{j-1}^4 + 4 z q_{j-1}^3 q'_{j-1}
        mul(s3, s2, qm, prec);
        mul(dqn, q, dq, prec);
        mul_2exp(dqn, dqn, 1);
        add(dqn, dqn, s4, prec);
        mul(t, s3, dqm, prec);
        mul(t, t, z, prec);
        mul_2exp(t, t, 2);
        add(dqn, dqn, t, prec);
        dqm.swap(dq);
        dq.swap(dqn);
      }
      qm.swap(q);
      q.swap(qn);
    }
    p.swap(q);
    if (dp != nullptr) dp->swap(dq);
  }

  Mag abs_majorant(const Mag& x) const override {
    if (k_ == 0) return Mag::from_double(1.0);
    Mag qm = Mag::from_double(1.0);
    Mag q = x;
    for (long j = 1; j < k_; ++j) {
      Mag s2 = qm * qm;
      Mag qn = q * q + x * s2 * s2;
      qm = q;
      q = qn;
    }
    return q;
  }

 private:
  long k_;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

PolyPtr dense_oracle(std::vector<RationalComplex> coeffs, Provenance provenance) {
  while (!coeffs.empty() && coeffs.back().re == 0 && coeffs.back().im == 0) coeffs.pop_back();
  if (coeffs.empty()) throw EmptyPolynomial();
  bool is_real = true;
  for (const auto& c : coeffs) is_real = is_real && c.im == 0;
  return std::make_shared<DenseOracle>(std::move(coeffs), is_real, std::move(provenance));
}

PolyPtr dense_oracle(const std::vector<mpq_class>& coeffs, Provenance provenance) {
  std::vector<RationalComplex> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.push_back({q, mpq_class(0)});
  return dense_oracle(std::move(c), std::move(provenance));
}

PolyPtr family_mignotte(long a, long d) {
  if (a < 1 || d < 3) throw std::invalid_argument("mignotte requires a >= 1 and d >= 3");
  return std::make_shared<MignotteOracle>(a, d);
}

PolyPtr family_mandelbrot(long k) {
  if (k < 0 || k > 30) throw std::invalid_argument("mandelbrot requires 0 <= k <= 30");
  return std::make_shared<MandelbrotOracle>(k);
}

std::vector<mpq_class> bernoulli_numbers(long n) {
  std::vector<mpq_class> b(static_cast<std::size_t>(n + 1));
  b[0] = 1;
  for (long m = 1; m <= n; ++m) {
    // sum_{j<=m} C(m+1,j) b_j = 0, so b_m = -(sum_{j<m} C(m+1,j) b_j) / (m+1)
    mpq_class s = 0;
    mpz_class binom = 1;
    for (long j = 0; j < m; ++j) {
      s += mpq_class(binom) * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(m)] = -s / (m + 1);
    b[static_cast<std::size_t>(m)].canonicalize();
  }
  return b;
}

PolyPtr family_bernoulli(long d) {
  if (d < 1) throw std::invalid_argument("bernoulli requires d >= 1");
  auto b = bernoulli_numbers(d);
  std::vector<mpq_class> c(static_cast<std::size_t>(d + 1));
  mpz_class binom = 1;
  for (long k = 0; k <= d; ++k) {
    c[static_cast<std::size_t>(k)] = mpq_class(binom) * b[static_cast<std::size_t>(d - k)];
    binom = binom * (d - k) / (k + 1);
  }
  return dense_oracle(c, Provenance{"bernoulli", {{"d", d}}});
}

long runnels_degree(long k) {
  if (k == 0) return 0;
  long prev = 0;
  long cur = 1;
  for (long j = 1; j < k; ++j) {
    long next = std::max(2 * cur, 1 + 4 * prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

PolyPtr family_runnels(long k) {
  if (k < 0 || k > 24) throw std::invalid_argument("runnels requires 0 <= k <= 24");
  return std::make_shared<RunnelsOracle>(k);
}

PolyPtr parse_poly_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<RationalComplex> coeffs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    RationalComplex c;
    auto comma = s.find(',');
    try {
      if (comma == std::string::npos) {
        c.re = parse_rational_literal(s);
      } else {
        if (s.find(',', comma + 1) != std::string::npos) {
          throw std::invalid_argument("too many fields");
        }
        c.re = parse_rational_literal(trim(s.substr(0, comma)));
        c.im = parse_rational_literal(trim(s.substr(comma + 1)));
      }
    } catch (const std::invalid_argument& e) {
      throw FormatError(lineno, "cannot parse coefficient '" + s + "': " + e.what());
    }
    coeffs.push_back(std::move(c));
  }
  return dense_oracle(std::move(coeffs), Provenance{"file", {}});
}

PolyPtr parse_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polynomial file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poly_text(buf.str());
}

PolyPtr make_family(const std::string& name, const std::map<std::string, long>& params) {
  auto get = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) {
      throw std::invalid_argument("family '" + name + "' requires parameter '" + key + "'");
    }
    return it->second;
  };
  auto check_keys = [&](std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : params) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) throw std::invalid_argument("family '" + name + "' has no parameter '" + k + "'");
    }
  };
  if (name == "mignotte") {
    check_keys({"a", "d"});
    return family_mignotte(get("a"), get("d"));
  }
  if (name == "mandelbrot") {
    check_keys({"k"});
    return family_mandelbrot(get("k"));
  }
  if (name == "bernoulli") {
    check_keys({"d"});
    return family_bernoulli(get("d"));
  }
  if (name == "runnels") {
    check_keys({"k"});
    return family_runnels(get("k"));
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace rootclust
