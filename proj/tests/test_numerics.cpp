#include <gtest/gtest.h>

#include <random>

#include "rootclust/oracle_number.hpp"

using namespace rootclust;

namespace {

mpq_class q(long n, long d = 1) { return mpq_class(n, d); }

Dyadic random_dyadic(std::mt19937_64& rng, int scale_bits) {
  std::uniform_int_distribution<long> man(-(1L << 40), 1L << 40);
  std::uniform_int_distribution<int> ex(-40 - scale_bits, -40 + scale_bits);
  return Dyadic(mpz_class(man(rng)), ex(rng));
}

}  // namespace

TEST(Mag, Pow2AndLogs) {
  Mag m = Mag::pow2(10);
  EXPECT_EQ(m.to_double(), 1024.0);
  EXPECT_EQ(m.log2_ceil(), 10);
  EXPECT_LE(Mag::from_double(0.1).to_double_lower(), 0.1);
  EXPECT_GE(Mag::from_double(0.1).to_double(), 0.1);
}

TEST(Mag, UpperAndLowerRounding) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(1e-3, 1e3);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const mpq_class ea = to_rational(Mag::from_double(a));
    const mpq_class eb = to_rational(Mag::from_double(b));
    EXPECT_GE(to_rational(Mag::from_double(a) + Mag::from_double(b)), ea + eb);
    EXPECT_GE(to_rational(Mag::from_double(a) * Mag::from_double(b)), ea * eb);
    EXPECT_LE(to_rational(mul_lower(Mag::from_double(a), Mag::from_double(b))), ea * eb);
  }
}

TEST(Mag, HugeExponentsDoNotOverflow) {
  Mag big = Mag::pow2(100000);
  Mag prod = big * big;
  EXPECT_GE(prod.log2_ceil(), 200000);
  EXPECT_LE(prod.log2_ceil(), 200001);
  EXPECT_TRUE(std::isinf(prod.to_double()));
}

TEST(Dyadic, ParseAndDecimalRoundTrip) {
  EXPECT_EQ(Dyadic::parse("-0.375"), Dyadic(-3).mul_2exp(-3));
  EXPECT_EQ(Dyadic::parse("3/8"), Dyadic(3).mul_2exp(-3));
  EXPECT_EQ(Dyadic::parse("1.5e3"), Dyadic(1500));
  EXPECT_EQ(Dyadic::parse("\xE2\x88\x92" "2"), Dyadic(-2));
  EXPECT_THROW(Dyadic::parse("0.1"), std::invalid_argument);
  EXPECT_THROW(Dyadic::parse("abc"), std::invalid_argument);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Dyadic d = random_dyadic(rng, 60);
    EXPECT_EQ(Dyadic::parse(d.to_decimal()), d);
  }
}

TEST(Dyadic, ArithmeticMatchesRationals) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Dyadic a = random_dyadic(rng, 30);
    Dyadic b = random_dyadic(rng, 30);
    EXPECT_EQ((a + b).to_rational(), a.to_rational() + b.to_rational());
    EXPECT_EQ((a - b).to_rational(), a.to_rational() - b.to_rational());
    EXPECT_EQ((a * b).to_rational(), a.to_rational() * b.to_rational());
    EXPECT_EQ(a < b, a.to_rational() < b.to_rational());
  }
}

TEST(RealInterval, OperationsEncloseExactResults) {
  std::mt19937_64 rng(3);
  for (prec_t prec : {10, 53, 200}) {
    for (int i = 0; i < 200; ++i) {
      Dyadic a = random_dyadic(rng, 20);
      Dyadic b = random_dyadic(rng, 20);
      RealInterval x(a, prec), y(b, prec), r(prec);
      add(r, x, y, prec);
      EXPECT_TRUE(r.contains(a.to_rational() + b.to_rational()));
      sub(r, x, y, prec);
      EXPECT_TRUE(r.contains(a.to_rational() - b.to_rational()));
      mul(r, x, y, prec);
      EXPECT_TRUE(r.contains(a.to_rational() * b.to_rational()));
      if (!b.is_zero()) {
        div(r, x, y, prec);
        EXPECT_TRUE(r.contains(a.to_rational() / b.to_rational()));
      }
    }
  }
}

TEST(RealInterval, DivisionByZeroIntervalThrows) {
  RealInterval x(Dyadic(1), 53);
  RealInterval z = RealInterval::from_endpoints(Dyadic(-1), Dyadic(1), 53);
  RealInterval r(53);
  EXPECT_THROW(div(r, x, z, 53), DivisionByIntervalContainingZero);
}

TEST(RealInterval, ThirdHasTightEnclosure) {
  RealInterval third(q(1, 3), 53);
  EXPECT_TRUE(third.contains(q(1, 3)));
  EXPECT_LE(third.width(), Mag::pow2(-53));
}

TEST(ComplexInterval, ProductsAndQuotientsEncloseExactValues) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    DyadicComplex a{random_dyadic(rng, 10), random_dyadic(rng, 10)};
    DyadicComplex b{random_dyadic(rng, 10), random_dyadic(rng, 10)};
    const mpq_class ar = a.re.to_rational(), ai = a.im.to_rational();
    const mpq_class br = b.re.to_rational(), bi = b.im.to_rational();
    ComplexInterval x(a, 53), y(b, 53);
    ComplexInterval p = x * y;
    EXPECT_TRUE(p.contains(ar * br - ai * bi, ar * bi + ai * br));
    ComplexInterval s(53);
    sqr(s, x, 53);
    EXPECT_TRUE(s.contains(ar * ar - ai * ai, 2 * ar * ai));
    if (!b.re.is_zero() || !b.im.is_zero()) {
      const mpq_class n = br * br + bi * bi;
      ComplexInterval d = x / y;
      EXPECT_TRUE(d.contains((ar * br + ai * bi) / n, (ai * br - ar * bi) / n));
    }
  }
}

TEST(ComplexInterval, WidthIsLargerComponentWidth) {
  ComplexInterval z(RealInterval::from_endpoints(Dyadic(0), Dyadic(1), 53),
                    RealInterval::from_endpoints(Dyadic(0), Dyadic(4), 53));
  EXPECT_GE(z.width(), Mag::pow2(2));
  EXPECT_NEAR(z.width().to_double(), 4.0, 1e-12);
}

TEST(OracleRefine, ExactValueMeetsWidth) {
  OracleNumber o(DyadicComplex{Dyadic(3), Dyadic(-1).mul_2exp(-5)});
  for (long L : {1L, 10L, 53L, 300L}) {
    ComplexInterval z = oracle_refine(o, L);
    EXPECT_TRUE(width_at_most(z, L));
    EXPECT_TRUE(z.contains(q(3), q(-1, 32)));
  }
}

TEST(OracleRefine, ProcedureIsEscalatedAndMemoized) {
  int calls = 0;
  OracleNumber third([&calls](prec_t prec) {
    ++calls;
    return ComplexInterval(RealInterval(q(1, 3), prec), RealInterval(prec));
  });
  ComplexInterval a = oracle_refine(third, 200);
  EXPECT_TRUE(width_at_most(a, 200));
  EXPECT_TRUE(a.contains(q(1, 3), q(0)));
  const int after_first = calls;
  ComplexInterval b = oracle_refine(third, 200);
  EXPECT_EQ(calls, after_first);
  EXPECT_EQ(a.re().mid().to_string(80), b.re().mid().to_string(80));
  EXPECT_EQ(a.re().rad(), b.re().rad());
}

TEST(OracleRefine, StuckProcedureExhaustsPrecision) {
  OracleNumber stuck([](prec_t prec) {
    return ComplexInterval(RealInterval::from_endpoints(Dyadic(0), Dyadic(1), prec), RealInterval(prec));
  });
  EXPECT_THROW(oracle_refine(stuck, 10), PrecisionExhausted);
}

TEST(IntervalArith, DispatchesEachOperation) {
  ComplexInterval x(DyadicComplex{Dyadic(1), Dyadic(2)}, 64);
  ComplexInterval y(DyadicComplex{Dyadic(3), Dyadic(-1)}, 64);
  EXPECT_TRUE(interval_arith(ArithOp::add, x, y).contains(q(4), q(1)));
  EXPECT_TRUE(interval_arith(ArithOp::sub, x, y).contains(q(-2), q(3)));
  EXPECT_TRUE(interval_arith(ArithOp::mul, x, y).contains(q(5), q(5)));
  // (1+2i)/(3-i) = (1+7i)/10
  EXPECT_TRUE(interval_arith(ArithOp::div, x, y).contains(q(1, 10), q(7, 10)));
  ComplexInterval zero(64);
  EXPECT_THROW(interval_arith(ArithOp::div, x, zero), DivisionByIntervalContainingZero);
}

TEST(RootOfUnity, QuarterTurnsAreExact) {
  ComplexInterval i = root_of_unity(1, 4, 53);
  EXPECT_TRUE(i.contains(q(0), q(1)));
  EXPECT_TRUE(i.width().is_zero());
  ComplexInterval m = root_of_unity(2, 4, 53);
  EXPECT_TRUE(m.contains(q(-1), q(0)));
}

TEST(RootOfUnity, PowersReturnToOne) {
  for (long n : {3L, 5L, 7L, 12L, 64L}) {
    for (long L : {20L, 53L, 120L}) {
      for (long g = 0; g < n; g += 2) {
        ComplexInterval w = root_of_unity(g, n, L);
        EXPECT_TRUE(width_at_most(w, L));
        ComplexInterval p(L + 64);
        pow_ui(p, w, static_cast<unsigned long>(n), L + 64);
        EXPECT_TRUE(p.contains(q(1), q(0))) << "g=" << g << " n=" << n;
      }
    }
  }
}

TEST(RootOfUnity, SixthRootMatchesClosedForm) {
  // exp(i pi/3) = 1/2 + i sqrt(3)/2: compare squares of the imaginary part.
  ComplexInterval w = root_of_unity(1, 6, 100);
  EXPECT_TRUE(w.re().contains(q(1, 2)));
  RealInterval s(200);
  mul(s, w.im(), w.im(), 200);
  EXPECT_TRUE(s.contains(q(3, 4)));
}
