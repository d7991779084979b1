#include <gtest/gtest.h>

#include <random>

#include "arithspin/exactq.hpp"
#include "oracles.hpp"

using namespace arithspin;
using namespace arithspin::exactq;

TEST(Rational, ParseAndCanonicalForm) {
    EXPECT_EQ(Rational::parse("6/-4"), Rational(-3, 2));
    EXPECT_EQ(Rational::parse("+7").str(), "7");
    EXPECT_EQ(Rational(10, 4).str(), "5/2");
    EXPECT_THROW(Rational::parse("1/0"), std::exception);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    auto draw = [&] {
        long den = d(rng);
        return Rational(d(rng), den == 0 ? 1 : den);
    };
    for (int i = 0; i < 300; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Rational(1));
        EXPECT_EQ(a < b, (b - a).sign() > 0);
    }
}

TEST(Rational, PowersAndValuation) {
    EXPECT_EQ(pow2(-3), Rational(1, 8));
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
    EXPECT_EQ(valuation(BigInt(96), 2), 5u);
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_NEAR(Rational(pow_int(BigInt(2), 2000)).log_abs(), 2000 * std::log(2.0), 1e-9);
}

TEST(Bernoulli, Examples) {
    EXPECT_EQ(bernoulli(0), Rational(1));
    EXPECT_EQ(bernoulli(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
}

TEST(Bernoulli, AgreesWithAkiyamaTanigawa) {
    for (unsigned n = 0; n <= 60; ++n) EXPECT_EQ(bernoulli(n), oracle::bernoulli_at(n)) << "n=" << n;
}

TEST(Bernoulli, PolynomialExamplesAndSymmetry) {
    EXPECT_EQ(bernoulli_poly(1, Rational(1, 2)), Rational(0));
    EXPECT_EQ(bernoulli_poly(2, Rational(0)), Rational(1, 6));
    EXPECT_EQ(bernoulli_poly(3, Rational(1, 4)), Rational(3, 64));
    // B_n(1 - x) = (-1)^n B_n(x) and B_n(x + 1) - B_n(x) = n x^(n-1).
    for (unsigned n = 1; n <= 12; ++n) {
        const Rational x(2, 7);
        const Rational sgn = n % 2 ? Rational(-1) : Rational(1);
        EXPECT_EQ(bernoulli_poly(n, Rational(1) - x), sgn * bernoulli_poly(n, x));
        EXPECT_EQ(bernoulli_poly(n, x + Rational(1)) - bernoulli_poly(n, x), Rational(static_cast<long>(n)) * x.pow(n - 1));
    }
}

TEST(GeneralizedBernoulli, TableAndVanishing) {
    const std::vector<Rational> expected = {Rational(-1, 2), Rational(3, 2), Rational(-25, 2), Rational(427, 2),
                                            Rational(-12465, 2)};
    for (unsigned i = 0; i < expected.size(); ++i) EXPECT_EQ(gen_bernoulli_mod4(2 * i + 1), expected[i]);
    for (unsigned l = 2; l <= 20; l += 2) EXPECT_EQ(gen_bernoulli_mod4(l), Rational(0));
    EXPECT_THROW(gen_bernoulli_mod4(0), std::invalid_argument);
}

TEST(GeneralizedBernoulli, DirectCharacterSum) {
    // B_{psi,n} = f^{n-1} sum_a psi(a) B_n(a/f), f = 4, psi(1) = 1, psi(3) = -1.
    for (unsigned n = 1; n <= 15; ++n) {
        const Rational direct = pow2(2L * (n - 1)) * (bernoulli_poly(n, Rational(1, 4)) - bernoulli_poly(n, Rational(3, 4)));
        EXPECT_EQ(gen_bernoulli_mod4(n), direct);
    }
}

TEST(Zeta, NegativeOddValues) {
    EXPECT_EQ(zeta_negative_odd(1), Rational(-1, 12));
    EXPECT_EQ(zeta_negative_odd(2), Rational(1, 120));
    EXPECT_EQ(zeta_negative_odd(4), Rational(1, 240));
}

TEST(Zeta, EvenValuesExact) {
    EXPECT_EQ(zeta_even_exact(1), PiExact(Rational(1, 6), 4));
    EXPECT_EQ(zeta_even_exact(2), PiExact(Rational(1, 90), 8));
    EXPECT_EQ(zeta_even_exact(4), PiExact(Rational(1, 9450), 16));
}

namespace {
oracle::Float50 to_float(const PiExact& x) {
    using oracle::Float50;
    const Float50 num(x.coeff().num().get_str());
    const Float50 den(x.coeff().den().get_str());
    return num / den * boost::multiprecision::pow(oracle::pi50(), Float50(x.half_pi_power()) / 2);
}
}  // namespace

TEST(Zeta, EvenValuesMatchNumericSeries) {
    for (unsigned j = 1; j <= 8; ++j) {
        const auto exact = to_float(zeta_even_exact(j));
        const auto numeric = oracle::zeta_numeric(2 * j);
        EXPECT_LT(boost::multiprecision::abs(exact / numeric - 1), 1e-12) << "j=" << j;
    }
}

TEST(EulerNumbers, ExamplesAndRecurrence) {
    EXPECT_EQ(euler_number(0), 1);
    EXPECT_EQ(euler_number(2), -1);
    EXPECT_EQ(euler_number(4), 5);
    const auto e = oracle::euler_numbers(15);
    for (unsigned k = 0; k < e.size(); ++k) EXPECT_EQ(euler_number(2 * k), e[k]);
    EXPECT_THROW(euler_number(3), std::invalid_argument);
}

TEST(LPsi, ExactValues) {
    EXPECT_EQ(l_psi_exact_odd(1), PiExact(Rational(1, 4), 2));
    EXPECT_EQ(l_psi_exact_odd(3), PiExact(Rational(1, 32), 6));
    EXPECT_EQ(l_psi_exact_odd(5), PiExact(Rational(5, 1536), 10));
    EXPECT_THROW(l_psi_exact_odd(2), std::invalid_argument);
}

TEST(LPsi, MatchesAcceleratedSeries) {
    for (unsigned l = 1; l <= 11; l += 2) {
        const auto exact = to_float(l_psi_exact_odd(l));
        const auto numeric = oracle::l_psi_numeric(l);
        EXPECT_LT(boost::multiprecision::abs(exact / numeric - 1), 1e-12) << "l=" << l;
    }
}

TEST(LPsi, FunctionalEquationWithGeneralizedBernoulli) {
    // L(psi, l) = (-1)^{(l-1)/2} (pi/2)^l L(psi, 1-l) / (l-1)!, L(psi, 1-l) = -B_{psi,l}/l.
    for (unsigned l = 1; l <= 9; l += 2) {
        const Rational lneg = -gen_bernoulli_mod4(l) / Rational(static_cast<long>(l));
        const Rational sign = ((l - 1) / 2) % 2 ? Rational(-1) : Rational(1);
        const Rational coeff = sign * lneg * pow2(-static_cast<long>(l)) / Rational(factorial(l - 1));
        EXPECT_EQ(l_psi_exact_odd(l), PiExact(coeff, 2L * l)) << "l=" << l;
    }
}

TEST(PiExactValue, Arithmetic) {
    EXPECT_EQ(gamma_half(2), PiExact(Rational(1)));
    EXPECT_EQ(gamma_half(1), PiExact(Rational(1), 1));
    EXPECT_EQ(gamma_half(5), PiExact(Rational(3, 4), 1));
    const PiExact z = PiExact(Rational(0), 4);
    EXPECT_EQ(z.half_pi_power(), 0);
    EXPECT_EQ(PiExact(Rational(1, 6), 4).str(), "1/6*pi^2");
    EXPECT_EQ(PiExact(Rational(3, 4), 1).str(), "3/4*pi^(1/2)");
    EXPECT_THROW(PiExact(Rational(1), 2).as_rational(), std::domain_error);
    EXPECT_THROW(PiExact(Rational(1), 2) + PiExact(Rational(1)), std::domain_error);
    const PiExact a(Rational(2, 3), 3);
    EXPECT_EQ(a * a.inverse(), PiExact(Rational(1)));
    EXPECT_NEAR(PiExact(Rational(1), 2).to_double(), M_PI, 1e-15);
}

TEST(Factor, Examples) {
    const BigInt c = pow_int(BigInt(2), 89) * 25 * 17;
    const auto f = factor(c);
    EXPECT_EQ(f.sign, 1);
    EXPECT_EQ(f.factors, (std::map<BigInt, unsigned long>{{2, 89}, {5, 2}, {17, 1}}));
    EXPECT_EQ(f.str(), "2^89 * 5^2 * 17");
    const auto g = factor(BigInt(-12));
    EXPECT_EQ(g.sign, -1);
    EXPECT_EQ(g.factors, (std::map<BigInt, unsigned long>{{2, 2}, {3, 1}}));
    EXPECT_TRUE(factor(BigInt(1)).factors.empty());
    EXPECT_EQ(factor(BigInt(1)).str(), "1");
    EXPECT_EQ(factored_str(Rational(-8, 3)), "-2^3 / 3");
    EXPECT_EQ(factored_str(Rational(0)), "0");
}

TEST(Factor, RoundTripIncludingLargeSemiprimes) {
    const BigInt p1("1000000007"), p2("998244353"), p3("4294967311");
    for (const BigInt& n : {BigInt(p1 * p2), BigInt(p2 * p3 * 12), BigInt(p1 * p1 * p3), BigInt(3628800)}) {
        const auto f = factor(n);
        EXPECT_EQ(f.value(), n);
        for (const auto& [p, e] : f.factors) EXPECT_TRUE(is_prime(p)) << p;
    }
}
