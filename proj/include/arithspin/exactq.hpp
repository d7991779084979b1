#pragma once

#include <map>
#include <string>
#include <utility>

#include "arithspin/rational.hpp"

// Exact special values: Bernoulli and Euler numbers, zeta and L(psi, .) at
// the integer points used by the Euler characteristic formula, and a graded
// ring of monomials r * pi^(h/2).
namespace arithspin::exactq {

/// Bernoulli number B_n with B_1 = -1/2 (generating function t/(e^t - 1)).
Rational bernoulli(unsigned n);

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k).
Rational bernoulli_poly(unsigned n, const Rational& x);

/// Generalized Bernoulli number B_{psi,n} for the primitive character mod 4,
/// 4^(n-1) (B_n(1/4) - B_n(3/4)). Zero for even n. Requires n >= 1.
Rational gen_bernoulli_mod4(unsigned n);

/// zeta(1 - 2j) = -B_{2j} / (2j), signed. Requires j >= 1.
Rational zeta_negative_odd(unsigned j);

/// Secant-series Euler number E_n. Throws std::invalid_argument for odd n.
BigInt euler_number(unsigned n);

/// Element r * pi^(half_pi_power / 2). Zero is always stored with power 0.
class PiExact {
public:
    PiExact() = default;
    PiExact(Rational coeff, long half_pi_power = 0);  // NOLINT(google-explicit-constructor)

    static PiExact pi_power_half(long half_pi_power) { return {Rational(1), half_pi_power}; }

    const Rational& coeff() const { return coeff_; }
    long half_pi_power() const { return half_; }
    bool is_zero() const { return coeff_.is_zero(); }
    bool is_rational() const { return half_ == 0; }
    int sign() const { return coeff_.sign(); }

    /// Throws std::domain_error unless is_rational().
    const Rational& as_rational() const;

    PiExact inverse() const;
    PiExact pow(long e) const;

    double to_double() const;
    /// log|value|, for magnitudes outside the double range.
    double log_abs() const;

    /// "c*pi^(h/2)" style rendering: "1/6*pi^2", "3/4*pi^(1/2)", "5".
    std::string str() const;

    PiExact& operator*=(const PiExact& o);
    PiExact& operator/=(const PiExact& o);
    /// Addition is only defined between equal pi powers (or with zero).
    PiExact& operator+=(const PiExact& o);
    PiExact& operator-=(const PiExact& o) { return *this += -o; }

    friend PiExact operator*(PiExact a, const PiExact& b) { return a *= b; }
    friend PiExact operator/(PiExact a, const PiExact& b) { return a /= b; }
    friend PiExact operator+(PiExact a, const PiExact& b) { return a += b; }
    friend PiExact operator-(PiExact a, const PiExact& b) { return a -= b; }
    friend PiExact operator-(const PiExact& a) { return {-a.coeff_, a.half_}; }
    friend bool operator==(const PiExact& a, const PiExact& b) = default;

private:
    Rational coeff_;
    long half_ = 0;
};

/// zeta(2j) = (-1)^(j+1) B_{2j} (2 pi)^(2j) / (2 (2j)!), half_pi_power 4j.
PiExact zeta_even_exact(unsigned j);

/// L(psi, l) for odd l = 2k+1: (-1)^k E_{2k} pi^l / (4^(k+1) (2k)!).
PiExact l_psi_exact_odd(unsigned l);

/// Gamma(j/2) for j >= 1.
PiExact gamma_half(unsigned j);

/// Signed prime factorization of a nonzero integer.
struct FactoredInteger {
    int sign = 1;
    std::map<BigInt, unsigned long> factors;

    BigInt value() const;
    /// "2^89 * 5^2 * 17", "-2^2 * 3", "1".
    std::string str() const;
    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;
};

/// Trial division to 10^6, deterministic Miller-Rabin below 2^64,
/// probabilistic check (kProbablePrimeReps rounds) above, Pollard-Brent rho
/// for composite cofactors. Throws std::invalid_argument on zero.
FactoredInteger factor(const BigInt& n);

/// Numerator and denominator factorizations; the sign lives on the numerator.
std::pair<FactoredInteger, FactoredInteger> factor(const Rational& r);

/// "num" or "num / den" from factor(r); "0" for zero.
std::string factored_str(const Rational& r);

inline constexpr int kProbablePrimeReps = 40;

bool is_prime(const BigInt& n);

}  // namespace arithspin::exactq
