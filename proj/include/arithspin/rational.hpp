#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arithspin {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
    Rational(const BigInt& v) : q_(v) {}  // NOLINT
    /// Unevaluated gmpxx integer expressions such as a * b + 1.
    template <class Op>
    Rational(const __gmp_expr<mpz_t, Op>& e) : q_(BigInt(e)) {}  // NOLINT
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(long e) const;

    double to_double() const { return q_.get_d(); }
    /// Natural log of |value|; usable far outside the double range.
    double log_abs() const;

    /// Canonical "p/q" form, or "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt pow_int(const BigInt& base, unsigned long e);
BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
/// 2^e as a rational; negative exponents allowed.
Rational pow2(long e);
/// Highest power of p dividing n (n != 0).
unsigned long valuation(const BigInt& n, const BigInt& p);

}  // namespace arithspin
