#include "arithspin/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace arithspin {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");

    auto parse_int = [](const std::string& part) {
        std::size_t i = (part.size() > 0 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("Rational::parse: missing digits");
        for (std::size_t j = i; j < part.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(part[j])))
                throw std::invalid_argument("Rational::parse: bad digit in '" + part + "'");
        return BigInt(part[0] == '+' ? part.substr(1) : part, 10);
    };

    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    const BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(parse_int(s.substr(0, slash)), den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(q_.get_den(), q_.get_num());
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    const auto ue = static_cast<unsigned long>(e);
    return Rational(pow_int(q_.get_num(), ue), pow_int(q_.get_den(), ue));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

double Rational::log_abs() const {
    if (is_zero()) return -HUGE_VAL;
    auto log_mpz = [](const BigInt& z) {
        long exp2 = 0;
        const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
        return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
    };
    return log_mpz(q_.get_num()) - log_mpz(q_.get_den());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rational pow2(long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

unsigned long valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    BigInt rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

}  // namespace arithspin
