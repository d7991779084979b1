#include "arithspin/exactq.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace arithspin::exactq {

namespace {

// Bernoulli numbers via sum_{k=0}^{n} C(n+1,k) B_k = 0. Cached behind a lock;
// the cache only ever grows, so results are observationally pure.
class BernoulliTable {
public:
    Rational get(unsigned n) {
        std::lock_guard lock(mu_);
        while (table_.size() <= n) {
            const auto m = static_cast<unsigned long>(table_.size());
            if (m == 0) {
                table_.emplace_back(1);
                continue;
            }
            Rational acc;
            for (unsigned long k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * table_[k];
            table_.push_back(-acc / Rational(static_cast<long>(m + 1)));
        }
        return table_[n];
    }

private:
    std::mutex mu_;
    std::vector<Rational> table_;
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

}  // namespace

Rational bernoulli(unsigned n) { return bernoulli_table().get(n); }

Rational bernoulli_poly(unsigned n, const Rational& x) {
    Rational acc;
    for (unsigned k = 0; k <= n; ++k) acc += Rational(binomial(n, k)) * bernoulli(k) * x.pow(n - k);
    return acc;
}

Rational gen_bernoulli_mod4(unsigned n) {
    if (n == 0) throw std::invalid_argument("gen_bernoulli_mod4: n must be >= 1");
    const Rational quarter(BigInt(1), BigInt(4));
    const Rational three_quarters(BigInt(3), BigInt(4));
    return Rational(4).pow(n - 1) * (bernoulli_poly(n, quarter) - bernoulli_poly(n, three_quarters));
}

Rational zeta_negative_odd(unsigned j) {
    if (j == 0) throw std::invalid_argument("zeta_negative_odd: j must be >= 1");
    return -bernoulli(2 * j) / Rational(static_cast<long>(2 * j));
}

BigInt euler_number(unsigned n) {
    if (n % 2 != 0) throw std::invalid_argument("euler_number: n must be even");
    // sum_{k=0}^{n/2} C(n, 2k) E_{2k} = 0 for n >= 2.
    std::vector<BigInt> e{BigInt(1)};
    for (unsigned m = 2; m <= n; m += 2) {
        BigInt acc = 0;
        for (unsigned k = 0; 2 * k < m; ++k) acc += binomial(m, 2 * k) * e[k];
        e.push_back(-acc);
    }
    return e.back();
}

// ---------------------------------------------------------------------------
// PiExact

PiExact::PiExact(Rational coeff, long half_pi_power)
    : coeff_(std::move(coeff)), half_(coeff_.is_zero() ? 0 : half_pi_power) {}

const Rational& PiExact::as_rational() const {
    if (half_ != 0) throw std::domain_error("PiExact: residual pi power " + str());
    return coeff_;
}

PiExact PiExact::inverse() const {
    if (is_zero()) throw std::domain_error("PiExact: inverse of zero");
    return {coeff_.inverse(), -half_};
}

PiExact PiExact::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return {coeff_.pow(e), half_ * e};
}

double PiExact::to_double() const {
    return coeff_.to_double() * std::pow(std::numbers::pi, static_cast<double>(half_) / 2.0);
}

double PiExact::log_abs() const {
    return coeff_.log_abs() + static_cast<double>(half_) / 2.0 * std::log(std::numbers::pi);
}

std::string PiExact::str() const {
    if (half_ == 0) return coeff_.str();
    std::ostringstream os;
    if (coeff_ != Rational(1)) os << coeff_.str() << '*';
    os << "pi";
    if (half_ % 2 == 0) {
        if (half_ != 2) os << '^' << half_ / 2;
    } else {
        os << "^(" << half_ << "/2)";
    }
    return os.str();
}

PiExact& PiExact::operator*=(const PiExact& o) {
    coeff_ *= o.coeff_;
    half_ = coeff_.is_zero() ? 0 : half_ + o.half_;
    return *this;
}

PiExact& PiExact::operator/=(const PiExact& o) { return *this *= o.inverse(); }

PiExact& PiExact::operator+=(const PiExact& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (half_ != o.half_)
        throw std::domain_error("PiExact: adding " + str() + " and " + o.str() + " (pi powers differ)");
    coeff_ += o.coeff_;
    if (coeff_.is_zero()) half_ = 0;
    return *this;
}

PiExact zeta_even_exact(unsigned j) {
    if (j == 0) throw std::invalid_argument("zeta_even_exact: j must be >= 1");
    const Rational sign = (j % 2 == 1) ? Rational(1) : Rational(-1);
    const Rational c = sign * bernoulli(2 * j) * pow2(2 * j) / Rational(BigInt(2 * factorial(2 * j)));
    return {c, 4L * j};
}

PiExact l_psi_exact_odd(unsigned l) {
    if (l % 2 == 0) throw std::invalid_argument("l_psi_exact_odd: l must be odd");
    const unsigned k = (l - 1) / 2;
    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    const Rational c = sign * Rational(euler_number(2 * k)) /
                       (Rational(4).pow(k + 1) * Rational(factorial(2 * k)));
    return {c, 2L * l};
}

PiExact gamma_half(unsigned j) {
    if (j == 0) throw std::invalid_argument("gamma_half: j must be >= 1");
    if (j % 2 == 0) return {Rational(factorial(j / 2 - 1)), 0};
    const unsigned n = (j - 1) / 2;  // Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)
    return {Rational(factorial(2 * n)) / (Rational(4).pow(n) * Rational(factorial(n))), 1};
}

}  // namespace arithspin::exactq
