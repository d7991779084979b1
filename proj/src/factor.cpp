#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "arithspin/exactq.hpp"

namespace arithspin::exactq {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic for all n < 2^64 with the first twelve prime bases.
bool miller_rabin_u64(u64 n) {
    if (n < 2) return false;
    static constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : bases) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : bases) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

BigInt pollard_brent(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, g = 1, q = 1, ys;
        auto f = [&](const BigInt& v) {
            BigInt r = (v * v + c) % n;
            return r;
        };
        unsigned long r = 1;
        const unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                BigInt diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_cofactor(const BigInt& n, std::map<BigInt, unsigned long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const BigInt d = pollard_brent(n);
    factor_cofactor(d, out);
    factor_cofactor(n / d, out);
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) return miller_rabin_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), kProbablePrimeReps) > 0;
}

BigInt FactoredInteger::value() const {
    BigInt v = sign;
    for (const auto& [p, e] : factors) v *= pow_int(p, e);
    return v;
}

std::string FactoredInteger::str() const {
    if (sign == 0) return "0";
    std::ostringstream os;
    if (sign < 0) os << '-';
    if (factors.empty()) {
        os << '1';
        return os.str();
    }
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) os << " * ";
        first = false;
        os << p.get_str();
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

FactoredInteger factor(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
    FactoredInteger out;
    out.sign = sgn(n) < 0 ? -1 : 1;
    BigInt rest = abs(n);
    for (std::uint32_t p : small_primes()) {
        if (rest == 1) break;
        const BigInt bp = p;
        if (bp * bp > rest) break;
        BigInt q;
        const unsigned long e = mpz_remove(q.get_mpz_t(), rest.get_mpz_t(), bp.get_mpz_t());
        if (e > 0) {
            out.factors[bp] = e;
            rest = q;
        }
    }
    factor_cofactor(rest, out.factors);
    return out;
}

std::pair<FactoredInteger, FactoredInteger> factor(const Rational& r) {
    if (r.is_zero()) throw std::invalid_argument("factor: zero has no factorization");
    return {factor(r.num()), factor(r.den())};
}

std::string factored_str(const Rational& r) {
    if (r.is_zero()) return "0";
    const auto [num, den] = factor(r);
    if (den.factors.empty()) return num.str();
    return num.str() + " / " + den.str();
}

}  // namespace arithspin::exactq
