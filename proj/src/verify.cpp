#include "arithspin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "arithspin/clifford.hpp"
#include "arithspin/euler.hpp"
#include "arithspin/exactq.hpp"
#include "arithspin/ggroups.hpp"
#include "arithspin/qforms.hpp"

namespace arithspin::verify {

namespace {

// Accumulates checks; keeps only the first failure message.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    int checks() const { return checks_; }
    bool ok() const { return failure_.empty(); }
    const std::string& failure() const { return failure_; }

private:
    int checks_ = 0;
    std::string failure_;
};

void exactq_suite(Tally& t, const Options&) {
    using exactq::bernoulli;
    for (unsigned n = 1; n <= 40; ++n) {
        Rational s;
        for (unsigned k = 0; k <= n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli(k);
        t.expect(s.is_zero(), "sum C(n+1,k) B_k != 0 at n=" + std::to_string(n));
        if (n > 1 && n % 2 == 1) t.expect(bernoulli(n).is_zero(), "B_odd != 0 at n=" + std::to_string(n));
    }
    // von Staudt-Clausen: B_2n + sum_{(p-1) | 2n} 1/p is an integer.
    for (unsigned n = 1; n <= 20; ++n) {
        Rational s = bernoulli(2 * n);
        for (std::uint64_t p : qforms::primes_up_to(2 * n + 1))
            if ((2 * n) % (p - 1) == 0) s += Rational(1, static_cast<long>(p));
        t.expect(s.is_integer(), "von Staudt-Clausen fails at 2n=" + std::to_string(2 * n));
    }
    // B_{psi,n} = -n E_{n-1} / 2 for odd n.
    for (unsigned n = 1; n <= 21; n += 2) {
        const Rational rhs = Rational(-static_cast<long>(n)) * Rational(exactq::euler_number(n - 1)) / Rational(2);
        t.expect(exactq::gen_bernoulli_mod4(n) == rhs, "B_psi vs Euler number at n=" + std::to_string(n));
    }
    // zeta(2) = pi^2/6, zeta(4) = pi^4/90, and zeta(1-2j) = -B_2j/2j.
    t.expect(exactq::zeta_even_exact(1) == exactq::PiExact(Rational(1, 6), 4), "zeta(2)");
    t.expect(exactq::zeta_even_exact(2) == exactq::PiExact(Rational(1, 90), 8), "zeta(4)");
    t.expect(exactq::zeta_negative_odd(1) == Rational(-1, 12), "zeta(-1)");
    t.expect(exactq::l_psi_exact_odd(1) == exactq::PiExact(Rational(1, 4), 2), "L(psi,1) = pi/4");
    // Gamma(1/2)^2 = pi.
    const auto g = exactq::gamma_half(1);
    t.expect(g * g == exactq::PiExact(Rational(1), 2), "Gamma(1/2)^2");
    for (long v : {2L, 12L, 360L, 1001L, 65537L, -84L}) {
        const auto f = exactq::factor(BigInt(v));
        t.expect(f.value() == v, "factor round trip " + std::to_string(v));
    }
}

// Product of generators e_{i1} ... e_{ig} built one factor at a time.
template <class Alg>
typename Alg::Element word(const Alg& alg, clifford::Blade j, bool reversed) {
    auto idx = clifford::blade_indices(j);
    if (reversed) std::reverse(idx.begin(), idx.end());
    auto out = alg.one();
    for (int i : idx) out = alg.mul(out, alg.generator(i));
    return out;
}

void clifford_suite(Tally& t, const Options& opts) {
    using namespace clifford;
    for (int d = 1; d <= 10; ++d) {
        const int m = (d + 1) / 2;
        CliffordAlgebra<IntegerRing> alg(Signature(m, d - m));
        for (Blade j = 0; j <= alg.signature().full_mask(); ++j) {
            // conj(e_{i1}...e_{ig}) = (-e_{ig})...(-e_{i1}).
            auto expected = word(alg, j, true);
            if (grade(j) % 2) expected = alg.neg(expected);
            const bool ok = alg.equal(alg.conjugate(alg.blade(j)), expected);
            t.expect(ok, "conjugation sign at d=" + std::to_string(d) + " blade " + std::to_string(j));
            if (!ok) return;
        }
    }
    for (int d = 1; d <= 5; ++d) {
        for (int m = 0; m <= d; ++m) {
            CliffordAlgebra<IntegerRing> alg(Signature(m, d - m));
            const Blade full = alg.signature().full_mask();
            for (Blade j = 0; j <= full; ++j)
                for (Blade k = 0; k <= full; ++k) {
                    const auto naive = alg.mul(word(alg, j, false), word(alg, k, false));
                    const auto [s, jk] = blade_mul(j, k, alg.signature());
                    t.expect(alg.equal(naive, alg.blade(jk, s)), "blade_mul vs word product");
                }
        }
    }
    std::mt19937_64 rng(opts.seed);
    CliffordAlgebra<IntegerRing> alg(Signature(3, 2));
    std::uniform_int_distribution<Blade> blade(0, alg.signature().full_mask());
    std::uniform_int_distribution<long> coeff(-3, 3);
    auto random_element = [&] {
        std::vector<std::pair<Blade, BigInt>> terms;
        for (int i = 0; i < 4; ++i) terms.emplace_back(blade(rng), coeff(rng));
        return alg.from_terms(terms);
    };
    for (int i = 0; i < 100; ++i) {
        const auto x = random_element(), y = random_element(), z = random_element();
        t.expect(alg.equal(alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z))), "associativity");
        t.expect(alg.equal(alg.conjugate(alg.mul(x, y)), alg.mul(alg.conjugate(y), alg.conjugate(x))),
                 "conjugation is an anti-automorphism");
        t.expect(alg.equal(alg.iota(alg.mul(x, y)), alg.mul(alg.iota(y), alg.iota(x))),
                 "iota is an anti-automorphism");
    }
}

void oracle_suite(Tally& t, const Options& opts) {
    using qforms::Place;
    // Finite group orders against a direct count of SO(b) over F_p.
    const std::vector<std::pair<std::vector<long>, std::uint64_t>> cases = {
        {{1, 1, -1}, 3}, {{1, 1, -1}, 5}, {{1, 1, -1, -1}, 3}};
    for (const auto& [entries, p] : cases) {
        int m = 0;
        for (long e : entries) m += e > 0;
        const ggroups::SpinGroupDescriptor desc(m, static_cast<int>(entries.size()) - m);
        const BigInt expected = ggroups::spin_order_fp(desc, p);
        const auto counted = ggroups::so_order_bruteforce(entries, p);
        t.expect(expected == BigInt(std::to_string(counted)),
                 "|Spin(F_" + std::to_string(p) + ")| vs brute force, d=" + std::to_string(entries.size()));
    }
    // Hilbert reciprocity on random pairs.
    std::mt19937_64 rng(opts.seed + 1);
    std::uniform_int_distribution<long> num(-60, 60);
    const auto primes = qforms::primes_up_to(61);
    for (int i = 0; i < 200; ++i) {
        long a = num(rng), b = num(rng);
        if (a == 0) a = 7;
        if (b == 0) b = -3;
        int prod = qforms::hilbert_symbol(Rational(a), Rational(b), Place::infinity());
        for (auto p : primes) prod *= qforms::hilbert_symbol(Rational(a), Rational(b), Place::finite(p));
        t.expect(prod == 1, "Hilbert product formula for (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    const auto two = Place::finite(2);
    t.expect(qforms::witt_index(qforms::DiagonalForm::b(4, 1), two) == 1, "Witt index of b_{4,1} over Q_2");
    t.expect(qforms::witt_index(qforms::DiagonalForm::b(2, 3), two) == 2, "Witt index of b_{2,3} over Q_2");
    const auto s1 = euler::s_arithmetic_sign(4, 1, {2});
    const auto s2 = euler::s_arithmetic_sign(2, 3, {2});
    t.expect(s1.rank_s == 2 && s2.rank_s == 4, "S-ranks of b_{4,1}, b_{2,3}");
    t.expect(s1.sign == -1 && s2.sign == -1, "S-arithmetic signs");
}

void adelic_suite(Tally& t, const Options& opts) {
    for (int d = 3; d <= opts.d_max; ++d) {
        for (int m = 1; m < d; ++m) {
            const int n = d - m;
            if (m % 2 == 1 && n % 2 == 1) continue;
            const Rational closed = euler::chi_closed(m, n).value;
            const Rational adelic = euler::adelic_assembly_exact(m, n);
            std::ostringstream os;
            os << "chi(" << m << "," << n << "): closed " << closed << " vs adelic " << adelic;
            t.expect(closed == adelic, os.str());
        }
    }
}

void float_suite(Tally& t, const Options& opts) {
    for (int d = 4; d <= 10; ++d) {
        for (int m = 1; m < d; ++m) {
            const int n = d - m;
            if (m % 2 == 1 && n % 2 == 1) continue;
            const auto approx = euler::adelic_assembly_float(m, n, opts.prime_bound);
            const double err = approx.relative_error(euler::chi_closed(m, n).value);
            std::ostringstream os;
            os << "relative error " << err << " at (" << m << "," << n << ")";
            t.expect(err <= 1e-3, os.str());
        }
    }
}

struct Suite {
    const char* name;
    std::function<void(Tally&, const Options&)> body;
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {{"exactq", exactq_suite},
                                           {"clifford", clifford_suite},
                                           {"oracles", oracle_suite},
                                           {"adelic", adelic_suite},
                                           {"float", float_suite}};
    return all;
}

SuiteResult run_one(const Suite& s, const Options& opts) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    SuiteResult r{s.name, false, 0, "", 0.0};
    try {
        s.body(t, opts);
        r.passed = t.ok();
        r.detail = t.ok() ? std::to_string(t.checks()) + " checks" : t.failure();
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    r.checks = t.checks();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    out.emplace_back("all");
    return out;
}

std::vector<SuiteResult> run(const std::string& suite, const Options& opts) {
    std::vector<SuiteResult> out;
    for (const auto& s : suites())
        if (suite == "all" || suite == s.name) out.push_back(run_one(s, opts));
    if (out.empty()) throw std::invalid_argument("unknown verify suite: " + suite);
    return out;
}

}  // namespace arithspin::verify
