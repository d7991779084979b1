#include "arithspin/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace arithspin::clifford {

Blade blade_of(std::initializer_list<int> indices) {
    Blade j = 0;
    for (int i : indices) {
        if (i < 1 || i > kMaxDim) throw std::invalid_argument("blade index out of range");
        j |= Blade{1} << (i - 1);
    }
    return j;
}

std::vector<int> blade_indices(Blade j) {
    std::vector<int> out;
    while (j) {
        out.push_back(std::countr_zero(j) + 1);
        j &= j - 1;
    }
    return out;
}

Signature::Signature(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0 || m + n < 1 || m + n > kMaxDim)
        throw std::invalid_argument("Signature: need m, n >= 0 and 1 <= m + n <= 63");
}

BladeProduct blade_mul(Blade j, Blade k, const Signature& sig) {
    // Moving each e_i of K leftwards past the larger indices of J.
    int swaps = 0;
    for (Blade rest = k; rest; rest &= rest - 1) {
        const int b = std::countr_zero(rest);
        const Blade above = b >= 63 ? 0 : ~((Blade{2} << b) - 1);
        swaps += std::popcount(j & above);
    }
    int sign = (swaps % 2 == 0) ? 1 : -1;
    for (Blade common = j & k; common; common &= common - 1) {
        sign *= sig.square(std::countr_zero(common) + 1);
    }
    return {sign, j ^ k};
}

// ---------------------------------------------------------------------------

ModularRing::ModularRing(std::uint64_t modulus) : mod_(modulus) {
    if (modulus < 2 || modulus > (std::uint64_t{1} << 62))
        throw std::invalid_argument("ModularRing: modulus must lie in [2, 2^62]");
}

std::uint64_t ModularRing::from_int(long v) const {
    const __int128 m = static_cast<__int128>(mod_);
    __int128 r = static_cast<__int128>(v) % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t ModularRing::from_big(const BigInt& v) const {
    BigInt r;
    const BigInt m(std::to_string(mod_));
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return std::stoull(r.get_str());
}

std::vector<std::uint64_t> ModularRing::ann2_generators() const {
    if (mod_ % 2 == 0) return {mod_ / 2};
    return {};
}

std::uint64_t ModularRing::invert(std::uint64_t a) const {
    const BigInt m(std::to_string(mod_));
    const BigInt x(std::to_string(a));
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("ModularRing: " + std::to_string(a) + " is not a unit");
    return from_big(inv);
}

std::uint64_t ModularRing::reduce(const Rational& r) const {
    return mul(from_big(r.num()), invert(from_big(r.den())));
}

int two_adic_precision(const ModularRing& ring) {
    const std::uint64_t m = ring.modulus();
    if (!std::has_single_bit(m) || m < 8)
        throw std::invalid_argument("2-adic exp/log needs the ring Z/2^N with N >= 3");
    return std::countr_zero(m);
}

namespace {

using QAlgebra = CliffordAlgebra<RationalField>;
using QElement = CliffordElement<Rational>;

QElement lift(const QAlgebra& qa, const Mod2Element& x) {
    std::vector<std::pair<Blade, Rational>> terms;
    for (const auto& [j, a] : x.terms()) terms.emplace_back(j, Rational(BigInt(std::to_string(a))));
    return qa.from_terms(terms);
}

void require_two_adic_integral(const QElement& x, const char* where) {
    for (const auto& [j, a] : x.terms()) {
        if (mpz_even_p(a.den().get_mpz_t()))
            throw std::domain_error(std::string(where) + ": coefficient " + a.str() + " is not 2-adically integral");
    }
}

Mod2Element reduce(const Mod2Algebra& alg, const QElement& x) {
    std::vector<std::pair<Blade, std::uint64_t>> terms;
    for (const auto& [j, a] : x.terms()) terms.emplace_back(j, alg.ring().reduce(a));
    return alg.from_terms(terms);
}

void require_even_and_divisible_by_4(const Mod2Algebra& alg, const Mod2Element& x, const char* where) {
    if (!alg.is_even(x)) throw std::invalid_argument(std::string(where) + ": odd-grade support");
    for (const auto& [j, a] : x.terms())
        if (a % 4 != 0) throw std::invalid_argument(std::string(where) + ": argument is not 0 mod 4");
}

}  // namespace

Mod2Element clifford_exp(const Mod2Algebra& alg, const Mod2Element& x) {
    const int precision = two_adic_precision(alg.ring());
    require_even_and_divisible_by_4(alg, x, "clifford_exp");

    // v_2(x^k / k!) >= k + 1, so the terms with k >= N - 1 vanish mod 2^N.
    const QAlgebra qa(alg.signature());
    const QElement xq = lift(qa, x);
    QElement term = qa.one();
    QElement sum = qa.one();
    for (int k = 1; k < precision; ++k) {
        term = qa.scale(Rational(BigInt(1), BigInt(k)), qa.mul(term, xq));
        require_two_adic_integral(term, "clifford_exp");
        sum = qa.add(sum, term);
    }
    return reduce(alg, sum);
}

Mod2Element clifford_log(const Mod2Algebra& alg, const Mod2Element& g) {
    const int precision = two_adic_precision(alg.ring());
    const Mod2Element a = alg.sub(g, alg.one());
    require_even_and_divisible_by_4(alg, a, "clifford_log");
    if (!alg.is_spin_element(g)) throw std::invalid_argument("clifford_log: argument is not in the spin group");

    // v_2(a^k / k) >= 2k - log2(k) >= N once k >= N.
    const QAlgebra qa(alg.signature());
    const QElement aq = lift(qa, a);
    QElement power = qa.one();
    QElement sum = qa.zero();
    for (int k = 1; k <= precision; ++k) {
        power = qa.mul(power, aq);
        const Rational c(BigInt(k % 2 == 1 ? 1 : -1), BigInt(k));
        const QElement term = qa.scale(c, power);
        require_two_adic_integral(term, "clifford_log");
        sum = qa.add(sum, term);
    }
    return reduce(alg, sum);
}

}  // namespace arithspin::clifford
