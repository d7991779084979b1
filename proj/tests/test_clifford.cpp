#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "arithspin/clifford.hpp"

using namespace arithspin;
using namespace arithspin::clifford;

namespace {

// e_{i1} ... e_{ig} multiplied one generator at a time, sorting the word by
// adjacent swaps and cancelling equal neighbours.
template <class Ring>
CliffordElement<typename Ring::value_type> word_product(const CliffordAlgebra<Ring>& alg, std::vector<int> word) {
    const Signature& sig = alg.signature();
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] > word[i + 1]) {
                std::swap(word[i], word[i + 1]);
                sign = -sign;
                changed = true;
            } else if (word[i] == word[i + 1]) {
                sign *= sig.square(word[i]);
                word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
        }
    }
    Blade j = 0;
    for (int i : word) j |= Blade{1} << (i - 1);
    return alg.blade(j, alg.ring().from_int(sign));
}

template <class Alg>
auto random_element(const Alg& alg, std::mt19937_64& rng, int terms = 4) {
    std::uniform_int_distribution<Blade> blade(0, alg.signature().full_mask());
    std::uniform_int_distribution<long> coeff(-5, 5);
    auto x = alg.zero();
    for (int i = 0; i < terms; ++i) x = alg.add(x, alg.blade(blade(rng), alg.ring().from_int(coeff(rng))));
    return x;
}

}  // namespace

TEST(BladeMul, Examples) {
    const Signature s21(2, 1), s30(3, 0);
    EXPECT_EQ(blade_mul(blade_of({1}), blade_of({1}), s21), (BladeProduct{1, 0}));
    EXPECT_EQ(blade_mul(blade_of({3}), blade_of({3}), s21), (BladeProduct{-1, 0}));
    EXPECT_EQ(blade_mul(blade_of({1, 2}), blade_of({2, 3}), s30), (BladeProduct{1, blade_of({1, 3})}));
}

TEST(BladeMul, MatchesWordExpansionExhaustively) {
    for (int d = 1; d <= 5; ++d) {
        for (int m = 0; m <= d; ++m) {
            CliffordAlgebra<IntegerRing> alg(Signature(m, d - m));
            const Blade full = alg.signature().full_mask();
            for (Blade j = 0; j <= full; ++j) {
                for (Blade k = 0; k <= full; ++k) {
                    auto w = blade_indices(j);
                    const auto wk = blade_indices(k);
                    w.insert(w.end(), wk.begin(), wk.end());
                    const auto [s, jk] = blade_mul(j, k, alg.signature());
                    ASSERT_TRUE(alg.equal(alg.blade(jk, s), word_product(alg, w)))
                        << "sig(" << m << "," << d - m << ") J=" << j << " K=" << k;
                }
            }
        }
    }
}

TEST(Mul, Examples) {
    CliffordAlgebra<IntegerRing> a11(Signature(1, 1));
    const auto e1 = a11.generator(1);
    EXPECT_TRUE(a11.mul(a11.add(a11.one(), e1), a11.sub(a11.one(), e1)).is_zero());
    CliffordAlgebra<IntegerRing> a20(Signature(2, 0));
    const auto e12 = a20.blade(blade_of({1, 2}));
    EXPECT_TRUE(a20.equal(a20.mul(e12, e12), a20.scalar(-1)));
    std::mt19937_64 rng(1);
    CliffordAlgebra<IntegerRing> a42(Signature(4, 2));
    for (int i = 0; i < 100; ++i) {
        const auto x = random_element(a42, rng);
        EXPECT_TRUE(a42.equal(a42.mul(x, a42.one()), x));
        EXPECT_TRUE(a42.equal(a42.mul(a42.one(), x), x));
    }
}

TEST(Involutions, Examples) {
    CliffordAlgebra<IntegerRing> alg(Signature(3, 0));
    const auto e12 = alg.blade(blade_of({1, 2}));
    const auto e123 = alg.blade(blade_of({1, 2, 3}));
    EXPECT_TRUE(alg.equal(alg.conjugate(e12), alg.neg(e12)));
    EXPECT_TRUE(alg.equal(alg.iota(e123), alg.neg(e123)));
    EXPECT_TRUE(alg.equal(alg.conjugate(alg.one()), alg.one()));
    EXPECT_EQ(alg.str(alg.add(alg.blade(blade_of({1, 2}), BigInt(3)), alg.scalar(BigInt(-1)))), "-1*e{} + 3*e{1,2}");
}

TEST(Involutions, ConjugationSignExhaustiveUpToDimTen) {
    for (int d = 1; d <= 10; ++d) {
        CliffordAlgebra<IntegerRing> alg(Signature(d / 2, d - d / 2));
        for (Blade j = 0; j <= alg.signature().full_mask(); ++j) {
            // conj(e_{i1}...e_{ig}) = (-e_{ig}) ... (-e_{i1})
            auto w = blade_indices(j);
            std::reverse(w.begin(), w.end());
            auto expected = word_product(alg, w);
            if (w.size() % 2) expected = alg.neg(expected);
            ASSERT_TRUE(alg.equal(alg.conjugate(alg.blade(j)), expected)) << "d=" << d << " J=" << j;
            ASSERT_EQ(conjugate_sign(grade(j)), iota_sign(grade(j)) * grade_sign(grade(j)));
        }
    }
}

template <class Ring>
void algebra_properties(const CliffordAlgebra<Ring>& alg, std::mt19937_64& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        const auto x = random_element(alg, rng), y = random_element(alg, rng), z = random_element(alg, rng);
        ASSERT_TRUE(alg.equal(alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z))));
        const auto xy = alg.mul(x, y);
        ASSERT_TRUE(alg.equal(alg.iota(xy), alg.mul(alg.iota(y), alg.iota(x))));
        ASSERT_TRUE(alg.equal(alg.conjugate(xy), alg.mul(alg.conjugate(y), alg.conjugate(x))));
        ASSERT_TRUE(alg.equal(alg.grade_involution(xy), alg.mul(alg.grade_involution(x), alg.grade_involution(y))));
        ASSERT_TRUE(alg.equal(alg.iota(alg.iota(x)), x));
        ASSERT_TRUE(alg.equal(alg.conjugate(x), alg.iota(alg.grade_involution(x))));
        ASSERT_TRUE(alg.equal(alg.conjugate(x), alg.grade_involution(alg.iota(x))));
    }
}

TEST(Properties, OverIntegersAndFiniteFields) {
    std::mt19937_64 rng(2024);
    for (int d = 1; d <= 6; ++d) {
        algebra_properties(CliffordAlgebra<IntegerRing>(Signature(d / 2, d - d / 2)), rng, 500 / 6);
        algebra_properties(CliffordAlgebra<ModularRing>(Signature(d - 1, 1), ModularRing(3)), rng, 500 / 6);
        algebra_properties(CliffordAlgebra<ModularRing>(Signature(d, 0), ModularRing(5)), rng, 500 / 6);
    }
}

TEST(SpinMembership, Examples) {
    CliffordAlgebra<IntegerRing> alg(Signature(2, 0));
    const auto e12 = alg.blade(blade_of({1, 2}));
    EXPECT_TRUE(alg.is_spin_element(alg.one()));
    EXPECT_TRUE(alg.is_spin_element(e12));
    EXPECT_FALSE(alg.is_spin_element(alg.add(alg.one(), e12)));
    EXPECT_THROW(alg.is_spin_element(alg.generator(1)), std::invalid_argument);
}

TEST(LieAlgebra, Bases) {
    CliffordAlgebra<IntegerRing> z21(Signature(2, 1));
    const auto b = z21.lie_algebra_basis();
    ASSERT_EQ(b.size(), 3u);
    EXPECT_TRUE(z21.equal(b[0], z21.blade(blade_of({1, 2}))));
    EXPECT_TRUE(z21.equal(b[1], z21.blade(blade_of({1, 3}))));
    EXPECT_TRUE(z21.equal(b[2], z21.blade(blade_of({2, 3}))));

    CliffordAlgebra<ModularRing> z4(Signature(2, 2), ModularRing(4));
    const auto b4 = z4.lie_algebra_basis();
    ASSERT_EQ(b4.size(), 8u);
    EXPECT_TRUE(z4.equal(b4[6], z4.scalar(2)));
    EXPECT_TRUE(z4.equal(b4[7], z4.blade(blade_of({1, 2, 3, 4}), 2)));

    CliffordAlgebra<RationalField> q11(Signature(1, 1));
    const auto bq = q11.lie_algebra_basis();
    ASSERT_EQ(bq.size(), 1u);
    EXPECT_TRUE(q11.equal(bq[0], q11.blade(blade_of({1, 2}))));
}

TEST(LieAlgebra, BracketExamplesAndClosure) {
    CliffordAlgebra<IntegerRing> alg(Signature(3, 0));
    const auto e12 = alg.blade(blade_of({1, 2}));
    const auto e23 = alg.blade(blade_of({2, 3}));
    EXPECT_TRUE(alg.bracket(e12, e12).is_zero());
    EXPECT_TRUE(alg.equal(alg.bracket(e12, e23), alg.blade(blade_of({1, 3}), 2)));
    for (int d = 2; d <= 8; ++d) {
        CliffordAlgebra<RationalField> q(Signature(d / 2, d - d / 2));
        const auto basis = q.lie_algebra_basis();
        for (const auto& x : basis)
            for (const auto& y : basis) {
                const auto z = q.bracket(x, y);
                for (const auto& [j, a] : z.terms()) ASSERT_EQ(grade(j), 2) << "d=" << d;
            }
    }
}

TEST(LieAlgebra, DualNumberMembershipOverZ4) {
    using Dual = DualNumbers<ModularRing>;
    const Dual ring(ModularRing(4));
    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 1}, std::pair{2, 1}, std::pair{3, 2}}) {
        CliffordAlgebra<ModularRing> base(Signature(m, n), ModularRing(4));
        CliffordAlgebra<Dual> dual(Signature(m, n), ring);
        for (const auto& x : base.lie_algebra_basis()) {
            auto g = dual.one();
            for (const auto& [j, a] : x.terms()) g = dual.add(g, dual.blade(j, ring.mul(ring.eps(), ring.lift(a))));
            EXPECT_TRUE(dual.is_spin_element(g)) << base.str(x);
        }
        // e(J) with |J| = 4 and unit coefficient is not tangent to Spin.
        if (m + n >= 4) {
            const auto g = dual.add(dual.one(), dual.blade(blade_of({1, 2, 3, 4}), ring.eps()));
            EXPECT_FALSE(dual.is_spin_element(g));
        }
    }
}

namespace {

Mod2Element random_lie_times_four(const Mod2Algebra& alg, std::mt19937_64& rng) {
    const auto basis = alg.lie_algebra_basis();
    std::uniform_int_distribution<long> c(0, static_cast<long>(alg.ring().modulus()) - 1);
    auto x = alg.zero();
    for (const auto& b : basis) x = alg.add(x, alg.scale(alg.ring().from_int(c(rng)), b));
    return alg.scale(4, x);
}

}  // namespace

TEST(ExpLog, ExamplesAndInverse) {
    Mod2Algebra alg(Signature(2, 0), ModularRing(256));
    EXPECT_TRUE(alg.equal(clifford_exp(alg, alg.zero()), alg.one()));
    const auto x = alg.blade(blade_of({1, 2}), 4);
    const auto g = clifford_exp(alg, x);
    EXPECT_TRUE(alg.equal(clifford_log(alg, g), x));
    EXPECT_TRUE(alg.is_spin_element(g));
    // e12^2 = -1, so the scalar part is the cosine series at 4.
    Rational scalar;
    for (long k = 0; k < 8; ++k) scalar += Rational(k % 2 ? -1 : 1) * Rational(pow_int(BigInt(4), 2 * k)) / Rational(factorial(2 * k));
    ASSERT_NE(g.find(0), nullptr);
    EXPECT_EQ(*g.find(0), alg.ring().reduce(scalar));
    EXPECT_THROW(clifford_exp(alg, alg.blade(blade_of({1, 2}), 2)), std::invalid_argument);
    EXPECT_THROW(two_adic_precision(ModularRing(12)), std::invalid_argument);
}

TEST(ExpLog, RandomLieElements) {
    std::mt19937_64 rng(99);
    for (auto [d, N] : {std::pair{3, 6}, std::pair{3, 8}, std::pair{4, 8}, std::pair{5, 6}, std::pair{3, 10}}) {
        Mod2Algebra alg(Signature(d - 1, 1), ModularRing(std::uint64_t{1} << N));
        for (int i = 0; i < 20; ++i) {
            const auto x = random_lie_times_four(alg, rng);
            const auto g = clifford_exp(alg, x);
            ASSERT_TRUE(alg.is_spin_element(g));
            ASSERT_TRUE(alg.equal(alg.mul(g, alg.conjugate(g)), alg.one()));
            ASSERT_TRUE(alg.equal(clifford_log(alg, g), x));
            ASSERT_TRUE(alg.equal(clifford_exp(alg, clifford_log(alg, g)), g));
        }
    }
}
