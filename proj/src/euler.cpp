#include "arithspin/euler.hpp"

#include <cmath>
#include <stdexcept>

#include "arithspin/errors.hpp"
#include "arithspin/qforms.hpp"

namespace arithspin::euler {

using exactq::PiExact;

namespace {

SpinGroupDescriptor checked_descriptor(int m, int n) {
    SpinGroupDescriptor desc(m, n);
    if (desc.d() < 3) throw std::invalid_argument("Euler characteristic needs d = m + n >= 3");
    return desc;
}

int minus_one_pow(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::string to_string(FormulaCase c) {
    switch (c) {
        case FormulaCase::BothOdd: return "both_odd";
        case FormulaCase::DZeroMod4: return "d_0_mod_4";
        case FormulaCase::DTwoMod4: return "d_2_mod_4";
        case FormulaCase::DOdd: return "d_odd";
    }
    return "unknown";
}

FormulaCase formula_case(const SpinGroupDescriptor& desc) {
    if (desc.both_odd()) return FormulaCase::BothOdd;
    if (desc.d() % 2 == 1) return FormulaCase::DOdd;
    return desc.d() % 4 == 0 ? FormulaCase::DZeroMod4 : FormulaCase::DTwoMod4;
}

Rational r_factor(int d) {
    if (d < 3) throw std::invalid_argument("r_factor: need d >= 3");
    const long l = d / 2;
    if (d % 2 == 1) {
        return pow2(5 * l * l) * (pow2(d - 1) - Rational(1)) *
               exactq::zeta_negative_odd(static_cast<unsigned>((d - 1) / 2)).abs();
    }
    if (d % 4 == 0) {
        return pow2(5 * l * l - 4 * l) * (pow2(l) - Rational(1)) *
               exactq::zeta_negative_odd(static_cast<unsigned>(l / 2)).abs();
    }
    if (l % 2 == 0) throw InvariantViolation("r_factor: d = 2 mod 4 must give odd l");
    return pow2(5 * l * l - 5 * l + 1) * exactq::gen_bernoulli_mod4(static_cast<unsigned>(l)).abs() /
           Rational(l);
}

Rational zeta_product(int ell) {
    Rational acc(1);
    for (int j = 1; j < ell; ++j)
        acc *= (pow2(2L * j) - Rational(1)) * exactq::zeta_negative_odd(static_cast<unsigned>(j)).abs();
    return acc;
}

EulerResult chi_closed(int m, int n) {
    const SpinGroupDescriptor desc = checked_descriptor(m, n);
    const FormulaCase c = formula_case(desc);
    Rational value;
    if (c != FormulaCase::BothOdd) {
        const long half_dim = desc.dim_x() / 2;
        value = Rational(minus_one_pow(half_dim)) * r_factor(desc.d()) *
                Rational(binomial(static_cast<unsigned long>(desc.ell()), static_cast<unsigned long>(desc.k()))) *
                zeta_product(desc.ell());
    }
    return {value, exactq::factored_str(value), value.sign(), desc, c};
}

PiExact AdelicAssembly::total() const {
    return PiExact(Rational(sign_factor) * weyl_ratio * tamagawa) / (vol_dual * PiExact(local_2_volume)) *
           odd_product_exact;
}

AdelicAssembly adelic_assembly(int m, int n) {
    const SpinGroupDescriptor desc = checked_descriptor(m, n);
    if (desc.both_odd()) throw std::invalid_argument("adelic_assembly: m and n both odd (chi vanishes)");
    if (desc.dim_x() % 2 != 0) throw InvariantViolation("adelic_assembly: odd dim X with m, n not both odd");

    const int d = desc.d();
    const int l = desc.ell();
    AdelicAssembly a;
    a.weyl_ratio = ggroups::weyl_ratio(desc);
    a.vol_dual = ggroups::vol_compact_dual(d);
    a.local_2_volume = pow2(-static_cast<long>(d) * (d - 1));
    a.sign_factor = minus_one_pow(desc.dim_x() / 2);

    // prod_{p odd} |G(F_p)|^{-1} p^{dim G}, case by case.
    auto zeta_factor = [](int j) {  // zeta(2j)(1 - 2^{-2j})
        return exactq::zeta_even_exact(static_cast<unsigned>(j)) * PiExact(Rational(1) - pow2(-2L * j));
    };
    PiExact prod(Rational(1));
    const int full = (d % 2 == 1) ? l : l - 1;
    for (int j = 1; j <= full; ++j) prod *= zeta_factor(j);
    if (d % 4 == 0) {
        prod *= exactq::zeta_even_exact(static_cast<unsigned>(l / 2)) * PiExact(Rational(1) - pow2(-l));
    } else if (d % 2 == 0) {
        prod *= exactq::l_psi_exact_odd(static_cast<unsigned>(l));
    }
    a.odd_product_exact = prod;
    return a;
}

Rational adelic_assembly_exact(int m, int n) {
    const PiExact total = adelic_assembly(m, n).total();
    if (!total.is_rational())
        throw InvariantViolation("adelic assembly left a residual pi power: " + total.str());
    return total.coeff();
}

double FloatAssembly::relative_error(const Rational& exact) const {
    if (exact.is_zero()) return sign == 0 ? 0.0 : HUGE_VAL;
    if (sign != exact.sign()) return HUGE_VAL;
    return std::fabs(std::expm1(log_abs - exact.log_abs()));
}

FloatAssembly adelic_assembly_float(int m, int n, std::uint64_t prime_bound) {
    const AdelicAssembly a = adelic_assembly(m, n);
    const SpinGroupDescriptor desc(m, n);
    const auto dim_g = static_cast<unsigned long>(desc.d() * (desc.d() - 1) / 2);

    double log_odd = 0.0;
    for (std::uint64_t p : qforms::primes_up_to(prime_bound)) {
        if (p == 2) continue;
        const BigInt order = ggroups::spin_order_fp(desc, p);
        const BigInt scale = pow_int(BigInt(std::to_string(p)), dim_g);
        log_odd += std::log1p(Rational(scale - order, order).to_double());
    }
    FloatAssembly out;
    out.sign = a.sign_factor * a.weyl_ratio.sign();
    out.log_abs = a.weyl_ratio.log_abs() - a.vol_dual.log_abs() - a.local_2_volume.log_abs() + log_odd;
    out.value = out.sign * std::exp(out.log_abs);
    return out;
}

int chi_sign(int m, int n) {
    const SpinGroupDescriptor desc(m, n);
    if (desc.delta() == 1) return 0;
    return minus_one_pow(desc.dim_x() / 2);
}

std::optional<int> L2Profile::novikov_shubin(int degree) const {
    if (ns_range && degree >= ns_range->first && degree <= ns_range->second) return ns_value;
    return std::nullopt;
}

L2Profile l2_profile(int m, int n) {
    const SpinGroupDescriptor desc = checked_descriptor(m, n);
    L2Profile p;
    p.dim_x = desc.dim_x();
    p.delta = desc.delta();
    p.ns_value = p.delta;
    if (p.delta == 0) {
        p.betti_degree = p.dim_x / 2;
        p.betti_value = chi_closed(m, n).value.abs();
    } else {
        p.ns_range = std::make_pair((p.dim_x - p.delta) / 2, (p.dim_x + p.delta) / 2 - 1);
        p.torsion_sign = minus_one_pow((p.dim_x - 1) / 2);
    }
    return p;
}

Rational chi_free_product(const Rational& a, const Rational& b) { return a + b - Rational(1); }
Rational chi_direct_product(const Rational& a, const Rational& b) { return a * b; }
Rational chi_free_group(const BigInt& rank) { return Rational(1) - Rational(rank); }
Rational rho_product(const Rational& chi, const Rational& rho) { return chi * rho; }

SArithmeticReport s_arithmetic_sign(int m, int n, const std::vector<std::uint64_t>& primes) {
    const SpinGroupDescriptor desc(m, n);
    const qforms::DiagonalForm form = qforms::DiagonalForm::b(m, n);
    SArithmeticReport r;
    r.rank_real = std::min(m, n);
    r.rank_s = r.rank_real;
    int local_parity = 0;
    for (std::uint64_t p : primes) {
        const int rank = qforms::witt_index(form, qforms::Place::finite(p));
        if (!r.rank_local.emplace(p, rank).second) continue;
        r.rank_s += rank;
        local_parity += rank;
    }
    r.rank_rational = qforms::witt_index_rational(form);
    if (desc.dim_x() % 2 != 0) {
        r.ep_measure_vanishes = true;
        return r;
    }
    const int base = minus_one_pow(desc.dim_x() / 2);
    r.sign = base * minus_one_pow(local_parity);
    r.rank_rational_sign = base * minus_one_pow(r.rank_rational);
    return r;
}

}  // namespace arithspin::euler
