#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arithspin/exactq.hpp"
#include "arithspin/ggroups.hpp"
#include "arithspin/rational.hpp"

// Euler characteristics of the level-4 congruence subgroups Gamma_{m,n} of
// Spin(m,n)(Z), and the l2-invariant data attached to them.
namespace arithspin::euler {

using ggroups::SpinGroupDescriptor;

/// Which branch of the closed formula applies.
enum class FormulaCase { BothOdd, DZeroMod4, DTwoMod4, DOdd };
std::string to_string(FormulaCase c);
FormulaCase formula_case(const SpinGroupDescriptor& desc);

struct EulerResult {
    Rational value;
    std::string factored;  // exactq::factored_str(value)
    int sign = 0;
    SpinGroupDescriptor descriptor;
    FormulaCase case_tag;
};

/// Closed formula: 0 if m, n odd, else
/// (-1)^{mn/2} R(d) C(l,k) prod_{j=1}^{l-1} (2^{2j} - 1) |zeta(1-2j)|.
/// Throws std::invalid_argument unless m, n >= 1 and d >= 3.
EulerResult chi_closed(int m, int n);

/// R(d) for d >= 3.
Rational r_factor(int d);

/// prod_{j=1}^{l-1} (2^{2j} - 1) |zeta(1-2j)|.
Rational zeta_product(int ell);

/// Factors of the adelic volume formula, with the odd-prime Euler product
/// replaced by its exact zeta/L expression.
struct AdelicAssembly {
    Rational tamagawa{1};
    Rational weyl_ratio;
    exactq::PiExact vol_dual;
    Rational local_2_volume;  // 2^{-d(d-1)}
    exactq::PiExact odd_product_exact;
    int sign_factor = 1;

    /// sign * weyl_ratio * tamagawa / (vol_dual * local_2_volume) * odd_product.
    exactq::PiExact total() const;
};

/// Throws std::invalid_argument if m and n are both odd.
AdelicAssembly adelic_assembly(int m, int n);

/// total() of the assembly; throws InvariantViolation on a residual pi power.
Rational adelic_assembly_exact(int m, int n);

struct FloatAssembly {
    int sign = 0;
    double log_abs = 0.0;  // natural log of |chi|
    double value = 0.0;    // may overflow to +-inf for large d

    double relative_error(const Rational& exact) const;
};

/// Same formula with the odd-prime product truncated at p <= prime_bound and
/// each local factor p^{dim G} / |G(F_p)| taken from spin_order_fp.
FloatAssembly adelic_assembly_float(int m, int n, std::uint64_t prime_bound);

/// 0 if m, n are both odd, else (-1)^{mn/2}.
int chi_sign(int m, int n);

/// l2-Betti number, Novikov-Shubin window and l2-torsion sign.
struct L2Profile {
    int dim_x = 0;
    int delta = 0;
    std::optional<int> betti_degree;
    Rational betti_value;
    /// [lo, hi] where alpha_p = delta; empty (nullopt) when delta = 0.
    std::optional<std::pair<int, int>> ns_range;
    int ns_value = 0;
    int torsion_sign = 0;

    /// alpha_p: delta inside ns_range, nullopt (infinity^+) outside.
    std::optional<int> novikov_shubin(int degree) const;
};

L2Profile l2_profile(int m, int n);

/// chi(A * B) = chi(A) + chi(B) - 1.
Rational chi_free_product(const Rational& a, const Rational& b);
/// chi(A x B) = chi(A) chi(B).
Rational chi_direct_product(const Rational& a, const Rational& b);
/// chi(F_r) = 1 - r.
Rational chi_free_group(const BigInt& rank);
/// rho(Gamma x Lambda) = chi(Gamma) rho(Lambda).
Rational rho_product(const Rational& chi, const Rational& rho);

struct SArithmeticReport {
    int sign = 0;
    /// dim X odd: the Euler-Poincare measure vanishes and sign is 0.
    bool ep_measure_vanishes = false;
    int rank_real = 0;
    std::map<std::uint64_t, int> rank_local;  // Q_p-rank for each p in S
    int rank_s = 0;
    int rank_rational = 0;
    /// (-1)^{dim X / 2} (-1)^{rank_Q}; agrees with sign for b_{4,1}, b_{2,3} at S = {2}.
    int rank_rational_sign = 0;
};

/// Sign of chi(Spn(b_{m,n})(Z[1/S])): (-1)^{dim X/2} prod_{p in S} (-1)^{rank_{Q_p}}.
SArithmeticReport s_arithmetic_sign(int m, int n, const std::vector<std::uint64_t>& primes);

}  // namespace arithspin::euler
