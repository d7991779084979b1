#pragma once

#include <string>
#include <vector>

#include "arithspin/euler.hpp"
#include "arithspin/ggroups.hpp"

// Profinite commensurability of pairs Gamma_{m,n}, Gamma_{m2,n2}, detected
// through local equivalence of b_{m,n} and b_{m2,n2} at every finite prime.
namespace arithspin::profinite {

using ggroups::SpinGroupDescriptor;

struct CommensurabilityReport {
    SpinGroupDescriptor first;
    SpinGroupDescriptor second;
    bool locally_equivalent = false;
    std::string witness;
    int witt_rational_first = 0;
    int witt_rational_second = 0;
    /// Both rational Witt indices >= 2: trivial congruence kernel, so local
    /// equivalence gives profinite commensurability unconditionally.
    bool congruence_kernel_trivial = false;
    /// "profinitely commensurable", "locally equivalent (commensurability
    /// conditional on congruence kernel)" or "not locally equivalent".
    std::string conclusion;
    bool dim_mod4_consistent = false;
    bool delta_consistent = false;
    bool sign_consistent = false;
    euler::EulerResult chi_first;
    euler::EulerResult chi_second;
};

/// Throws InvariantViolation if a locally equivalent pair breaks the
/// dim X mod 4 / delta / sign(chi) conclusions.
CommensurabilityReport profinitely_commensurable(int m, int n, int m2, int n2);

struct ClassSweep {
    int d_max = 0;
    /// Local-equivalence classes, each sorted by m ascending; classes ordered
    /// by (d, smallest m).
    std::vector<std::vector<SpinGroupDescriptor>> classes;
    /// Every unordered pair (in a class) that was checked, ordered by (d, m, m2).
    std::vector<CommensurabilityReport> pairs;
    std::vector<std::string> violations;
    /// delta = 0 pairs whose chi ratio is not a power of 2 (observation only).
    std::vector<std::string> non_power_of_two_ratios;
};

/// All (m,n) with m, n >= 1 and 3 <= m + n <= d_max, grouped by local
/// equivalence. Violations are collected rather than thrown.
ClassSweep sweep_theorem_frank_dim(int d_max);

/// Locally equivalent pairs whose Euler characteristics are nonzero and differ.
std::vector<CommensurabilityReport> sweep_euler_not_profinite(int d_max);

/// True if r is +-2^k for some integer k.
bool is_power_of_two_ratio(const Rational& r);

}  // namespace arithspin::profinite
