#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arithspin/exactq.hpp"
#include "arithspin/rational.hpp"

namespace arithspin::ggroups {

/// Spin(m,n) with its derived numerology.
class SpinGroupDescriptor {
public:
    /// Throws std::invalid_argument unless m, n >= 1.
    SpinGroupDescriptor(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int d() const { return m_ + n_; }
    /// floor(d/2): complex rank.
    int ell() const { return d() / 2; }
    int k() const { return m_ / 2; }
    int k2() const { return n_ / 2; }
    /// Dimension of the symmetric space Spin(m,n)/K.
    int dim_x() const { return m_ * n_; }
    /// Fundamental rank ell - k - k2; 1 iff m and n are both odd.
    int delta() const { return ell() - k() - k2(); }
    bool both_odd() const { return m_ % 2 == 1 && n_ % 2 == 1; }

    friend bool operator==(const SpinGroupDescriptor&, const SpinGroupDescriptor&) = default;

private:
    int m_;
    int n_;
};

enum class WeylSeries { B, D };

/// |W(B_l)| = 2^l l!, |W(D_l)| = 2^(l-1) l! (D_1: 1). Rank 0 rejected.
BigInt weyl_order(WeylSeries series, int rank);

/// |W(g_C)| / |W(k_C)| for g = so(m+n), k = so(m) + so(n), from the B/D
/// orders. Equals 2 C(l, k) whenever m and n are not both odd.
Rational weyl_ratio(const SpinGroupDescriptor& desc);

/// |Spin_{m,n}(F_p)| for odd p and d >= 3 (Artin's orders for SO; the
/// covering map has kernel 2 and image of index 2).
BigInt spin_order_fp(const SpinGroupDescriptor& desc, std::uint64_t p);

/// Largest p^(d^2) so_order_bruteforce accepts.
inline constexpr double kBruteForceBudget = 1e8;

/// Counts matrices M over F_p with M^T B M = B and det M = 1 for
/// B = diag(entries mod p). Columns are chosen one at a time subject to the
/// Gram conditions. Throws std::invalid_argument if p^(d^2) exceeds the
/// budget or an entry vanishes mod p.
std::uint64_t so_order_bruteforce(const std::vector<long>& entries, std::uint64_t p);

/// vol_B(Spin(d)) = 2^((3d - d^2)/2) prod_{j=2}^{d} pi^(j/2) / Gamma(j/2).
exactq::PiExact vol_compact_dual(int d);

}  // namespace arithspin::ggroups
