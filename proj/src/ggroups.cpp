#include "arithspin/ggroups.hpp"

#include <cmath>
#include <stdexcept>

#include "arithspin/qforms.hpp"

namespace arithspin::ggroups {

using exactq::PiExact;

SpinGroupDescriptor::SpinGroupDescriptor(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1) throw std::invalid_argument("SpinGroupDescriptor: need m, n >= 1");
}

BigInt weyl_order(WeylSeries series, int rank) {
    if (rank < 1) throw std::invalid_argument("weyl_order: rank must be >= 1");
    const auto r = static_cast<unsigned long>(rank);
    const BigInt f = factorial(r);
    if (series == WeylSeries::B) return pow_int(2, r) * f;
    return pow_int(2, r - 1) * f;
}

namespace {

// Weyl group order of so(dim, C); the zero algebra and so(2) have trivial
// Weyl group.
BigInt so_weyl_order(int dim) {
    const int rank = dim / 2;
    if (rank == 0) return 1;
    return weyl_order(dim % 2 == 0 ? WeylSeries::D : WeylSeries::B, rank);
}

BigInt ipow(std::uint64_t p, unsigned long e) { return pow_int(BigInt(std::to_string(p)), e); }

}  // namespace

Rational weyl_ratio(const SpinGroupDescriptor& desc) {
    return Rational(so_weyl_order(desc.d()), so_weyl_order(desc.m()) * so_weyl_order(desc.n()));
}

BigInt spin_order_fp(const SpinGroupDescriptor& desc, std::uint64_t p) {
    if (p == 2) throw std::invalid_argument("spin_order_fp: p = 2 is not covered");
    if (desc.d() < 3) throw std::invalid_argument("spin_order_fp: need d >= 3");
    const auto l = static_cast<unsigned long>(desc.ell());
    BigInt prod = 1;
    if (desc.d() % 2 == 1) {
        for (unsigned long j = 1; j <= l; ++j) prod *= ipow(p, 2 * j) - 1;
        return ipow(p, l * l) * prod;
    }
    for (unsigned long j = 1; j < l; ++j) prod *= ipow(p, 2 * j) - 1;
    // (p^l - 1) for plus type, (p^l + 1) for minus type.
    const bool plus = qforms::fp_type(desc.m(), desc.n(), p) == qforms::FpType::Plus;
    const BigInt middle = plus ? BigInt(ipow(p, l) - 1) : BigInt(ipow(p, l) + 1);
    return ipow(p, l * (l - 1)) * middle * prod;
}

namespace {

using Vec = std::vector<std::uint64_t>;

std::int64_t det_mod_p(std::vector<Vec> a, std::uint64_t p) {
    const std::size_t n = a.size();
    std::uint64_t det = 1;
    auto inv = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = (p - det) % p;
        }
        det = det * a[c][c] % p;
        const std::uint64_t ic = inv(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const std::uint64_t f = a[r][c] * ic % p;
            for (std::size_t k = c; k < n; ++k) a[r][k] = (a[r][k] + (p - f) * a[c][k]) % p;
        }
    }
    return static_cast<std::int64_t>(det);
}

}  // namespace

std::uint64_t so_order_bruteforce(const std::vector<long>& entries, std::uint64_t p) {
    const std::size_t d = entries.size();
    if (d == 0) throw std::invalid_argument("so_order_bruteforce: empty form");
    if (p < 3 || !exactq::is_prime(BigInt(std::to_string(p))))
        throw std::invalid_argument("so_order_bruteforce: p must be an odd prime");
    if (static_cast<double>(d * d) * std::log(static_cast<double>(p)) > std::log(kBruteForceBudget) + 1e-9)
        throw std::invalid_argument("so_order_bruteforce: p^(d^2) exceeds the enumeration budget");

    Vec diag(d);
    for (std::size_t i = 0; i < d; ++i) {
        const long r = ((entries[i] % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p);
        if (r == 0) throw std::invalid_argument("so_order_bruteforce: entry vanishes mod p");
        diag[i] = static_cast<std::uint64_t>(r);
    }

    // All vectors of F_p^d.
    std::vector<Vec> vectors;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    vectors.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        Vec v(d);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = c % p;
            c /= p;
        }
        vectors.push_back(std::move(v));
    }
    auto form = [&](const Vec& x, const Vec& y) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < d; ++i) s = (s + diag[i] * x[i] % p * y[i]) % p;
        return s;
    };

    // Columns M e_j must satisfy <Me_j, Me_j> = B_jj and <Me_i, Me_j> = 0.
    std::vector<Vec> columns;
    std::uint64_t count = 0;
    auto extend = [&](auto&& self, std::size_t j) -> void {
        if (j == d) {
            std::vector<Vec> rows(d, Vec(d));
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) rows[r][c] = columns[c][r];
            if (det_mod_p(std::move(rows), p) == 1) ++count;
            return;
        }
        for (const auto& v : vectors) {
            if (form(v, v) != diag[j]) continue;
            bool orthogonal = true;
            for (const auto& c : columns) {
                if (form(c, v) != 0) {
                    orthogonal = false;
                    break;
                }
            }
            if (!orthogonal) continue;
            columns.push_back(v);
            self(self, j + 1);
            columns.pop_back();
        }
    };
    extend(extend, 0);
    return count;
}

PiExact vol_compact_dual(int d) {
    if (d < 2) throw std::invalid_argument("vol_compact_dual: need d >= 2");
    PiExact vol(pow2((3L * d - static_cast<long>(d) * d) / 2));
    for (int j = 2; j <= d; ++j) vol *= PiExact::pi_power_half(j) / exactq::gamma_half(static_cast<unsigned>(j));
    return vol;
}

}  // namespace arithspin::ggroups
