#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arithspin/rational.hpp"

// Local and global invariants of diagonal quadratic forms over Q.
namespace arithspin::qforms {

/// A place of Q: the real place or a finite prime.
class Place {
public:
    static Place infinity() { return Place(0); }
    /// Throws std::invalid_argument unless p is prime.
    static Place finite(std::uint64_t p);
    /// "inf", "oo", "infinity", or a prime number.
    static Place parse(std::string_view text);

    bool is_infinite() const { return prime_ == 0; }
    /// 0 for the infinite place.
    std::uint64_t prime() const { return prime_; }
    std::string str() const { return is_infinite() ? "inf" : std::to_string(prime_); }
    friend bool operator==(const Place&, const Place&) = default;

private:
    explicit Place(std::uint64_t p) : prime_(p) {}
    std::uint64_t prime_;
};

/// Nondegenerate diagonal form <a_1, ..., a_n> over Q.
class DiagonalForm {
public:
    /// Throws std::invalid_argument on an empty list or a zero entry.
    explicit DiagonalForm(std::vector<Rational> entries);
    /// b_{m,n}: m entries +1 followed by n entries -1.
    static DiagonalForm b(int m, int n);
    /// "1,1,-1/2" or the shortcut "b(m,n)".
    static DiagonalForm parse(std::string_view text);

    int dim() const { return static_cast<int>(entries_.size()); }
    const std::vector<Rational>& entries() const { return entries_; }
    Rational discriminant() const;
    /// (number of positive entries, number of negative entries).
    std::pair<int, int> signature() const;
    std::string str() const;

private:
    std::vector<Rational> entries_;
};

/// Canonical square class of a nonzero rational at a place: at an odd prime
/// (valuation mod 2, Legendre symbol of the unit part); at 2 (valuation mod 2,
/// unit part mod 8); at infinity (0, sign).
struct SquareClass {
    int valuation_parity = 0;
    int unit = 1;
    friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

SquareClass square_class(const Rational& a, const Place& v);

/// Hilbert symbol (a, b)_v in {-1, +1}. Throws on a zero argument.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// prod_{i<j} (a_i, a_j)_v.
int hasse_invariant(const DiagonalForm& f, const Place& v);

struct LocalInvariants {
    int dimension = 0;
    SquareClass disc_class;
    int hasse = 1;
    std::optional<std::pair<int, int>> signature;  // only at infinity
    friend bool operator==(const LocalInvariants&, const LocalInvariants&) = default;
};

LocalInvariants local_invariants(const DiagonalForm& f, const Place& v);

/// Q_v-isometry: equal dimension, discriminant class and Hasse invariant
/// (and signature at infinity).
bool qp_equivalent(const DiagonalForm& f, const DiagonalForm& g, const Place& v);

struct WittDecomposition {
    int witt_index = 0;
    int anisotropic_dim = 0;
    friend bool operator==(const WittDecomposition&, const WittDecomposition&) = default;
};

/// Splits off hyperbolic planes by repeated isotropy tests on the
/// invariants (dim, disc, Hasse) of the remaining form.
WittDecomposition witt_decomposition(const DiagonalForm& f, const Place& v);
inline int witt_index(const DiagonalForm& f, const Place& v) { return witt_decomposition(f, v).witt_index; }
inline int anisotropic_dim(const DiagonalForm& f, const Place& v) {
    return witt_decomposition(f, v).anisotropic_dim;
}

bool is_isotropic_local(const DiagonalForm& f, const Place& v);

inline constexpr std::uint64_t kDefaultPrimeSweep = 100;

/// {2} together with the primes dividing any entry's numerator or denominator
/// and every prime up to sweep_bound, ascending.
std::vector<std::uint64_t> relevant_primes(const DiagonalForm& f, std::uint64_t sweep_bound = kDefaultPrimeSweep);

/// Hasse-Minkowski: isotropic over Q iff isotropic at infinity and at every
/// relevant prime; dimension 2 uses "-disc is a rational square".
bool is_isotropic_rational(const DiagonalForm& f, std::uint64_t sweep_bound = kDefaultPrimeSweep);
int witt_index_rational(const DiagonalForm& f, std::uint64_t sweep_bound = kDefaultPrimeSweep);

enum class FpType { Plus, Minus };
std::string to_string(FpType t);

/// Type of b_{m,n} over F_p for even d = m + n: Plus iff the discriminant
/// (-1)^n equals (-1)^{d/2} modulo squares. Throws for odd d or p = 2.
FpType fp_type(int m, int n, std::uint64_t p);

struct GenusComparison {
    bool equal = false;
    /// First failing check ("rank", "p=3", "p=2:det", "p=2:oddity") or
    /// "all p <= <bound> pass".
    std::string witness;
};

/// Z_p-equivalence at every prime of b_{m,n} and b_{m2,n2}. Odd p: Q_p
/// invariants (rank, disc class, Hasse) for p <= prime_bound. p = 2: rank,
/// det square class and signature mod 8 (odd unimodular lattices).
GenusComparison compare_genus_finite_places(int m, int n, int m2, int n2,
                                            std::uint64_t prime_bound = kDefaultPrimeSweep);
inline bool genus_equal_finite_places(int m, int n, int m2, int n2) {
    return compare_genus_finite_places(m, n, m2, n2).equal;
}

/// Primes p <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace arithspin::qforms
