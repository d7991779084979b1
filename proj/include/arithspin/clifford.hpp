#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arithspin/rational.hpp"

// Clifford algebra C(V_A, b_{m,n}) of the diagonal +-1 form over a
// commutative coefficient ring A, with the basis e(J) indexed by subsets J of
// {1..d}.
namespace arithspin::clifford {

/// Subset J of {1..d}; bit (i-1) is set iff e_i occurs in e(J).
using Blade = std::uint64_t;

inline constexpr int kMaxDim = 63;
/// Largest dimension for which operations enumerate all 2^d blades.
inline constexpr int kMaxEnumerableDim = 24;

inline int grade(Blade j) { return std::popcount(j); }
Blade blade_of(std::initializer_list<int> indices);
std::vector<int> blade_indices(Blade j);

/// Diagonal form with m entries +1 followed by n entries -1.
class Signature {
public:
    Signature(int m, int n);
    int m() const { return m_; }
    int n() const { return n_; }
    int dim() const { return m_ + n_; }
    /// e_i^2 for 1-based i.
    int square(int i) const { return i <= m_ ? 1 : -1; }
    Blade full_mask() const { return dim() == 64 ? ~Blade{0} : ((Blade{1} << dim()) - 1); }
    bool valid(Blade j) const { return (j & ~full_mask()) == 0; }
    friend bool operator==(const Signature&, const Signature&) = default;

private:
    int m_;
    int n_;
};

struct BladeProduct {
    int sign;
    Blade blade;
    friend bool operator==(const BladeProduct&, const BladeProduct&) = default;
};

/// e(J) * e(K) = sign * e(J xor K).
BladeProduct blade_mul(Blade j, Blade k, const Signature& sig);

/// Signs by which iota, the grade involution and conjugation act on e(J).
inline int iota_sign(int g) { return ((g * (g - 1) / 2) % 2 == 0) ? 1 : -1; }
inline int grade_sign(int g) { return g % 2 == 0 ? 1 : -1; }
inline int conjugate_sign(int g) { return ((g * (g + 1) / 2) % 2 == 0) ? 1 : -1; }

// ---------------------------------------------------------------------------
// Coefficient rings

template <class R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& a, long v) {
    { r.zero() } -> std::convertible_to<typename R::value_type>;
    { r.one() } -> std::convertible_to<typename R::value_type>;
    { r.from_int(v) } -> std::convertible_to<typename R::value_type>;
    { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
    { r.neg(a) } -> std::convertible_to<typename R::value_type>;
    { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
    { r.eq(a, a) } -> std::convertible_to<bool>;
    { r.str(a) } -> std::convertible_to<std::string>;
};

/// Rings that can list generators of ann(2A) = {a : 2a = 0}.
template <class R>
concept HasAnnihilatorOfTwo = CoefficientRing<R> && requires(const R& r) {
    { r.ann2_generators() } -> std::convertible_to<std::vector<typename R::value_type>>;
};

struct IntegerRing {
    using value_type = BigInt;
    BigInt zero() const { return 0; }
    BigInt one() const { return 1; }
    BigInt from_int(long v) const { return v; }
    BigInt add(const BigInt& a, const BigInt& b) const { return a + b; }
    BigInt neg(const BigInt& a) const { return -a; }
    BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
    bool eq(const BigInt& a, const BigInt& b) const { return a == b; }
    std::string str(const BigInt& a) const { return a.get_str(); }
    std::vector<BigInt> ann2_generators() const { return {}; }
};

struct RationalField {
    using value_type = Rational;
    Rational zero() const { return 0; }
    Rational one() const { return 1; }
    Rational from_int(long v) const { return v; }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational neg(const Rational& a) const { return -a; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    bool eq(const Rational& a, const Rational& b) const { return a == b; }
    std::string str(const Rational& a) const { return a.str(); }
    std::vector<Rational> ann2_generators() const { return {}; }
};

/// Z / modulus with canonical representatives in [0, modulus). Covers F_p,
/// Z/4 and Z/2^N.
class ModularRing {
public:
    using value_type = std::uint64_t;
    explicit ModularRing(std::uint64_t modulus);

    std::uint64_t modulus() const { return mod_; }
    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return 1 % mod_; }
    std::uint64_t from_int(long v) const;
    std::uint64_t from_big(const BigInt& v) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % mod_; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : mod_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod_);
    }
    bool eq(std::uint64_t a, std::uint64_t b) const { return a == b; }
    std::string str(std::uint64_t a) const { return std::to_string(a); }
    std::vector<std::uint64_t> ann2_generators() const;
    /// Inverse of an odd residue; requires an even modulus to be meaningful
    /// for the 2-adic use, but works for any unit. Throws on non-units.
    std::uint64_t invert(std::uint64_t a) const;
    /// Reduce an exact rational with a denominator prime to the modulus.
    std::uint64_t reduce(const Rational& r) const;

private:
    std::uint64_t mod_;
};

/// A[eps] with eps^2 = 0; values are pairs (a, b) meaning a + b*eps.
template <CoefficientRing Base>
class DualNumbers {
public:
    using base_value = typename Base::value_type;
    using value_type = std::pair<base_value, base_value>;

    explicit DualNumbers(Base base = {}) : base_(std::move(base)) {}
    const Base& base() const { return base_; }

    value_type zero() const { return {base_.zero(), base_.zero()}; }
    value_type one() const { return {base_.one(), base_.zero()}; }
    value_type from_int(long v) const { return {base_.from_int(v), base_.zero()}; }
    value_type eps() const { return {base_.zero(), base_.one()}; }
    value_type lift(const base_value& a) const { return {a, base_.zero()}; }
    value_type add(const value_type& x, const value_type& y) const {
        return {base_.add(x.first, y.first), base_.add(x.second, y.second)};
    }
    value_type neg(const value_type& x) const { return {base_.neg(x.first), base_.neg(x.second)}; }
    value_type mul(const value_type& x, const value_type& y) const {
        return {base_.mul(x.first, y.first),
                base_.add(base_.mul(x.first, y.second), base_.mul(x.second, y.first))};
    }
    bool eq(const value_type& x, const value_type& y) const {
        return base_.eq(x.first, y.first) && base_.eq(x.second, y.second);
    }
    std::string str(const value_type& x) const {
        return "(" + base_.str(x.first) + "+" + base_.str(x.second) + "*eps)";
    }

private:
    Base base_;
};

// ---------------------------------------------------------------------------
// Elements

/// Finitely supported map Blade -> coefficient. Zero coefficients are never
/// stored; elements are created and normalized by a CliffordAlgebra.
template <class Scalar>
class CliffordElement {
public:
    explicit CliffordElement(Signature sig) : sig_(sig) {}

    const Signature& signature() const { return sig_; }
    const std::map<Blade, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    /// Coefficient lookup; nullptr when the blade is absent.
    const Scalar* find(Blade j) const {
        auto it = terms_.find(j);
        return it == terms_.end() ? nullptr : &it->second;
    }

private:
    template <CoefficientRing R>
    friend class CliffordAlgebra;

    Signature sig_;
    std::map<Blade, Scalar> terms_;
};

template <CoefficientRing Ring>
class CliffordAlgebra {
public:
    using Scalar = typename Ring::value_type;
    using Element = CliffordElement<Scalar>;

    explicit CliffordAlgebra(Signature sig, Ring ring = {}) : sig_(sig), ring_(std::move(ring)) {}

    const Signature& signature() const { return sig_; }
    const Ring& ring() const { return ring_; }

    Element zero() const { return Element(sig_); }
    Element one() const { return scalar(ring_.one()); }
    Element scalar(const Scalar& a) const { return blade(0, a); }
    Element blade(Blade j) const { return blade(j, ring_.one()); }
    Element blade(Blade j, const Scalar& a) const {
        if (!sig_.valid(j)) throw std::invalid_argument("blade outside the signature's dimension");
        Element x(sig_);
        accumulate(x, j, a);
        return x;
    }
    /// Basis vector e_i, 1-based.
    Element generator(int i) const {
        if (i < 1 || i > sig_.dim()) throw std::invalid_argument("generator index out of range");
        return blade(Blade{1} << (i - 1));
    }
    Element from_terms(const std::vector<std::pair<Blade, Scalar>>& terms) const {
        Element x(sig_);
        for (const auto& [j, a] : terms) {
            if (!sig_.valid(j)) throw std::invalid_argument("blade outside the signature's dimension");
            accumulate(x, j, a);
        }
        return x;
    }

    Element add(const Element& x, const Element& y) const {
        check(x);
        check(y);
        Element out = x;
        for (const auto& [j, a] : y.terms_) accumulate(out, j, a);
        return out;
    }
    Element neg(const Element& x) const { return scale(ring_.neg(ring_.one()), x); }
    Element sub(const Element& x, const Element& y) const { return add(x, neg(y)); }
    Element scale(const Scalar& c, const Element& x) const {
        check(x);
        Element out(sig_);
        for (const auto& [j, a] : x.terms_) accumulate(out, j, ring_.mul(c, a));
        return out;
    }

    Element mul(const Element& x, const Element& y) const {
        check(x);
        check(y);
        Element out(sig_);
        const Scalar minus_one = ring_.neg(ring_.one());
        for (const auto& [j, a] : x.terms_) {
            for (const auto& [k, b] : y.terms_) {
                const auto [s, jk] = blade_mul(j, k, sig_);
                Scalar c = ring_.mul(a, b);
                if (s < 0) c = ring_.mul(minus_one, c);
                accumulate(out, jk, c);
            }
        }
        return out;
    }

    Element pow(const Element& x, unsigned e) const {
        Element out = one();
        for (unsigned i = 0; i < e; ++i) out = mul(out, x);
        return out;
    }

    /// Anti-automorphism fixing V: e(J) -> (-1)^{|J|(|J|-1)/2} e(J).
    Element iota(const Element& x) const { return signed_by(x, iota_sign); }
    /// x0 + x1 -> x0 - x1.
    Element grade_involution(const Element& x) const { return signed_by(x, grade_sign); }
    /// iota composed with the grade involution: e(J) -> (-1)^{|J|(|J|+1)/2} e(J).
    Element conjugate(const Element& x) const { return signed_by(x, conjugate_sign); }

    Element bracket(const Element& x, const Element& y) const { return sub(mul(x, y), mul(y, x)); }

    bool equal(const Element& x, const Element& y) const {
        check(x);
        check(y);
        if (x.terms_.size() != y.terms_.size()) return false;
        auto it = y.terms_.begin();
        for (const auto& [j, a] : x.terms_) {
            if (it->first != j || !ring_.eq(it->second, a)) return false;
            ++it;
        }
        return true;
    }

    bool is_even(const Element& x) const {
        for (const auto& [j, a] : x.terms_)
            if (grade(j) % 2 != 0) return false;
        return true;
    }
    bool is_vector(const Element& x) const {
        for (const auto& [j, a] : x.terms_)
            if (grade(j) != 1) return false;
        return true;
    }

    /// g in Spn(b)(A): g even, g * conj(g) = 1 and g e_i conj(g) in V_A for
    /// every basis vector. Throws std::invalid_argument on odd support.
    bool is_spin_element(const Element& g) const {
        check(g);
        if (!is_even(g)) throw std::invalid_argument("is_spin_element: element has odd-grade support");
        const Element gbar = conjugate(g);
        if (!equal(mul(g, gbar), one())) return false;
        for (int i = 1; i <= sig_.dim(); ++i) {
            if (!is_vector(mul(mul(g, generator(i)), gbar))) return false;
        }
        return true;
    }

    /// Generators of Lie(Spn)(A): e(J) for |J| = 2, and a e(J) for even
    /// |J| != 2 with a running over generators of ann(2A).
    std::vector<Element> lie_algebra_basis() const
        requires HasAnnihilatorOfTwo<Ring>
    {
        std::vector<Element> out;
        const int d = sig_.dim();
        for (int i = 0; i < d; ++i)
            for (int k = i + 1; k < d; ++k) out.push_back(blade((Blade{1} << i) | (Blade{1} << k)));
        const auto ann = ring_.ann2_generators();
        if (ann.empty()) return out;
        if (d > kMaxEnumerableDim) throw std::invalid_argument("lie_algebra_basis: dimension too large to enumerate");
        for (const auto& a : ann) {
            for (Blade j = 0; j <= sig_.full_mask(); ++j) {
                const int g = grade(j);
                if (g % 2 == 0 && g != 2) {
                    Element x = blade(j, a);
                    if (!x.is_zero()) out.push_back(std::move(x));
                }
            }
        }
        return out;
    }

    /// "3*e{1,2} + -1*e{}"; "0" for the zero element.
    std::string str(const Element& x) const {
        if (x.terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [j, a] : x.terms_) {
            if (!first) os << " + ";
            first = false;
            os << ring_.str(a) << "*e{";
            bool inner = true;
            for (int i : blade_indices(j)) {
                if (!inner) os << ',';
                inner = false;
                os << i;
            }
            os << '}';
        }
        return os.str();
    }

private:
    void check(const Element& x) const {
        if (!(x.sig_ == sig_)) throw std::invalid_argument("Clifford element has a different signature");
    }

    void accumulate(Element& x, Blade j, const Scalar& a) const {
        auto it = x.terms_.find(j);
        if (it == x.terms_.end()) {
            if (!ring_.eq(a, ring_.zero())) x.terms_.emplace(j, a);
            return;
        }
        it->second = ring_.add(it->second, a);
        if (ring_.eq(it->second, ring_.zero())) x.terms_.erase(it);
    }

    template <class SignFn>
    Element signed_by(const Element& x, SignFn sign) const {
        check(x);
        Element out(sig_);
        for (const auto& [j, a] : x.terms_) accumulate(out, j, sign(grade(j)) > 0 ? a : ring_.neg(a));
        return out;
    }

    Signature sig_;
    Ring ring_;
};

// ---------------------------------------------------------------------------
// Truncated 2-adic exponential and logarithm on C_0 over Z/2^N.

using Mod2Algebra = CliffordAlgebra<ModularRing>;
using Mod2Element = CliffordElement<std::uint64_t>;

/// exp(x) = sum x^k / k! for even x with x = 0 mod 4, computed over exact
/// rationals from the integer lift of x and reduced mod 2^N. Throws
/// std::invalid_argument on a precondition violation and std::domain_error
/// if a coefficient with even denominator shows up.
Mod2Element clifford_exp(const Mod2Algebra& alg, const Mod2Element& x);

/// log(g) = sum (-1)^{k-1} a^k / k with a = g - 1, for even g = 1 mod 4.
Mod2Element clifford_log(const Mod2Algebra& alg, const Mod2Element& g);

/// Exponent N of a modulus 2^N; throws unless the ring is Z/2^N with N >= 3.
int two_adic_precision(const ModularRing& ring);

}  // namespace arithspin::clifford
