#include "arithspin/qforms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "arithspin/exactq.hpp"

namespace arithspin::qforms {

namespace {

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

// Same square class as r, as an integer.
BigInt integer_representative(const Rational& r) { return r.num() * r.den(); }

struct Split {
    unsigned long valuation;
    BigInt unit;
};

Split split_at(const BigInt& a, const BigInt& p) {
    Split s{0, 0};
    s.valuation = mpz_remove(s.unit.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return s;
}

int legendre(const BigInt& u, const BigInt& p) { return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()); }

int mod8(const BigInt& u) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
    return static_cast<int>(r.get_ui());
}

int eps2(int u8) { return ((u8 - 1) / 2) % 2; }                // (u - 1)/2 mod 2
int omega2(int u8) { return ((u8 * u8 - 1) / 8) % 2; }         // (u^2 - 1)/8 mod 2

bool is_rational_square(const Rational& r) {
    if (r.sign() <= 0) return false;
    return mpz_perfect_square_p(r.num().get_mpz_t()) && mpz_perfect_square_p(r.den().get_mpz_t());
}

// Isotropy of a form over Q_v given only (dim, disc, Hasse) at v.
bool isotropic_from_invariants(int dim, const Rational& disc, int hasse, const Place& v) {
    if (dim <= 1) return false;
    if (dim == 2) return square_class(disc, v) == square_class(Rational(-1), v);
    if (dim == 3) return hilbert_symbol(Rational(-1), -disc, v) == hasse;
    if (dim == 4)
        return !(square_class(disc, v) == square_class(Rational(1), v) &&
                 hasse == -hilbert_symbol(Rational(-1), Rational(-1), v));
    return true;
}

// f = H + g with H = <1,-1>: disc(g) = -disc(f), hasse(g) = hasse(f) (-1, disc(g)).
struct LocalState {
    int dim;
    Rational disc;
    int hasse;

    void peel(const Place& v) {
        dim -= 2;
        disc = -disc;
        hasse *= hilbert_symbol(Rational(-1), disc, v);
    }
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

// ---------------------------------------------------------------------------

Place Place::finite(std::uint64_t p) {
    if (!exactq::is_prime(big(p))) throw std::invalid_argument("Place: " + std::to_string(p) + " is not prime");
    return Place(p);
}

Place Place::parse(std::string_view text) {
    std::string s = trim(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "inf" || s == "oo" || s == "infinity" || s == "∞") return infinity();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("Place: expected a prime or 'inf', got '" + s + "'");
    return finite(std::stoull(s));
}

DiagonalForm::DiagonalForm(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("DiagonalForm: no entries");
    for (const auto& a : entries_)
        if (a.is_zero()) throw std::invalid_argument("DiagonalForm: zero entry");
}

DiagonalForm DiagonalForm::b(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("b(m,n): negative count");
    std::vector<Rational> e(static_cast<std::size_t>(m), Rational(1));
    e.insert(e.end(), static_cast<std::size_t>(n), Rational(-1));
    return DiagonalForm(std::move(e));
}

DiagonalForm DiagonalForm::parse(std::string_view text) {
    const std::string s = trim(text);
    if (s.size() > 2 && s[0] == 'b' && s[1] == '(') {
        const auto comma = s.find(',');
        if (comma == std::string::npos || s.back() != ')')
            throw std::invalid_argument("DiagonalForm: expected b(m,n), got '" + s + "'");
        try {
            return b(std::stoi(s.substr(2, comma - 2)), std::stoi(s.substr(comma + 1, s.size() - comma - 2)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("DiagonalForm: expected b(m,n), got '" + s + "'");
        }
    }
    std::vector<Rational> entries;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(Rational::parse(item));
    return DiagonalForm(std::move(entries));
}

Rational DiagonalForm::discriminant() const {
    Rational d(1);
    for (const auto& a : entries_) d *= a;
    return d;
}

std::pair<int, int> DiagonalForm::signature() const {
    int pos = 0;
    for (const auto& a : entries_) pos += a.sign() > 0 ? 1 : 0;
    return {pos, dim() - pos};
}

std::string DiagonalForm::str() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += entries_[i].str();
    }
    return out;
}

SquareClass square_class(const Rational& a, const Place& v) {
    if (a.is_zero()) throw std::invalid_argument("square_class: zero");
    if (v.is_infinite()) return {0, a.sign()};
    const BigInt p = big(v.prime());
    const auto s = split_at(integer_representative(a), p);
    const int parity = static_cast<int>(s.valuation % 2);
    if (v.prime() == 2) return {parity, mod8(s.unit)};
    return {parity, legendre(s.unit, p)};
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (v.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;

    const BigInt p = big(v.prime());
    const auto [alpha, u] = split_at(integer_representative(a), p);
    const auto [beta, w] = split_at(integer_representative(b), p);
    if (v.prime() == 2) {
        const int u8 = mod8(u), w8 = mod8(w);
        const unsigned long e = static_cast<unsigned long>(eps2(u8) * eps2(w8)) +
                                alpha * static_cast<unsigned long>(omega2(w8)) +
                                beta * static_cast<unsigned long>(omega2(u8));
        return e % 2 == 0 ? 1 : -1;
    }
    int s = 1;
    const unsigned long half = static_cast<unsigned long>((v.prime() - 1) / 2 % 2);
    if ((alpha * beta * half) % 2 == 1) s = -s;
    if (beta % 2 == 1) s *= legendre(u, p);
    if (alpha % 2 == 1) s *= legendre(w, p);
    return s;
}

int hasse_invariant(const DiagonalForm& f, const Place& v) {
    int h = 1;
    const auto& e = f.entries();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) h *= hilbert_symbol(e[i], e[j], v);
    return h;
}

LocalInvariants local_invariants(const DiagonalForm& f, const Place& v) {
    LocalInvariants inv;
    inv.dimension = f.dim();
    inv.disc_class = square_class(f.discriminant(), v);
    inv.hasse = hasse_invariant(f, v);
    if (v.is_infinite()) inv.signature = f.signature();
    return inv;
}

bool qp_equivalent(const DiagonalForm& f, const DiagonalForm& g, const Place& v) {
    return local_invariants(f, v) == local_invariants(g, v);
}

WittDecomposition witt_decomposition(const DiagonalForm& f, const Place& v) {
    if (v.is_infinite()) {
        const auto [pos, neg] = f.signature();
        const int w = std::min(pos, neg);
        return {w, f.dim() - 2 * w};
    }
    LocalState s{f.dim(), f.discriminant(), hasse_invariant(f, v)};
    int witt = 0;
    while (isotropic_from_invariants(s.dim, s.disc, s.hasse, v)) {
        s.peel(v);
        ++witt;
    }
    return {witt, s.dim};
}

bool is_isotropic_local(const DiagonalForm& f, const Place& v) { return witt_index(f, v) > 0; }

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

std::vector<std::uint64_t> relevant_primes(const DiagonalForm& f, std::uint64_t sweep_bound) {
    std::set<std::uint64_t> ps{2};
    for (auto p : primes_up_to(sweep_bound)) ps.insert(p);
    auto add_factors = [&](const BigInt& n) {
        if (abs(n) == 1) return;
        for (const auto& [p, e] : exactq::factor(n).factors) {
            if (!mpz_fits_ulong_p(p.get_mpz_t()))
                throw std::invalid_argument("relevant_primes: prime factor exceeds 64 bits");
            ps.insert(p.get_ui());
        }
    };
    for (const auto& a : f.entries()) {
        add_factors(a.num());
        add_factors(a.den());
    }
    return {ps.begin(), ps.end()};
}

namespace {

struct GlobalState {
    int dim;
    Rational disc;
    int pos;
    int neg;
    std::map<std::uint64_t, int> hasse;  // over the relevant primes

    bool isotropic() const {
        if (dim <= 1) return false;
        if (dim == 2) return is_rational_square(-disc);
        if (pos == 0 || neg == 0) return false;
        for (const auto& [p, h] : hasse)
            if (!isotropic_from_invariants(dim, disc, h, Place::finite(p))) return false;
        return true;
    }

    void peel() {
        dim -= 2;
        disc = -disc;
        --pos;
        --neg;
        for (auto& [p, h] : hasse) h *= hilbert_symbol(Rational(-1), disc, Place::finite(p));
    }
};

GlobalState global_state(const DiagonalForm& f, std::uint64_t sweep_bound) {
    const auto [pos, neg] = f.signature();
    GlobalState s{f.dim(), f.discriminant(), pos, neg, {}};
    for (auto p : relevant_primes(f, sweep_bound)) s.hasse[p] = hasse_invariant(f, Place::finite(p));
    return s;
}

}  // namespace

bool is_isotropic_rational(const DiagonalForm& f, std::uint64_t sweep_bound) {
    return global_state(f, sweep_bound).isotropic();
}

int witt_index_rational(const DiagonalForm& f, std::uint64_t sweep_bound) {
    GlobalState s = global_state(f, sweep_bound);
    int witt = 0;
    while (s.isotropic()) {
        s.peel();
        ++witt;
    }
    return witt;
}

std::string to_string(FpType t) { return t == FpType::Plus ? "plus" : "minus"; }

FpType fp_type(int m, int n, std::uint64_t p) {
    if (m < 0 || n < 0 || (m + n) % 2 != 0 || m + n < 2)
        throw std::invalid_argument("fp_type: need m, n >= 0 with m + n even and positive");
    if (p == 2 || !exactq::is_prime(big(p))) throw std::invalid_argument("fp_type: p must be an odd prime");
    const int exponent = n + (m + n) / 2;
    if (exponent % 2 == 0) return FpType::Plus;
    return p % 4 == 1 ? FpType::Plus : FpType::Minus;
}

GenusComparison compare_genus_finite_places(int m, int n, int m2, int n2, std::uint64_t prime_bound) {
    if (m < 1 || n < 1 || m2 < 1 || n2 < 1) throw std::invalid_argument("compare_genus: counts must be >= 1");
    if (m + n != m2 + n2) return {false, "rank"};
    const DiagonalForm f = DiagonalForm::b(m, n);
    const DiagonalForm g = DiagonalForm::b(m2, n2);

    for (auto p : primes_up_to(prime_bound)) {
        if (p == 2) continue;
        if (!qp_equivalent(f, g, Place::finite(p))) return {false, "p=" + std::to_string(p)};
    }
    // Odd unimodular Z_2-lattices: rank, det square class, oddity mod 8.
    const Place two = Place::finite(2);
    if (!(square_class(f.discriminant(), two) == square_class(g.discriminant(), two))) return {false, "p=2:det"};
    if (((m - n) - (m2 - n2)) % 8 != 0) return {false, "p=2:oddity"};
    if (!qp_equivalent(f, g, two))
        throw std::logic_error("compare_genus: 2-adic lattice criterion passed but Q_2 invariants differ");
    return {true, "all p <= " + std::to_string(prime_bound) + " pass"};
}

}  // namespace arithspin::qforms
