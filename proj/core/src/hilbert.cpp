#include "divalg/hilbert.hpp"

#include <cstdint>
#include <ostream>
#include <sstream>
#include <vector>

namespace divalg {

Place Place::infinity() { return Place(true, mpz_class(0)); }

Place Place::finite(mpz_class p) {
    if (p < 2 || !is_prime(p))
        throw domain_error("finite place must be a prime, got " + p.get_str());
    return Place(false, std::move(p));
}

Place Place::finite(unsigned long p) { return finite(mpz_class(p)); }

const mpz_class& Place::prime() const {
    if (infinite_) throw usage_error("the real place has no prime");
    return p_;
}

std::string Place::str() const { return infinite_ ? "inf" : p_.get_str(); }

bool operator==(const Place& a, const Place& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.p_ == b.p_);
}

bool operator<(const Place& a, const Place& b) {
    if (a.infinite_ != b.infinite_) return !a.infinite_; // finite places first
    if (a.infinite_) return false;
    return a.p_ < b.p_;
}

std::ostream& operator<<(std::ostream& os, const Place& v) { return os << v.str(); }

std::string places_str(const std::set<Place>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const Place& v : s) {
        if (!first) os << ", ";
        os << v.str();
        first = false;
    }
    os << "}";
    return os.str();
}

namespace {

void check_nonzero(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero())
        throw domain_error("Hilbert symbol requires nonzero arguments");
}

// Integer representative of the square class: a ~ num·den.
mpz_class square_class_rep(const Rational& a) { return a.num() * a.den(); }

int parity(const mpz_class& n) { return mpz_odd_p(n.get_mpz_t()) ? 1 : 0; }

} // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    check_nonzero(a, b);
    if (v.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : +1;

    const mpz_class& p = v.prime();
    mpz_class A = square_class_rep(a);
    mpz_class B = square_class_rep(b);
    const unsigned long alpha = valuation(A, p);
    const unsigned long beta = valuation(B, p);
    mpz_class u = A, w = B;
    mpz_class pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), p.get_mpz_t(), alpha);
    mpz_pow_ui(pb.get_mpz_t(), p.get_mpz_t(), beta);
    u /= pa;
    w /= pb;

    if (p == 2) {
        auto eps = [](const mpz_class& t) { return parity((t - 1) / 2); };
        auto omega = [](const mpz_class& t) { return parity((t * t - 1) / 8); };
        const int e = (eps(u) * eps(w) + static_cast<int>(alpha % 2) * omega(w) +
                       static_cast<int>(beta % 2) * omega(u)) % 2;
        return e ? -1 : +1;
    }

    int s = 1;
    if ((alpha % 2) && (beta % 2) && parity((p - 1) / 2)) s = -s;
    if (beta % 2) s *= legendre(u, p);
    if (alpha % 2) s *= legendre(w, p);
    return s;
}

namespace {

constexpr std::uint64_t kOracleModulusCap = std::uint64_t(1) << 25;

std::uint64_t to_residue(const mpz_class& n, std::uint64_t mod) {
    mpz_class r;
    mpz_class m(static_cast<unsigned long>(mod));
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t()); // non-negative
    return r.get_ui();
}

} // namespace

int hilbert_oracle(const Rational& a, const Rational& b, const Place& v) {
    check_nonzero(a, b);
    if (v.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : +1;

    const mpz_class& p = v.prime();
    const mpz_class A = square_class_rep(a);
    const mpz_class B = square_class_rep(b);
    const unsigned long maxv = std::max(valuation(A, p), valuation(B, p));
    const unsigned long k = 2 * maxv + (p == 2 ? 5 : 3);

    mpz_class modz;
    mpz_pow_ui(modz.get_mpz_t(), p.get_mpz_t(), k);
    if (modz > static_cast<unsigned long>(kOracleModulusCap))
        throw usage_error("hilbert_oracle modulus p^" + std::to_string(k) +
                          " too large for exhaustive search; use hilbert_symbol");
    const std::uint64_t mod = modz.get_ui();
    const std::uint64_t a0 = to_residue(A, mod);
    const std::uint64_t b0 = to_residue(B, mod);

    // Squares and the values b·y² modulo p^k.
    std::vector<bool> is_square(mod, false), is_b_y2(mod, false);
    for (std::uint64_t t = 0; t < mod; ++t) {
        const std::uint64_t t2 = (t * t) % mod;
        is_square[t2] = true;
        is_b_y2[(b0 * t2) % mod] = true;
    }

    // A primitive solution has a unit coordinate, which scaling normalizes
    // to 1; so it shows up in one of the three one-variable sweeps.
    for (std::uint64_t y = 0; y < mod; ++y) { // x = 1
        const std::uint64_t rhs = (a0 + b0 * ((y * y) % mod)) % mod;
        if (is_square[rhs]) return +1;
    }
    for (std::uint64_t x = 0; x < mod; ++x) { // y = 1
        const std::uint64_t rhs = (a0 * ((x * x) % mod) + b0) % mod;
        if (is_square[rhs]) return +1;
    }
    for (std::uint64_t x = 0; x < mod; ++x) { // z = 1
        const std::uint64_t rhs = (1 + mod - (a0 * ((x * x) % mod)) % mod) % mod;
        if (is_b_y2[rhs]) return +1;
    }
    return -1;
}

std::set<Place> ramification_places(const Rational& a, const Rational& b,
                                    std::uint64_t trial_division_bound) {
    check_nonzero(a, b);
    std::set<Place> candidates{Place::infinity(), Place::finite(2ul)};
    for (const Rational* r : {&a, &b}) {
        const Factorization f = factor_integer(squarefree_part(*r, trial_division_bound),
                                               trial_division_bound);
        for (const auto& [p, e] : f.primes)
            if (p != 2) candidates.insert(Place::finite(p));
    }
    std::set<Place> ram;
    for (const Place& v : candidates)
        if (hilbert_symbol(a, b, v) == -1) ram.insert(v);
    if (ram.size() % 2 != 0)
        throw internal_error("ramification set " + places_str(ram) +
                             " has odd cardinality: product formula violated, "
                             "the symbol implementation is broken");
    return ram;
}

} // namespace divalg
