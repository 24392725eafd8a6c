#ifndef DIVALG_HILBERT_HPP
#define DIVALG_HILBERT_HPP

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>

#include "divalg/factor.hpp"
#include "divalg/rational.hpp"

namespace divalg {

/// A place of Q: a finite prime or the real place.
class Place {
public:
    static Place infinity();
    static Place finite(mpz_class p); // p must be prime
    static Place finite(unsigned long p);

    bool is_infinite() const { return infinite_; }
    const mpz_class& prime() const;

    std::string str() const; // "2", "7", ..., "inf"

    friend bool operator==(const Place& a, const Place& b);
    friend bool operator<(const Place& a, const Place& b); // finite by value, then inf

private:
    Place(bool inf, mpz_class p) : infinite_(inf), p_(std::move(p)) {}
    bool infinite_;
    mpz_class p_;
};

std::ostream& operator<<(std::ostream& os, const Place& v);
std::string places_str(const std::set<Place>& s); // "{2, 7, inf}"

/// Local Hilbert symbol (a,b)_v in {+1,-1}: +1 exactly when z² = ax² + by²
/// has a nontrivial solution over the completion at v.
///
/// Closed formulas: at the real place, -1 iff a < 0 and b < 0. At an odd
/// prime p, writing a = p^α u and b = p^β w with p-units u, w,
///
///     (a,b)_p = (-1)^{αβ(p-1)/2} (u|p)^β (w|p)^α
///
/// with (·|p) the Legendre symbol. At p = 2, with odd parts u, w,
///
///     (a,b)_2 = (-1)^{ε(u)ε(w) + α·ω(w) + β·ω(u)},
///     ε(u) = (u-1)/2 mod 2,  ω(u) = (u²-1)/8 mod 2.
///
/// Rational arguments are cleared to integers by square scaling (the symbol
/// only depends on square classes).
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Independent brute-force check of the same symbol: decides existence of a
/// primitive solution of z² ≡ ax² + by² modulo p^k, with k = 2·max(v_p(a),
/// v_p(b)) + 3 for odd p and k = 2·max(v_2(a), v_2(b)) + 5 for p = 2, which
/// suffices for Hensel lifting. Practical only for small p^k; rejects
/// moduli above 2^25.
int hilbert_oracle(const Rational& a, const Rational& b, const Place& v);

/// Places where (a,b) ramifies, i.e. where the symbol is -1. Candidates are
/// the real place, 2, and odd primes dividing the square-free parts; the
/// symbol is +1 everywhere else. The result always has even cardinality
/// (product formula); a violation raises internal_error.
std::set<Place> ramification_places(const Rational& a, const Rational& b,
                                    std::uint64_t trial_division_bound = kDefaultTrialDivisionBound);

} // namespace divalg

#endif
