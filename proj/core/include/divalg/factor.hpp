#ifndef DIVALG_FACTOR_HPP
#define DIVALG_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "divalg/rational.hpp"

namespace divalg {

/// Default trial-division bound. Inputs whose factorization needs a prime
/// beyond the bound are rejected with a usage_error.
inline constexpr std::uint64_t kDefaultTrialDivisionBound = 1'000'000;

struct Factorization {
    int sign = 1;
    std::vector<std::pair<mpz_class, unsigned long>> primes; // ascending
};

/// Factors n != 0 by trial division up to `bound`. A leftover cofactor c > 1
/// is accepted as prime when c <= bound^2 (no divisor below its square root
/// was found); otherwise the input is rejected.
Factorization factor_integer(const mpz_class& n, std::uint64_t bound = kDefaultTrialDivisionBound);

/// All positive divisors of |n|, ascending.
std::vector<mpz_class> divisors(const mpz_class& n, std::uint64_t bound = kDefaultTrialDivisionBound);

/// Signed square-free integer representative of the square class of a != 0.
mpz_class squarefree_part(const Rational& a, std::uint64_t bound = kDefaultTrialDivisionBound);

/// v_p(n) for n != 0.
unsigned long valuation(mpz_class n, const mpz_class& p);

/// Legendre symbol (a|p) for odd prime p; a must be prime to p.
int legendre(const mpz_class& a, const mpz_class& p);

bool is_prime(const mpz_class& n);

} // namespace divalg

#endif
