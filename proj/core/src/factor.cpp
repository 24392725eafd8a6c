#include "divalg/factor.hpp"

#include <algorithm>

namespace divalg {

Factorization factor_integer(const mpz_class& n, std::uint64_t bound) {
    if (n == 0) throw domain_error("factor_integer(0)");
    Factorization f;
    mpz_class m = n;
    if (m < 0) {
        f.sign = -1;
        m = -m;
    }
    auto strip = [&](const mpz_class& p) {
        unsigned long e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e > 0) f.primes.emplace_back(p, e);
    };
    strip(2);
    for (mpz_class p = 3; p * p <= m && p <= bound; p += 2) strip(p);
    if (m > 1) {
        mpz_class bound2 = mpz_class(static_cast<unsigned long>(bound));
        bound2 *= static_cast<unsigned long>(bound);
        // Every divisor <= bound has been removed, so m <= bound^2 is prime.
        if (m > bound2)
            throw usage_error("factorization exceeds trial-division bound " +
                              std::to_string(bound) + "; raise the bound");
        f.primes.emplace_back(m, 1);
    }
    std::sort(f.primes.begin(), f.primes.end());
    return f;
}

std::vector<mpz_class> divisors(const mpz_class& n, std::uint64_t bound) {
    const Factorization f = factor_integer(n, bound);
    std::vector<mpz_class> ds{1};
    for (const auto& [p, e] : f.primes) {
        const std::size_t base = ds.size();
        mpz_class pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

mpz_class squarefree_part(const Rational& a, std::uint64_t bound) {
    if (a.is_zero()) throw domain_error("square class of zero");
    // a and num*den differ by the square den^2.
    const Factorization f = factor_integer(a.num() * a.den(), bound);
    mpz_class r = f.sign;
    for (const auto& [p, e] : f.primes)
        if (e % 2 == 1) r *= p;
    return r;
}

unsigned long valuation(mpz_class n, const mpz_class& p) {
    if (n == 0) throw domain_error("valuation of zero");
    unsigned long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

int legendre(const mpz_class& a, const mpz_class& p) {
    const int s = mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
    if (s == 0) throw domain_error("legendre symbol of a multiple of p");
    return s;
}

bool is_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

} // namespace divalg
