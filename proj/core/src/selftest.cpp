#include "divalg/selftest.hpp"

#include <random>
#include <sstream>

#include "divalg/subfields.hpp"

namespace divalg {

ExtPtr make_gaussian_extension() {
    const FieldPtr field = NumberField::create({Rational(1), Rational(0), Rational(1)});
    return CyclicExtension::create(field, -field->gen());
}

ExtPtr make_cubic_extension() {
    const FieldPtr field =
        NumberField::create({Rational(-1), Rational(-3), Rational(0), Rational(1)});
    // σ(θ) = 2 - θ², the automorphism sending the root to another root.
    return CyclicExtension::create(
        field, field->element({Rational(2), Rational(0), Rational(-1)}));
}

AlgPtr make_hamilton_algebra() { return CyclicAlgebra::create(make_gaussian_extension(), Rational(-1)); }

AlgPtr make_cubic_algebra() { return CyclicAlgebra::create(make_cubic_extension(), Rational(2)); }

AlgPtr make_split_algebra() { return CyclicAlgebra::create(make_gaussian_extension(), Rational(1)); }

namespace {

void record_failure(SuiteResult& r, const std::string& sample) {
    ++r.failures;
    if (r.failure_samples.size() < 5) r.failure_samples.push_back(sample);
}

/// Random nonzero value whose square class involves only the primes 2,3,5,7
/// with exponent at most 1, so the oracle modulus stays small.
Rational random_grid_value(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    long v = 1;
    for (long p : {2L, 3L, 5L, 7L})
        if (coin(rng)) v *= p;
    return Rational(coin(rng) ? v : -v);
}

Rational random_rational(std::mt19937_64& rng, long num_span, long den_span) {
    std::uniform_int_distribution<long> num(-num_span, num_span);
    std::uniform_int_distribution<long> den(1, den_span);
    return Rational(num(rng), den(rng));
}

Rational random_nonzero_rational(std::mt19937_64& rng, long num_span, long den_span) {
    for (;;) {
        Rational r = random_rational(rng, num_span, den_span);
        if (!r.is_zero()) return r;
    }
}

AlgElem random_element(const AlgPtr& alg, std::mt19937_64& rng) {
    std::vector<Rational> v(alg->dimension());
    for (Rational& x : v) x = random_rational(rng, 5, 2);
    return alg->from_qvec(v);
}

AlgElem random_nonzero_element(const AlgPtr& alg, std::mt19937_64& rng) {
    for (;;) {
        AlgElem u = random_element(alg, rng);
        if (!u.is_zero()) return u;
    }
}

} // namespace

SuiteResult oracle_agreement_suite(std::uint64_t seed, const SymbolFn& symbol) {
    SuiteResult r{"oracle-agreement", 0, 0, {}};
    const std::vector<long> grid = {1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10};
    const std::vector<Place> places = {Place::infinity(), Place::finite(2ul), Place::finite(3ul),
                                       Place::finite(5ul), Place::finite(7ul)};
    auto check = [&](const Rational& a, const Rational& b, const Place& v) {
        ++r.cases;
        if (symbol(a, b, v) != hilbert_oracle(a, b, v)) {
            std::ostringstream os;
            os << "(a, b, v) = (" << a << ", " << b << ", " << v << ")";
            record_failure(r, os.str());
        }
    };
    for (long a : grid)
        for (long b : grid)
            for (const Place& v : places) check(Rational(a), Rational(b), v);

    std::mt19937_64 rng(seed);
    for (int t = 0; t < 200; ++t) {
        const Rational a = random_grid_value(rng);
        const Rational b = random_grid_value(rng);
        for (const Place& v : places) check(a, b, v);
    }
    return r;
}

SuiteResult product_formula_suite(std::uint64_t seed) {
    SuiteResult r{"product-formula", 0, 0, {}};
    std::mt19937_64 rng(seed + 1);
    for (int t = 0; t < 100; ++t) {
        const Rational a = random_nonzero_rational(rng, 30, 30);
        const Rational b = random_nonzero_rational(rng, 30, 30);
        ++r.cases;
        try {
            std::set<Place> candidates{Place::infinity(), Place::finite(2ul)};
            for (const Rational* x : {&a, &b}) {
                for (const auto& [p, e] : factor_integer(squarefree_part(*x)).primes)
                    if (p != 2) candidates.insert(Place::finite(p));
            }
            int prod = 1;
            for (const Place& v : candidates) prod *= hilbert_symbol(a, b, v);
            const auto ram = ramification_places(a, b); // also enforces evenness
            if (prod != 1 || ram.size() % 2 != 0) {
                std::ostringstream os;
                os << "(a, b) = (" << a << ", " << b << "), product " << prod;
                record_failure(r, os.str());
            }
        } catch (const error& e) {
            record_failure(r, "(a, b) = (" + a.str() + ", " + b.str() + "): " + e.what());
        }
    }
    return r;
}

SuiteResult nrd_multiplicativity_suite(std::uint64_t seed) {
    SuiteResult r{"nrd-multiplicativity", 0, 0, {}};
    std::mt19937_64 rng(seed + 2);
    for (const AlgPtr& alg : {make_hamilton_algebra(), make_cubic_algebra()}) {
        for (int t = 0; t < 1000; ++t) {
            const AlgElem u = random_element(alg, rng);
            const AlgElem v = random_element(alg, rng);
            ++r.cases;
            const bool norm_ok = reduced_norm(u * v) == reduced_norm(u) * reduced_norm(v);
            const bool trace_ok = reduced_trace(u + v) == reduced_trace(u) + reduced_trace(v);
            if (!norm_ok || !trace_ok) {
                std::ostringstream os;
                os << "degree " << alg->degree() << ", u = " << u << ", v = " << v;
                record_failure(r, os.str());
            }
        }
    }
    return r;
}

SuiteResult sn_roundtrip_suite(std::uint64_t seed) {
    SuiteResult r{"sn-roundtrip", 0, 0, {}};
    std::mt19937_64 rng(seed + 3);
    const AlgPtr alg = make_hamilton_algebra();
    const SubspaceWitness l = distinguished_subfield(alg);
    const AlgElem l_gen = alg->embed(alg->field()->gen());
    for (int t = 0; t < 20; ++t) {
        const AlgElem h = random_nonzero_element(alg, rng);
        ++r.cases;
        try {
            const SubspaceWitness k = conjugate_subspace(l, h);
            const AlgElem k_gen = *invert_elem(h) * l_gen * h;
            const auto g = sn_conjugator(alg, l_gen, k_gen);
            if (!g || !conjugate_subspace(l, *g).same_span(k)) {
                record_failure(r, "h = " + h.str());
            }
        } catch (const error& e) {
            record_failure(r, "h = " + h.str() + ": " + e.what());
        }
    }
    return r;
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
    return {oracle_agreement_suite(seed), product_formula_suite(seed),
            nrd_multiplicativity_suite(seed), sn_roundtrip_suite(seed)};
}

} // namespace divalg
