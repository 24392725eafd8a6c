#include <doctest.h>

#include "divalg/selftest.hpp"

using namespace divalg;

TEST_CASE("all suites pass with the default seed") {
    for (const SuiteResult& r : run_selftest()) {
        INFO(r.name);
        CHECK(r.cases > 0);
        CHECK(r.failures == 0);
    }
}

TEST_CASE("suites pass with another seed") {
    for (const SuiteResult& r : run_selftest(7)) {
        INFO(r.name);
        CHECK(r.failures == 0);
    }
}

TEST_CASE("a corrupted symbol at p = 2 is caught with a concrete counterexample") {
    const SymbolFn broken = [](const Rational& a, const Rational& b, const Place& v) {
        const int s = hilbert_symbol(a, b, v);
        return (!v.is_infinite() && v.prime() == 2) ? -s : s;
    };
    const SuiteResult r = oracle_agreement_suite(kDefaultSelftestSeed, broken);
    CHECK(r.failures > 0);
    REQUIRE(!r.failure_samples.empty());
    // The sample names the exact inputs for reproduction.
    CHECK(r.failure_samples.front().find("(a, b, v) = (") != std::string::npos);
    CHECK(r.failure_samples.front().find(", 2)") != std::string::npos);
}
