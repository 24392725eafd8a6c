#ifndef DIVALG_SELFTEST_HPP
#define DIVALG_SELFTEST_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "divalg/brauer.hpp"
#include "divalg/cyclic_algebra.hpp"
#include "divalg/hilbert.hpp"

namespace divalg {

/// The two extensions every suite ships with: Q(i) with conjugation, and the
/// cubic Q[t]/(t³-3t-1) with σ(θ) = 2-θ².
ExtPtr make_gaussian_extension();
ExtPtr make_cubic_extension();

/// (Q(i)/Q, conj, -1): the rational Hamilton quaternions.
AlgPtr make_hamilton_algebra();
/// (Q[t]/(t³-3t-1)/Q, σ, 2): the shipped degree-3 algebra.
AlgPtr make_cubic_algebra();
/// (Q(i)/Q, conj, 1): split, with zero divisor 1 + x.
AlgPtr make_split_algebra();

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> failure_samples; // exact inputs, capped

    bool ok() const { return failures == 0; }
};

inline constexpr std::uint64_t kDefaultSelftestSeed = 20240901;

using SymbolFn = std::function<int(const Rational&, const Rational&, const Place&)>;

/// hilbert_symbol against hilbert_oracle on the exhaustive grid
/// a, b in {±1, ±2, ±3, ±5, ±6, ±7, ±10} at places {inf, 2, 3, 5, 7}, plus
/// 200 seeded random pairs. The symbol function is injectable so a broken
/// build can be simulated.
SuiteResult oracle_agreement_suite(std::uint64_t seed, const SymbolFn& symbol = hilbert_symbol);

/// Product of symbols over the candidate places is +1 for 100 random pairs;
/// equivalently all ramification sets have even cardinality.
SuiteResult product_formula_suite(std::uint64_t seed);

/// Nrd(uv) = Nrd(u)·Nrd(v) and Trd(u+v) = Trd(u)+Trd(v) on 1000 random pairs
/// in each shipped algebra.
SuiteResult nrd_multiplicativity_suite(std::uint64_t seed);

/// For 20 random h in the Hamilton algebra, the conjugator solver recovers
/// some g with g⁻¹·L·g = h⁻¹·L·h as subspaces.
SuiteResult sn_roundtrip_suite(std::uint64_t seed);

std::vector<SuiteResult> run_selftest(std::uint64_t seed = kDefaultSelftestSeed);

} // namespace divalg

#endif
