// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "divalg/brauer.hpp"
#include "divalg/selftest.hpp"
#include "divalg/subfields.hpp"

using namespace divalg;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

struct check_failure {
    std::string what;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw check_failure{what};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

AlgElem random_element(const AlgPtr& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 2);
    std::vector<Rational> v(alg->dimension());
    for (auto& x : v) x = Rational(num(rng), den(rng));
    return alg->from_qvec(v);
}

// 1. Symbol values for (-1,-1) and (-1,-7), cross-checked against the
//    brute-force oracle on the full grid within 1 second.
void criterion_symbol_values() {
    const auto t0 = std::chrono::steady_clock::now();
    const Place inf = Place::infinity();

    require(hilbert_symbol(q(-1), q(-1), Place::finite(2ul)) == -1, "(-1,-1) at 2");
    require(hilbert_symbol(q(-1), q(-1), inf) == -1, "(-1,-1) at inf");
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul,
                            41ul, 43ul, 47ul, 53ul, 59ul, 61ul, 67ul, 71ul, 73ul, 79ul,
                            83ul, 89ul, 97ul})
        require(hilbert_symbol(q(-1), q(-1), Place::finite(p)) == +1,
                "(-1,-1) at odd prime " + std::to_string(p));

    require(hilbert_symbol(q(-1), q(-7), Place::finite(7ul)) == -1, "(-1,-7) at 7");
    require(hilbert_symbol(q(-1), q(-7), inf) == -1, "(-1,-7) at inf");
    require(hilbert_symbol(q(-1), q(-7), Place::finite(2ul)) == +1, "(-1,-7) at 2");
    for (unsigned long p : {3ul, 5ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul,
                            43ul, 47ul, 53ul, 59ul, 61ul, 67ul, 71ul, 73ul, 79ul, 83ul,
                            89ul, 97ul})
        require(hilbert_symbol(q(-1), q(-7), Place::finite(p)) == +1,
                "(-1,-7) at odd prime " + std::to_string(p));

    const SuiteResult grid = oracle_agreement_suite(kDefaultSelftestSeed);
    require(grid.failures == 0, "oracle agreement grid has failures");
    const double elapsed = seconds_since(t0);
    require(elapsed <= 1.0, "grid took " + std::to_string(elapsed) + "s > 1s");
}

// 2. Product formula / even ramification on 100 random pairs within 5 seconds.
void criterion_product_formula() {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult r = product_formula_suite(kDefaultSelftestSeed);
    require(r.cases == 100, "expected 100 random pairs");
    require(r.failures == 0,
            r.failure_samples.empty() ? "failures" : "failure: " + r.failure_samples.front());
    const double elapsed = seconds_since(t0);
    require(elapsed <= 5.0, "suite took " + std::to_string(elapsed) + "s > 5s");
}

// 3. Class arithmetic: {2,inf} + {7,inf} = {2,7}, independent.
void criterion_class_arithmetic() {
    const Place inf = Place::infinity();
    const BrauerClass2 c1 = ramification_set(QuaternionAlgebra(q(-1), q(-1)));
    const BrauerClass2 c2 = ramification_set(QuaternionAlgebra(q(-1), q(-7)));
    require(c1.ramification() == std::set<Place>{Place::finite(2ul), inf}, "ram(-1,-1)");
    require(c2.ramification() == std::set<Place>{Place::finite(7ul), inf}, "ram(-1,-7)");
    require(class_add(c1, c2).ramification() ==
                std::set<Place>{Place::finite(2ul), Place::finite(7ul)},
            "class sum");
    require(classes_independent(c1, c2), "independence");
}

// 4. The verdict on (-1,-1) ⊗ (-1,-7) raises the discrepancy flag, computed
//    from the sub-results (mutation test included).
void criterion_discrepancy_flag() {
    const QuaternionAlgebra q1(q(-1), q(-1)), q2(q(-1), q(-7));
    const BiquaternionVerdict v = biquaternion_verdict(q1, q2);
    require(v.independent, "independence side present and true");
    require(v.albert_isotropic, "Albert side present and isotropic");
    require(!v.division, "division verdict follows the oracle");
    require(v.discrepancy, "discrepancy flag raised");

    const BrauerClass2 r1 = ramification_set(q1), r2 = ramification_set(q2);
    const auto form = albert_form(q1, q2);
    require(!assemble_biquaternion_verdict(BrauerClass2{}, r2, form, true).discrepancy,
            "mutated ram1 must clear the flag");
    require(!assemble_biquaternion_verdict(r1, r1, form, true).discrepancy,
            "mutated ram2 must clear the flag");
    require(!assemble_biquaternion_verdict(r1, r2, form, false).discrepancy,
            "mutated isotropy must clear the flag");
}

// 5. Defining relations hold in both shipped algebras; σ-certification of the
//    cubic confirms order 3 and fixed field Q.
void criterion_defining_relations() {
    require(verify_defining_relations(make_hamilton_algebra()).ok(), "Hamilton relations");
    require(verify_defining_relations(make_cubic_algebra()).ok(), "cubic relations");

    const ExtPtr c = make_cubic_extension();
    const SigmaCertReport rep = CyclicExtension::certify(c->field(), c->sigma_gen_image());
    require(rep.ok(), "cubic certification");
    require(rep.observed_order == 3, "order 3");
    require(rep.fixed_field_is_rational && rep.fixed_space_dim == 1, "fixed field Q");
}

// 6. Arithmetic soundness: associativity on 1000 triples per algebra, Nrd
//    multiplicativity on 1000 pairs, det(regular rep) = Nrd^n on 100
//    elements; all within 30 seconds.
void criterion_arithmetic_soundness() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(kDefaultSelftestSeed);
    for (const AlgPtr& alg : {make_hamilton_algebra(), make_cubic_algebra()}) {
        for (int t = 0; t < 1000; ++t) {
            const AlgElem u = random_element(alg, rng);
            const AlgElem v = random_element(alg, rng);
            const AlgElem w = random_element(alg, rng);
            require((u * v) * w == u * (v * w), "associativity");
        }
    }
    const SuiteResult nrd = nrd_multiplicativity_suite(kDefaultSelftestSeed);
    require(nrd.failures == 0, "Nrd multiplicativity");
    for (const AlgPtr& alg : {make_hamilton_algebra(), make_cubic_algebra()}) {
        for (int t = 0; t < 50; ++t) {
            const AlgElem u = random_element(alg, rng);
            require(det(left_regular_matrix(u)) ==
                        reduced_norm(u).pow(static_cast<long>(alg->degree())),
                    "det(regular rep) = Nrd^n");
        }
    }
    const double elapsed = seconds_since(t0);
    require(elapsed <= 30.0, "took " + std::to_string(elapsed) + "s > 30s");
}

// 7. Centralizer criterion: C_D(L) = L in both algebras; C_D(D) = Q·1.
void criterion_centralizer() {
    for (const AlgPtr& alg : {make_hamilton_algebra(), make_cubic_algebra()}) {
        const SubspaceWitness l = distinguished_subfield(alg);
        require(centralizer(alg, l).same_span(l), "C(L) = L");
        std::vector<AlgElem> all;
        for (std::size_t k = 0; k < alg->dimension(); ++k)
            all.push_back(alg->q_basis_element(k));
        const SubspaceWitness centre = centralizer(alg, span_and_certify(alg, all));
        require(centre.dim() == 1 && centre.contains(alg->one()), "C(D) = Q·1");
    }
}

// 8. Skolem-Noether round-trip on 20 random conjugations, zero failures.
void criterion_sn_roundtrip() {
    const SuiteResult r = sn_roundtrip_suite(kDefaultSelftestSeed);
    require(r.cases == 20, "20 conjugations");
    require(r.failures == 0,
            r.failure_samples.empty() ? "failures" : "failure: " + r.failure_samples.front());
}

// 9. The conjugation pipeline passes all five steps on the three shipped
//    cases, ending in K ∩ y⁻¹Ky = K of dimension n > 1.
void criterion_demo_pipeline() {
    const AlgPtr h = make_hamilton_algebra();
    const AlgElem i = h->embed(h->field()->gen());
    const AlgElem x = h->x();

    const Theorem2Report r1 = theorem2_demo(h, span_and_certify(h, {x}), x, i);
    require(r1.all_passed(), "Hamilton/Q(j): " + r1.first_failure());
    require(r1.intersection_dim == 2, "Hamilton/Q(j) intersection dim 2");

    const Theorem2Report r2 = theorem2_demo(h, distinguished_subfield(h), i, i);
    require(r2.all_passed(), "Hamilton/L: " + r2.first_failure());
    require(r2.intersection_dim == 2, "Hamilton/L intersection dim 2");

    const AlgPtr c = make_cubic_algebra();
    const AlgElem theta = c->embed(c->field()->gen());
    const Theorem2Report r3 = theorem2_demo(c, distinguished_subfield(c), theta, theta);
    require(r3.all_passed(), "cubic/L: " + r3.first_failure());
    require(r3.intersection_dim == 3, "cubic/L intersection dim 3");
    require(c->degree() > 1, "degree n > 1");
}

// 10. Malnormality contrast on one instance: probe dimensions 1 and 2.
void criterion_malnormality_contrast() {
    const AlgPtr h = make_hamilton_algebra();
    const AlgElem i = h->embed(h->field()->gen());
    const SubspaceWitness qj = span_and_certify(h, {h->x()});

    require(malnormality_probe(qj, h->one() + i).dim() == 1, "probe at 1+i has dim 1");
    require(malnormality_probe(qj, i).dim() == 2, "probe at i has dim 2");
}

// 11. Negative control: the split algebra is flagged, 1+x is a zero divisor,
//     and the demo refuses it without the override.
void criterion_split_control() {
    const AlgPtr s = make_split_algebra();
    require(s->division_status() == DivisionStatus::proven_split, "flagged split");
    require(!invert_elem(s->one() + s->x()).has_value(), "1+x not invertible");

    const AlgElem is = s->embed(s->field()->gen());
    const SubspaceWitness ls = distinguished_subfield(s);
    bool refused = false;
    try {
        theorem2_demo(s, ls, is, is);
    } catch (const precondition_error&) {
        refused = true;
    }
    require(refused, "demo must refuse a split algebra without the override");
    require(theorem2_demo(s, ls, is, is, /*allow_split=*/true).all_passed(),
            "demo runs with the override");
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Hilbert symbol values for (-1,-1) and (-1,-7), oracle-checked grid (<= 1s)",
         criterion_symbol_values},
        {2, "product formula / even ramification on 100 random pairs (<= 5s)",
         criterion_product_formula},
        {3, "class arithmetic: {2,inf} + {7,inf} = {2,7}, independent",
         criterion_class_arithmetic},
        {4, "biquaternion verdict raises the computed discrepancy flag",
         criterion_discrepancy_flag},
        {5, "defining relations and sigma certification of the shipped algebras",
         criterion_defining_relations},
        {6, "arithmetic soundness: associativity, Nrd, regular-rep determinant (<= 30s)",
         criterion_arithmetic_soundness},
        {7, "centralizer criterion: C(L) = L and C(D) = Q*1", criterion_centralizer},
        {8, "Skolem-Noether round-trip on 20 random conjugations", criterion_sn_roundtrip},
        {9, "conjugation pipeline passes all five steps on three cases",
         criterion_demo_pipeline},
        {10, "malnormality contrast: probe dims 1 and 2 on one instance",
         criterion_malnormality_contrast},
        {11, "split negative control: flag, zero divisor, demo refusal",
         criterion_split_control},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        try {
            c.run();
            std::cout << "[PASS] criterion " << c.id << ": " << c.title << "\n";
        } catch (const check_failure& f) {
            ++failed;
            std::cout << "[FAIL] criterion " << c.id << ": " << c.title << " — " << f.what
                      << "\n";
        } catch (const std::exception& e) {
            ++failed;
            std::cout << "[FAIL] criterion " << c.id << ": " << c.title << " — exception: "
                      << e.what() << "\n";
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed;
}
