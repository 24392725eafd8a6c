#include <doctest.h>

#include <random>

#include "divalg/selftest.hpp"
#include "divalg/subfields.hpp"

using namespace divalg;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

AlgElem random_nonzero(const AlgPtr& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    for (;;) {
        std::vector<Rational> v(alg->dimension());
        for (auto& x : v) x = q(num(rng));
        AlgElem u = alg->from_qvec(v);
        if (!u.is_zero()) return u;
    }
}

} // namespace

TEST_CASE("span_and_certify") {
    const AlgPtr h = make_hamilton_algebra();
    const AlgElem i = h->embed(h->field()->gen());
    const AlgElem x = h->x();

    const SubspaceWitness base = span_and_certify(h, {h->one()});
    CHECK(base.dim() == 1);
    CHECK(base.certs().is_subfield);
    CHECK(!base.certs().is_maximal_subfield);

    const SubspaceWitness qi = span_and_certify(h, {i});
    CHECK(qi.dim() == 2);
    CHECK(qi.certs().contains_one);
    CHECK(qi.certs().mult_closed);
    CHECK(qi.certs().commutative);
    CHECK(qi.certs().is_subfield);

    const SubspaceWitness whole = span_and_certify(h, {i, x});
    CHECK(whole.dim() == 4);
    CHECK(!whole.certs().commutative);
    CHECK(!whole.certs().is_subfield);

    CHECK_THROWS_AS(span_and_certify(h, {}), usage_error);
}

TEST_CASE("span closure detects zero divisors in split algebras") {
    const AlgPtr s = make_split_algebra();
    const SubspaceWitness w = span_and_certify(s, {s->x()}); // contains 1 + x
    CHECK(w.dim() == 2);
    CHECK(w.certs().commutative);
    CHECK(w.certs().mult_closed);
    CHECK(!w.certs().is_subfield);
}

TEST_CASE("centralizer") {
    for (const AlgPtr& alg : {make_hamilton_algebra(), make_cubic_algebra()}) {
        const SubspaceWitness l = distinguished_subfield(alg);

        // C_D(Q·1) is everything.
        CHECK(centralizer(alg, span_and_certify(alg, {alg->one()})).dim() == alg->dimension());

        // C_D(L) = L.
        CHECK(centralizer(alg, l).same_span(l));

        // C_D(D) = Q·1, the centre.
        std::vector<AlgElem> all;
        for (std::size_t k = 0; k < alg->dimension(); ++k)
            all.push_back(alg->q_basis_element(k));
        const SubspaceWitness whole = span_and_certify(alg, all);
        const SubspaceWitness centre = centralizer(alg, whole);
        CHECK(centre.dim() == 1);
        CHECK(centre.contains(alg->one()));
    }
}

TEST_CASE("is_maximal_subfield") {
    const AlgPtr h = make_hamilton_algebra();
    const AlgElem i = h->embed(h->field()->gen());
    const AlgElem x = h->x();

    CHECK(is_maximal_subfield(span_and_certify(h, {i})));
    CHECK(is_maximal_subfield(span_and_certify(h, {x}))); // Q(j), x² = -1
    CHECK(!is_maximal_subfield(span_and_certify(h, {h->one()})));

    const SubspaceWitness whole = span_and_certify(h, {i, x});
    CHECK_THROWS_AS(is_maximal_subfield(whole), usage_error); // not a subfield
}

TEST_CASE("sn_conjugator") {
    const AlgPtr h = make_hamilton_algebra();
    const AlgElem i = h->embed(h->field()->gen());
    const AlgElem x = h->x();

    // Identity conjugation: any centralizer element works; canonical pick is 1.
    const auto g_id = sn_conjugator(h, i, i);
    REQUIRE(g_id.has_value());
    CHECK(*g_id == h->one());

    // i ↦ j: frozen canonical solution θ + x = i + j, and the conjugation
    // identity i(i+j) = (i+j)j checked by expansion.
    const auto g = sn_conjugator(h, i, x);
    REQUIRE(g.has_value());
    CHECK(*g == h->from_qvec({q(0), q(1), q(1), q(0)}));
    CHECK(i * *g == *g * x);
    CHECK(*invert_elem(*g) * i * *g == x);

    // Non-isomorphic targets are refused: t²+1 vs t²-2t+2.
    CHECK_THROWS_AS(sn_conjugator(h, i, h->one() + i), precondition_error);
}

TEST_CASE("conjugate_subspace") {
    const AlgPtr h = make_hamilton_algebra();
    const AlgElem i = h->embed(h->field()->gen());
    const SubspaceWitness qj = span_and_certify(h, {h->x()});

    CHECK(conjugate_subspace(qj, h->one()).same_span(qj));

    // (1+i)⁻¹·j·(1+i) = -k lands in the Q(k)-image, span{1, θx}.
    const SubspaceWitness qk = conjugate_subspace(qj, h->one() + i);
    const SubspaceWitness expected = span_and_certify(h, {i * h->x()});
    CHECK(qk.same_span(expected));
    CHECK(qk.certs().is_subfield);

    // x normalizes L: x⁻¹·L·x = σ(L) = L.
    const SubspaceWitness l = distinguished_subfield(h);
    CHECK(conjugate_subspace(l, h->x()).same_span(l));

    const AlgPtr s = make_split_algebra();
    const SubspaceWitness ls = distinguished_subfield(s);
    CHECK_THROWS_AS(conjugate_subspace(ls, s->one() + s->x()), domain_error);
}

TEST_CASE("malnormality_probe shows both outcomes on one instance") {
    const AlgPtr h = make_hamilton_algebra();
    const AlgElem i = h->embed(h->field()->gen());
    const SubspaceWitness qj = span_and_certify(h, {h->x()});

    // y = 1+i moves Q(j) to Q(k): trivial intersection, the malnormal outcome.
    const SubspaceWitness trivial = malnormality_probe(qj, h->one() + i);
    CHECK(trivial.dim() == 1);
    CHECK(trivial.contains(h->one()));

    // y = i normalizes Q(j) (i⁻¹·j·i = -j): the whole subfield survives.
    const SubspaceWitness violation = malnormality_probe(qj, i);
    CHECK(violation.dim() == 2);
    CHECK(violation.same_span(qj));

    // y = x normalizes L itself, in both shipped algebras.
    for (const AlgPtr& alg : {make_hamilton_algebra(), make_cubic_algebra()}) {
        const SubspaceWitness l = distinguished_subfield(alg);
        const SubspaceWitness inter = malnormality_probe(l, alg->x());
        CHECK(inter.dim() == alg->degree());
        CHECK(inter.same_span(l));
    }

    CHECK_THROWS_AS(malnormality_probe(qj, h->x()), precondition_error); // y in K
    const AlgPtr s = make_split_algebra();
    const SubspaceWitness li = span_and_certify(s, {s->embed(s->field()->gen())});
    CHECK_THROWS_AS(malnormality_probe(li, s->one() + s->x()), domain_error);
}

TEST_CASE("theorem2_demo passes on the three shipped cases") {
    const AlgPtr h = make_hamilton_algebra();
    const AlgElem i = h->embed(h->field()->gen());
    const AlgElem x = h->x();

    // (i) Hamilton, K = Q(j)-image.
    const Theorem2Report r1 = theorem2_demo(h, span_and_certify(h, {x}), x, i);
    CHECK(r1.all_passed());
    CHECK(r1.intersection_dim == 2);

    // (ii) Hamilton, K = L-image: g = 1 admissible, y lands in L·x.
    const SubspaceWitness l = distinguished_subfield(h);
    const Theorem2Report r2 = theorem2_demo(h, l, i, i);
    CHECK(r2.all_passed());
    CHECK(r2.intersection_dim == 2);
    CHECK(*r2.g == h->one());

    // (iii) degree 3, K = L-image.
    const AlgPtr c = make_cubic_algebra();
    const AlgElem theta = c->embed(c->field()->gen());
    const Theorem2Report r3 = theorem2_demo(c, distinguished_subfield(c), theta, theta);
    CHECK(r3.all_passed());
    CHECK(r3.intersection_dim == 3);
}

TEST_CASE("theorem2_demo preconditions") {
    const AlgPtr h = make_hamilton_algebra();
    const AlgElem i = h->embed(h->field()->gen());
    const AlgElem x = h->x();
    const SubspaceWitness qj = span_and_certify(h, {x});

    // Wrong generator for K.
    CHECK_THROWS_AS(theorem2_demo(h, qj, i, i), precondition_error);
    // Non-maximal K.
    CHECK_THROWS_AS(theorem2_demo(h, span_and_certify(h, {h->one()}), h->one(), i),
                    precondition_error);
    // Non-isomorphic generators: 1+i in L, j in K have different minpolys —
    // k_gen = x generates Q(j) but l_gen = 1+i has minpoly t²-2t+2.
    CHECK_THROWS_AS(theorem2_demo(h, qj, x, h->one() + i), precondition_error);

    // Split algebras are refused without the override and run with it.
    const AlgPtr s = make_split_algebra();
    const AlgElem is = s->embed(s->field()->gen());
    const SubspaceWitness ls = distinguished_subfield(s);
    CHECK_THROWS_AS(theorem2_demo(s, ls, is, is), precondition_error);
    const Theorem2Report forced = theorem2_demo(s, ls, is, is, /*allow_split=*/true);
    CHECK(forced.all_passed());
}

TEST_CASE("property: conjugation preserves certified properties") {
    const AlgPtr h = make_hamilton_algebra();
    const SubspaceWitness qj = span_and_certify(h, {h->x()});
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        const AlgElem y = random_nonzero(h, rng); // nonzero = invertible here
        const SubspaceWitness conj = conjugate_subspace(qj, y);
        CHECK(conj.dim() == qj.dim());
        CHECK(conj.certs().is_subfield);
        CHECK(conj.certs().is_maximal_subfield);
    }
}

TEST_CASE("property: double centralizer fixes maximal subfields") {
    for (const AlgPtr& alg : {make_hamilton_algebra(), make_cubic_algebra()}) {
        const SubspaceWitness l = distinguished_subfield(alg);
        CHECK(centralizer(alg, centralizer(alg, l)).same_span(l));
    }
    const AlgPtr h = make_hamilton_algebra();
    const SubspaceWitness qj = span_and_certify(h, {h->x()});
    CHECK(centralizer(h, centralizer(h, qj)).same_span(qj));
}

TEST_CASE("property: probe output contains Q·1 and sits inside K") {
    const AlgPtr h = make_hamilton_algebra();
    const SubspaceWitness qj = span_and_certify(h, {h->x()});
    std::mt19937_64 rng(42);
    int done = 0;
    while (done < 20) {
        const AlgElem y = random_nonzero(h, rng);
        if (qj.contains(y)) continue;
        const SubspaceWitness inter = malnormality_probe(qj, y);
        CHECK(inter.dim() >= 1);
        CHECK(inter.contains(h->one()));
        for (const AlgElem& b : inter.basis()) CHECK(qj.contains(b));
        ++done;
    }
}
