#include "divalg/subfields.hpp"

#include <algorithm>
#include <sstream>

namespace divalg {

namespace {

void check_owner(const AlgPtr& alg, const AlgElem& u, const char* what) {
    if (u.algebra() != alg)
        throw usage_error(std::string(what) + " belongs to a different algebra");
}

Matrix columns_of(const std::vector<AlgElem>& elems, std::size_t ambient) {
    Matrix m(ambient, elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j) {
        const auto v = elems[j].qvec();
        for (std::size_t i = 0; i < ambient; ++i) m(i, j) = v[i];
    }
    return m;
}

std::vector<AlgElem> elems_of(const AlgPtr& alg, const Matrix& cols) {
    std::vector<AlgElem> out;
    out.reserve(cols.cols());
    for (std::size_t j = 0; j < cols.cols(); ++j) out.push_back(alg->from_qvec(cols.column(j)));
    return out;
}

/// Canonical basis of the centralizer of the span of `basis`, as columns.
Matrix centralizer_columns(const AlgPtr& alg, const std::vector<AlgElem>& basis) {
    Matrix stacked(0, alg->dimension());
    for (const AlgElem& s : basis)
        stacked = vstack(stacked, left_regular_matrix(s) - right_regular_matrix(s));
    if (stacked.rows() == 0) return column_reduce(Matrix::identity(alg->dimension()));
    return column_reduce(kernel(stacked));
}

constexpr std::size_t kInvertibilitySampleCap = 64;

} // namespace

SubspaceWitness::SubspaceWitness(AlgPtr alg, std::vector<AlgElem> basis, Matrix cols,
                                 SubfieldCerts certs)
    : alg_(std::move(alg)), basis_(std::move(basis)), cols_(std::move(cols)), certs_(certs) {}

bool SubspaceWitness::contains(const AlgElem& u) const {
    check_owner(alg_, u, "element");
    return in_column_space(cols_, u.qvec());
}

bool SubspaceWitness::same_span(const SubspaceWitness& other) const {
    if (alg_ != other.alg_) throw usage_error("witnesses from different algebras");
    return cols_ == other.cols_; // canonical bases
}

SubspaceWitness span_and_certify(const AlgPtr& alg, const std::vector<AlgElem>& generators) {
    if (generators.empty()) throw usage_error("span_and_certify requires generators");
    for (const AlgElem& g : generators) check_owner(alg, g, "generator");
    const std::size_t ambient = alg->dimension();

    std::vector<AlgElem> seed{alg->one()};
    seed.insert(seed.end(), generators.begin(), generators.end());
    Matrix span = column_reduce(columns_of(seed, ambient));

    for (std::size_t round = 0;; ++round) {
        if (round > ambient + 1)
            throw internal_error("span closure failed to stabilize within the Q-dimension");
        const auto basis = elems_of(alg, span);
        std::vector<AlgElem> products;
        products.reserve(basis.size() * basis.size());
        for (const AlgElem& u : basis)
            for (const AlgElem& v : basis) products.push_back(u * v);
        const Matrix grown =
            column_reduce(hstack(span, columns_of(products, ambient)));
        if (grown.cols() == span.cols()) break;
        span = grown;
    }

    const auto basis = elems_of(alg, span);
    SubfieldCerts certs;
    certs.contains_one = in_column_space(span, alg->one().qvec());
    certs.mult_closed = true; // fixpoint of the closure loop

    certs.commutative = true;
    for (std::size_t i = 0; i < basis.size() && certs.commutative; ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (basis[i] * basis[j] != basis[j] * basis[i]) {
                certs.commutative = false;
                break;
            }

    if (certs.commutative && certs.mult_closed && certs.contains_one) {
        // Invertibility sanity sample: the basis itself plus small sums and
        // differences. In a division algebra this cannot fail; in split
        // algebras it catches zero divisors such as 1 + x when x² = 1.
        std::vector<AlgElem> samples = basis;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                samples.push_back(basis[i] + basis[j]);
                samples.push_back(basis[i] - basis[j]);
            }
        certs.is_subfield = true;
        std::size_t tried = 0;
        for (const AlgElem& s : samples) {
            if (tried >= kInvertibilitySampleCap) break;
            if (s.is_zero()) continue;
            ++tried;
            if (!invert_elem(s)) {
                certs.is_subfield = false;
                break;
            }
        }
    }

    if (certs.is_subfield && span.cols() == alg->degree())
        certs.is_maximal_subfield = same_column_space(centralizer_columns(alg, basis), span);

    return SubspaceWitness(alg, basis, span, certs);
}

SubspaceWitness centralizer(const AlgPtr& alg, const SubspaceWitness& s) {
    if (s.algebra() != alg) throw usage_error("witness belongs to a different algebra");
    const Matrix cols = centralizer_columns(alg, s.basis());
    return span_and_certify(alg, elems_of(alg, cols));
}

bool is_maximal_subfield(const SubspaceWitness& k) {
    if (!k.certs().is_subfield)
        throw usage_error("is_maximal_subfield requires a witness certified as a subfield");
    return k.certs().is_maximal_subfield;
}

std::optional<AlgElem> sn_conjugator(const AlgPtr& alg, const AlgElem& u, const AlgElem& v) {
    check_owner(alg, u, "u");
    check_owner(alg, v, "v");
    const Poly pu = minimal_polynomial(u);
    const Poly pv = minimal_polynomial(v);
    if (pu != pv)
        throw precondition_error("minimal polynomials differ (" + poly_str(pu) + " vs " +
                                 poly_str(pv) +
                                 "); subfields not isomorphic, Skolem-Noether does not apply");

    const Matrix space = kernel(left_regular_matrix(u) - right_regular_matrix(v));
    if (space.cols() == 0) return std::nullopt;

    auto admissible = [&](const AlgElem& g) -> bool {
        if (g.is_zero() || !invert_elem(g)) return false;
        // u·g = g·v and g invertible force g⁻¹·u·g = v; check anyway.
        if (*invert_elem(g) * u * g != v)
            throw internal_error("intertwiner verification failed");
        return true;
    };

    const AlgElem first = alg->from_qvec(normalize_integral(space.column(0)));
    if (admissible(first)) return first;
    if (alg->division_status() == DivisionStatus::proven_division)
        throw internal_error("nonzero non-invertible intertwiner in a proven division algebra");

    // Split or unclassified algebra: bounded search over small integer
    // combinations of the solution space basis.
    const std::size_t d = space.cols();
    std::size_t trials = 0;
    for (long shell = 1; shell <= 3 && trials < 20000; ++shell) {
        std::vector<long> c(d, -shell);
        while (trials < 20000) {
            bool on_shell = false;
            for (long ci : c)
                if (ci == -shell || ci == shell) on_shell = true;
            if (on_shell) {
                ++trials;
                std::vector<Rational> w(alg->dimension());
                for (std::size_t j = 0; j < d; ++j)
                    for (std::size_t i = 0; i < alg->dimension(); ++i)
                        w[i] += Rational(c[j]) * space(i, j);
                const AlgElem g = alg->from_qvec(normalize_integral(w));
                if (admissible(g)) return g;
            }
            std::size_t i = 0;
            while (i < d && c[i] == shell) c[i++] = -shell;
            if (i == d) break;
            ++c[i];
        }
    }
    return std::nullopt;
}

SubspaceWitness conjugate_subspace(const SubspaceWitness& k, const AlgElem& y) {
    check_owner(k.algebra(), y, "y");
    const auto yinv = invert_elem(y);
    if (!yinv) throw domain_error("conjugating element is not invertible");
    std::vector<AlgElem> images;
    images.reserve(k.dim());
    for (const AlgElem& b : k.basis()) images.push_back(*yinv * b * y);
    SubspaceWitness conj = span_and_certify(k.algebra(), images);
    if (conj.dim() != k.dim())
        throw internal_error("conjugation changed the dimension of a subspace");
    return conj;
}

SubspaceWitness malnormality_probe(const SubspaceWitness& k, const AlgElem& y) {
    check_owner(k.algebra(), y, "y");
    if (!invert_elem(y)) throw domain_error("probe element is not invertible");
    if (k.contains(y))
        throw precondition_error("probe element lies in K; the condition quantifies over "
                                 "elements outside K");
    const SubspaceWitness conj = conjugate_subspace(k, y);
    const Matrix inter = intersect_subspaces(k.basis_matrix(), conj.basis_matrix());
    return span_and_certify(k.algebra(), elems_of(k.algebra(), inter));
}

SubspaceWitness distinguished_subfield(const AlgPtr& alg) {
    return span_and_certify(alg, {alg->embed(alg->field()->gen())});
}

bool Theorem2Report::all_passed() const {
    return std::all_of(steps.begin(), steps.end(),
                       [](const DemoStep& s) { return s.run && s.ok; });
}

std::string Theorem2Report::first_failure() const {
    for (const DemoStep& s : steps) {
        if (!s.run) return "step not reached: " + s.name;
        if (!s.ok) return "step failed: " + s.name + (s.detail.empty() ? "" : " (" + s.detail + ")");
    }
    return "";
}

std::string Theorem2Report::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const DemoStep& s = steps[i];
        os << "step " << (i + 1) << " [" << s.name << "]: "
           << (!s.run ? "skipped" : s.ok ? "ok" : "FAILED");
        if (!s.detail.empty()) os << " — " << s.detail;
        os << "\n";
    }
    return os.str();
}

Theorem2Report theorem2_demo(const AlgPtr& alg, const SubspaceWitness& k, const AlgElem& k_gen,
                             const AlgElem& l_gen, bool allow_split) {
    if (k.algebra() != alg) throw usage_error("witness belongs to a different algebra");
    check_owner(alg, k_gen, "k_gen");
    check_owner(alg, l_gen, "l_gen");
    if (alg->division_status() == DivisionStatus::proven_split && !allow_split)
        throw precondition_error("the algebra is proven split (" + alg->division_note() +
                                 "); rerun with the split override to proceed");
    if (!k.certs().is_subfield)
        throw usage_error("K is not a certified subfield");
    if (!is_maximal_subfield(k))
        throw precondition_error("K is not a maximal subfield");
    if (!span_and_certify(alg, {k_gen}).same_span(k))
        throw precondition_error("k_gen does not generate K");
    const SubspaceWitness l = distinguished_subfield(alg);
    if (!span_and_certify(alg, {l_gen}).same_span(l))
        throw precondition_error("l_gen does not generate the distinguished subfield L");
    if (minimal_polynomial(k_gen) != minimal_polynomial(l_gen))
        throw precondition_error("k_gen and l_gen have different minimal polynomials; "
                                 "Skolem-Noether does not apply");

    Theorem2Report rep;
    rep.degree = alg->degree();
    rep.steps = {DemoStep{"find g with g^-1·L·g = K", false, false, ""},
                 DemoStep{"set y = g^-1·x·g", false, false, ""},
                 DemoStep{"y lies outside K", false, false, ""},
                 DemoStep{"y^-1·K·y = K", false, false, ""},
                 DemoStep{"K ∩ y^-1·K·y = K with dimension n > 1", false, false, ""}};

    // Step 1: Skolem-Noether conjugator.
    rep.steps[0].run = true;
    const auto g = sn_conjugator(alg, l_gen, k_gen);
    if (!g) {
        rep.steps[0].detail = "no invertible intertwiner found";
        return rep;
    }
    rep.g = *g;
    const SubspaceWitness l_conj = conjugate_subspace(l, *g);
    rep.steps[0].ok = l_conj.same_span(k);
    if (!rep.steps[0].ok) {
        rep.steps[0].detail = "g^-1·L·g spans a different subspace than K";
        return rep;
    }
    rep.steps[0].detail = "g = " + g->str();

    // Step 2: the candidate violation point.
    rep.steps[1].run = true;
    const AlgElem y = *invert_elem(*g) * alg->x() * *g;
    rep.y = y;
    rep.steps[1].ok = true;
    rep.steps[1].detail = "y = " + y.str();

    // Step 3: y outside K (x outside L conjugated).
    rep.steps[2].run = true;
    rep.steps[2].ok = !k.contains(y);
    if (!rep.steps[2].ok) {
        rep.steps[2].detail = "y unexpectedly lies in K";
        return rep;
    }

    // Step 4: y normalizes K.
    rep.steps[3].run = true;
    const SubspaceWitness k_conj = conjugate_subspace(k, y);
    rep.steps[3].ok = k_conj.same_span(k);
    if (!rep.steps[3].ok) {
        rep.steps[3].detail = "y^-1·K·y differs from K";
        return rep;
    }

    // Step 5: the malnormality violation.
    rep.steps[4].run = true;
    const SubspaceWitness inter = malnormality_probe(k, y);
    rep.intersection_dim = inter.dim();
    rep.steps[4].ok = inter.same_span(k) && inter.dim() == alg->degree() && alg->degree() > 1;
    rep.steps[4].detail = "intersection dimension " + std::to_string(inter.dim());
    return rep;
}

} // namespace divalg
