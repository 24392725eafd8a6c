#ifndef DIVALG_SUBFIELDS_HPP
#define DIVALG_SUBFIELDS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "divalg/cyclic_algebra.hpp"

namespace divalg {

/// Certification flags of a Q-subspace of a cyclic algebra. Set only by the
/// certifying factories in this module, never by callers.
struct SubfieldCerts {
    bool contains_one = false;
    bool mult_closed = false;
    bool commutative = false;
    bool is_subfield = false;
    bool is_maximal_subfield = false;
};

/// A Q-subspace of a cyclic algebra with a canonical basis (reduced column
/// echelon form of the flattened elements) and certified properties.
/// Instances come from span_and_certify, centralizer, conjugate_subspace and
/// malnormality_probe; all of those close the span under multiplication.
class SubspaceWitness {
public:
    const AlgPtr& algebra() const { return alg_; }
    const std::vector<AlgElem>& basis() const { return basis_; }
    const Matrix& basis_matrix() const { return cols_; } // n² rows, dim columns
    std::size_t dim() const { return cols_.cols(); }
    const SubfieldCerts& certs() const { return certs_; }

    bool contains(const AlgElem& u) const;
    bool same_span(const SubspaceWitness& other) const;

private:
    SubspaceWitness(AlgPtr alg, std::vector<AlgElem> basis, Matrix cols, SubfieldCerts certs);

    friend SubspaceWitness span_and_certify(const AlgPtr&, const std::vector<AlgElem>&);

    AlgPtr alg_;
    std::vector<AlgElem> basis_;
    Matrix cols_;
    SubfieldCerts certs_;
};

/// Closes the span of {1} ∪ generators under multiplication (bounded by the
/// algebra's Q-dimension) and certifies the result. The subfield flag
/// requires closure, commutativity and invertibility of a deterministic
/// sample of nonzero combinations; the maximality flag additionally requires
/// dimension n and self-centralizing.
SubspaceWitness span_and_certify(const AlgPtr& alg, const std::vector<AlgElem>& generators);

/// {d in D : d·s = s·d for all basis s of S}, via the kernel of the stacked
/// commutator maps over Q. Returned certified.
SubspaceWitness centralizer(const AlgPtr& alg, const SubspaceWitness& s);

/// K is a subfield of dimension n equal to its own centralizer. Requires a
/// witness whose subfield flag was certified.
bool is_maximal_subfield(const SubspaceWitness& k);

/// Solves u·g = g·v over Q and returns an invertible solution g (so that
/// g⁻¹·u·g = v, verified), or nullopt when none is found. Requires equal
/// minimal polynomials. The returned g is the lowest-index kernel basis
/// vector normalized to integral coordinates with content 1; in algebras
/// that are not proven division a bounded search over small combinations
/// runs when that vector is singular.
std::optional<AlgElem> sn_conjugator(const AlgPtr& alg, const AlgElem& u, const AlgElem& v);

/// The subspace y⁻¹·K·y, certified. Conjugation is an automorphism, so the
/// dimension is preserved.
SubspaceWitness conjugate_subspace(const SubspaceWitness& k, const AlgElem& y);

/// Basis of K ∩ y⁻¹·K·y for one invertible y outside K. Dimension 1 is the
/// malnormal outcome (intersection Q·1); anything larger witnesses a
/// violation at y.
SubspaceWitness malnormality_probe(const SubspaceWitness& k, const AlgElem& y);

/// The distinguished maximal subfield: the coefficient-index-0 embedding of L.
SubspaceWitness distinguished_subfield(const AlgPtr& alg);

struct DemoStep {
    std::string name;
    bool run = false;
    bool ok = false;
    std::string detail;
};

/// Witness record of the conjugation pipeline: a conjugator g moving the
/// distinguished subfield L onto K, the unit y = g⁻¹·x·g outside K that
/// normalizes K, and the resulting intersection K ∩ y⁻¹·K·y = K of dimension
/// n > 1 — the computed violation of the malnormality condition
/// K ∩ y⁻¹·K·y = Q.
struct Theorem2Report {
    std::size_t degree = 0;
    std::optional<AlgElem> g;
    std::optional<AlgElem> y;
    std::array<DemoStep, 5> steps;
    std::size_t intersection_dim = 0;

    bool all_passed() const;
    std::string first_failure() const;
    std::string summary() const;
};

/// Runs the five-step pipeline on a maximal subfield K generated by k_gen,
/// matched against the distinguished subfield generated by l_gen. Split
/// algebras are refused unless allow_split is set. Step failures are
/// recorded in the report (they signal a bug, not a data error), with
/// subsequent steps skipped.
Theorem2Report theorem2_demo(const AlgPtr& alg, const SubspaceWitness& k, const AlgElem& k_gen,
                             const AlgElem& l_gen, bool allow_split = false);

} // namespace divalg

#endif
