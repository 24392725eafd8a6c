#ifndef DIVALG_CYCLIC_ALGEBRA_HPP
#define DIVALG_CYCLIC_ALGEBRA_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "divalg/factor.hpp"
#include "divalg/number_field.hpp"

namespace divalg {

class CyclicAlgebra;
class AlgElem;
using AlgPtr = std::shared_ptr<const CyclicAlgebra>;

enum class DivisionStatus { proven_division, proven_split, unknown };

std::string to_string(DivisionStatus s);

/// The cyclic algebra D = (L/Q, σ, a): a direct sum of n copies of L with
/// basis 1, x, ..., x^{n-1} and multiplication driven by
///
///     x^n = a,   x·b = σ(b)·x   for all b in L.
///
/// Construction verifies the defining relations and that the centre is Q·1,
/// and classifies divisionness where that is decidable (degree 2 exactly via
/// Hilbert symbols; degree 1 trivially; unknown otherwise).
class CyclicAlgebra : public std::enable_shared_from_this<CyclicAlgebra> {
public:
    static AlgPtr create(ExtPtr ext, Rational a,
                         std::uint64_t trial_division_bound = kDefaultTrialDivisionBound);

    /// Construction without the relation/centre verification. Testing hook
    /// for exercising failure reports on deliberately inconsistent data.
    static AlgPtr create_unchecked_for_testing(ExtPtr ext, Rational a);

    const ExtPtr& extension() const { return ext_; }
    const FieldPtr& field() const { return ext_->field(); }
    std::size_t degree() const { return n_; }
    std::size_t dimension() const { return n_ * n_; } // over Q
    const Rational& param_a() const { return a_; }

    DivisionStatus division_status() const { return status_; }
    const std::string& division_note() const { return status_note_; }

    AlgElem element(std::vector<FieldElem> coeffs) const;
    AlgElem zero() const;
    AlgElem one() const;
    AlgElem from_rational(const Rational& r) const;
    /// The image of b in L under the coefficient-index-0 embedding.
    AlgElem embed(const FieldElem& b) const;
    /// The distinguished generator x (basis index 1); for degree 1 this is a·1.
    AlgElem x() const;
    /// Q-basis element θ^c x^i at flat index i*n + c (the QVec layout).
    AlgElem q_basis_element(std::size_t idx) const;
    AlgElem from_qvec(const std::vector<Rational>& v) const;

private:
    CyclicAlgebra(ExtPtr ext, Rational a);

    ExtPtr ext_;
    Rational a_;
    std::size_t n_;
    DivisionStatus status_ = DivisionStatus::unknown;
    std::string status_note_;
};

/// Element of a cyclic algebra: coefficient i (in L) multiplies x^i.
class AlgElem {
public:
    AlgElem(AlgPtr alg, std::vector<FieldElem> coeffs);

    const AlgPtr& algebra() const { return alg_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    const FieldElem& coeff(std::size_t i) const { return c_[i]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const; // lies in Q·1
    Rational as_rational() const;

    /// Flattening to a length-n² vector over Q; round-trips exactly through
    /// CyclicAlgebra::from_qvec.
    std::vector<Rational> qvec() const;

    AlgElem operator-() const;
    AlgElem pow(unsigned long e) const;

    friend AlgElem operator+(const AlgElem& u, const AlgElem& v);
    friend AlgElem operator-(const AlgElem& u, const AlgElem& v);
    friend AlgElem operator*(const AlgElem& u, const AlgElem& v);
    friend AlgElem operator*(const Rational& s, const AlgElem& u);
    friend bool operator==(const AlgElem& u, const AlgElem& v);
    friend bool operator!=(const AlgElem& u, const AlgElem& v);

    std::string str() const;

private:
    AlgPtr alg_;
    std::vector<FieldElem> c_;
};

std::ostream& operator<<(std::ostream& os, const AlgElem& u);

/// Per-relation outcome of checking x^n = a and x·θ^k = σ(θ^k)·x. The σ on
/// the right-hand side is recomputed from the generator image by fresh
/// substitution, so a corrupted σ-power cache inside the multiplication is
/// detected and named.
struct RelationReport {
    struct Entry {
        std::string name;
        bool ok;
    };
    std::vector<Entry> relations;
    bool centre_is_rational = false;
    std::size_t centre_dim = 0;

    bool ok() const;
    std::string first_failure() const;
};

RelationReport verify_defining_relations(const AlgPtr& alg);

/// n x n matrix over L; the codomain of the splitting representation.
class FieldMatrix {
public:
    FieldMatrix(FieldPtr field, std::size_t n);

    std::size_t size() const { return n_; }
    const FieldElem& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    FieldElem& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

    FieldElem det() const;   // Gaussian elimination over L
    FieldElem trace() const;

private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<FieldElem> e_;
};

/// Left multiplication by u on D viewed as a right L-space with basis
/// 1, x, ..., x^{n-1}. A ring homomorphism: ρ(b) is diagonal with entries
/// σ^{-k}(b), ρ(x) is the cyclic shift whose wrap-around entry carries a.
FieldMatrix splitting_rep(const AlgElem& u);

/// det / trace of the splitting representation; rational by construction,
/// enforced as a postcondition.
Rational reduced_norm(const AlgElem& u);
Rational reduced_trace(const AlgElem& u);

/// Matrix of v ↦ u·v over Q in the QVec basis (n² x n²).
Matrix left_regular_matrix(const AlgElem& u);
/// Matrix of v ↦ v·u over Q.
Matrix right_regular_matrix(const AlgElem& u);

/// u^{-1} when the reduced norm is nonzero; nullopt otherwise (zero, and
/// zero divisors in split algebras).
std::optional<AlgElem> invert_elem(const AlgElem& u);

/// Least-degree monic p with p(u) = 0, constant-first coefficients. Found by
/// the first linear dependence among 1, u, u², ...
Poly minimal_polynomial(const AlgElem& u);

/// Searches for u in L with N_{L/Q}(u) = a, over coordinates p_i/q with
/// |p_i| <= height and a common denominator q <= height. A hit certifies
/// that (L/Q, σ, a) is split; absence only means no witness up to this
/// height.
std::optional<FieldElem> norm_representation_search(const ExtPtr& ext, const Rational& a,
                                                    unsigned height);

} // namespace divalg

#endif
