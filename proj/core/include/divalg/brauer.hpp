#ifndef DIVALG_BRAUER_HPP
#define DIVALG_BRAUER_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>

#include "divalg/cyclic_algebra.hpp"
#include "divalg/hilbert.hpp"

namespace divalg {

/// The quaternion algebra (a,b) over Q: i² = a, j² = b, k = ij = -ji.
struct QuaternionAlgebra {
    Rational a;
    Rational b;

    QuaternionAlgebra(Rational a_, Rational b_);
    std::string str() const; // "(a, b)"
};

std::ostream& operator<<(std::ostream& os, const QuaternionAlgebra& q);

/// A 2-torsion Brauer class over Q, represented by its ramification set.
/// The empty set is the trivial (split) class; cardinality is always even.
class BrauerClass2 {
public:
    BrauerClass2() = default; // trivial class
    explicit BrauerClass2(std::set<Place> ram);

    const std::set<Place>& ramification() const { return ram_; }
    bool is_trivial() const { return ram_.empty(); }
    std::string str() const { return places_str(ram_); }

    friend bool operator==(const BrauerClass2& a, const BrauerClass2& b);

private:
    std::set<Place> ram_;
};

/// Ramification set of (a,b) as a Brauer class.
BrauerClass2 ramification_set(const QuaternionAlgebra& q,
                              std::uint64_t trial_division_bound = kDefaultTrialDivisionBound);

/// F₂ addition of classes: symmetric difference of ramification sets.
BrauerClass2 class_add(const BrauerClass2& c1, const BrauerClass2& c2);

/// Linear independence over F₂: neither class is zero and they differ.
bool classes_independent(const BrauerClass2& c1, const BrauerClass2& c2);

/// Division exactly when ramified somewhere.
bool quaternion_is_division(const QuaternionAlgebra& q,
                            std::uint64_t trial_division_bound = kDefaultTrialDivisionBound);

/// The six diagonal entries <a, b, -ab, -c, -d, cd> attached to the tensor
/// product (a,b) ⊗ (c,d).
std::array<Rational, 6> albert_form(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2);

/// Exact isotropy of the Albert form over Q. The form is nondegenerate of
/// dimension 6, hence isotropic at every finite completion; isotropy over Q
/// therefore reduces to indefiniteness at the real place.
bool albert_form_isotropic(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2);

/// Verdict on the tensor product Q1 ⊗ Q2. Reports both the class-independence
/// criterion and the Albert-form oracle; `division` follows the oracle, and
/// `discrepancy` is raised whenever the two sides disagree (independence
/// asserts division, isotropy denies it). The flag is always computed from
/// the two sub-results.
struct BiquaternionVerdict {
    BrauerClass2 ram1;
    BrauerClass2 ram2;
    BrauerClass2 class_sum;
    bool independent = false;
    std::array<Rational, 6> albert;
    bool albert_isotropic = false;
    bool division = false;
    bool discrepancy = false;

    std::string summary() const;
};

/// Derives the dependent fields from the three computed sub-results.
BiquaternionVerdict assemble_biquaternion_verdict(BrauerClass2 ram1, BrauerClass2 ram2,
                                                  std::array<Rational, 6> albert,
                                                  bool albert_isotropic);

BiquaternionVerdict biquaternion_verdict(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2,
                                         std::uint64_t trial_division_bound = kDefaultTrialDivisionBound);

/// The cyclic presentation (Q(√a)/Q, √a ↦ -√a, b) of (a,b), together with
/// the images of the quaternion generators: i ↦ θ, j ↦ x, k ↦ θx. Requires
/// a to not be a rational square, so that Q(√a) is a field.
struct QuaternionCyclicModel {
    AlgPtr algebra;
    AlgElem i;
    AlgElem j;
    AlgElem k;

    /// Image of t + u·i + v·j + w·k.
    AlgElem element(const Rational& t, const Rational& u, const Rational& v,
                    const Rational& w) const;
};

QuaternionCyclicModel quat_to_cyclic(const QuaternionAlgebra& q,
                                     std::uint64_t trial_division_bound = kDefaultTrialDivisionBound);

} // namespace divalg

#endif
