#include "divalg/brauer.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace divalg {

QuaternionAlgebra::QuaternionAlgebra(Rational a_, Rational b_)
    : a(std::move(a_)), b(std::move(b_)) {
    if (a.is_zero() || b.is_zero())
        throw domain_error("quaternion algebra parameters must be nonzero");
}

std::string QuaternionAlgebra::str() const { return "(" + a.str() + ", " + b.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const QuaternionAlgebra& q) { return os << q.str(); }

BrauerClass2::BrauerClass2(std::set<Place> ram) : ram_(std::move(ram)) {
    if (ram_.size() % 2 != 0)
        throw usage_error("a Brauer class ramification set must have even cardinality, got " +
                          places_str(ram_));
}

bool operator==(const BrauerClass2& a, const BrauerClass2& b) { return a.ram_ == b.ram_; }

BrauerClass2 ramification_set(const QuaternionAlgebra& q, std::uint64_t trial_division_bound) {
    return BrauerClass2(ramification_places(q.a, q.b, trial_division_bound));
}

BrauerClass2 class_add(const BrauerClass2& c1, const BrauerClass2& c2) {
    std::set<Place> sym;
    std::set_symmetric_difference(c1.ramification().begin(), c1.ramification().end(),
                                  c2.ramification().begin(), c2.ramification().end(),
                                  std::inserter(sym, sym.begin()));
    return BrauerClass2(std::move(sym));
}

bool classes_independent(const BrauerClass2& c1, const BrauerClass2& c2) {
    return !c1.is_trivial() && !c2.is_trivial() && !(c1 == c2);
}

bool quaternion_is_division(const QuaternionAlgebra& q, std::uint64_t trial_division_bound) {
    return !ramification_set(q, trial_division_bound).is_trivial();
}

std::array<Rational, 6> albert_form(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2) {
    return {q1.a,  q1.b,  -(q1.a * q1.b),
            -q2.a, -q2.b, q2.a * q2.b};
}

bool albert_form_isotropic(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2) {
    const auto form = albert_form(q1, q2);
    bool pos = false, neg = false;
    for (const Rational& c : form) {
        if (c.sign() > 0) pos = true;
        if (c.sign() < 0) neg = true;
    }
    return pos && neg;
}

std::string BiquaternionVerdict::summary() const {
    std::ostringstream os;
    os << "ram(Q1) = " << ram1.str() << ", ram(Q2) = " << ram2.str()
       << ", sum = " << class_sum.str()
       << "; classes independent: " << (independent ? "yes" : "no")
       << "; Albert form isotropic: " << (albert_isotropic ? "yes" : "no")
       << "; division: " << (division ? "yes" : "no");
    if (discrepancy)
        os << "; DISCREPANCY: the independence criterion asserts division but the "
              "Albert oracle finds the form isotropic";
    return os.str();
}

BiquaternionVerdict assemble_biquaternion_verdict(BrauerClass2 ram1, BrauerClass2 ram2,
                                                  std::array<Rational, 6> albert,
                                                  bool albert_isotropic) {
    BiquaternionVerdict v;
    v.ram1 = std::move(ram1);
    v.ram2 = std::move(ram2);
    v.class_sum = class_add(v.ram1, v.ram2);
    v.independent = classes_independent(v.ram1, v.ram2);
    v.albert = std::move(albert);
    v.albert_isotropic = albert_isotropic;
    v.division = !albert_isotropic;
    v.discrepancy = v.independent && albert_isotropic;
    return v;
}

BiquaternionVerdict biquaternion_verdict(const QuaternionAlgebra& q1, const QuaternionAlgebra& q2,
                                         std::uint64_t trial_division_bound) {
    return assemble_biquaternion_verdict(ramification_set(q1, trial_division_bound),
                                         ramification_set(q2, trial_division_bound),
                                         albert_form(q1, q2),
                                         albert_form_isotropic(q1, q2));
}

AlgElem QuaternionCyclicModel::element(const Rational& t, const Rational& u, const Rational& v,
                                       const Rational& w) const {
    return t * algebra->one() + u * i + v * j + w * k;
}

QuaternionCyclicModel quat_to_cyclic(const QuaternionAlgebra& q,
                                     std::uint64_t trial_division_bound) {
    if (q.a.is_square())
        throw domain_error("split coordinate a = " + q.a.str() +
                           " is a rational square; choose the other slot or a split model");
    // L = Q(sqrt(a)) = Q[t]/(t² - a), σ negates the root.
    const FieldPtr field = NumberField::create({-q.a, Rational(0), Rational(1)});
    const ExtPtr ext = CyclicExtension::create(field, -field->gen());
    AlgPtr alg = CyclicAlgebra::create(ext, q.b, trial_division_bound);

    QuaternionCyclicModel model{alg, alg->embed(field->gen()), alg->x(),
                                alg->embed(field->gen()) * alg->x()};
    // i² = a, j² = b, ij = k = -ji, by expansion.
    if (model.i * model.i != alg->from_rational(q.a) ||
        model.j * model.j != alg->from_rational(q.b) ||
        model.i * model.j != model.k || model.j * model.i != -model.k)
        throw internal_error("quaternion relations failed in the cyclic model of " + q.str());
    return model;
}

} // namespace divalg
