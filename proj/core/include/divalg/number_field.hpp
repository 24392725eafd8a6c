#ifndef DIVALG_NUMBER_FIELD_HPP
#define DIVALG_NUMBER_FIELD_HPP

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "divalg/matrix.hpp"
#include "divalg/rational.hpp"

namespace divalg {

/// Polynomial over Q, coefficients from the constant term up.
using Poly = std::vector<Rational>;

std::size_t poly_degree(const Poly& p); // ignores trailing zeros
std::string poly_str(const Poly& p, const std::string& var = "t");

class NumberField;
class FieldElem;
using FieldPtr = std::shared_ptr<const NumberField>;

/// A number field L = Q[t]/(f) in the power basis 1, θ, ..., θ^{n-1}.
///
/// f must be monic of degree >= 1. For degrees 2 and 3 irreducibility over Q
/// is verified through the rational root test; for degree >= 4 the field is
/// constructed with an "irreducibility asserted by caller" flag instead.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static FieldPtr create(Poly minpoly);

    std::size_t degree() const { return n_; }
    const Poly& minpoly() const { return minpoly_; }
    bool irreducibility_asserted() const { return irreducibility_asserted_; }

    FieldElem element(std::vector<Rational> coeffs) const;
    FieldElem from_rational(const Rational& r) const;
    FieldElem zero() const;
    FieldElem one() const;
    FieldElem gen() const; // θ

    /// Reduction of θ^(n+k) in the power basis, for k = 0 .. n-2.
    const std::vector<Rational>& power_reduction(std::size_t k) const { return red_[k]; }

private:
    explicit NumberField(Poly minpoly, bool asserted);

    Poly minpoly_;
    std::size_t n_;
    bool irreducibility_asserted_;
    std::vector<std::vector<Rational>> red_;
};

/// Element of a number field, as power-basis coordinates. Immutable value;
/// mixing elements of different field instances is a usage error.
class FieldElem {
public:
    FieldElem(FieldPtr field, std::vector<Rational> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    std::size_t size() const { return c_.size(); }

    bool is_zero() const;
    bool is_one() const;
    /// True when all coordinates beyond the constant one vanish.
    bool is_rational() const;
    Rational as_rational() const; // throws internal_error if not rational

    FieldElem operator-() const;
    FieldElem pow(unsigned long e) const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    /// a * b^{-1}, found by solving the multiplication-by-b linear system.
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const Rational& s, const FieldElem& a);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b);

    std::string str(const std::string& var = "t") const;

private:
    FieldPtr field_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& e);

/// Matrix of multiplication-by-u on L in the power basis (n x n over Q).
Matrix mult_matrix(const FieldElem& u);

/// Horner evaluation of p at a field element.
FieldElem eval_poly(const Poly& p, const FieldElem& at);

/// Outcome of the three cyclic-extension invariant checks.
struct SigmaCertReport {
    bool maps_root_to_root = false;
    bool has_order_n = false;
    std::size_t observed_order = 0; // 0 when no iterate returns to θ
    bool fixed_field_is_rational = false;
    std::size_t fixed_space_dim = 0;

    bool ok() const { return maps_root_to_root && has_order_n && fixed_field_is_rational; }
    std::string describe() const;
};

class CyclicExtension;
using ExtPtr = std::shared_ptr<const CyclicExtension>;

/// A number field together with a generator σ of a cyclic Galois group of
/// order n = [L:Q], given by the image σ(θ). Construction certifies that
/// σ(θ) is a root of the minimal polynomial, that σ has order exactly n, and
/// that the fixed subspace of σ is Q·1.
class CyclicExtension : public std::enable_shared_from_this<CyclicExtension> {
public:
    /// Certifying constructor; throws construction_error naming the first
    /// failed invariant.
    static ExtPtr create(FieldPtr field, FieldElem sigma_gen_image);

    /// Runs the invariant checks without constructing anything.
    static SigmaCertReport certify(const FieldPtr& field, const FieldElem& sigma_gen_image);

    /// Skips certification and optionally plants a bogus σ-power cache.
    /// Exists so tests can exercise failure paths that certified data can
    /// never reach.
    static ExtPtr create_unchecked_for_testing(FieldPtr field, FieldElem sigma_gen_image,
                                               std::optional<std::vector<Matrix>> cache_override);

    const FieldPtr& field() const { return field_; }
    std::size_t degree() const { return n_; }
    const FieldElem& sigma_gen_image() const { return sigma_image_; }

    /// σ^power(u); power is taken modulo n. Uses the per-extension matrix
    /// cache computed at construction.
    FieldElem sigma(const FieldElem& u, long power = 1) const;
    const Matrix& sigma_matrix(std::size_t k) const { return sig_mats_[k]; }

    /// σ(u) recomputed from the generator image by polynomial substitution,
    /// bypassing the cache. verify_defining_relations checks the cached
    /// multiplication path against this one.
    FieldElem sigma_fresh(const FieldElem& u) const;

    /// N_{L/Q}(u) = product of all conjugates; always a rational number.
    Rational norm(const FieldElem& u) const;
    Rational trace(const FieldElem& u) const;

private:
    CyclicExtension(FieldPtr field, FieldElem sigma_image);

    FieldPtr field_;
    FieldElem sigma_image_;
    std::size_t n_;
    std::vector<Matrix> sig_mats_; // sig_mats_[k] = matrix of σ^k
};

} // namespace divalg

#endif
