#include "divalg/number_field.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "divalg/factor.hpp"

namespace divalg {

std::size_t poly_degree(const Poly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1].is_zero()) --d;
    return d == 0 ? 0 : d - 1;
}

std::string poly_str(const Poly& p, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const Rational& c = p[i];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0 || !mag.is_one()) os << mag.str();
        if (i > 0) {
            if (!mag.is_one()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Monic polynomials of degree 2 or 3 are reducible over Q exactly when they
// have a rational root; candidates p/q come from divisors of the scaled
// constant and leading coefficients.
std::optional<Rational> rational_root(const Poly& f) {
    mpz_class den_lcm = 1;
    for (const Rational& c : f)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ic(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        mpz_class scale = den_lcm / f[i].den();
        ic[i] = f[i].num() * scale;
    }
    if (ic.front() == 0) return Rational(0);
    const auto ps = divisors(ic.front());
    const auto qs = divisors(ic.back());
    for (const mpz_class& q : qs) {
        for (const mpz_class& p : ps) {
            if (mpz_class(gcd(p, q)) != 1) continue;
            for (int sign : {1, -1}) {
                const mpz_class num = sign < 0 ? mpz_class(-p) : p;
                Rational cand{mpq_class(num, q)};
                Rational v(0);
                for (std::size_t i = f.size(); i-- > 0;) v = v * cand + f[i];
                if (v.is_zero()) return cand;
            }
        }
    }
    return std::nullopt;
}

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
    return r;
}

void check_same_field(const FieldElem& a, const FieldElem& b) {
    if (a.field() != b.field())
        throw usage_error("field elements belong to different number fields");
}

} // namespace

NumberField::NumberField(Poly minpoly, bool asserted)
    : minpoly_(std::move(minpoly)), n_(minpoly_.size() - 1), irreducibility_asserted_(asserted) {
    // Reduction table: red_[k] = power-basis coordinates of θ^{n+k}.
    if (n_ >= 1) {
        std::vector<Rational> base(n_);
        for (std::size_t i = 0; i < n_; ++i) base[i] = -minpoly_[i];
        red_.push_back(base);
        for (std::size_t k = 1; k + 1 < n_; ++k) {
            const std::vector<Rational>& prev = red_.back();
            std::vector<Rational> next(n_);
            const Rational& top = prev[n_ - 1];
            for (std::size_t i = 0; i < n_; ++i) {
                next[i] = top * base[i];
                if (i > 0) next[i] += prev[i - 1];
            }
            red_.push_back(std::move(next));
        }
    }
}

FieldPtr NumberField::create(Poly minpoly) {
    if (minpoly.size() < 2)
        throw construction_error("minimal polynomial must have degree >= 1");
    if (!minpoly.back().is_one())
        throw construction_error("minimal polynomial must be monic");
    const std::size_t deg = minpoly.size() - 1;
    bool asserted = false;
    if (deg == 2 || deg == 3) {
        if (auto root = rational_root(minpoly))
            throw construction_error("minimal polynomial is reducible over Q (rational root " +
                                     root->str() + ")");
    } else if (deg >= 4) {
        asserted = true; // irreducibility asserted by caller, not verified
    }
    return FieldPtr(new NumberField(std::move(minpoly), asserted));
}

FieldElem NumberField::element(std::vector<Rational> coeffs) const {
    return FieldElem(shared_from_this(), std::move(coeffs));
}

FieldElem NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(n_);
    c[0] = r;
    return element(std::move(c));
}

FieldElem NumberField::zero() const { return from_rational(Rational(0)); }
FieldElem NumberField::one() const { return from_rational(Rational(1)); }

FieldElem NumberField::gen() const {
    if (n_ == 1) return from_rational(-minpoly_[0]); // θ is rational here
    std::vector<Rational> c(n_);
    c[1] = Rational(1);
    return element(std::move(c));
}

FieldElem::FieldElem(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw usage_error("field element without a field");
    if (c_.size() != field_->degree())
        throw usage_error("coordinate vector length does not match field degree");
}

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool FieldElem::is_one() const {
    if (!c_[0].is_one()) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool FieldElem::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational FieldElem::as_rational() const {
    if (!is_rational())
        throw internal_error("field element expected to be rational is not: " + str());
    return c_[0];
}

FieldElem FieldElem::operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::pow(unsigned long e) const {
    FieldElem r = field_->one();
    for (unsigned long i = 0; i < e; ++i) r = r * *this;
    return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check_same_field(a, b);
    std::vector<Rational> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] + b.c_[i];
    return FieldElem(a.field_, std::move(r));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    check_same_field(a, b);
    std::vector<Rational> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] - b.c_[i];
    return FieldElem(a.field_, std::move(r));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check_same_field(a, b);
    const std::size_t n = a.c_.size();
    std::vector<Rational> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    std::vector<Rational> r(prod.begin(), prod.begin() + n);
    for (std::size_t k = n; k < prod.size(); ++k) {
        if (prod[k].is_zero()) continue;
        const auto& red = a.field_->power_reduction(k - n);
        for (std::size_t i = 0; i < n; ++i) r[i] += prod[k] * red[i];
    }
    return FieldElem(a.field_, std::move(r));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw domain_error("division by zero in number field");
    Matrix rhs(a.c_.size(), 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) rhs(i, 0) = a.c_[i];
    auto w = solve(mult_matrix(b), rhs);
    if (!w)
        throw domain_error("divisor is a zero divisor modulo the minimal polynomial");
    return FieldElem(a.field_, w->column(0));
}

FieldElem operator*(const Rational& s, const FieldElem& a) {
    std::vector<Rational> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * a.c_[i];
    return FieldElem(a.field_, std::move(r));
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    check_same_field(a, b);
    return a.c_ == b.c_;
}

bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

std::string FieldElem::str(const std::string& var) const {
    return poly_str(Poly(c_.begin(), c_.end()), var);
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.str(); }

Matrix mult_matrix(const FieldElem& u) {
    const std::size_t n = u.size();
    const auto& field = *u.field();
    Matrix m(n, n);
    std::vector<Rational> col(u.coeffs());
    for (std::size_t j = 0;; ++j) {
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
        if (j + 1 == n) break;
        // col <- θ * col, reduced
        std::vector<Rational> next(n);
        const Rational top = col[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) next[i] = col[i - 1];
        if (!top.is_zero()) {
            const auto& red = field.power_reduction(0);
            for (std::size_t i = 0; i < n; ++i) next[i] += top * red[i];
        }
        col = std::move(next);
    }
    return m;
}

FieldElem eval_poly(const Poly& p, const FieldElem& at) {
    FieldElem r = at.field()->zero();
    for (std::size_t i = p.size(); i-- > 0;) r = r * at + at.field()->from_rational(p[i]);
    return r;
}

std::string SigmaCertReport::describe() const {
    std::ostringstream os;
    os << "root-to-root: " << (maps_root_to_root ? "ok" : "FAILED (f(sigma(theta)) != 0)")
       << "; order: ";
    if (has_order_n)
        os << "ok (" << observed_order << ")";
    else if (observed_order == 0)
        os << "FAILED (no iterate of sigma returns theta)";
    else
        os << "FAILED (order " << observed_order << " != field degree)";
    os << "; fixed field: "
       << (fixed_field_is_rational ? "ok (Q)"
                                   : "FAILED (fixed subspace dimension " +
                                         std::to_string(fixed_space_dim) + " != 1)");
    return os.str();
}

CyclicExtension::CyclicExtension(FieldPtr field, FieldElem sigma_image)
    : field_(std::move(field)), sigma_image_(std::move(sigma_image)), n_(field_->degree()) {
    // sig_mats_[k] has columns σ^k(θ^j) = (σ^k(θ))^j.
    FieldElem theta_k = field_->gen();
    for (std::size_t k = 0; k < n_; ++k) {
        Matrix m(n_, n_);
        FieldElem p = field_->one();
        for (std::size_t j = 0;; ++j) {
            for (std::size_t i = 0; i < n_; ++i) m(i, j) = p[i];
            if (j + 1 == n_) break;
            p = p * theta_k;
        }
        sig_mats_.push_back(std::move(m));
        theta_k = eval_poly(Poly(theta_k.coeffs().begin(), theta_k.coeffs().end()), sigma_image_);
    }
}

SigmaCertReport CyclicExtension::certify(const FieldPtr& field, const FieldElem& sigma_gen_image) {
    if (sigma_gen_image.field() != field)
        throw usage_error("sigma generator image belongs to a different field");
    const std::size_t n = field->degree();
    SigmaCertReport rep;

    rep.maps_root_to_root = eval_poly(field->minpoly(), sigma_gen_image).is_zero();

    const FieldElem theta = field->gen();
    FieldElem it = sigma_gen_image;
    for (std::size_t k = 1; k <= n; ++k) {
        if (it == theta) {
            rep.observed_order = k;
            break;
        }
        it = eval_poly(Poly(it.coeffs().begin(), it.coeffs().end()), sigma_gen_image);
    }
    rep.has_order_n = rep.observed_order == n;

    Matrix m(n, n);
    FieldElem p = field->one();
    for (std::size_t j = 0;; ++j) {
        for (std::size_t i = 0; i < n; ++i) m(i, j) = p[i];
        if (j + 1 == n) break;
        p = p * sigma_gen_image;
    }
    const Matrix fixed = kernel(m - Matrix::identity(n));
    rep.fixed_space_dim = fixed.cols();
    std::vector<Rational> e0(n);
    e0[0] = Rational(1);
    rep.fixed_field_is_rational = fixed.cols() == 1 && in_column_space(fixed, e0);
    return rep;
}

ExtPtr CyclicExtension::create(FieldPtr field, FieldElem sigma_gen_image) {
    const SigmaCertReport rep = certify(field, sigma_gen_image);
    if (!rep.ok())
        throw construction_error("cyclic extension rejected: " + rep.describe());
    return ExtPtr(new CyclicExtension(std::move(field), std::move(sigma_gen_image)));
}

ExtPtr CyclicExtension::create_unchecked_for_testing(FieldPtr field, FieldElem sigma_gen_image,
                                                     std::optional<std::vector<Matrix>> cache_override) {
    auto ext = std::shared_ptr<CyclicExtension>(
        new CyclicExtension(std::move(field), std::move(sigma_gen_image)));
    if (cache_override) {
        if (cache_override->size() != ext->n_)
            throw usage_error("sigma cache override must supply one matrix per power");
        ext->sig_mats_ = std::move(*cache_override);
    }
    return ext;
}

FieldElem CyclicExtension::sigma(const FieldElem& u, long power) const {
    if (u.field() != field_) throw usage_error("element belongs to a different field");
    const long n = static_cast<long>(n_);
    const std::size_t k = static_cast<std::size_t>(((power % n) + n) % n);
    return FieldElem(field_, mat_vec(sig_mats_[k], u.coeffs()));
}

FieldElem CyclicExtension::sigma_fresh(const FieldElem& u) const {
    if (u.field() != field_) throw usage_error("element belongs to a different field");
    return eval_poly(Poly(u.coeffs().begin(), u.coeffs().end()), sigma_image_);
}

Rational CyclicExtension::norm(const FieldElem& u) const {
    FieldElem prod = sigma(u, 0);
    for (std::size_t k = 1; k < n_; ++k) prod = prod * sigma(u, static_cast<long>(k));
    return prod.as_rational();
}

Rational CyclicExtension::trace(const FieldElem& u) const {
    FieldElem s = sigma(u, 0);
    for (std::size_t k = 1; k < n_; ++k) s = s + sigma(u, static_cast<long>(k));
    return s.as_rational();
}

} // namespace divalg
