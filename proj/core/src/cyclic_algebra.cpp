#include "divalg/cyclic_algebra.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "divalg/hilbert.hpp"

namespace divalg {

std::string to_string(DivisionStatus s) {
    switch (s) {
        case DivisionStatus::proven_division: return "proven-division";
        case DivisionStatus::proven_split: return "proven-split";
        case DivisionStatus::unknown: return "unknown";
    }
    return "?";
}

namespace {

void check_same_algebra(const AlgElem& u, const AlgElem& v) {
    if (u.algebra() != v.algebra())
        throw usage_error("elements belong to different cyclic algebras");
}

} // namespace

CyclicAlgebra::CyclicAlgebra(ExtPtr ext, Rational a)
    : ext_(std::move(ext)), a_(std::move(a)), n_(ext_->degree()) {}

AlgPtr CyclicAlgebra::create_unchecked_for_testing(ExtPtr ext, Rational a) {
    return AlgPtr(new CyclicAlgebra(std::move(ext), std::move(a)));
}

AlgPtr CyclicAlgebra::create(ExtPtr ext, Rational a, std::uint64_t trial_division_bound) {
    if (a.is_zero()) throw domain_error("cyclic algebra parameter a must be nonzero");
    auto alg = std::shared_ptr<CyclicAlgebra>(new CyclicAlgebra(std::move(ext), std::move(a)));

    const RelationReport rep = verify_defining_relations(alg);
    if (!rep.ok())
        throw construction_error("cyclic algebra rejected: " + rep.first_failure());

    // Divisionness classification.
    const std::size_t n = alg->n_;
    if (n == 1) {
        alg->status_ = DivisionStatus::proven_split;
        alg->status_note_ = "degree 1: the algebra is Q itself";
    } else if (n == 2) {
        // (L/Q, σ, a) with L = Q(sqrt(m)) is the quaternion algebra (m, a).
        const Poly& f = alg->field()->minpoly();
        const Rational m = f[1] * f[1] - Rational(4) * f[0];
        try {
            const auto ram = ramification_places(m, alg->a_, trial_division_bound);
            if (ram.empty()) {
                alg->status_ = DivisionStatus::proven_split;
                alg->status_note_ = "quaternion class (" + m.str() + ", " + alg->a_.str() +
                                    ") splits everywhere; a is a norm from L and x^2 = a "
                                    "admits zero divisors";
            } else {
                alg->status_ = DivisionStatus::proven_division;
                alg->status_note_ = "quaternion class (" + m.str() + ", " + alg->a_.str() +
                                    ") ramified at " + places_str(ram);
            }
        } catch (const usage_error&) {
            alg->status_ = DivisionStatus::unknown;
            alg->status_note_ = "divisionness undecided: square-free part exceeds the "
                                "trial-division bound";
        }
    } else {
        alg->status_ = DivisionStatus::unknown;
        alg->status_note_ = "divisionness undecided at construction; "
                            "norm_representation_search can certify splitting";
    }
    return alg;
}

AlgElem CyclicAlgebra::element(std::vector<FieldElem> coeffs) const {
    return AlgElem(shared_from_this(), std::move(coeffs));
}

AlgElem CyclicAlgebra::zero() const {
    return element(std::vector<FieldElem>(n_, field()->zero()));
}

AlgElem CyclicAlgebra::one() const { return from_rational(Rational(1)); }

AlgElem CyclicAlgebra::from_rational(const Rational& r) const {
    std::vector<FieldElem> c(n_, field()->zero());
    c[0] = field()->from_rational(r);
    return element(std::move(c));
}

AlgElem CyclicAlgebra::embed(const FieldElem& b) const {
    if (b.field() != field()) throw usage_error("field element belongs to a different field");
    std::vector<FieldElem> c(n_, field()->zero());
    c[0] = b;
    return element(std::move(c));
}

AlgElem CyclicAlgebra::x() const {
    if (n_ == 1) return from_rational(a_); // x = x^1 = x^n = a
    std::vector<FieldElem> c(n_, field()->zero());
    c[1] = field()->one();
    return element(std::move(c));
}

AlgElem CyclicAlgebra::q_basis_element(std::size_t idx) const {
    if (idx >= dimension()) throw usage_error("basis index out of range");
    std::vector<Rational> v(dimension());
    v[idx] = Rational(1);
    return from_qvec(v);
}

AlgElem CyclicAlgebra::from_qvec(const std::vector<Rational>& v) const {
    if (v.size() != dimension()) throw usage_error("QVec length must be n^2");
    std::vector<FieldElem> c;
    c.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i)
        c.push_back(field()->element(std::vector<Rational>(v.begin() + i * n_,
                                                           v.begin() + (i + 1) * n_)));
    return element(std::move(c));
}

AlgElem::AlgElem(AlgPtr alg, std::vector<FieldElem> coeffs)
    : alg_(std::move(alg)), c_(std::move(coeffs)) {
    if (!alg_) throw usage_error("algebra element without an algebra");
    if (c_.size() != alg_->degree())
        throw usage_error("coefficient vector length does not match algebra degree");
    for (const FieldElem& b : c_)
        if (b.field() != alg_->field())
            throw usage_error("coefficient belongs to a different field");
}

bool AlgElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const FieldElem& b) { return b.is_zero(); });
}

bool AlgElem::is_one() const {
    if (!c_[0].is_one()) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const FieldElem& b) { return b.is_zero(); });
}

bool AlgElem::is_rational() const {
    if (!c_[0].is_rational()) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const FieldElem& b) { return b.is_zero(); });
}

Rational AlgElem::as_rational() const {
    if (!is_rational())
        throw internal_error("algebra element expected to be rational is not: " + str());
    return c_[0].coeffs()[0];
}

std::vector<Rational> AlgElem::qvec() const {
    std::vector<Rational> v;
    v.reserve(alg_->dimension());
    for (const FieldElem& b : c_) v.insert(v.end(), b.coeffs().begin(), b.coeffs().end());
    return v;
}

AlgElem AlgElem::operator-() const {
    std::vector<FieldElem> r;
    r.reserve(c_.size());
    for (const FieldElem& b : c_) r.push_back(-b);
    return AlgElem(alg_, std::move(r));
}

AlgElem AlgElem::pow(unsigned long e) const {
    AlgElem r = alg_->one();
    for (unsigned long i = 0; i < e; ++i) r = r * *this;
    return r;
}

AlgElem operator+(const AlgElem& u, const AlgElem& v) {
    check_same_algebra(u, v);
    std::vector<FieldElem> r;
    r.reserve(u.c_.size());
    for (std::size_t i = 0; i < u.c_.size(); ++i) r.push_back(u.c_[i] + v.c_[i]);
    return AlgElem(u.alg_, std::move(r));
}

AlgElem operator-(const AlgElem& u, const AlgElem& v) {
    check_same_algebra(u, v);
    std::vector<FieldElem> r;
    r.reserve(u.c_.size());
    for (std::size_t i = 0; i < u.c_.size(); ++i) r.push_back(u.c_[i] - v.c_[i]);
    return AlgElem(u.alg_, std::move(r));
}

// (b x^i)(c x^j) = b σ^i(c) x^{i+j}, and x^{i+j} = a·x^{i+j-n} once i+j >= n.
AlgElem operator*(const AlgElem& u, const AlgElem& v) {
    check_same_algebra(u, v);
    const auto& alg = *u.alg_;
    const auto& ext = *alg.extension();
    const std::size_t n = alg.degree();
    std::vector<FieldElem> r(n, alg.field()->zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (u.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v.c_[j].is_zero()) continue;
            FieldElem term = u.c_[i] * ext.sigma(v.c_[j], static_cast<long>(i));
            std::size_t k = i + j;
            if (k >= n) {
                k -= n;
                term = alg.param_a() * term;
            }
            r[k] = r[k] + term;
        }
    }
    return AlgElem(u.alg_, std::move(r));
}

AlgElem operator*(const Rational& s, const AlgElem& u) {
    std::vector<FieldElem> r;
    r.reserve(u.c_.size());
    for (const FieldElem& b : u.c_) r.push_back(s * b);
    return AlgElem(u.alg_, std::move(r));
}

bool operator==(const AlgElem& u, const AlgElem& v) {
    check_same_algebra(u, v);
    return u.c_ == v.c_;
}

bool operator!=(const AlgElem& u, const AlgElem& v) { return !(u == v); }

std::string AlgElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].str("theta") << ")";
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const AlgElem& u) { return os << u.str(); }

bool RelationReport::ok() const {
    if (!centre_is_rational) return false;
    return std::all_of(relations.begin(), relations.end(),
                       [](const Entry& e) { return e.ok; });
}

std::string RelationReport::first_failure() const {
    for (const Entry& e : relations)
        if (!e.ok) return "relation failed: " + e.name;
    if (!centre_is_rational)
        return "centre has dimension " + std::to_string(centre_dim) + ", expected Q·1";
    return "";
}

RelationReport verify_defining_relations(const AlgPtr& alg) {
    const auto& ext = *alg->extension();
    const std::size_t n = alg->degree();
    RelationReport rep;

    const AlgElem x = alg->x();
    AlgElem xn = alg->one();
    for (std::size_t i = 0; i < n; ++i) xn = xn * x;
    rep.relations.push_back({"x^" + std::to_string(n) + " = " + alg->param_a().str(),
                             xn == alg->from_rational(alg->param_a())});

    // x·θ^k against σ(θ^k)·x, the σ recomputed by fresh substitution.
    FieldElem theta_k = alg->field()->one();
    for (std::size_t k = 0; k < n; ++k) {
        const AlgElem lhs = x * alg->embed(theta_k);
        const AlgElem rhs = alg->embed(ext.sigma_fresh(theta_k)) * x;
        rep.relations.push_back(
            {"x*theta^" + std::to_string(k) + " = sigma(theta^" + std::to_string(k) + ")*x",
             lhs == rhs});
        theta_k = theta_k * alg->field()->gen();
    }

    // Centre check: everything commuting with both generators θ and x.
    const AlgElem gens[] = {alg->embed(alg->field()->gen()), x};
    Matrix stacked(0, alg->dimension());
    for (const AlgElem& g : gens)
        stacked = vstack(stacked, left_regular_matrix(g) - right_regular_matrix(g));
    const Matrix centre = kernel(stacked);
    rep.centre_dim = centre.cols();
    std::vector<Rational> e0(alg->dimension());
    e0[0] = Rational(1);
    rep.centre_is_rational = centre.cols() == 1 && in_column_space(centre, e0);
    return rep;
}

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t n)
    : field_(std::move(field)), n_(n), e_(n * n, field_->zero()) {}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field_ != b.field_ || a.n_ != b.n_) throw usage_error("field matrix shape mismatch");
    FieldMatrix r(a.field_, a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t k = 0; k < a.n_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < a.n_; ++j) {
                if (b(k, j).is_zero()) continue;
                r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        }
    return r;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.e_ == b.e_;
}

FieldElem FieldMatrix::det() const {
    FieldMatrix w = *this;
    const std::size_t n = n_;
    FieldElem d = field_->one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w(p, c).is_zero()) ++p;
        if (p == n) return field_->zero();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(c, j), w(p, j));
            d = -d;
        }
        d = d * w(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (w(i, c).is_zero()) continue;
            const FieldElem f = w(i, c) / w(c, c);
            for (std::size_t j = c; j < n; ++j) w(i, j) = w(i, j) - f * w(c, j);
        }
    }
    return d;
}

FieldElem FieldMatrix::trace() const {
    FieldElem t = field_->zero();
    for (std::size_t i = 0; i < n_; ++i) t = t + (*this)(i, i);
    return t;
}

FieldMatrix splitting_rep(const AlgElem& u) {
    const auto& alg = *u.algebra();
    const auto& ext = *alg.extension();
    const std::size_t n = alg.degree();
    FieldMatrix m(alg.field(), n);
    // b_i x^i sends basis column j to row (j+i) mod n with entry
    // σ^{-(j+i mod n)}(b_i), picking up a when the power wraps.
    for (std::size_t i = 0; i < n; ++i) {
        const FieldElem& b = u.coeff(i);
        if (b.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = (j + i) % n;
            FieldElem entry = ext.sigma(b, -static_cast<long>(row));
            if (j + i >= n) entry = alg.param_a() * entry;
            m(row, j) = m(row, j) + entry;
        }
    }
    return m;
}

Rational reduced_norm(const AlgElem& u) {
    const FieldElem d = splitting_rep(u).det();
    if (!d.is_rational())
        throw internal_error("reduced norm " + d.str() + " is not rational: broken sigma data");
    return d.coeffs()[0];
}

Rational reduced_trace(const AlgElem& u) {
    const FieldElem t = splitting_rep(u).trace();
    if (!t.is_rational())
        throw internal_error("reduced trace " + t.str() + " is not rational: broken sigma data");
    return t.coeffs()[0];
}

Matrix left_regular_matrix(const AlgElem& u) {
    const std::size_t dim = u.algebra()->dimension();
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const auto col = (u * u.algebra()->q_basis_element(j)).qvec();
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
    }
    return m;
}

Matrix right_regular_matrix(const AlgElem& u) {
    const std::size_t dim = u.algebra()->dimension();
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const auto col = (u.algebra()->q_basis_element(j) * u).qvec();
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
    }
    return m;
}

std::optional<AlgElem> invert_elem(const AlgElem& u) {
    if (u.is_zero()) return std::nullopt;
    const auto& alg = *u.algebra();
    Matrix rhs(alg.dimension(), 1);
    rhs(0, 0) = Rational(1);
    const auto w = solve(left_regular_matrix(u), rhs);
    if (!w) return std::nullopt;
    AlgElem inv = alg.from_qvec(w->column(0));
    if (!(u * inv).is_one() || !(inv * u).is_one())
        throw internal_error("inverse verification failed; inconsistent algebra data");
    return inv;
}

Poly minimal_polynomial(const AlgElem& u) {
    const auto& alg = *u.algebra();
    const std::size_t dim = alg.dimension();
    Matrix powers(dim, 1);
    powers(0, 0) = Rational(1); // qvec of u^0
    AlgElem uk = alg.one();
    for (std::size_t k = 1; k <= dim + 1; ++k) {
        uk = uk * u;
        const auto v = uk.qvec();
        Matrix rhs(dim, 1);
        for (std::size_t i = 0; i < dim; ++i) rhs(i, 0) = v[i];
        if (const auto c = solve(powers, rhs)) {
            Poly p(k + 1);
            for (std::size_t i = 0; i < k; ++i) p[i] = -(*c)(i, 0);
            p[k] = Rational(1);
            return p;
        }
        powers = hstack(powers, rhs);
    }
    throw internal_error("no linear dependence among powers up to the algebra dimension");
}

std::optional<FieldElem> norm_representation_search(const ExtPtr& ext, const Rational& a,
                                                    unsigned height) {
    if (a.is_zero()) throw domain_error("norm search target must be nonzero");
    if (height == 0) throw usage_error("height bound must be positive");
    const std::size_t n = ext->degree();

    // N(u/q) = a  <=>  N(u) = a·q^n: enumerate integer vectors u by
    // increasing max-norm shell and test whether N(u)/a is an exact n-th
    // power q^n with q <= height.
    std::vector<long> c(n, 0);
    const long h = static_cast<long>(height);
    auto try_vector = [&]() -> std::optional<FieldElem> {
        std::vector<Rational> coords(n);
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            coords[i] = Rational(c[i]);
            zero = zero && c[i] == 0;
        }
        if (zero) return std::nullopt;
        const Rational r = ext->norm(ext->field()->element(coords)) / a;
        if (!r.is_integer() || r.sign() <= 0) return std::nullopt;
        mpz_class q;
        if (mpz_root(q.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(n)) == 0)
            return std::nullopt;
        if (q > h) return std::nullopt;
        const Rational qinv = Rational(std::move(q)).inverse();
        FieldElem witness = qinv * ext->field()->element(coords);
        if (ext->norm(witness) != a)
            throw internal_error("norm search produced a bogus witness");
        return witness;
    };

    for (long shell = 1; shell <= h; ++shell) {
        // Iterate [-shell..shell]^n, skipping interior points of the cube.
        std::fill(c.begin(), c.end(), -shell);
        while (true) {
            bool on_shell = false;
            for (std::size_t i = 0; i < n; ++i)
                if (c[i] == -shell || c[i] == shell) on_shell = true;
            if (on_shell)
                if (auto w = try_vector()) return w;
            std::size_t i = 0;
            while (i < n && c[i] == shell) c[i++] = -shell;
            if (i == n) break;
            ++c[i];
        }
    }
    return std::nullopt;
}

} // namespace divalg
