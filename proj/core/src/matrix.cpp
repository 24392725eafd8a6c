#include "divalg/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace divalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw usage_error("matrix entries length does not match rows*cols");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw usage_error("column length does not match row count");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

std::vector<Rational> Matrix::column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(e_[i * cols_ + c], e_[j * cols_ + c]);
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw usage_error("matrix addition shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw usage_error("matrix subtraction shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw usage_error("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j).is_zero()) continue;
                r(i, j) += aik * b(k, j);
            }
        }
    return r;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = s * a.e_[k];
    return r;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << m(i, j) << (j + 1 < m.cols() ? ", " : "");
        os << "]" << (i + 1 < m.rows() ? "\n" : "");
    }
    return os << "]";
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw usage_error("hstack row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw usage_error("vstack column mismatch");
    Matrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
    }
    return r;
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Nonzero entry in column c at row >= r with the smallest bit size.
std::size_t pick_pivot(const Matrix& m, std::size_t r, std::size_t c) {
    std::size_t best = npos, best_bits = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
        if (m(i, c).is_zero()) continue;
        std::size_t bits = m(i, c).bit_size();
        if (best == npos || bits < best_bits) {
            best = i;
            best_bits = bits;
        }
    }
    return best;
}

} // namespace

std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = pick_pivot(m, r, c);
        if (p == npos) continue;
        m.swap_rows(r, p);
        const Rational inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return rref_in_place(w).size();
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
    if (m.rows() != rhs.rows()) throw usage_error("solve: row count mismatch");
    Matrix aug = hstack(m, rhs);
    const auto pivots = rref_in_place(aug);
    for (std::size_t p : pivots)
        if (p >= m.cols()) return std::nullopt; // pivot in the rhs block: inconsistent
    Matrix x(m.cols(), rhs.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x(pivots[r], j) = aug(r, m.cols() + j);
    return x;
}

Matrix kernel(const Matrix& m) {
    Matrix w = m;
    const auto pivots = rref_in_place(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    Matrix k(m.cols(), m.cols() - pivots.size());
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        k(f, out) = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], out) = -w(r, f);
        ++out;
    }
    return k;
}

Rational det(const Matrix& m) {
    if (m.rows() != m.cols()) throw usage_error("det of non-square matrix");
    const std::size_t n = m.rows();
    Matrix w = m;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = pick_pivot(w, c, c);
        if (p == npos) return Rational(0);
        if (p != c) {
            w.swap_rows(c, p);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            if (w(i, c).is_zero()) continue;
            const Rational f = w(i, c) / w(c, c);
            for (std::size_t j = c; j < n; ++j) w(i, j) -= f * w(c, j);
        }
    }
    Rational d(sign);
    for (std::size_t i = 0; i < n; ++i) d *= w(i, i);
    return d;
}

std::optional<Matrix> invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw usage_error("invert of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug = hstack(m, Matrix::identity(n));
    const auto pivots = rref_in_place(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Matrix intersect_subspaces(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw usage_error("subspace intersection: ambient dimension mismatch");
    if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0);
    // Kernel vectors (u; v) of [A | B] satisfy A u = -B v, so A u ranges over
    // the intersection.
    const Matrix k = kernel(hstack(a, b));
    Matrix gens(a.rows(), k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t t = 0; t < a.cols(); ++t) gens(i, j) += a(i, t) * k(t, j);
    return column_reduce(gens);
}

Matrix column_reduce(const Matrix& a) {
    Matrix t = a.transpose();
    const auto pivots = rref_in_place(t);
    Matrix r(a.rows(), pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) r(j, i) = t(i, j);
    return r;
}

bool in_column_space(const Matrix& basis, const std::vector<Rational>& v) {
    if (basis.rows() != v.size()) throw usage_error("membership test: dimension mismatch");
    Matrix rhs(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) rhs(i, 0) = v[i];
    return solve(basis, rhs).has_value();
}

bool same_column_space(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return false;
    return column_reduce(a) == column_reduce(b);
}

std::vector<Rational> normalize_integral(std::vector<Rational> v) {
    mpz_class l(1), g(0);
    for (const Rational& x : v)
        if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    for (Rational& x : v) x *= Rational(l);
    for (const Rational& x : v)
        if (!x.is_zero()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
    if (g == 0) return v; // zero vector
    int lead = 0;
    for (const Rational& x : v)
        if (!x.is_zero()) {
            lead = x.sign();
            break;
        }
    if (lead < 0) g = -g;
    const Rational ginv = Rational(std::move(g)).inverse();
    for (Rational& x : v) x *= ginv;
    return v;
}

} // namespace divalg
