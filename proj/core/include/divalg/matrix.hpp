#ifndef DIVALG_MATRIX_HPP
#define DIVALG_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "divalg/rational.hpp"

namespace divalg {

/// Dense matrix over Q, row-major. Basis matrices use the column convention:
/// a subspace is the span of the columns.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    std::vector<Rational> column(std::size_t j) const;
    Matrix transpose() const;
    void swap_rows(std::size_t i, std::size_t j);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Side-by-side and stacked concatenation.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Reduced row echelon form in place; returns the pivot column indices.
/// Pivots are chosen among nonzero candidates by smallest bit size to limit
/// coefficient growth.
std::vector<std::size_t> rref_in_place(Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact solution X of M X = rhs, or nullopt when the system is inconsistent.
/// Free variables are set to zero. Multi-column right-hand sides are allowed.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

/// Basis of the null space as columns; zero columns for injective m.
Matrix kernel(const Matrix& m);

Rational det(const Matrix& m);

std::optional<Matrix> invert(const Matrix& m);

/// Basis of span(A) ∩ span(B), computed through the kernel of the
/// concatenated system. Inputs are column bases over the same ambient space.
Matrix intersect_subspaces(const Matrix& a, const Matrix& b);

/// Canonical basis of the column space (reduced column echelon form).
/// Two matrices span the same subspace iff their reduced forms are equal.
Matrix column_reduce(const Matrix& a);

bool in_column_space(const Matrix& basis, const std::vector<Rational>& v);
bool same_column_space(const Matrix& a, const Matrix& b);

/// Scales a nonzero vector to integral entries with content 1 and a positive
/// leading (lowest-index nonzero) entry.
std::vector<Rational> normalize_integral(std::vector<Rational> v);

} // namespace divalg

#endif
