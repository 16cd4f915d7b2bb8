#pragma once

#include "superbialg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace superbialg {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RowEchelon {
    Matrix reduced;                 // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; pivots are chosen left to right, top to bottom.
RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);
Scalar determinant(Matrix m);
/// Throws DegenerateForm when singular.
Matrix inverse(const Matrix& m);

/// Coordinates of vectors with respect to a fixed, linearly independent family.
/// Each generator is a column of length `dim`.
class SpanSolver {
public:
    /// Throws DependentVectors when the generators are not independent.
    SpanSolver(std::size_t dim, const std::vector<std::vector<Scalar>>& generators);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return count_; }

    /// Coefficients c with Σ c_i g_i = v, or nullopt when v is outside the span.
    std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

private:
    std::size_t dim_;
    std::size_t count_;
    // Row reduction of [G | I]: rows of `reduced_` carry the combination that produced them.
    Matrix reduced_;
    std::vector<std::size_t> pivots_;
};

}  // namespace superbialg
