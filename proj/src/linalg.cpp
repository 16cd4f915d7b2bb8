#include "superbialg/linalg.hpp"

#include "superbialg/errors.hpp"

#include <utility>

namespace superbialg {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw InvalidInput("matrix product: shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (a.is_zero())
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (!o(k, c).is_zero())
                    p(r, c) += a * o(k, c);
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InvalidInput("matrix sum: shape mismatch");
    Matrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        s.data_[i] += o.data_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    return *this + o.scaled(Scalar(-1));
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix m = *this;
    for (auto& x : m.data_)
        x *= s;
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

RowEchelon row_reduce(Matrix m)
{
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));
        const Scalar inv = Scalar(1) / m(row, col);
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero())
                continue;
            const Scalar factor = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m(row, c).is_zero())
                    m(r, c) -= factor * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m)
{
    return row_reduce(m).rank();
}

Scalar determinant(Matrix m)
{
    if (m.rows() != m.cols())
        throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Scalar det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return Scalar(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero())
                continue;
            const Scalar factor = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c)
                m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw InvalidInput("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    RowEchelon e = row_reduce(aug);
    if (e.rank() < n || e.pivots[n - 1] >= n)
        throw DegenerateForm("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

SpanSolver::SpanSolver(std::size_t dim, const std::vector<std::vector<Scalar>>& generators)
    : dim_(dim), count_(generators.size())
{
    // Rows: generators followed by an identity block recording the combination.
    Matrix aug(count_, dim_ + count_);
    for (std::size_t g = 0; g < count_; ++g) {
        if (generators[g].size() != dim_)
            throw InvalidInput("span generator has wrong length");
        for (std::size_t c = 0; c < dim_; ++c)
            aug(g, c) = generators[g][c];
        aug(g, dim_ + g) = 1;
    }
    RowEchelon e = row_reduce(aug);
    for (std::size_t r = 0; r < e.rank(); ++r)
        if (e.pivots[r] >= dim_)
            throw DependentVectors("generators are linearly dependent");
    reduced_ = std::move(e.reduced);
    pivots_ = std::move(e.pivots);
}

std::optional<std::vector<Scalar>> SpanSolver::coordinates(const std::vector<Scalar>& v) const
{
    if (v.size() != dim_)
        throw InvalidInput("vector has wrong length");
    std::vector<Scalar> residual = v;
    std::vector<Scalar> coeffs(count_);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Scalar factor = residual[pivots_[r]];
        if (factor.is_zero())
            continue;
        for (std::size_t c = 0; c < dim_; ++c)
            if (!reduced_(r, c).is_zero())
                residual[c] -= factor * reduced_(r, c);
        for (std::size_t g = 0; g < count_; ++g)
            if (!reduced_(r, dim_ + g).is_zero())
                coeffs[g] += factor * reduced_(r, dim_ + g);
    }
    for (const auto& x : residual)
        if (!x.is_zero())
            return std::nullopt;
    return coeffs;
}

}  // namespace superbialg
