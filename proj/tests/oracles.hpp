#pragma once

// Independent reference computations for sl(2,1): explicit 3x3 supermatrices,
// closed-form coordinates, and a hand-written Gauss-Jordan. Nothing here calls
// the library's linear algebra or bracket code.

#include "superbialg/catalog.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using superbialg::Element;
using superbialg::GradedBasis;
using superbialg::Scalar;
using superbialg::Tensor2;

using M3 = std::array<std::array<Scalar, 3>, 3>;

inline M3 zero3()
{
    M3 m;
    for (auto& row : m)
        row.fill(Scalar(0));
    return m;
}

inline M3 unit3(int r, int c)
{
    M3 m = zero3();
    m[r][c] = Scalar(1);
    return m;
}

inline M3 mul(const M3& a, const M3& b)
{
    M3 m = zero3();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                m[i][j] += a[i][k] * b[k][j];
    return m;
}

inline M3 lin(const M3& a, const Scalar& s, const M3& b, const Scalar& t)
{
    M3 m = zero3();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = s * a[i][j] + t * b[i][j];
    return m;
}

// Basis order of the catalog: (E11+E33), (E22+E33), E12, E21, E13, E31, E23, E32.
inline const std::vector<M3>& basis_matrices()
{
    static const std::vector<M3> b = [] {
        std::vector<M3> v;
        v.push_back(lin(unit3(0, 0), Scalar(1), unit3(2, 2), Scalar(1)));
        v.push_back(lin(unit3(1, 1), Scalar(1), unit3(2, 2), Scalar(1)));
        v.push_back(unit3(0, 1));
        v.push_back(unit3(1, 0));
        v.push_back(unit3(0, 2));
        v.push_back(unit3(2, 0));
        v.push_back(unit3(1, 2));
        v.push_back(unit3(2, 1));
        return v;
    }();
    return b;
}

inline constexpr std::array<int, 8> parity = {0, 0, 0, 0, 1, 1, 1, 1};

// Coordinates read off entries; a+b on the (3,3) slot is checked.
inline std::array<Scalar, 8> coords(const M3& m)
{
    if (!(m[2][2] == m[0][0] + m[1][1]))
        throw std::logic_error("matrix outside sl(2,1)");
    return {m[0][0], m[1][1], m[0][1], m[1][0], m[0][2], m[2][0], m[1][2], m[2][1]};
}

inline M3 matrix_of(const std::array<Scalar, 8>& c)
{
    M3 m = zero3();
    for (int i = 0; i < 8; ++i)
        m = lin(m, Scalar(1), basis_matrices()[i], c[i]);
    return m;
}

// [e_i, e_j] as coordinates, from XY - (-1)^{|X||Y|} YX.
inline std::array<Scalar, 8> bracket(int i, int j)
{
    const auto& B = basis_matrices();
    const Scalar sign = (parity[i] & parity[j]) ? Scalar(-1) : Scalar(1);
    return coords(lin(mul(B[i], B[j]), Scalar(1), mul(B[j], B[i]), -sign));
}

inline Scalar str(const M3& m) { return m[0][0] + m[1][1] - m[2][2]; }

inline Scalar gram(int i, int j) { return str(mul(basis_matrices()[i], basis_matrices()[j])); }

// Exact Gauss-Jordan inverse of the 8x8 Gram matrix.
inline std::array<std::array<Scalar, 8>, 8> gram_inverse()
{
    std::array<std::array<Scalar, 16>, 8> a;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 16; ++j)
            a[i][j] = j < 8 ? gram(i, j) : (j - 8 == i ? Scalar(1) : Scalar(0));
    for (int col = 0; col < 8; ++col) {
        int piv = col;
        while (a[piv][col].is_zero())
            ++piv;
        std::swap(a[piv], a[col]);
        const Scalar inv = Scalar(1) / a[col][col];
        for (auto& v : a[col])
            v *= inv;
        for (int r = 0; r < 8; ++r)
            if (r != col && !a[r][col].is_zero()) {
                const Scalar f = a[r][col];
                for (int j = 0; j < 16; ++j)
                    a[r][j] -= f * a[col][j];
            }
    }
    std::array<std::array<Scalar, 8>, 8> out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            out[i][j] = a[i][j + 8];
    return out;
}

// Tensors as dense 8x8 coefficient arrays.
using Dense2 = std::array<std::array<Scalar, 8>, 8>;

inline Dense2 dense(const Tensor2& t)
{
    Dense2 d;
    for (auto& row : d)
        row.fill(Scalar(0));
    for (const auto& [idx, c] : t.entries())
        d[idx[0]][idx[1]] = c;
    return d;
}

// a·(x⊗y) = [a,x]⊗y + (-1)^{|a||x|} x⊗[a,y], summed over a dense tensor.
inline Dense2 act(int a, const Dense2& t)
{
    Dense2 out;
    for (auto& row : out)
        row.fill(Scalar(0));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            if (t[x][y].is_zero())
                continue;
            const auto ax = bracket(a, x);
            const auto ay = bracket(a, y);
            const Scalar sign = (parity[a] & parity[x]) ? Scalar(-1) : Scalar(1);
            for (int k = 0; k < 8; ++k) {
                out[k][y] += t[x][y] * ax[k];
                out[x][k] += sign * t[x][y] * ay[k];
            }
        }
    return out;
}

inline Tensor2 sparse(const GradedBasis& basis, const Dense2& d)
{
    Tensor2 t(basis);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (!d[i][j].is_zero())
                t.add({i, j}, d[i][j]);
    return t;
}

// Small nonzero-biased rationals with denominators up to 3.
inline Scalar random_scalar(std::mt19937& rng, int span = 3)
{
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    return Scalar(num(rng), den(rng));
}

inline Element random_homogeneous(std::mt19937& rng, const GradedBasis& basis, int p)
{
    Element x(basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis.p(i) == p)
            x.add({static_cast<int>(i)}, random_scalar(rng));
    return x;
}

}  // namespace oracle
