#pragma once

// Z/2-graded bases, sparse exact tensors of rank 1..3 and the Koszul-signed
// operations on them.

#include "superbialg/errors.hpp"
#include "superbialg/linalg.hpp"
#include "superbialg/scalar.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace superbialg {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_from_bit(int b) { return (b & 1) ? Parity::odd : Parity::even; }

/// Ordered homogeneous basis. Cheap to copy; the contents are shared and immutable.
class GradedBasis {
public:
    GradedBasis() = default;
    GradedBasis(std::vector<std::string> labels, std::vector<Parity> parities);

    std::size_t size() const { return data_ ? data_->labels.size() : 0; }
    const std::string& label(std::size_t i) const { return data_->labels.at(i); }
    Parity parity(std::size_t i) const { return data_->parities.at(i); }
    /// Parity as 0/1, for sign exponents.
    int p(std::size_t i) const { return bit(data_->parities[i]); }

    const std::vector<std::string>& labels() const { return data_->labels; }
    const std::vector<Parity>& parities() const { return data_->parities; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// Same basis with every label suffixed by `suffix`.
    GradedBasis renamed(const std::string& suffix) const;

    bool valid() const { return data_ != nullptr; }

    friend bool operator==(const GradedBasis& a, const GradedBasis& b);

private:
    struct Data {
        std::vector<std::string> labels;
        std::vector<Parity> parities;
    };
    std::shared_ptr<const Data> data_;
};

void require_same_basis(const GradedBasis& a, const GradedBasis& b, const char* where);

/// Sparse tensor of fixed rank over a graded basis; absent entries are zero.
template <std::size_t Rank>
class Tensor {
public:
    using Index = std::array<int, Rank>;
    using Entries = std::map<Index, Scalar>;

    Tensor() = default;
    explicit Tensor(GradedBasis basis) : basis_(std::move(basis)) {}

    /// Single basis vector (rank 1) or pure basis tensor e_i ⊗ e_j ⊗ ...
    static Tensor unit(const GradedBasis& basis, const Index& idx, const Scalar& c = Scalar(1))
    {
        Tensor t(basis);
        t.add(idx, c);
        return t;
    }

    const GradedBasis& basis() const { return basis_; }
    const Entries& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Scalar coeff(const Index& idx) const
    {
        auto it = entries_.find(idx);
        return it == entries_.end() ? Scalar(0) : it->second;
    }
    Scalar coeff(int i) const
        requires(Rank == 1)
    {
        return coeff(Index{i});
    }

    /// Adds c at idx, keeping the storage free of zeros.
    void add(const Index& idx, const Scalar& c)
    {
        if (c.is_zero())
            return;
        for (int i : idx)
            if (i < 0 || static_cast<std::size_t>(i) >= basis_.size())
                throw InvalidInput("tensor index out of range");
        auto [it, inserted] = entries_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                entries_.erase(it);
        }
    }

    /// Sum of the parities of the legs at idx.
    int degree_of(const Index& idx) const
    {
        int d = 0;
        for (int i : idx)
            d += basis_.p(i);
        return d & 1;
    }

    /// Parity when homogeneous and nonzero.
    std::optional<Parity> parity() const
    {
        std::optional<int> d;
        for (const auto& [idx, c] : entries_) {
            const int di = degree_of(idx);
            if (d && *d != di)
                return std::nullopt;
            d = di;
        }
        if (!d)
            return std::nullopt;
        return parity_from_bit(*d);
    }
    bool is_homogeneous() const { return is_zero() || parity().has_value(); }

    /// Component of the given total parity.
    Tensor part(Parity which) const
    {
        Tensor t(basis_);
        for (const auto& [idx, c] : entries_)
            if (degree_of(idx) == bit(which))
                t.entries_.emplace(idx, c);
        return t;
    }

    Tensor& operator+=(const Tensor& o)
    {
        merge_basis(o);
        for (const auto& [idx, c] : o.entries_)
            add(idx, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o)
    {
        merge_basis(o);
        for (const auto& [idx, c] : o.entries_)
            add(idx, -c);
        return *this;
    }
    Tensor& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            entries_.clear();
            return *this;
        }
        for (auto& [idx, c] : entries_)
            c *= s;
        return *this;
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator-(Tensor a) { return a *= Scalar(-1); }
    friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
    friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }

    /// Structural equality; a zero tensor equals any other zero tensor on the same basis.
    friend bool operator==(const Tensor& a, const Tensor& b)
    {
        if (a.basis_.valid() && b.basis_.valid() && !(a.basis_ == b.basis_))
            return false;
        return a.entries_ == b.entries_;
    }

private:
    void merge_basis(const Tensor& o)
    {
        if (!basis_.valid()) {
            basis_ = o.basis_;
            return;
        }
        if (o.basis_.valid())
            require_same_basis(basis_, o.basis_, "tensor arithmetic");
    }

    GradedBasis basis_;
    Entries entries_;
};

using Element = Tensor<1>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

inline Element basis_vector(const GradedBasis& basis, int i) { return Element::unit(basis, {i}); }

/// Dense coordinate vector of an element.
std::vector<Scalar> to_coordinates(const Element& x);
Element from_coordinates(const GradedBasis& basis, const std::vector<Scalar>& coords);

/// a ⊗ b, extended bilinearly.
Tensor2 tensor(const Element& a, const Element& b);
Tensor3 tensor(const Tensor2& a, const Element& b);
/// a ∧ b = a ⊗ b − (−1)^{|a||b|} b ⊗ a, summed over homogeneous components.
Tensor2 wedge(const Element& a, const Element& b);
/// T_s(a ⊗ b) = (−1)^{|a||b|} b ⊗ a.
Tensor2 super_swap(const Tensor2& t);
/// a⊗b⊗c + (−1)^{|a|(|b|+|c|)} b⊗c⊗a + (−1)^{|c|(|a|+|b|)} c⊗a⊗b, extended linearly.
Tensor3 alt_s(const Tensor3& t);
/// The signed cyclic shift a⊗b⊗c ↦ (−1)^{|a|(|b|+|c|)} b⊗c⊗a.
Tensor3 signed_cycle(const Tensor3& t);

/// Linear map between graded spaces; column j holds the image of basis vector j.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(GradedBasis source, GradedBasis target, Matrix matrix);

    static LinearMap identity(const GradedBasis& basis);
    static LinearMap zero(const GradedBasis& source, const GradedBasis& target);
    /// images[j] is the image of source basis vector j.
    static LinearMap from_images(const GradedBasis& source, const std::vector<Element>& images);
    static LinearMap from_images(const GradedBasis& source, const GradedBasis& target,
                                 const std::vector<Element>& images);

    const GradedBasis& source() const { return source_; }
    const GradedBasis& target() const { return target_; }
    const Matrix& matrix() const { return matrix_; }

    Element apply(const Element& x) const;
    Element image(std::size_t j) const;
    /// Applies the map on the left leg only: (m ⊗ 1) t.
    Tensor2 apply_left(const Tensor2& t) const;
    /// (m ⊗ m) t; no sign is needed for even maps.
    Tensor2 apply_both(const Tensor2& t) const;

    bool is_even() const;
    bool is_bijective() const;

    LinearMap operator-(const LinearMap& o) const;
    LinearMap operator+(const LinearMap& o) const;
    LinearMap scaled(const Scalar& s) const;
    /// this ∘ o
    LinearMap compose(const LinearMap& o) const;

    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    GradedBasis source_;
    GradedBasis target_;
    Matrix matrix_;
};

using LinearEndomorphism = LinearMap;

Element apply_endomorphism(const LinearMap& m, const Element& x);

/// Basis of the image: the nonzero rows of the reduced row echelon form of the
/// matrix whose rows are the images of the source basis vectors.
std::vector<Element> image_basis(const LinearMap& m);

/// Whether span(a) == span(b) (both families over the same basis).
bool same_span(const std::vector<Element>& a, const std::vector<Element>& b);
/// Rank of a family of elements.
std::size_t rank_of(const std::vector<Element>& family);

}  // namespace superbialg
