#include "superbialg/graded.hpp"

#include <set>

namespace superbialg {

GradedBasis::GradedBasis(std::vector<std::string> labels, std::vector<Parity> parities)
{
    if (labels.empty())
        throw InvalidInput("graded basis must be nonempty");
    if (labels.size() != parities.size())
        throw InvalidInput("graded basis: labels and parities differ in length");
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty())
            throw InvalidInput("graded basis: empty label");
        if (!seen.insert(l).second)
            throw InvalidInput("graded basis: duplicate label '" + l + "'");
    }
    data_ = std::make_shared<const Data>(Data{std::move(labels), std::move(parities)});
}

std::optional<std::size_t> GradedBasis::index_of(const std::string& label) const
{
    for (std::size_t i = 0; i < size(); ++i)
        if (data_->labels[i] == label)
            return i;
    return std::nullopt;
}

GradedBasis GradedBasis::renamed(const std::string& suffix) const
{
    std::vector<std::string> labels;
    for (const auto& l : data_->labels)
        labels.push_back(l + suffix);
    return GradedBasis(std::move(labels), data_->parities);
}

bool operator==(const GradedBasis& a, const GradedBasis& b)
{
    if (a.data_ == b.data_)
        return true;
    if (!a.data_ || !b.data_)
        return false;
    return a.data_->labels == b.data_->labels && a.data_->parities == b.data_->parities;
}

void require_same_basis(const GradedBasis& a, const GradedBasis& b, const char* where)
{
    if (!(a == b))
        throw BasisMismatch(std::string(where) + ": operands use different bases");
}

std::vector<Scalar> to_coordinates(const Element& x)
{
    std::vector<Scalar> v(x.basis().size());
    for (const auto& [idx, c] : x.entries())
        v[idx[0]] = c;
    return v;
}

Element from_coordinates(const GradedBasis& basis, const std::vector<Scalar>& coords)
{
    Element x(basis);
    for (std::size_t i = 0; i < coords.size(); ++i)
        x.add({static_cast<int>(i)}, coords[i]);
    return x;
}

Tensor2 tensor(const Element& a, const Element& b)
{
    require_same_basis(a.basis(), b.basis(), "tensor");
    Tensor2 t(a.basis());
    for (const auto& [i, x] : a.entries())
        for (const auto& [j, y] : b.entries())
            t.add({i[0], j[0]}, x * y);
    return t;
}

Tensor3 tensor(const Tensor2& a, const Element& b)
{
    require_same_basis(a.basis(), b.basis(), "tensor");
    Tensor3 t(a.basis());
    for (const auto& [ij, x] : a.entries())
        for (const auto& [k, y] : b.entries())
            t.add({ij[0], ij[1], k[0]}, x * y);
    return t;
}

Tensor2 wedge(const Element& a, const Element& b)
{
    require_same_basis(a.basis(), b.basis(), "wedge");
    Tensor2 out(a.basis());
    for (Parity pa : {Parity::even, Parity::odd}) {
        const Element ah = a.part(pa);
        if (ah.is_zero())
            continue;
        for (Parity pb : {Parity::even, Parity::odd}) {
            const Element bh = b.part(pb);
            if (bh.is_zero())
                continue;
            out += tensor(ah, bh);
            out -= sign_of(bit(pa) * bit(pb)) * tensor(bh, ah);
        }
    }
    return out;
}

Tensor2 super_swap(const Tensor2& t)
{
    Tensor2 out(t.basis());
    const auto& B = t.basis();
    for (const auto& [ij, c] : t.entries())
        out.add({ij[1], ij[0]}, sign_of(B.p(ij[0]) * B.p(ij[1])) * c);
    return out;
}

Tensor3 signed_cycle(const Tensor3& t)
{
    Tensor3 out(t.basis());
    const auto& B = t.basis();
    for (const auto& [abc, v] : t.entries()) {
        const int a = B.p(abc[0]), b = B.p(abc[1]), c = B.p(abc[2]);
        out.add({abc[1], abc[2], abc[0]}, sign_of(a * (b + c)) * v);
    }
    return out;
}

Tensor3 alt_s(const Tensor3& t)
{
    Tensor3 out(t.basis());
    const auto& B = t.basis();
    for (const auto& [abc, v] : t.entries()) {
        const int a = B.p(abc[0]), b = B.p(abc[1]), c = B.p(abc[2]);
        out.add(abc, v);
        out.add({abc[1], abc[2], abc[0]}, sign_of(a * (b + c)) * v);
        out.add({abc[2], abc[0], abc[1]}, sign_of(c * (a + b)) * v);
    }
    return out;
}

LinearMap::LinearMap(GradedBasis source, GradedBasis target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != target_.size() || matrix_.cols() != source_.size())
        throw InvalidInput("linear map: matrix shape does not match the bases");
}

LinearMap LinearMap::identity(const GradedBasis& basis)
{
    return LinearMap(basis, basis, Matrix::identity(basis.size()));
}

LinearMap LinearMap::zero(const GradedBasis& source, const GradedBasis& target)
{
    return LinearMap(source, target, Matrix(target.size(), source.size()));
}

LinearMap LinearMap::from_images(const GradedBasis& source, const std::vector<Element>& images)
{
    if (images.empty())
        throw InvalidInput("linear map: no images");
    return from_images(source, images.front().basis(), images);
}

LinearMap LinearMap::from_images(const GradedBasis& source, const GradedBasis& target,
                                 const std::vector<Element>& images)
{
    if (images.size() != source.size())
        throw InvalidInput("linear map: need one image per source basis vector");
    Matrix m(target.size(), source.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
        if (images[j].basis().valid())
            require_same_basis(images[j].basis(), target, "linear map image");
        for (const auto& [i, c] : images[j].entries())
            m(i[0], j) = c;
    }
    return LinearMap(source, target, std::move(m));
}

Element LinearMap::apply(const Element& x) const
{
    require_same_basis(x.basis(), source_, "apply");
    Element y(target_);
    for (const auto& [j, c] : x.entries())
        for (std::size_t i = 0; i < target_.size(); ++i)
            if (!matrix_(i, j[0]).is_zero())
                y.add({static_cast<int>(i)}, c * matrix_(i, j[0]));
    return y;
}

Element LinearMap::image(std::size_t j) const
{
    return apply(basis_vector(source_, static_cast<int>(j)));
}

Tensor2 LinearMap::apply_left(const Tensor2& t) const
{
    require_same_basis(t.basis(), source_, "apply_left");
    if (!(source_ == target_))
        throw BasisMismatch("apply_left requires an endomorphism");
    Tensor2 out(target_);
    for (const auto& [ij, c] : t.entries())
        for (std::size_t k = 0; k < target_.size(); ++k)
            if (!matrix_(k, ij[0]).is_zero())
                out.add({static_cast<int>(k), ij[1]}, c * matrix_(k, ij[0]));
    return out;
}

Tensor2 LinearMap::apply_both(const Tensor2& t) const
{
    require_same_basis(t.basis(), source_, "apply_both");
    Tensor2 out(target_);
    for (const auto& [ij, c] : t.entries())
        for (std::size_t k = 0; k < target_.size(); ++k) {
            if (matrix_(k, ij[0]).is_zero())
                continue;
            for (std::size_t l = 0; l < target_.size(); ++l)
                if (!matrix_(l, ij[1]).is_zero())
                    out.add({static_cast<int>(k), static_cast<int>(l)},
                            c * matrix_(k, ij[0]) * matrix_(l, ij[1]));
        }
    return out;
}

bool LinearMap::is_even() const
{
    for (std::size_t i = 0; i < target_.size(); ++i)
        for (std::size_t j = 0; j < source_.size(); ++j)
            if (!matrix_(i, j).is_zero() && target_.parity(i) != source_.parity(j))
                return false;
    return true;
}

bool LinearMap::is_bijective() const
{
    return source_.size() == target_.size() && rank(matrix_) == source_.size();
}

LinearMap LinearMap::operator+(const LinearMap& o) const
{
    require_same_basis(source_, o.source_, "map sum");
    require_same_basis(target_, o.target_, "map sum");
    return LinearMap(source_, target_, matrix_ + o.matrix_);
}

LinearMap LinearMap::operator-(const LinearMap& o) const
{
    return *this + o.scaled(Scalar(-1));
}

LinearMap LinearMap::scaled(const Scalar& s) const
{
    return LinearMap(source_, target_, matrix_.scaled(s));
}

LinearMap LinearMap::compose(const LinearMap& o) const
{
    require_same_basis(o.target_, source_, "compose");
    return LinearMap(o.source_, target_, matrix_ * o.matrix_);
}

Element apply_endomorphism(const LinearMap& m, const Element& x)
{
    return m.apply(x);
}

std::vector<Element> image_basis(const LinearMap& m)
{
    const RowEchelon e = row_reduce(m.matrix().transpose());
    std::vector<Element> out;
    for (std::size_t r = 0; r < e.rank(); ++r) {
        Element v(m.target());
        for (std::size_t c = 0; c < e.reduced.cols(); ++c)
            v.add({static_cast<int>(c)}, e.reduced(r, c));
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

Matrix rows_of(const std::vector<Element>& family, std::size_t dim)
{
    Matrix m(family.size(), dim);
    for (std::size_t r = 0; r < family.size(); ++r)
        for (const auto& [i, c] : family[r].entries())
            m(r, i[0]) = c;
    return m;
}

}  // namespace

std::size_t rank_of(const std::vector<Element>& family)
{
    if (family.empty())
        return 0;
    return rank(rows_of(family, family.front().basis().size()));
}

bool same_span(const std::vector<Element>& a, const std::vector<Element>& b)
{
    std::vector<Element> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t r = rank_of(both);
    return r == rank_of(a) && r == rank_of(b);
}

}  // namespace superbialg
