#include "superbialg/superalgebra.hpp"

#include "superbialg/format.hpp"

namespace superbialg {

namespace {

std::string triple_name(const GradedBasis& b, int i, int j, int k)
{
    return "(" + b.label(i) + ", " + b.label(j) + ", " + b.label(k) + ")";
}

std::string pair_name(const GradedBasis& b, int i, int j)
{
    return "(" + b.label(i) + ", " + b.label(j) + ")";
}

std::vector<Scalar> flatten(const Matrix& m)
{
    std::vector<Scalar> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            v.push_back(m(r, c));
    return v;
}

}  // namespace

Superalgebra::Superalgebra(GradedBasis basis, const StructureTable& constants)
    : basis_(std::move(basis))
{
    const int n = static_cast<int>(basis_.size());
    table_.assign(dim() * dim(), Element(basis_));
    for (const auto& [ijk, c] : constants) {
        for (int idx : ijk)
            if (idx < 0 || idx >= n)
                throw InvalidInput("structure constant index out of range");
        if (c.is_zero())
            continue;
        constants_[ijk] += c;
        if (constants_[ijk].is_zero())
            constants_.erase(ijk);
        table_[ijk[0] * dim() + ijk[1]].add({ijk[2]}, c);
    }
}

Superalgebra Superalgebra::from_upper(GradedBasis basis, const StructureTable& upper)
{
    StructureTable full;
    for (const auto& [ijk, c] : upper) {
        const auto [i, j, k] = ijk;
        if (i > j)
            throw InvalidInput("from_upper expects pairs with i <= j");
        if (i == j && basis.parity(i) == Parity::even)
            throw InvalidInput("self-bracket listed for even basis vector '" + basis.label(i) + "'");
        full[ijk] += c;
        if (i != j)
            full[{j, i, k}] += -(sign_of(basis.p(i) * basis.p(j)) * c);
    }
    return Superalgebra(std::move(basis), full);
}

Superalgebra Superalgebra::abelian(GradedBasis basis)
{
    return Superalgebra(std::move(basis), StructureTable{});
}

Scalar Superalgebra::constant(int i, int j, int k) const
{
    auto it = constants_.find({i, j, k});
    return it == constants_.end() ? Scalar(0) : it->second;
}

Element Superalgebra::bracket(const Element& x, const Element& y) const
{
    require_same_basis(x.basis(), basis_, "bracket");
    require_same_basis(y.basis(), basis_, "bracket");
    Element out(basis_);
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries())
            out += (a * b) * bracket_basis(i[0], j[0]);
    return out;
}

Element bracket(const Superalgebra& g, const Element& x, const Element& y)
{
    return g.bracket(x, y);
}

VerificationReport validate(const Superalgebra& g)
{
    VerificationReport report;
    const auto& B = g.basis();
    const int n = static_cast<int>(g.dim());

    {
        std::optional<std::string> bad;
        for (const auto& [ijk, c] : g.constants()) {
            const auto [i, j, k] = ijk;
            if (B.p(k) != ((B.p(i) + B.p(j)) & 1)) {
                bad = "C" + triple_name(B, i, j, k) + " = " + c.str() + " breaks the grading";
                break;
            }
        }
        report.add("grading consistency", !bad, bad);
    }

    {
        std::optional<std::string> bad;
        for (int i = 0; i < n && !bad; ++i)
            for (int j = 0; j < n && !bad; ++j) {
                const Element lhs = g.bracket_basis(j, i);
                const Element rhs = -(sign_of(B.p(i) * B.p(j)) * g.bracket_basis(i, j));
                if (!(lhs == rhs))
                    bad = "[" + B.label(j) + "," + B.label(i) + "] = " + to_string(lhs) + " but -(-1)^{|a||b|}[" +
                          B.label(i) + "," + B.label(j) + "] = " + to_string(rhs);
            }
        report.add("super antisymmetry", !bad, bad);
    }

    {
        std::optional<std::string> bad;
        for (int i = 0; i < n && !bad; ++i)
            if (B.parity(i) == Parity::even && !g.bracket_basis(i, i).is_zero())
                bad = "[" + B.label(i) + "," + B.label(i) + "] = " + to_string(g.bracket_basis(i, i));
        report.add("even self-brackets vanish", !bad, bad);
    }

    {
        // [a,[b,c]] = [[a,b],c] + (−1)^{|a||b|} [b,[a,c]]
        std::optional<std::string> bad;
        for (int a = 0; a < n && !bad; ++a)
            for (int b = 0; b < n && !bad; ++b)
                for (int c = 0; c < n && !bad; ++c) {
                    const Element ea = basis_vector(B, a), eb = basis_vector(B, b), ec = basis_vector(B, c);
                    const Element lhs = g.bracket(ea, g.bracket_basis(b, c));
                    const Element rhs = g.bracket(g.bracket_basis(a, b), ec) +
                                        sign_of(B.p(a) * B.p(b)) * g.bracket(eb, g.bracket_basis(a, c));
                    if (!(lhs == rhs))
                        bad = "triple " + triple_name(B, a, b, c) + ": [a,[b,c]] = " + to_string(lhs) +
                              " vs " + to_string(rhs);
                }
        report.add("super Jacobi", !bad, bad);
    }
    return report;
}

Tensor2 adjoint_on_tensor2(const Superalgebra& g, const Element& a, const Tensor2& t)
{
    require_same_basis(a.basis(), g.basis(), "adjoint_on_tensor2");
    require_same_basis(t.basis(), g.basis(), "adjoint_on_tensor2");
    const auto& B = g.basis();
    Tensor2 out(B);
    for (const auto& [ia, ca] : a.entries()) {
        const int x = ia[0];
        for (const auto& [ij, c] : t.entries()) {
            const Scalar w = ca * c;
            for (const auto& [k, v] : g.bracket_basis(x, ij[0]).entries())
                out.add({k[0], ij[1]}, w * v);
            const Scalar s = sign_of(B.p(x) * B.p(ij[0]));
            for (const auto& [k, v] : g.bracket_basis(x, ij[1]).entries())
                out.add({ij[0], k[0]}, s * w * v);
        }
    }
    return out;
}

Matrix MatrixRealization::image_of(const Element& x) const
{
    require_same_basis(x.basis(), basis, "image_of");
    Matrix m(size(), size());
    for (const auto& [i, c] : x.entries())
        m = m + images.at(i[0]).scaled(c);
    return m;
}

Matrix graded_commutator(const Matrix& x, int px, const Matrix& y, int py)
{
    return x * y - (y * x).scaled(sign_of(px * py));
}

Scalar supertrace(const Matrix& m, std::size_t even_size)
{
    Scalar s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        s += i < even_size ? m(i, i) : -m(i, i);
    return s;
}

Superalgebra from_matrices(const MatrixRealization& real)
{
    const auto& B = real.basis;
    const std::size_t n = B.size();
    const std::size_t size = real.size();
    if (real.images.size() != n)
        throw InvalidInput("realization: one image per basis vector required");
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& m = real.images[i];
        if (m.rows() != size || m.cols() != size)
            throw InvalidInput("realization: image of '" + B.label(i) + "' has the wrong size");
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c) {
                const bool off_diagonal_block = (r < real.even_size) != (c < real.even_size);
                const bool odd = B.parity(i) == Parity::odd;
                if (!m(r, c).is_zero() && off_diagonal_block != odd)
                    throw InvalidInput("realization: image of '" + B.label(i) + "' does not respect the grading");
            }
    }

    std::optional<SpanSolver> solver;
    StructureTable constants;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix z = graded_commutator(real.images[i], B.p(i), real.images[j], B.p(j));
            if (z.is_zero())
                continue;
            if (!solver) {
                std::vector<std::vector<Scalar>> gens;
                for (const auto& m : real.images)
                    gens.push_back(flatten(m));
                solver.emplace(size * size, gens);
            }
            auto coords = solver->coordinates(flatten(z));
            if (!coords)
                throw NotClosed("realization is not closed under the graded commutator at " +
                                pair_name(B, static_cast<int>(i), static_cast<int>(j)));
            for (std::size_t k = 0; k < n; ++k)
                if (!(*coords)[k].is_zero())
                    constants[{static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)}] = (*coords)[k];
        }
    return Superalgebra(B, constants);
}

Scalar supertrace_form(const MatrixRealization& real, const Element& x, const Element& y)
{
    return supertrace(real.image_of(x) * real.image_of(y), real.even_size);
}

Scalar BilinearForm::operator()(const Element& x, const Element& y) const
{
    require_same_basis(x.basis(), basis, "bilinear form");
    require_same_basis(y.basis(), basis, "bilinear form");
    Scalar s = 0;
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries())
            s += a * b * gram(i[0], j[0]);
    return s;
}

bool BilinearForm::is_supersymmetric() const
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (!(gram(i, j) == sign_of(basis.p(i) * basis.p(j)) * gram(j, i)))
                return false;
    return true;
}

bool BilinearForm::is_nondegenerate() const
{
    return !determinant(gram).is_zero();
}

BilinearForm supertrace_gram(const MatrixRealization& real)
{
    const std::size_t n = real.basis.size();
    BilinearForm form{real.basis, Matrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            form.gram(i, j) = supertrace(real.images[i] * real.images[j], real.even_size);
    return form;
}

bool is_subalgebra(const Superalgebra& g, const std::vector<Element>& vectors)
{
    if (vectors.empty())
        return true;
    std::vector<std::vector<Scalar>> gens;
    for (const auto& v : vectors) {
        require_same_basis(v.basis(), g.basis(), "is_subalgebra");
        gens.push_back(to_coordinates(v));
    }
    const SpanSolver span(g.dim(), gens);
    for (const auto& a : vectors)
        for (const auto& b : vectors)
            if (!span.coordinates(to_coordinates(g.bracket(a, b))))
                return false;
    return true;
}

VerificationReport check_invariance(const Superalgebra& g, const BilinearForm& form)
{
    require_same_basis(g.basis(), form.basis, "check_invariance");
    const auto& B = g.basis();
    const int n = static_cast<int>(g.dim());
    std::optional<std::string> bad;
    for (int a = 0; a < n && !bad; ++a)
        for (int b = 0; b < n && !bad; ++b)
            for (int c = 0; c < n && !bad; ++c) {
                const Element ea = basis_vector(B, a), ec = basis_vector(B, c);
                const Scalar lhs = form(g.bracket_basis(a, b), ec);
                const Scalar rhs = form(ea, g.bracket_basis(b, c));
                if (!(lhs == rhs))
                    bad = "triple " + triple_name(B, a, b, c) + ": <[a,b],c> = " + lhs.str() +
                          ", <a,[b,c]> = " + rhs.str();
            }
    VerificationReport report;
    report.add("form invariance", !bad, bad);
    return report;
}

VerificationReport check_homomorphism(const LinearMap& phi, const Superalgebra& source,
                                      const Superalgebra& target)
{
    require_same_basis(phi.source(), source.basis(), "check_homomorphism");
    require_same_basis(phi.target(), target.basis(), "check_homomorphism");
    VerificationReport report;
    report.add("parity preserving", phi.is_even(),
               phi.is_even() ? std::nullopt : std::optional<std::string>("map mixes parities"));

    const auto& S = source.basis();
    const int n = static_cast<int>(source.dim());
    std::optional<std::string> bad;
    for (int a = 0; a < n && !bad; ++a)
        for (int b = 0; b < n && !bad; ++b) {
            const Element lhs = phi.apply(source.bracket_basis(a, b));
            const Element rhs = target.bracket(phi.image(a), phi.image(b));
            if (!(lhs == rhs))
                bad = "pair " + pair_name(S, a, b) + ": phi([a,b]) = " + to_string(lhs) +
                      ", [phi(a),phi(b)] = " + to_string(rhs);
        }
    report.add("bracket homomorphism", !bad, bad);
    return report;
}

std::vector<std::size_t> derived_series_dims(const Superalgebra& g, std::size_t max_steps)
{
    std::vector<Element> current;
    for (std::size_t i = 0; i < g.dim(); ++i)
        current.push_back(basis_vector(g.basis(), static_cast<int>(i)));
    std::vector<std::size_t> dims{g.dim()};
    for (std::size_t step = 0; step < max_steps && !current.empty(); ++step) {
        std::vector<Element> brackets;
        for (const auto& a : current)
            for (const auto& b : current) {
                Element c = g.bracket(a, b);
                if (!c.is_zero())
                    brackets.push_back(std::move(c));
            }
        // Reduce to an independent family.
        std::vector<Element> next;
        if (!brackets.empty()) {
            Matrix m(brackets.size(), g.dim());
            for (std::size_t r = 0; r < brackets.size(); ++r)
                for (const auto& [i, c] : brackets[r].entries())
                    m(r, i[0]) = c;
            const RowEchelon e = row_reduce(m);
            for (std::size_t r = 0; r < e.rank(); ++r) {
                Element v(g.basis());
                for (std::size_t c = 0; c < g.dim(); ++c)
                    v.add({static_cast<int>(c)}, e.reduced(r, c));
                next.push_back(std::move(v));
            }
        }
        if (next.size() == current.size()) {
            dims.push_back(next.size());
            break;
        }
        current = std::move(next);
        dims.push_back(current.size());
    }
    return dims;
}

bool is_solvable(const Superalgebra& g, std::size_t max_steps)
{
    return derived_series_dims(g, max_steps).back() == 0;
}

}  // namespace superbialg
