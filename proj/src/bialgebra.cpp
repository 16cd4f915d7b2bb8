#include "superbialg/bialgebra.hpp"

#include "superbialg/format.hpp"

namespace superbialg {

namespace {

std::string pair_label(const GradedBasis& B, int a, int b)
{
    return "(" + B.label(a) + ", " + B.label(b) + ")";
}

void require_cobracket(const Superalgebra& g, const Cochain& delta, const char* where)
{
    require_same_basis(g.basis(), delta.basis(), where);
    if (delta.degree() != 1 || delta.module() != CoefficientModule::tensor_square)
        throw InvalidInput(std::string(where) + ": expected a degree 1 cochain with values in g⊗g");
}

std::vector<std::vector<Scalar>> coordinate_family(const std::vector<Element>& family)
{
    std::vector<std::vector<Scalar>> out;
    out.reserve(family.size());
    for (const auto& v : family)
        out.push_back(to_coordinates(v));
    return out;
}

}  // namespace

VerificationReport validate_bialgebra(const Bialgebra& b)
{
    VerificationReport report;
    report.merge(validate(b.algebra), "bracket: ");
    if (b.delta.degree() != 1 || b.delta.module() != CoefficientModule::tensor_square ||
        !(b.delta.basis() == b.algebra.basis())) {
        report.fail("cobracket shape", "δ must be a degree 1 g⊗g-valued cochain on the algebra basis");
        return report;
    }
    report.add("cobracket even", b.delta.parity() == Parity::even,
               b.delta.parity() == Parity::even ? std::nullopt : std::optional<std::string>("δ is odd"));
    report.merge(check_skew(b.delta), "cobracket: ");
    report.merge(is_cocycle_1(b.algebra, b.delta), "cobracket: ");
    report.merge(check_cojacobi(b.algebra, b.delta), "cobracket: ");
    return report;
}

Tensor2 casimir(const BilinearForm& form)
{
    const Matrix inv = inverse(form.gram);
    Tensor2 omega(form.basis);
    const int n = static_cast<int>(form.basis.size());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            omega.add({i, k}, inv(i, k));
    return omega;
}

Tensor2 casimir(const MatrixRealization& real)
{
    return casimir(supertrace_gram(real));
}

Tensor2 r_of_f(const LinearEndomorphism& f, const Tensor2& omega)
{
    require_same_basis(f.source(), omega.basis(), "r_of_f");
    require_same_basis(f.target(), omega.basis(), "r_of_f");
    return f.apply_left(omega);
}

VerificationReport check_f_equation(const Superalgebra& g, const LinearEndomorphism& f)
{
    require_same_basis(g.basis(), f.source(), "check_f_equation");
    require_same_basis(g.basis(), f.target(), "check_f_equation");
    const LinearMap fm1 = f - LinearMap::identity(g.basis());
    const int n = static_cast<int>(g.dim());
    std::optional<std::string> bad;
    for (int x = 0; x < n && !bad; ++x)
        for (int y = 0; y < n && !bad; ++y) {
            const Element lhs = fm1.apply(g.bracket(f.image(x), f.image(y)));
            const Element rhs = f.apply(g.bracket(fm1.image(x), fm1.image(y)));
            if (!(lhs == rhs))
                bad = pair_label(g.basis(), x, y) + ": " + to_string(lhs) + " != " + to_string(rhs);
        }
    VerificationReport report;
    report.add("f-equation", !bad, bad);
    return report;
}

VerificationReport check_unitarity(const Tensor2& r, const Tensor2& omega)
{
    require_same_basis(r.basis(), omega.basis(), "check_unitarity");
    const Tensor2 diff = r + super_swap(r) - omega;
    VerificationReport report;
    if (diff.is_zero()) {
        report.pass("r + T_s(r) = Ω");
    } else {
        const auto& [idx, c] = *diff.entries().begin();
        report.fail("r + T_s(r) = Ω", "coefficient of " + r.basis().label(idx[0]) + "⊗" + r.basis().label(idx[1]) +
                                           " off by " + c.str());
    }
    return report;
}

Cochain cocommutator(const Superalgebra& g, const Tensor2& r)
{
    return coboundary_0(g, r);
}

VerificationReport check_skew(const Cochain& delta)
{
    std::optional<std::string> bad;
    const auto& B = delta.basis();
    for (int i = 0; i < static_cast<int>(B.size()) && !bad; ++i) {
        const Tensor2 t = delta(i);
        if (!(super_swap(t) == -t))
            bad = "δ(" + B.label(i) + ") = " + to_string(t);
    }
    VerificationReport report;
    report.add("super-skew", !bad, bad);
    return report;
}

VerificationReport check_cojacobi(const Superalgebra& g, const Cochain& delta)
{
    require_cobracket(g, delta, "check_cojacobi");
    const auto& B = g.basis();
    const int n = static_cast<int>(g.dim());
    std::vector<Tensor2> values;
    for (int i = 0; i < n; ++i)
        values.push_back(delta(i));

    std::optional<std::string> bad;
    for (int x = 0; x < n && !bad; ++x) {
        Tensor3 t(B);
        for (const auto& [idx, c] : values[x].entries())
            t += c * tensor(values[idx[0]], basis_vector(B, idx[1]));
        const Tensor3 a = alt_s(t);
        if (!a.is_zero())
            bad = "x = " + B.label(x) + ": Alt_s((δ⊗1)δ(x)) = " + to_string(a);
    }
    VerificationReport report;
    report.add("coJacobi", !bad, bad);
    return report;
}

VerificationReport check_compatibility(const Superalgebra& g, const Cochain& delta)
{
    require_cobracket(g, delta, "check_compatibility");
    const auto& B = g.basis();
    const int n = static_cast<int>(g.dim());
    std::optional<std::string> bad;
    for (int a = 0; a < n && !bad; ++a)
        for (int b = 0; b < n && !bad; ++b) {
            const Tensor2 lhs = delta.apply(g.bracket_basis(a, b));
            const Element ea = basis_vector(B, a), eb = basis_vector(B, b);
            // [t, b⊗1 + 1⊗b] = −(−1)^{|t||b|} b·t with |t| = |a| + |δ|.
            const int pt = (B.p(a) + bit(delta.parity())) & 1;
            const Tensor2 rhs = Scalar(-sign_of(pt * B.p(b))) * adjoint_on_tensor2(g, eb, delta(a)) +
                                adjoint_on_tensor2(g, ea, delta(b));
            if (!(lhs == rhs))
                bad = pair_label(B, a, b) + ": δ([a,b]) = " + to_string(lhs) + ", rhs = " + to_string(rhs);
        }
    VerificationReport report;
    report.add("compatibility", !bad, bad);
    return report;
}

Superalgebra dual_bracket(const Bialgebra& b)
{
    require_cobracket(b.algebra, b.delta, "dual_bracket");
    const auto& B = b.basis();
    const GradedBasis dual = B.renamed("*");
    StructureTable table;
    for (int k = 0; k < static_cast<int>(B.size()); ++k)
        for (const Tensor2 v = b.delta(k); const auto& [idx, c] : v.entries())
            table[{idx[0], idx[1], k}] = Scalar(sign_of(B.p(idx[0]) * B.p(idx[1]))) * c;
    return Superalgebra(dual, table);
}

Bialgebra restrict(const Bialgebra& b, const std::vector<Element>& sub, const std::vector<std::string>& labels)
{
    require_cobracket(b.algebra, b.delta, "restrict");
    if (labels.size() != sub.size())
        throw InvalidInput("restrict: one label per spanning vector required");
    std::vector<Parity> parities;
    for (const auto& v : sub) {
        require_same_basis(v.basis(), b.basis(), "restrict");
        if (v.is_zero() || !v.is_homogeneous())
            throw InvalidInput("restrict: spanning vectors must be nonzero and homogeneous");
        parities.push_back(*v.parity());
    }
    const GradedBasis sb(labels, parities);
    const SpanSolver solver(b.basis().size(), coordinate_family(sub));
    const int m = static_cast<int>(sub.size());
    const int n = static_cast<int>(b.basis().size());

    auto coords = [&](const std::vector<Scalar>& v, const std::string& what) {
        auto c = solver.coordinates(v);
        if (!c)
            throw NotClosed("restrict: " + what + " leaves the subspace");
        return *c;
    };

    StructureTable table;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const auto c = coords(to_coordinates(b.algebra.bracket(sub[i], sub[j])),
                                  "[" + labels[i] + ", " + labels[j] + "]");
            for (int k = 0; k < m; ++k)
                if (!c[k].is_zero())
                    table[{i, j, k}] = c[k];
        }
    Superalgebra algebra(sb, table);

    // δ(s) = M D Mᵀ with M the coordinate columns of sub: solve column-wise, then row-wise.
    Cochain delta(sb, 1, Parity::even, CoefficientModule::tensor_square);
    for (int s = 0; s < m; ++s) {
        const Tensor2 t = b.delta.apply(sub[s]);
        const std::string what = "δ(" + labels[s] + ")";
        std::vector<std::vector<Scalar>> x(n, std::vector<Scalar>(m));  // x[col][p] = X(p, col)
        for (int col = 0; col < n; ++col) {
            std::vector<Scalar> column(n);
            for (int row = 0; row < n; ++row)
                column[row] = t.coeff({row, col});
            x[col] = coords(column, what);
        }
        Tensor2 value(sb);
        for (int p = 0; p < m; ++p) {
            std::vector<Scalar> row(n);
            for (int col = 0; col < n; ++col)
                row[col] = x[col][p];
            const auto d = coords(row, what);
            for (int q = 0; q < m; ++q)
                value.add({p, q}, d[q]);
        }
        delta.set({s}, value);
    }
    return {std::move(algebra), std::move(delta)};
}

Bialgebra opposite(const Bialgebra& b)
{
    StructureTable negated;
    for (const auto& [key, c] : b.algebra.constants())
        negated[key] = -c;
    return {Superalgebra(b.basis(), negated), b.delta};
}

VerificationReport check_bialgebra_homomorphism(const LinearMap& phi, const Bialgebra& source,
                                                const Bialgebra& target)
{
    VerificationReport report = check_homomorphism(phi, source.algebra, target.algebra);
    std::optional<std::string> bad;
    for (int j = 0; j < static_cast<int>(source.basis().size()) && !bad; ++j) {
        const Tensor2 lhs = phi.apply_both(source.delta(j));
        const Tensor2 rhs = target.delta.apply(phi.image(j));
        if (!(lhs == rhs))
            bad = source.basis().label(j) + ": (φ⊗φ)δ = " + to_string(lhs) + ", δ∘φ = " + to_string(rhs);
    }
    report.add("cobracket homomorphism", !bad, bad);
    return report;
}

VerificationReport check_manin_triple(const ManinTriple& t)
{
    VerificationReport report;
    const auto& g = t.ambient;
    require_same_basis(g.basis(), t.form.basis, "check_manin_triple");

    std::vector<Element> all = t.plus;
    all.insert(all.end(), t.minus.begin(), t.minus.end());
    bool homogeneous = true;
    for (const auto& v : all)
        homogeneous = homogeneous && v.is_homogeneous() && !v.is_zero();
    report.add("homogeneous parts", homogeneous,
               homogeneous ? std::nullopt : std::optional<std::string>("a spanning vector is zero or inhomogeneous"));

    const std::size_t r = rank_of(all);
    const bool direct = all.size() == g.dim() && r == g.dim();
    report.add("direct sum", direct,
               direct ? std::nullopt
                      : std::optional<std::string>(std::to_string(t.plus.size()) + " + " +
                                                   std::to_string(t.minus.size()) + " vectors of rank " +
                                                   std::to_string(r) + " in dimension " + std::to_string(g.dim())));

    auto closure = [&](const std::vector<Element>& part, const std::string& name) {
        try {
            const bool ok = is_subalgebra(g, part);
            report.add(name + " is a subalgebra", ok,
                       ok ? std::nullopt : std::optional<std::string>("bracket leaves the span"));
        } catch (const DependentVectors&) {
            report.fail(name + " is a subalgebra", "spanning vectors are dependent");
        }
    };
    closure(t.plus, "plus");
    closure(t.minus, "minus");

    auto isotropy = [&](const std::vector<Element>& part, const std::string& name) {
        std::optional<std::string> bad;
        for (std::size_t i = 0; i < part.size() && !bad; ++i)
            for (std::size_t j = 0; j < part.size() && !bad; ++j) {
                const Scalar v = t.form(part[i], part[j]);
                if (!v.is_zero())
                    bad = "⟨" + to_string(part[i]) + ", " + to_string(part[j]) + "⟩ = " + v.str();
            }
        report.add(name + " is isotropic", !bad, bad);
    };
    isotropy(t.plus, "plus");
    isotropy(t.minus, "minus");

    const bool nondeg = t.form.is_nondegenerate();
    report.add("form nondegenerate", nondeg,
               nondeg ? std::nullopt : std::optional<std::string>("Gram matrix is singular"));
    const bool supersym = t.form.is_supersymmetric();
    report.add("form super-symmetric", supersym,
               supersym ? std::nullopt : std::optional<std::string>("Gram matrix is not super-symmetric"));
    report.merge(check_invariance(g, t.form), "form: ");
    return report;
}

}  // namespace superbialg
