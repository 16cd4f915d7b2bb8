#include "superbialg/double.hpp"

#include "superbialg/format.hpp"

namespace superbialg {

namespace {

int parity_bit(const std::vector<Parity>& ps, int i)
{
    return bit(ps.at(i));
}

Scalar lookup(const std::map<std::array<int, 3>, Scalar>& m, int a, int b, int c)
{
    auto it = m.find({a, b, c});
    return it == m.end() ? Scalar(0) : it->second;
}

void put(std::map<std::array<int, 3>, Scalar>& m, const std::array<int, 3>& key, const Scalar& v)
{
    if (!v.is_zero())
        m[key] = v;
}

}  // namespace

StructureConstants extract_constants(const Bialgebra& b)
{
    const auto& B = b.basis();
    StructureConstants sc;
    sc.C = b.algebra.constants();
    const int n = static_cast<int>(B.size());
    for (int k = 0; k < n; ++k) {
        const Tensor2 t = b.delta(k);
        for (const auto& [idx, c] : t.entries()) {
            const int i = idx[0], j = idx[1];
            if (i < j)
                put(sc.D, {k, i, j}, c);
            else if (i == j)
                put(sc.D, {k, i, i}, c / Scalar(2));
        }
    }
    if (!(cobracket_from_constants(B, sc) == b.delta))
        throw InvalidInput("extract_constants: cobracket is not super-skew");
    return sc;
}

StructureConstants dual_constants(const StructureConstants& sc, const std::vector<Parity>& ps)
{
    StructureConstants out;
    for (const auto& [key, d] : sc.D) {
        const auto [k, i, j] = key;
        if (i < j) {
            const Scalar c = Scalar(sign_of(parity_bit(ps, i) * parity_bit(ps, j))) * d;
            put(out.C, {i, j, k}, c);
            // [e_j*, e_i*] = −(−1)^{|i||j|} [e_i*, e_j*]
            put(out.C, {j, i, k}, Scalar(-sign_of(parity_bit(ps, i) * parity_bit(ps, j))) * c);
        } else if (i == j) {
            put(out.C, {i, i, k}, Scalar(-2) * d);
        }
    }
    for (const auto& [key, c] : sc.C) {
        const auto [i, j, k] = key;
        if (i < j)
            put(out.D, {k, i, j}, Scalar(sign_of(parity_bit(ps, i) * parity_bit(ps, j))) * c);
        else if (i == j)
            put(out.D, {k, i, i}, -c / Scalar(2));
    }
    return out;
}

Superalgebra algebra_from_constants(const GradedBasis& basis, const StructureConstants& sc)
{
    return Superalgebra(basis, sc.C);
}

Cochain cobracket_from_constants(const GradedBasis& basis, const StructureConstants& sc)
{
    Cochain delta(basis, 1, Parity::even, CoefficientModule::tensor_square);
    std::vector<Tensor2> values(basis.size(), Tensor2(basis));
    for (const auto& [key, d] : sc.D) {
        const auto [k, i, j] = key;
        values.at(k) += d * wedge(basis_vector(basis, i), basis_vector(basis, j));
    }
    for (std::size_t k = 0; k < values.size(); ++k)
        delta.set({static_cast<int>(k)}, values[k]);
    return delta;
}

DoubleAlgebra build_double(const Bialgebra& b)
{
    const auto& B = b.basis();
    const int n = static_cast<int>(B.size());
    const StructureConstants sc = extract_constants(b);
    const StructureConstants dual = dual_constants(sc, B.parities());

    std::vector<std::string> labels = B.labels();
    std::vector<Parity> parities = B.parities();
    for (int i = 0; i < n; ++i) {
        labels.push_back(B.label(i) + "*");
        parities.push_back(B.parity(i));
    }
    const GradedBasis DB(labels, parities);
    auto p = [&](int i) { return B.p(i); };
    auto star = [n](int i) { return n + i; };

    StructureTable table;
    for (const auto& [key, c] : sc.C)
        table[key] = c;
    for (const auto& [key, c] : dual.C)
        table[{star(key[0]), star(key[1]), star(key[2])}] = c;

    // [e_i*, e_j] = Σ_k −(−1)^{|i|(|j|+1)} C*(i,k,j) e_k + Σ_k C^i_jk e_k*
    std::map<std::array<int, 3>, Scalar> mixed;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Scalar g_part = Scalar(-sign_of(p(i) * (p(j) + 1))) * lookup(dual.C, i, k, j);
                const Scalar d_part = lookup(sc.C, j, k, i);
                put(mixed, {star(i), j, k}, g_part);
                put(mixed, {star(i), j, star(k)}, d_part);
            }
    for (const auto& [key, c] : mixed) {
        const auto [si, j, k] = key;
        table[key] = c;
        // [e_j, e_i*] = −(−1)^{|i||j|} [e_i*, e_j]
        table[{j, si, k}] = Scalar(-sign_of(p(si - n) * p(j))) * c;
    }
    Superalgebra underlying(DB, table);

    const VerificationReport report = validate(underlying);
    if (const Check* bad = report.first_failure())
        throw InvalidInput("build_double: " + bad->name + ": " + bad->counterexample.value_or(""));

    // δ_g on the first block, the co-opposite cobracket of g* on the second.
    Cochain delta(DB, 1, Parity::even, CoefficientModule::tensor_square);
    for (int k = 0; k < n; ++k) {
        Tensor2 v(DB);
        for (const Tensor2 t = b.delta(k); const auto& [idx, c] : t.entries())
            v.add({idx[0], idx[1]}, c);
        delta.set({k}, v);
    }
    const Cochain dual_delta = cobracket_from_constants(B, dual);
    for (int k = 0; k < n; ++k) {
        Tensor2 v(DB);
        for (const Tensor2 t = dual_delta(k); const auto& [idx, c] : t.entries())
            v.add({star(idx[0]), star(idx[1])}, -c);
        delta.set({star(k)}, v);
    }

    Matrix gram(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        gram(star(i), i) = Scalar(1);
        gram(i, star(i)) = Scalar(sign_of(p(i)));
    }

    Tensor2 r(DB);
    for (int i = 0; i < n; ++i)
        r.add({i, star(i)}, Scalar(1));

    return {std::move(underlying), std::move(delta), BilinearForm{DB, gram}, std::move(r),
            static_cast<std::size_t>(n)};
}

VerificationReport check_canonical_r(const DoubleAlgebra& d)
{
    VerificationReport report;
    const auto& g = d.underlying;
    const auto& B = g.basis();

    const Cochain dr = coboundary_0(g, d.canonical_r);
    std::optional<std::string> bad;
    for (int k = 0; k < static_cast<int>(B.size()) && !bad; ++k)
        if (!(dr(k) == d.delta(k)))
            bad = B.label(k) + ": d(r) = " + to_string(dr(k)) + ", δ_d = " + to_string(d.delta(k));
    report.add("coboundary of r equals δ_d", !bad, bad);

    const Tensor2 sym = d.canonical_r + super_swap(d.canonical_r);
    bad.reset();
    for (int a = 0; a < static_cast<int>(B.size()) && !bad; ++a) {
        const Tensor2 t = adjoint_on_tensor2(g, basis_vector(B, a), sym);
        if (!t.is_zero())
            bad = B.label(a) + " · (r + T_s r) = " + to_string(t);
    }
    report.add("r + T_s(r) invariant", !bad, bad);

    try {
        const Tensor2 omega = casimir(d.form);
        const bool ok = omega == sym;
        report.add("r + T_s(r) equals the Casimir of the form", ok,
                   ok ? std::nullopt : std::optional<std::string>(to_string(sym - omega)));
    } catch (const DegenerateForm&) {
        report.fail("r + T_s(r) equals the Casimir of the form", "form is degenerate");
    }
    return report;
}

LinearMap direct_sum_map(const DoubleAlgebra& d, const std::vector<Element>& on_g,
                         const std::vector<Element>& on_dual)
{
    if (on_g.size() != d.half || on_dual.size() != d.half)
        throw InvalidInput("direct_sum_map: one image per basis vector of each block required");
    std::vector<Element> images = on_g;
    images.insert(images.end(), on_dual.begin(), on_dual.end());
    return LinearMap::from_images(d.underlying.basis(), images);
}

VerificationReport identify(const DoubleAlgebra& d, const Bialgebra& target, const LinearMap& phi,
                            const std::optional<BilinearForm>& target_form)
{
    require_same_basis(phi.source(), d.underlying.basis(), "identify");
    require_same_basis(phi.target(), target.basis(), "identify");
    VerificationReport report;
    const bool bij = phi.is_bijective();
    report.add("bijective", bij, bij ? std::nullopt : std::optional<std::string>("map is singular"));
    report.merge(check_bialgebra_homomorphism(phi, d.as_bialgebra(), target));
    if (target_form) {
        const auto& B = d.underlying.basis();
        std::optional<std::string> bad;
        for (int i = 0; i < static_cast<int>(B.size()) && !bad; ++i)
            for (int j = 0; j < static_cast<int>(B.size()) && !bad; ++j) {
                const Scalar pulled = (*target_form)(phi.image(i), phi.image(j));
                if (!(pulled == d.form.gram(i, j)))
                    bad = "⟨" + B.label(i) + ", " + B.label(j) + "⟩: pulled back " + pulled.str() + ", double " +
                          d.form.gram(i, j).str();
            }
        report.add("form pullback", !bad, bad);
    }
    return report;
}

}  // namespace superbialg
