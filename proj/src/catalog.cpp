#include "superbialg/catalog.hpp"

#include "superbialg/format.hpp"

namespace superbialg::catalog {

namespace {

Matrix E(int i, int j)
{
    Matrix m(3, 3);
    m(i - 1, j - 1) = Scalar(1);
    return m;
}

std::vector<Element> parse_all(const GradedBasis& basis, const std::vector<std::string>& texts)
{
    std::vector<Element> out;
    for (const auto& t : texts)
        out.push_back(parse_element(basis, t));
    return out;
}

// a ∧ b and a ⊗ b on sl(2,1) labels.
Tensor2 W(const std::string& a, const std::string& b)
{
    return wedge(sl21_el(a), sl21_el(b));
}
Tensor2 T(const std::string& a, const std::string& b)
{
    return tensor(sl21_el(a), sl21_el(b));
}
Tensor2 w(const std::string& a, const std::string& b)
{
    return wedge(st_el(a), st_el(b));
}

Tensor2 zero_sl21() { return Tensor2(sl21_basis()); }
Tensor2 zero_st() { return Tensor2(st_basis()); }

std::vector<Tensor2> negated(std::vector<Tensor2> v)
{
    for (auto& t : v)
        t = -t;
    return v;
}

Superalgebra dual_from_upper(const std::vector<std::tuple<std::string, std::string, std::string>>& rows)
{
    const auto& D = st_dual_basis();
    StructureTable upper;
    for (const auto& [a, b, value] : rows) {
        const int i = static_cast<int>(*D.index_of(a));
        const int j = static_cast<int>(*D.index_of(b));
        for (const Element e = parse_element(D, value); const auto& [k, c] : e.entries())
            upper[{i, j, k[0]}] = c;
    }
    return Superalgebra::from_upper(D, upper);
}

LinearMap st_map(const GradedBasis& source, const GradedBasis& target, const std::vector<std::string>& images)
{
    return LinearMap::from_images(source, target, parse_all(target, images));
}

Bialgebra transported(const Bialgebra& ambient, const LinearMap& embedding)
{
    std::vector<Element> images;
    for (std::size_t j = 0; j < embedding.source().size(); ++j)
        images.push_back(embedding.image(j));
    Bialgebra b = restrict(ambient, images, embedding.source().labels());
    // Re-home on the shared basis object so results compare against s and t directly.
    const GradedBasis& B = embedding.source();
    Cochain delta(B, 1, Parity::even, CoefficientModule::tensor_square);
    for (int i = 0; i < static_cast<int>(B.size()); ++i) {
        Tensor2 v(B);
        for (const Tensor2 t = b.delta(i); const auto& [idx, c] : t.entries())
            v.add(idx, c);
        delta.set({i}, v);
    }
    return {Superalgebra(B, b.algebra.constants()), delta};
}

}  // namespace

MatrixRealization sl21_realization()
{
    MatrixRealization real;
    real.basis = sl21_basis();
    real.even_size = 2;
    real.odd_size = 1;
    real.images = {E(1, 1) + E(3, 3), E(2, 2) + E(3, 3), E(1, 2), E(2, 1),
                   E(1, 3),           E(3, 1),           E(2, 3), E(3, 2)};
    return real;
}

const GradedBasis& sl21_basis()
{
    static const GradedBasis basis({"(E11+E33)", "(E22+E33)", "E12", "E21", "E13", "E31", "E23", "E32"},
                                   {Parity::even, Parity::even, Parity::even, Parity::even, Parity::odd,
                                    Parity::odd, Parity::odd, Parity::odd});
    return basis;
}

Superalgebra sl21()
{
    static const Superalgebra g = from_matrices(sl21_realization());
    return g;
}

Element sl21_el(const std::string& text)
{
    return parse_element(sl21_basis(), text);
}

BilinearForm supertrace()
{
    return supertrace_gram(sl21_realization());
}

LinearEndomorphism f_map()
{
    return LinearMap::from_images(sl21_basis(), expected::f_images());
}

Tensor2 omega()
{
    return casimir(sl21_realization());
}

Tensor2 r_f()
{
    return r_of_f(f_map(), omega());
}

Tensor2 r_s()
{
    return T("-(E22+E33)", "(E11+E33)") + T("E12", "E21") - T("E13", "E31") + T("E32", "E23");
}

LinearEndomorphism f_from_r(const Tensor2& r, const BilinearForm& form)
{
    require_same_basis(r.basis(), form.basis, "f_from_r");
    const std::size_t n = form.basis.size();
    Matrix R(n, n);
    for (const auto& [idx, c] : r.entries())
        R(idx[0], idx[1]) = c;
    return LinearMap(form.basis, form.basis, R * form.gram);
}

LinearEndomorphism f_standard()
{
    return f_from_r(r_s(), supertrace());
}

Cochain delta_f()
{
    return cocommutator(sl21(), r_f());
}

Cochain delta_s()
{
    return cocommutator(sl21(), r_s());
}

Bialgebra sl21_f()
{
    return {sl21(), delta_f()};
}

Bialgebra sl21_s()
{
    return {sl21(), delta_s()};
}

std::vector<Element> S1() { return parse_all(sl21_basis(), S1_labels()); }
std::vector<Element> S2() { return parse_all(sl21_basis(), S2_labels()); }
std::vector<Element> T1() { return parse_all(sl21_basis(), T1_labels()); }
std::vector<Element> T2() { return parse_all(sl21_basis(), T2_labels()); }

std::vector<std::string> S1_labels() { return {"(E11+E33)", "E21", "E23", "(E13+E31)"}; }
std::vector<std::string> S2_labels() { return {"(E22+E33)", "E12", "E13", "(E23+E32)"}; }
std::vector<std::string> T1_labels() { return {"(E11+E33)", "E21", "E23", "E31"}; }
std::vector<std::string> T2_labels() { return {"(E22+E33)", "E12", "E13", "E32"}; }

const GradedBasis& st_basis()
{
    static const GradedBasis basis({"h", "x", "y1", "y2"}, {Parity::even, Parity::even, Parity::odd, Parity::odd});
    return basis;
}

const GradedBasis& st_dual_basis()
{
    static const GradedBasis basis = st_basis().renamed("*");
    return basis;
}

Element st_el(const std::string& text)
{
    return parse_element(st_basis(), text);
}

Element st_dual_el(const std::string& text)
{
    return parse_element(st_dual_basis(), text);
}

Superalgebra s_algebra()
{
    const auto& B = st_basis();
    // [h,x] = −x, [h,y1] = −y1, [x,y2] = y1, [y1,y2] = x, [y2,y2] = 2h
    return Superalgebra::from_upper(B, {{{0, 1, 1}, Scalar(-1)},
                                        {{0, 2, 2}, Scalar(-1)},
                                        {{1, 3, 2}, Scalar(1)},
                                        {{2, 3, 1}, Scalar(1)},
                                        {{3, 3, 0}, Scalar(2)}});
}

Superalgebra t_algebra()
{
    const auto& B = st_basis();
    return Superalgebra::from_upper(B, {{{0, 1, 1}, Scalar(-1)}, {{0, 2, 2}, Scalar(-1)}, {{2, 3, 1}, Scalar(1)}});
}

LinearMap s_to_S1() { return st_map(st_basis(), sl21_basis(), {"(E11+E33)", "E21", "E23", "E13+E31"}); }
LinearMap i1() { return st_map(st_basis(), sl21_basis(), {"(E22+E33)", "E12", "E13", "E23+E32"}); }
LinearMap t_to_T1() { return st_map(st_basis(), sl21_basis(), {"(E11+E33)", "E21", "E23", "E31"}); }
LinearMap i_s1() { return st_map(st_basis(), sl21_basis(), {"(E22+E33)", "E12", "E13", "E32"}); }
LinearMap i2() { return st_map(st_dual_basis(), sl21_basis(), {"-(E11+E33)", "E21", "-E13-E31", "E23"}); }
LinearMap i_s2() { return st_map(st_dual_basis(), sl21_basis(), {"-(E11+E33)", "E21", "-E31", "E23"}); }

LinearMap dual_iso_s1() { return st_map(st_dual_basis(), st_basis(), {"h", "x", "y2", "y1"}); }
LinearMap dual_iso_s2() { return st_map(st_dual_basis(), st_basis(), {"-h", "x", "y2", "-y1"}); }
LinearMap dual_iso_t1() { return st_map(st_dual_basis(), st_basis(), {"h", "x", "y2", "y1"}); }
LinearMap dual_iso_t2() { return st_map(st_dual_basis(), st_basis(), {"-h", "x", "y2", "-y1"}); }
LinearMap negation() { return LinearMap::identity(st_basis()).scaled(Scalar(-1)); }

Bialgebra s_delta1() { return transported(sl21_f(), s_to_S1()); }
Bialgebra s_delta2() { return transported(sl21_f(), i1()); }
Bialgebra t_delta1() { return transported(sl21_s(), t_to_T1()); }
Bialgebra t_delta2() { return transported(sl21_s(), i_s1()); }

Bialgebra S1_f() { return restrict(sl21_f(), S1(), S1_labels()); }
Bialgebra S2_f() { return restrict(sl21_f(), S2(), S2_labels()); }
Bialgebra T1_s() { return restrict(sl21_s(), T1(), T1_labels()); }
Bialgebra T2_s() { return restrict(sl21_s(), T2(), T2_labels()); }

LinearMap inclusion(const std::vector<Element>& sub, const std::vector<std::string>& labels)
{
    std::vector<Parity> parities;
    for (const auto& v : sub)
        parities.push_back(v.parity().value_or(Parity::even));
    return LinearMap::from_images(GradedBasis(labels, parities), sl21_basis(), sub);
}

ManinTriple manin_S()
{
    return {sl21(), supertrace(), S2(), S1()};
}

ManinTriple manin_T()
{
    return {sl21(), supertrace(), T2(), T1()};
}

namespace expected {

Tensor2 omega()
{
    return T("(E11+E33)", "-(E22+E33)") + T("-(E22+E33)", "(E11+E33)") + T("E12", "E21") + T("E21", "E12") -
           T("E13", "E31") + T("E31", "E13") - T("E23", "E32") + T("E32", "E23");
}

Tensor2 r_f()
{
    return T("-(E22+E33)", "(E11+E33)") + T("E12", "E21") - T("E13", "E31") + T("E32", "E23") - T("E13", "E13") +
           T("E23", "E23");
}

std::vector<Element> f_images()
{
    return parse_all(sl21_basis(), {"0", "(E22+E33)", "E12", "0", "E13", "-E13", "0", "E23+E32"});
}

std::vector<Tensor2> delta_f()
{
    return {
        -W("E23", "E23"),
        W("E13", "E13"),
        W("E12", "-(E22+E33)") - W("-E13", "E23+E32"),
        W("E21", "(E11+E33)") - W("E23", "E13+E31"),
        zero_sl21(),
        W("E13+E31", "(E11+E33)") + W("E21", "E23"),
        zero_sl21(),
        W("E23+E32", "-(E22+E33)") + W("-E12", "E13"),
    };
}

std::vector<Tensor2> delta_s()
{
    return {
        zero_sl21(),
        zero_sl21(),
        W("E12", "-(E22+E33)") - W("-E13", "E32"),
        W("E21", "(E11+E33)") - W("E23", "E31"),
        zero_sl21(),
        W("E31", "(E11+E33)"),
        zero_sl21(),
        W("E32", "-(E22+E33)"),
    };
}

// Values at the displayed spanning vectors, in display order.
std::vector<Tensor2> delta_f_S1()
{
    return {-W("E23", "E23"), W("E21", "(E11+E33)") - W("E23", "E13+E31"), zero_sl21(),
            W("E13+E31", "(E11+E33)") + W("E21", "E23")};
}

std::vector<Tensor2> delta_f_S2()
{
    return {W("E13", "E13"), W("E12", "-(E22+E33)") - W("-E13", "E23+E32"), zero_sl21(),
            W("E23+E32", "-(E22+E33)") + W("-E12", "E13")};
}

std::vector<Tensor2> delta_s_T1()
{
    return {zero_sl21(), W("E21", "(E11+E33)") - W("E23", "E31"), zero_sl21(), W("E31", "(E11+E33)")};
}

std::vector<Tensor2> delta_s_T2()
{
    return {zero_sl21(), W("E12", "-(E22+E33)") - W("-E13", "E32"), zero_sl21(), W("E32", "-(E22+E33)")};
}

std::vector<Tensor2> delta1()
{
    return {-w("y1", "y1"), w("x", "h") - w("y1", "y2"), zero_st(), w("y2", "h") + w("x", "y1")};
}

std::vector<Tensor2> delta2()
{
    return {w("y1", "y1"), -(w("x", "h") - w("y1", "y2")), zero_st(), -(w("y2", "h") + w("x", "y1"))};
}

std::vector<Tensor2> delta_s1()
{
    return {zero_st(), w("x", "h") - w("y1", "y2"), zero_st(), w("y2", "h")};
}

std::vector<Tensor2> delta_s2()
{
    return negated(delta_s1());
}

Superalgebra dual1()
{
    return dual_from_upper({{"h*", "x*", "-x*"},
                            {"h*", "y2*", "-y2*"},
                            {"x*", "y1*", "y2*"},
                            {"y1*", "y2*", "x*"},
                            {"y1*", "y1*", "2*h*"}});
}

Superalgebra dual2()
{
    return dual_from_upper({{"h*", "x*", "x*"},
                            {"h*", "y2*", "y2*"},
                            {"x*", "y1*", "-y2*"},
                            {"y1*", "y2*", "-x*"},
                            {"y1*", "y1*", "-2*h*"}});
}

Superalgebra dual_s1()
{
    return dual_from_upper({{"h*", "x*", "-x*"}, {"h*", "y2*", "-y2*"}, {"y1*", "y2*", "x*"}});
}

}  // namespace expected

}  // namespace superbialg::catalog
