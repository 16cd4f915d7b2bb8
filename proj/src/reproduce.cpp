#include "superbialg/reproduce.hpp"

#include "superbialg/catalog.hpp"
#include "superbialg/format.hpp"

#include <cctype>
#include <functional>
#include <tuple>

namespace superbialg {

namespace cat = catalog;

namespace {

// Checks are named "<fixture>  <statement>".
class Suite {
public:
    void fixture(std::string name) { fixture_ = std::move(name); }

    void check(const std::string& statement, bool ok, std::optional<std::string> ce = std::nullopt)
    {
        report_.add(fixture_ + "  " + statement, ok, ok ? std::nullopt : std::move(ce));
    }
    void check(const std::string& statement, const VerificationReport& r)
    {
        const Check* bad = r.first_failure();
        check(statement, bad == nullptr,
              bad ? std::optional<std::string>(bad->name + ": " + bad->counterexample.value_or("")) : std::nullopt);
    }
    // Runs f, turning an exception into a failed check.
    void guarded(const std::string& statement, const std::function<void()>& f)
    {
        try {
            f();
        } catch (const Error& e) {
            check(statement, false, std::string(e.what()));
        }
    }

    VerificationReport take() { return std::move(report_); }

private:
    std::string fixture_;
    VerificationReport report_;
};

std::string mismatch(const Tensor2& got, const Tensor2& want)
{
    return "computed " + to_string(got) + ", expected " + to_string(want);
}

void table(Suite& s, const std::string& delta_name, const GradedBasis& labels, const Cochain& computed,
           const std::vector<Tensor2>& expected, const std::function<Tensor2(const Tensor2&)>& push = {})
{
    for (int i = 0; i < static_cast<int>(expected.size()); ++i) {
        const Tensor2 got = push ? push(computed(i)) : computed(i);
        s.check(subscripted(delta_name + "(" + labels.label(i) + ") = " + to_string(expected[i])),
                got == expected[i], mismatch(got, expected[i]));
    }
}

std::vector<Element> images_of(const LinearMap& m)
{
    std::vector<Element> out;
    for (std::size_t j = 0; j < m.source().size(); ++j)
        out.push_back(m.image(j));
    return out;
}

// Rows (a, b, value, display value) of a dual bracket table.
using DualRow = std::tuple<std::string, std::string, std::string, std::string>;

void dual_table(Suite& s, const std::string& tag, const Superalgebra& computed, const Superalgebra& expected,
                const std::vector<DualRow>& rows)
{
    const auto& D = computed.basis();
    for (const auto& [a, b, value, display] : rows) {
        const int i = static_cast<int>(*D.index_of(a));
        const int j = static_cast<int>(*D.index_of(b));
        const Element want = parse_element(D, value);
        const Element& got = computed.bracket_basis(i, j);
        s.check(subscripted("[" + a + ", " + b + "]") + tag + " = " + subscripted(display), got == want,
                "computed " + to_string(got));
    }
    s.check("no other nonzero brackets" + tag, computed == expected, "dual bracket differs from the full table");
}

void section_2(Suite& s)
{
    const auto g = cat::sl21();
    s.fixture("paper.s2.sl21");
    s.check("sl(2,1) satisfies the Lie superalgebra axioms", validate(g));
    s.check("supertrace form nondegenerate and super-symmetric",
            cat::supertrace().is_nondegenerate() && cat::supertrace().is_supersymmetric());

    s.fixture("paper.s2.f");
    const auto f = cat::f_map();
    s.check("f is even", f.is_even());
    s.check("(f−1)[f(x),f(y)] = f([(f−1)(x),(f−1)(y)]) on all 64 pairs", check_f_equation(g, f));

    s.fixture("paper.s2.omega");
    const Tensor2 omega = cat::omega();
    s.check("Ω = Σ (G⁻¹)ᵢₖ eᵢ⊗eₖ equals the displayed Casimir", omega == cat::expected::omega(),
            mismatch(omega, cat::expected::omega()));
    s.check("Ω is invariant", coboundary_0(g, omega).is_zero());

    s.fixture("paper.s2.r_f");
    const Tensor2 r = cat::r_f();
    s.check("r(f) = (f⊗1)Ω equals the display", r == cat::expected::r_f(), mismatch(r, cat::expected::r_f()));
    s.check("r(f) + T_s(r(f)) = Ω", check_unitarity(r, omega));
}

void section_3_1(Suite& s)
{
    const auto g = cat::sl21();
    s.fixture("paper.s3_1.delta_f");
    const Cochain delta = cat::delta_f();
    table(s, "δ_f", g.basis(), delta, cat::expected::delta_f());
    s.check("δ_f is a 1-cocycle", is_cocycle_1(g, delta));
    s.check("δ_f satisfies compatibility", check_compatibility(g, delta));
    s.check("δ_f satisfies coJacobi", check_cojacobi(g, delta));
    s.check("δ_f is super-skew", check_skew(delta));
    s.check("d(d(r(f))) = 0", coboundary(g, delta).is_zero());
}

void section_3_2(Suite& s)
{
    const auto g = cat::sl21();
    const auto f = cat::f_map();

    s.fixture("paper.s3_2.subalgebras");
    s.check("S₁ = Im(f−1)", same_span(image_basis(f - LinearMap::identity(g.basis())), cat::S1()));
    s.check("S₂ = Im(f)", same_span(image_basis(f), cat::S2()));
    s.check("S₁ is a subalgebra", is_subalgebra(g, cat::S1()));
    s.check("S₂ is a subalgebra", is_subalgebra(g, cat::S2()));
    s.check("g ≅ s ⊕ s as graded spaces", g.dim() == 8 && cat::S1().size() + cat::S2().size() == 8 &&
                                             rank_of([] {
                                                 auto v = cat::S1();
                                                 auto w = cat::S2();
                                                 v.insert(v.end(), w.begin(), w.end());
                                                 return v;
                                             }()) == 8);

    s.fixture("paper.s3_2.s");
    const auto sa = cat::s_algebra();
    s.check("s satisfies the Lie superalgebra axioms", validate(sa));
    s.check("s is solvable", is_solvable(sa));
    s.check("[h, y₂] = 0", sa.bracket_basis(0, 3).is_zero());

    s.fixture("paper.s3_2.delta_f_S1");
    s.guarded("δ_f restricts to S₁", [&] {
        const auto b = cat::S1_f();
        const auto inc = cat::inclusion(cat::S1(), cat::S1_labels());
        table(s, "δ_f", b.basis(), b.delta, cat::expected::delta_f_S1(),
              [&](const Tensor2& t) { return inc.apply_both(t); });
    });
    s.fixture("paper.s3_2.delta_f_S2");
    s.guarded("δ_f restricts to S₂", [&] {
        const auto b = cat::S2_f();
        const auto inc = cat::inclusion(cat::S2(), cat::S2_labels());
        table(s, "δ_f", b.basis(), b.delta, cat::expected::delta_f_S2(),
              [&](const Tensor2& t) { return inc.apply_both(t); });
    });

    s.fixture("paper.s3_2.delta1");
    const auto b1 = cat::s_delta1();
    s.check("(S₁, δ_f|S₁) ≅ s as a Lie superalgebra", b1.algebra == sa);
    table(s, "δ₁", b1.basis(), b1.delta, cat::expected::delta1());
    s.fixture("paper.s3_2.delta2");
    const auto b2 = cat::s_delta2();
    s.check("(S₂, δ_f|S₂) ≅ s as a Lie superalgebra", b2.algebra == sa);
    table(s, "δ₂", b2.basis(), b2.delta, cat::expected::delta2());
    s.check("δ₁ = −δ₂", b1.delta == -b2.delta);
    s.check("(s, δ₁) and (s, δ₂) are super Lie bialgebras",
            validate_bialgebra(b1).ok() && validate_bialgebra(b2).ok());

    s.fixture("paper.s3_2.opposite");
    s.check("(S₂, δ_f|S₂) ≅ opposite of (S₁, δ_f|S₁)",
            check_bialgebra_homomorphism(LinearMap(cat::S2_f().basis(), cat::S1_f().basis(),
                                                   Matrix::identity(4).scaled(Scalar(-1))),
                                         cat::S2_f(), opposite(cat::S1_f())));

    s.fixture("paper.s3_2.dual1");
    const auto d1 = dual_bracket(b1);
    dual_table(s, "₁", d1, cat::expected::dual1(),
               {{"h*", "x*", "-x*", "−x*"},
                {"h*", "y2*", "-y2*", "−y2*"},
                {"x*", "y1*", "y2*", "y2*"},
                {"y1*", "y2*", "x*", "x*"},
                {"y1*", "y1*", "2*h*", "2h*"}});
    s.check("s* with [,]₁ satisfies the axioms", validate(d1));
    s.check("h*↦h, x*↦x, y₁*↦y₂, y₂*↦y₁ is an isomorphism onto s",
            cat::dual_iso_s1().is_bijective() && check_homomorphism(cat::dual_iso_s1(), d1, sa).ok());

    s.fixture("paper.s3_2.dual2");
    const auto d2 = dual_bracket(b2);
    dual_table(s, "₂", d2, cat::expected::dual2(),
               {{"h*", "x*", "x*", "x*"},
                {"h*", "y2*", "y2*", "y2*"},
                {"x*", "y1*", "-y2*", "−y2*"},
                {"y1*", "y2*", "-x*", "−x*"},
                {"y1*", "y1*", "-2*h*", "−2h*"}});
    s.check("s* with [,]₂ satisfies the axioms", validate(d2));
    s.check("h*↦−h, x*↦x, y₁*↦y₂, y₂*↦−y₁ is an isomorphism onto s",
            cat::dual_iso_s2().is_bijective() && check_homomorphism(cat::dual_iso_s2(), d2, sa).ok());
}

// Shared by the two double identifications.
void double_checks(Suite& s, const Bialgebra& small, const Bialgebra& target, const LinearMap& on_g,
                   const LinearMap& on_dual, const std::vector<Element>& image_g,
                   const std::vector<Element>& image_dual, const std::string& g_name, const std::string& d_name)
{
    s.guarded("double construction", [&] {
        const DoubleAlgebra d = build_double(small);
        s.check("double is 8-dimensional with parities duplicated",
                d.underlying.dim() == 8 && d.half == 4);
        s.check("double satisfies the Lie superalgebra axioms", validate(d.underlying));
        s.check("double is a super Lie bialgebra", validate_bialgebra(d.as_bialgebra()));
        s.check("double's form is invariant", check_invariance(d.underlying, d.form));
        s.check(g_name + " ⊕ " + d_name + " identifies the double with (sl(2,1), δ)",
                identify(d, target, direct_sum_map(d, images_of(on_g), images_of(on_dual)), cat::supertrace()));
        s.check("pulled-back form coincides with the supertrace form",
                identify(d, target, direct_sum_map(d, images_of(on_g), images_of(on_dual)), cat::supertrace())
                    .find("form pullback")
                    ->passed);
        s.check("canonical r: d(r) = δ_d and r + T_s(r) invariant", check_canonical_r(d));

        std::vector<Element> second;
        std::vector<std::string> labels;
        for (int i = 0; i < 4; ++i) {
            second.push_back(basis_vector(d.underlying.basis(), 4 + i));
            labels.push_back(d.underlying.basis().label(4 + i));
        }
        const Bialgebra dual_block = restrict(d.as_bialgebra(), second, labels);
        const Bialgebra on_dual_basis{Superalgebra(on_dual.source(), dual_block.algebra.constants()),
                                      [&] {
                                          Cochain c(on_dual.source(), 1, Parity::even,
                                                    CoefficientModule::tensor_square);
                                          for (int i = 0; i < 4; ++i) {
                                              Tensor2 v(on_dual.source());
                                              for (const Tensor2 t = dual_block.delta(i);
                                                   const auto& [idx, cc] : t.entries())
                                                  v.add(idx, cc);
                                              c.set({i}, v);
                                          }
                                          return c;
                                      }()};
        s.check(g_name + " is a super Lie bialgebra homomorphism", check_bialgebra_homomorphism(on_g, small, target));
        s.check(d_name + " is a super Lie bialgebra homomorphism",
                check_bialgebra_homomorphism(on_dual, on_dual_basis, target));
        s.check("Im(" + g_name + ") and Im(" + d_name + ") are the displayed subalgebras",
                same_span(images_of(on_g), image_g) && same_span(images_of(on_dual), image_dual));
    });
}

void cross_derivation(Suite& s, const std::string& name, const Bialgebra& b)
{
    const StructureConstants sc = extract_constants(b);
    const StructureConstants dc = dual_constants(sc, b.basis().parities());
    s.check("constant rules agree with the pairing for " + name,
            algebra_from_constants(b.basis().renamed("*"), dc) == dual_bracket(b));
}

void section_3_3(Suite& s)
{
    s.fixture("paper.s3_3.form");
    const auto form = cat::supertrace();
    s.check("⟨E₂₃, E₃₂⟩ = 1", form(cat::sl21_el("E23"), cat::sl21_el("E32")) == Scalar(1));
    s.check("⟨E₁₃, E₃₁⟩ = 1", form(cat::sl21_el("E13"), cat::sl21_el("E31")) == Scalar(1));

    s.fixture("paper.s3_3.manin");
    s.check("(sl(2,1), S₂, S₁) is a super Manin triple", check_manin_triple(cat::manin_S()));

    s.fixture("paper.s3_3.double");
    double_checks(s, cat::s_delta2(), cat::sl21_f(), cat::i1(), cat::i2(), cat::S2(), cat::S1(), "i₁", "i₂");

    s.fixture("paper.s3_3.constants");
    cross_derivation(s, "(s, δ₁)", cat::s_delta1());
    cross_derivation(s, "(s, δ₂)", cat::s_delta2());
}

void section_3_4(Suite& s)
{
    const auto g = cat::sl21();

    s.fixture("paper.s3_4.r_s");
    s.check("r_s + T_s(r_s) = Ω", check_unitarity(cat::r_s(), cat::omega()));
    s.check("f_s derived from r_s reproduces r_s", r_of_f(cat::f_standard(), cat::omega()) == cat::r_s());
    s.check("f_s satisfies the f-equation", check_f_equation(g, cat::f_standard()));

    s.fixture("paper.s3_4.delta_s");
    const Cochain delta = cat::delta_s();
    table(s, "δ_s", g.basis(), delta, cat::expected::delta_s());
    s.check("δ_s is a 1-cocycle", is_cocycle_1(g, delta));
    s.check("δ_s satisfies compatibility", check_compatibility(g, delta));
    s.check("δ_s satisfies coJacobi", check_cojacobi(g, delta));
    s.check("d(d(r_s)) = 0", coboundary(g, delta).is_zero());
    bool not_closed = false;
    try {
        restrict(cat::sl21_s(), cat::S1(), cat::S1_labels());
    } catch (const NotClosed&) {
        not_closed = true;
    }
    s.check("δ_s does not restrict to S₁", not_closed, "restriction succeeded");

    s.fixture("paper.s3_4.subalgebras");
    s.check("T₁ is a subalgebra", is_subalgebra(g, cat::T1()));
    s.check("T₂ is a subalgebra", is_subalgebra(g, cat::T2()));
    s.fixture("paper.s3_4.delta_s_T1");
    s.guarded("δ_s restricts to T₁", [&] {
        const auto b = cat::T1_s();
        const auto inc = cat::inclusion(cat::T1(), cat::T1_labels());
        table(s, "δ_s", b.basis(), b.delta, cat::expected::delta_s_T1(),
              [&](const Tensor2& t) { return inc.apply_both(t); });
    });
    s.fixture("paper.s3_4.delta_s_T2");
    s.guarded("δ_s restricts to T₂", [&] {
        const auto b = cat::T2_s();
        const auto inc = cat::inclusion(cat::T2(), cat::T2_labels());
        table(s, "δ_s", b.basis(), b.delta, cat::expected::delta_s_T2(),
              [&](const Tensor2& t) { return inc.apply_both(t); });
    });

    s.fixture("paper.s3_4.t");
    const auto ta = cat::t_algebra();
    s.check("t satisfies the Lie superalgebra axioms", validate(ta));
    s.check("t is solvable", is_solvable(ta));
    s.check("[y₂, y₂] = 0 in t", ta.bracket_basis(3, 3).is_zero());

    s.fixture("paper.s3_4.delta_s1");
    const auto b1 = cat::t_delta1();
    s.check("(T₁, δ_s|T₁) ≅ t as a Lie superalgebra", b1.algebra == ta);
    table(s, "δ_s1", b1.basis(), b1.delta, cat::expected::delta_s1());
    s.fixture("paper.s3_4.delta_s2");
    const auto b2 = cat::t_delta2();
    s.check("(T₂, δ_s|T₂) ≅ t as a Lie superalgebra", b2.algebra == ta);
    table(s, "δ_s2", b2.basis(), b2.delta, cat::expected::delta_s2());
    s.check("δ_s1 = −δ_s2", b1.delta == -b2.delta);
    s.check("(T₂, δ_s|T₂) ≅ opposite of (T₁, δ_s|T₁)",
            check_bialgebra_homomorphism(LinearMap(cat::T2_s().basis(), cat::T1_s().basis(),
                                                   Matrix::identity(4).scaled(Scalar(-1))),
                                         cat::T2_s(), opposite(cat::T1_s())));

    s.fixture("paper.s3_4.dual_s1");
    const auto d1 = dual_bracket(b1);
    dual_table(s, "₁", d1, cat::expected::dual_s1(),
               {{"h*", "x*", "-x*", "−x*"}, {"h*", "y2*", "-y2*", "−y2*"}, {"y1*", "y2*", "x*", "x*"}});
    s.check("h*↦h, x*↦x, y₁*↦y₂, y₂*↦y₁ is an isomorphism onto t",
            cat::dual_iso_t1().is_bijective() && check_homomorphism(cat::dual_iso_t1(), d1, ta).ok());
    s.check("(t, δ_s2) is self-dual", cat::dual_iso_t2().is_bijective() &&
                                          check_homomorphism(cat::dual_iso_t2(), dual_bracket(b2), ta).ok());

    s.fixture("paper.s3_4.manin");
    s.check("(sl(2,1), T₂, T₁) is a super Manin triple", check_manin_triple(cat::manin_T()));

    s.fixture("paper.s3_4.double");
    double_checks(s, cat::t_delta2(), cat::sl21_s(), cat::i_s1(), cat::i_s2(), cat::T2(), cat::T1(), "i_s1",
                  "i_s2");

    s.fixture("paper.s3_4.constants");
    cross_derivation(s, "(t, δ_s1)", cat::t_delta1());
    cross_derivation(s, "(t, δ_s2)", cat::t_delta2());
}

}  // namespace

std::string subscripted(const std::string& text)
{
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    bool in_label = false;
    for (char ch : text) {
        const bool digit = ch >= '0' && ch <= '9';
        if (digit && in_label) {
            out += digits[ch - '0'];
            continue;
        }
        out += ch;
        in_label = std::isalpha(static_cast<unsigned char>(ch)) != 0;
    }
    return out;
}

const std::vector<std::string>& reproduction_sections()
{
    static const std::vector<std::string> s{"2", "3.1", "3.2", "3.3", "3.4"};
    return s;
}

VerificationReport reproduce(const std::string& section)
{
    Suite s;
    if (section == "2")
        section_2(s);
    else if (section == "3.1")
        section_3_1(s);
    else if (section == "3.2")
        section_3_2(s);
    else if (section == "3.3")
        section_3_3(s);
    else if (section == "3.4")
        section_3_4(s);
    else
        throw InvalidInput("unknown section \"" + section + "\"");
    return s.take();
}

std::vector<Fixture> fixtures()
{
    using namespace cat;
    auto cochain = [](const GradedBasis& B, const std::vector<Tensor2>& v) {
        return to_json(Cochain::from_values(B, v));
    };
    const auto& st = st_basis();
    return {
        {"paper.s2.sl21", "algebra", to_json(sl21())},
        {"paper.s2.f", "map", to_json(f_map())},
        {"paper.s2.omega", "tensor", to_json(expected::omega())},
        {"paper.s2.r_f", "tensor", to_json(expected::r_f())},
        {"paper.s3_1.delta_f", "cochain", cochain(sl21_basis(), expected::delta_f())},
        {"paper.s3_1.sl21_f", "bialgebra", to_json(Bialgebra{sl21(), Cochain::from_values(sl21_basis(),
                                                                                          expected::delta_f())})},
        {"paper.s3_2.s", "algebra", to_json(s_algebra())},
        {"paper.s3_2.delta1", "cochain", cochain(st, expected::delta1())},
        {"paper.s3_2.delta2", "cochain", cochain(st, expected::delta2())},
        {"paper.s3_2.s_delta1", "bialgebra", to_json(Bialgebra{s_algebra(), Cochain::from_values(st, expected::delta1())})},
        {"paper.s3_2.s_delta2", "bialgebra", to_json(Bialgebra{s_algebra(), Cochain::from_values(st, expected::delta2())})},
        {"paper.s3_2.dual1", "algebra", to_json(expected::dual1())},
        {"paper.s3_2.dual2", "algebra", to_json(expected::dual2())},
        {"paper.s3_2.dual_iso1", "map", to_json(dual_iso_s1())},
        {"paper.s3_2.dual_iso2", "map", to_json(dual_iso_s2())},
        {"paper.s3_3.i1", "map", to_json(i1())},
        {"paper.s3_3.i2", "map", to_json(i2())},
        {"paper.s3_3.manin", "manin_triple", to_json(manin_S())},
        {"paper.s3_4.r_s", "tensor", to_json(r_s())},
        {"paper.s3_4.delta_s", "cochain", cochain(sl21_basis(), expected::delta_s())},
        {"paper.s3_4.sl21_s", "bialgebra", to_json(Bialgebra{sl21(), Cochain::from_values(sl21_basis(),
                                                                                          expected::delta_s())})},
        {"paper.s3_4.t", "algebra", to_json(t_algebra())},
        {"paper.s3_4.delta_s1", "cochain", cochain(st, expected::delta_s1())},
        {"paper.s3_4.delta_s2", "cochain", cochain(st, expected::delta_s2())},
        {"paper.s3_4.t_deltas1", "bialgebra", to_json(Bialgebra{t_algebra(), Cochain::from_values(st, expected::delta_s1())})},
        {"paper.s3_4.t_deltas2", "bialgebra", to_json(Bialgebra{t_algebra(), Cochain::from_values(st, expected::delta_s2())})},
        {"paper.s3_4.dual_s1", "algebra", to_json(expected::dual_s1())},
        {"paper.s3_4.dual_iso1", "map", to_json(dual_iso_t1())},
        {"paper.s3_4.dual_iso2", "map", to_json(dual_iso_t2())},
        {"paper.s3_4.i_s1", "map", to_json(i_s1())},
        {"paper.s3_4.i_s2", "map", to_json(i_s2())},
        {"paper.s3_4.manin", "manin_triple", to_json(manin_T())},
    };
}

std::optional<Fixture> find_fixture(const std::string& name)
{
    for (auto& f : fixtures())
        if (f.name == name)
            return f;
    return std::nullopt;
}

}  // namespace superbialg
