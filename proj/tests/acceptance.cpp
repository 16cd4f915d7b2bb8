// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "properties.hpp"

#include "superbialg/reproduce.hpp"

#include <functional>
#include <iostream>

using namespace superbialg;
namespace cat = superbialg::catalog;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void need(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void need(const VerificationReport& r, const std::string& what)
    {
        if (const Check* bad = r.first_failure())
            need(false, what + ": " + bad->name + (bad->counterexample ? " (" + *bad->counterexample + ")" : ""));
    }
};

std::vector<Element> images(const LinearMap& m)
{
    std::vector<Element> out;
    for (std::size_t j = 0; j < m.source().size(); ++j)
        out.push_back(m.image(j));
    return out;
}

Outcome omega_display()
{
    Outcome o;
    const Tensor2 omega = casimir(cat::sl21_realization());
    o.need(omega == cat::expected::omega(), "Casimir differs from the display");
    const auto inv = oracle::gram_inverse();
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k)
            o.need(omega.coeff({i, k}) == inv[i][k], "Casimir differs from the Gram-inverse oracle");
    return o;
}

Outcome r_f_display()
{
    Outcome o;
    const Tensor2 r = r_of_f(cat::f_map(), casimir(cat::supertrace()));
    o.need(r == cat::expected::r_f(), "r(f) differs from the display");
    o.need(r.coeff({4, 4}) == Scalar(-1) && r.coeff({6, 6}) == Scalar(1), "−E13⊗E13 + E23⊗E23 terms");
    return o;
}

Outcome unitarity()
{
    Outcome o;
    o.need(check_unitarity(cat::r_f(), cat::omega()), "r(f)");
    o.need(check_unitarity(cat::r_s(), cat::omega()), "r_s");
    return o;
}

Outcome f_equation()
{
    Outcome o;
    o.need(check_f_equation(cat::sl21(), cat::f_map()), "f");
    return o;
}

Outcome delta_tables()
{
    Outcome o;
    const auto g = cat::sl21();
    const Cochain df = cocommutator(g, r_of_f(cat::f_map(), cat::omega()));
    const Cochain ds = cocommutator(g, cat::r_s());
    for (int i = 0; i < 8; ++i) {
        o.need(df(i) == cat::expected::delta_f()[i], "δ_f(" + g.basis().label(i) + ")");
        o.need(ds(i) == cat::expected::delta_s()[i], "δ_s(" + g.basis().label(i) + ")");
    }
    return o;
}

Outcome cobracket_axioms()
{
    Outcome o;
    const auto g = cat::sl21();
    for (const auto& [name, d] : {std::pair{"δ_f", cat::delta_f()}, std::pair{"δ_s", cat::delta_s()}}) {
        o.need(is_cocycle_1(g, d), std::string(name) + " cocycle");
        o.need(check_compatibility(g, d), std::string(name) + " compatibility");
        o.need(check_cojacobi(g, d), std::string(name) + " coJacobi");
    }
    for (const auto& [name, r] :
         {std::pair{"r(f)", cat::r_f()}, std::pair{"r_s", cat::r_s()}, std::pair{"Ω", cat::omega()}})
        o.need(coboundary(g, coboundary_0(g, r)).is_zero(), std::string("d∘d on ") + name);
    return o;
}

Outcome subalgebras()
{
    Outcome o;
    const auto g = cat::sl21();
    const auto f = cat::f_map();
    o.need(same_span(image_basis(f - LinearMap::identity(g.basis())), cat::S1()), "Im(f−1) = S1");
    o.need(same_span(image_basis(f), cat::S2()), "Im(f) = S2");
    for (const auto& [name, v] : {std::pair{"S1", cat::S1()}, std::pair{"S2", cat::S2()}, std::pair{"T1", cat::T1()},
                                  std::pair{"T2", cat::T2()}})
        o.need(is_subalgebra(g, v), std::string(name) + " subalgebra");
    bool not_closed = false;
    try {
        restrict(cat::sl21_s(), cat::S1(), cat::S1_labels());
    } catch (const NotClosed&) {
        not_closed = true;
    }
    o.need(not_closed, "δ_s restricted to S1 should not close");
    return o;
}

Outcome dual_brackets()
{
    Outcome o;
    o.need(dual_bracket(cat::s_delta1()) == cat::expected::dual1(), "[,]₁ table");
    o.need(dual_bracket(cat::s_delta2()) == cat::expected::dual2(), "[,]₂ table");
    o.need(dual_bracket(cat::t_delta1()) == cat::expected::dual_s1(), "δ_s1 dual table");
    const auto d1 = dual_bracket(cat::s_delta1());
    o.need(d1.bracket(cat::st_dual_el("y1*"), cat::st_dual_el("y1*")) == cat::st_dual_el("2*h*"), "[y1*, y1*]₁");
    const std::vector<std::pair<LinearMap, Bialgebra>> isos{{cat::dual_iso_s1(), cat::s_delta1()},
                                                            {cat::dual_iso_s2(), cat::s_delta2()},
                                                            {cat::dual_iso_t1(), cat::t_delta1()},
                                                            {cat::dual_iso_t2(), cat::t_delta2()}};
    for (const auto& [m, b] : isos) {
        o.need(m.is_bijective(), "dual isomorphism bijective");
        o.need(check_homomorphism(m, dual_bracket(b), b.algebra), "dual isomorphism");
    }
    return o;
}

Outcome opposites()
{
    Outcome o;
    o.need(cat::s_delta1().delta == -cat::s_delta2().delta, "δ₁ = −δ₂");
    o.need(cat::t_delta1().delta == -cat::t_delta2().delta, "δ_s1 = −δ_s2");
    const Bialgebra s1 = cat::S1_f(), s2 = cat::S2_f();
    o.need(check_bialgebra_homomorphism(
               LinearMap(s2.basis(), s1.basis(), Matrix::identity(4).scaled(Scalar(-1))), s2, opposite(s1)),
           "(S2, δ_f) ≅ opposite(S1, δ_f)");
    return o;
}

Outcome doubles()
{
    Outcome o;
    const DoubleAlgebra ds = build_double(cat::s_delta2());
    o.need(identify(ds, cat::sl21_f(), direct_sum_map(ds, images(cat::i1()), images(cat::i2())), cat::supertrace()),
           "i1 ⊕ i2");
    const DoubleAlgebra dt = build_double(cat::t_delta2());
    o.need(identify(dt, cat::sl21_s(), direct_sum_map(dt, images(cat::i_s1()), images(cat::i_s2())),
                    cat::supertrace()),
           "i_s1 ⊕ i_s2");
    const auto form = cat::supertrace();
    o.need(form(cat::sl21_el("E23"), cat::sl21_el("E32")) == Scalar(1), "⟨E23,E32⟩ = 1");
    o.need(form(cat::sl21_el("E13"), cat::sl21_el("E31")) == Scalar(1), "⟨E13,E31⟩ = 1");
    return o;
}

Outcome manin()
{
    Outcome o;
    o.need(check_manin_triple(cat::manin_S()), "(sl21, S2, S1)");
    o.need(check_manin_triple(cat::manin_T()), "(sl21, T2, T1)");
    return o;
}

Outcome canonical_r()
{
    Outcome o;
    o.need(check_canonical_r(build_double(cat::s_delta2())), "double of (s, δ₂)");
    o.need(check_canonical_r(build_double(cat::t_delta2())), "double of (t, δ_s2)");
    return o;
}

Outcome cross_derivation()
{
    Outcome o;
    for (const auto& b : {cat::s_delta1(), cat::s_delta2(), cat::t_delta1(), cat::t_delta2()}) {
        const auto dc = dual_constants(extract_constants(b), b.basis().parities());
        o.need(algebra_from_constants(b.basis().renamed("*"), dc) == dual_bracket(b), "constants vs pairing");
    }
    return o;
}

Outcome property_suite()
{
    Outcome o;
    o.need(props::skew_cocommutators(100), "random cocommutators");
    o.need(props::perturbations(), "perturbations");
    o.need(props::sign_laws(), "sign laws");
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Casimir reproduction", omega_display},
        {"r(f) reproduction", r_f_display},
        {"unitarity r + T_s(r) = Ω for r(f) and r_s", unitarity},
        {"f-equation on all 64 pairs", f_equation},
        {"δ_f and δ_s tables", delta_tables},
        {"cobracket axioms and d∘d = 0", cobracket_axioms},
        {"subalgebras and non-closure of δ_s on S1", subalgebras},
        {"dual bracket tables and dual isomorphisms", dual_brackets},
        {"opposite relation", opposites},
        {"double identifications", doubles},
        {"Manin triples", manin},
        {"canonical r of the doubles", canonical_r},
        {"constant rules agree with the pairing", cross_derivation},
        {"property suite", property_suite},
    };
    int failures = 0;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        Outcome o;
        try {
            o = criteria[n].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << n + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[n].first;
        if (!o.ok)
            std::cout << "  -- " << o.detail;
        std::cout << '\n';
        failures += o.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass\n";
    return failures == 0 ? 0 : 1;
}
