#include "oracles.hpp"

#include "superbialg/format.hpp"
#include "superbialg/reproduce.hpp"

#include <doctest.h>

using namespace superbialg;
namespace cat = superbialg::catalog;

TEST_CASE("map f")
{
    const auto f = cat::f_map();
    CHECK(f.is_even());
    CHECK(apply_endomorphism(f, cat::sl21_el("(E22+E33)")) == cat::sl21_el("(E22+E33)"));
    CHECK(apply_endomorphism(f, cat::sl21_el("E21")).is_zero());
    CHECK(apply_endomorphism(f, cat::sl21_el("E31")) == -cat::sl21_el("E13"));
    std::vector<Element> images;
    for (int j = 0; j < 8; ++j)
        images.push_back(f.image(j));
    CHECK(images == cat::expected::f_images());
}

TEST_CASE("standard map is derived from r_s")
{
    const auto fs = cat::f_standard();
    CHECK(fs.is_even());
    CHECK(cat::f_from_r(cat::r_s(), cat::supertrace()) == fs);
    CHECK(cat::f_from_r(cat::r_f(), cat::supertrace()) == cat::f_map());
}

TEST_CASE("cobrackets are computed, not stored")
{
    CHECK(cat::delta_f() == cocommutator(cat::sl21(), cat::r_f()));
    CHECK(cat::delta_s() == cocommutator(cat::sl21(), cat::r_s()));
    for (int i = 0; i < 8; ++i) {
        CHECK(cat::delta_f()(i) == cat::expected::delta_f()[i]);
        CHECK(cat::delta_s()(i) == cat::expected::delta_s()[i]);
    }
    CHECK(cat::delta_s()(0).is_zero());
}

TEST_CASE("restricted cobrackets in the small bases")
{
    const auto check_table = [](const Bialgebra& b, const std::vector<Tensor2>& want) {
        for (int i = 0; i < 4; ++i)
            CHECK(b.delta(i) == want[i]);
    };
    check_table(cat::s_delta1(), cat::expected::delta1());
    check_table(cat::s_delta2(), cat::expected::delta2());
    check_table(cat::t_delta1(), cat::expected::delta_s1());
    check_table(cat::t_delta2(), cat::expected::delta_s2());
    CHECK(cat::s_delta1().delta == -cat::s_delta2().delta);
    CHECK(cat::t_delta1().delta == -cat::t_delta2().delta);
}

TEST_CASE("named maps")
{
    CHECK(cat::i2().image(0) == -cat::sl21_el("(E11+E33)"));
    CHECK(cat::i_s1().image(3) == cat::sl21_el("E32"));
    CHECK(cat::dual_iso_s2().image(3) == -cat::st_el("y1"));
    CHECK(cat::i2().image(2) == cat::sl21_el("-E13 - E31"));
    CHECK(cat::i_s2().image(2) == -cat::sl21_el("E31"));
    for (const auto& m : {cat::i1(), cat::i2(), cat::i_s1(), cat::i_s2()})
        CHECK(m.is_even());
}

TEST_CASE("graded dimension bookkeeping")
{
    auto count = [](const std::vector<Element>& v, Parity p) {
        return std::count_if(v.begin(), v.end(), [&](const Element& x) { return x.parity() == p; });
    };
    for (const auto& [a, b] : {std::pair{cat::S1(), cat::S2()}, std::pair{cat::T1(), cat::T2()}}) {
        CHECK(count(a, Parity::even) + count(b, Parity::even) == 4);
        CHECK(count(a, Parity::odd) == 2);
        CHECK(count(b, Parity::odd) == 2);
        auto all = a;
        all.insert(all.end(), b.begin(), b.end());
        CHECK(rank_of(all) == 8);
    }
}

TEST_CASE("reproduction suites pass")
{
    for (const auto& s : reproduction_sections()) {
        const auto r = reproduce(s);
        CHECK_MESSAGE(r.ok(), "section " << s << ": " << (r.first_failure() ? r.first_failure()->name : ""));
        CHECK_FALSE(r.checks().empty());
    }
    CHECK_THROWS_AS(reproduce("9"), InvalidInput);
}

TEST_CASE("reproduction check names")
{
    const auto r = reproduce("3.2");
    bool found = false;
    for (const auto& c : r.checks())
        found = found || c.name.find("[y₁*, y₁*]₁ = 2h*") != std::string::npos;
    CHECK(found);
    CHECK(subscripted("2*E21 - y1*") == "2*E₂₁ - y₁*");
}
