#include "oracles.hpp"

#include "superbialg/format.hpp"

#include <doctest.h>

using namespace superbialg;
namespace cat = superbialg::catalog;

TEST_CASE("coboundary_0 agrees with the matrix oracle")
{
    const auto g = cat::sl21();
    for (const Tensor2& r : {cat::r_f(), cat::r_s(), cat::omega()}) {
        const Cochain d = coboundary_0(g, r);
        for (int a = 0; a < 8; ++a)
            CHECK(d(a) == oracle::sparse(cat::sl21_basis(), oracle::act(a, oracle::dense(r))));
    }
}

TEST_CASE("coboundary_0 sample values")
{
    const auto g = cat::sl21();
    const Cochain d = coboundary_0(g, cat::r_f());
    const Element e13 = cat::sl21_el("E13");
    CHECK(d.apply(cat::sl21_el("(E22+E33)")) == wedge(e13, e13));
    CHECK(coboundary_0(g, cat::omega()).is_zero());
    CHECK(coboundary_0(g, Tensor2(cat::sl21_basis())).is_zero());
}

TEST_CASE("d∘d vanishes on the shipped 0-cochains")
{
    const auto g = cat::sl21();
    for (const Tensor2& r : {cat::r_f(), cat::r_s(), cat::omega()})
        CHECK(coboundary(g, coboundary_0(g, r)).is_zero());
    CHECK(coboundary(g, cat::delta_f()).is_zero());
    CHECK(coboundary(g, Cochain(cat::sl21_basis(), 1, Parity::even, CoefficientModule::tensor_square)).is_zero());
}

TEST_CASE("canonical tuples")
{
    const auto& B = cat::st_basis();  // h, x even; y1, y2 odd
    CHECK_FALSE(Cochain::canonicalize(B, {0, 0}));
    const auto odd = Cochain::canonicalize(B, {2, 2});
    REQUIRE(odd);
    CHECK(odd->first == Cochain::Args{2, 2});
    CHECK(odd->second == Scalar(1));
    const auto even_swap = Cochain::canonicalize(B, {1, 0});
    REQUIRE(even_swap);
    CHECK(even_swap->first == Cochain::Args{0, 1});
    CHECK(even_swap->second == Scalar(-1));
    const auto odd_swap = Cochain::canonicalize(B, {3, 2});
    REQUIRE(odd_swap);
    CHECK(odd_swap->second == Scalar(1));
    // 4 choose 2 for distinct pairs plus the two odd diagonals
    CHECK(Cochain::canonical_tuples(B, 2).size() == 8);
}

TEST_CASE("super-alternating storage reads back with the Koszul sign")
{
    const auto& B = cat::st_basis();
    Cochain c(B, 2, Parity::even, CoefficientModule::adjoint);
    c.set({3, 1}, cat::st_el("y1"));  // stored at (1, 3) with sign -1
    CHECK(c.element_at({1, 3}) == -cat::st_el("y1"));
    CHECK(c.element_at({3, 1}) == cat::st_el("y1"));
    c.set({3, 2}, cat::st_el("x"));  // both odd: swap sign +1
    CHECK(c.element_at({2, 3}) == cat::st_el("x"));
    CHECK(c.element_at({0, 0}).is_zero());
}

TEST_CASE("cocycle checks")
{
    const auto g = cat::sl21();
    CHECK(is_cocycle_1(g, cat::delta_f()).ok());
    CHECK(is_cocycle_1(g, cat::delta_s()).ok());

    // a ↦ c⊗c for every basis vector a: not a cocycle on a non-abelian algebra
    const Element c = cat::sl21_el("E12");
    Cochain constant(cat::sl21_basis(), 1, Parity::even, CoefficientModule::tensor_square);
    for (int i = 0; i < 8; ++i)
        constant.set({i}, tensor(c, c));
    const auto r = is_cocycle_1(g, constant);
    CHECK_FALSE(r.ok());
    CHECK(r.first_failure()->counterexample);
}

TEST_CASE("zero cochain has zero coboundary")
{
    const auto g = cat::s_algebra();
    for (std::size_t n = 0; n <= 2; ++n)
        CHECK(coboundary(g, Cochain(cat::st_basis(), n, Parity::even, CoefficientModule::adjoint)).is_zero());
}
