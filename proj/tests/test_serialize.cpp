#include "oracles.hpp"

#include "superbialg/reproduce.hpp"

#include <doctest.h>

using namespace superbialg;
namespace cat = superbialg::catalog;

TEST_CASE("catalog objects round trip through JSON")
{
    const auto sl = cat::sl21();
    CHECK(superalgebra_from_json(parse_json(to_json(sl).dump())) == sl);
    CHECK(tensor2_from_json(parse_json(to_json(cat::r_f()).dump())) == cat::r_f());
    CHECK(cochain_from_json(parse_json(to_json(cat::delta_f()).dump())) == cat::delta_f());
    CHECK(linear_map_from_json(parse_json(to_json(cat::i2()).dump())) == cat::i2());
    CHECK(matrix_from_json(to_json(cat::supertrace().gram)) == cat::supertrace().gram);

    const Bialgebra b = bialgebra_from_json(to_json(cat::s_delta2()));
    CHECK(b.algebra == cat::s_delta2().algebra);
    CHECK(b.delta == cat::s_delta2().delta);

    const ManinTriple m = manin_triple_from_json(to_json(cat::manin_S()));
    CHECK(m.ambient == cat::manin_S().ambient);
    CHECK(m.form.gram == cat::manin_S().form.gram);
    CHECK(m.plus == cat::manin_S().plus);
    CHECK(m.minus == cat::manin_S().minus);

    const DoubleAlgebra d = build_double(cat::t_delta2());
    const DoubleAlgebra back = double_from_json(parse_json(to_json(d).dump(2)));
    CHECK(back.underlying == d.underlying);
    CHECK(back.delta == d.delta);
    CHECK(back.form.gram == d.form.gram);
    CHECK(back.canonical_r == d.canonical_r);
    CHECK(back.half == d.half);
}

TEST_CASE("every fixture serializes to text and back unchanged")
{
    for (const auto& f : fixtures()) {
        const Json again = parse_json(f.expected.dump());
        CHECK(again == f.expected);
        if (f.kind == "algebra")
            CHECK(to_json(superalgebra_from_json(again)) == f.expected);
        else if (f.kind == "tensor")
            CHECK(to_json(tensor2_from_json(again)) == f.expected);
        else if (f.kind == "cochain")
            CHECK(to_json(cochain_from_json(again)) == f.expected);
        else if (f.kind == "map")
            CHECK(to_json(linear_map_from_json(again)) == f.expected);
        else if (f.kind == "bialgebra")
            CHECK(to_json(bialgebra_from_json(again)) == f.expected);
        else if (f.kind == "manin_triple")
            CHECK(to_json(manin_triple_from_json(again)) == f.expected);
        else
            FAIL("unknown kind " << f.kind);
    }
    CHECK(find_fixture("paper.s3_1.delta_f"));
    CHECK_FALSE(find_fixture("nope"));
}

TEST_CASE("upper-triangular algebra input with num/den terms")
{
    const Json j = parse_json(R"({"basis": ["h","x","y1","y2"], "parities": [0,0,1,1],
        "brackets": [{"i":0,"j":1,"terms":[{"k":1,"num":-1,"den":1}]},
                     {"i":"h","j":"y1","terms":[{"k":"y1","num":-1}]},
                     {"i":1,"j":3,"terms":[{"k":2,"num":1}]},
                     {"i":2,"j":3,"terms":[{"k":1,"num":1}]},
                     {"i":3,"j":3,"terms":[{"k":0,"num":4,"den":2}]}]})");
    CHECK(superalgebra_from_json(j) == cat::s_algebra());
}

TEST_CASE("malformed input reports a location")
{
    try {
        parse_json("{\n  \"basis\": [1,\n");
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(superalgebra_from_json(parse_json(R"({"brackets": []})")), ParseError);
    CHECK_THROWS_AS(tensor2_from_json(parse_json(R"({"entries": [{"idx": [0], "c": "1"}]})"), cat::sl21_basis()),
                    ParseError);
    CHECK_THROWS_AS(tensor2_from_json(parse_json(R"({"entries": [{"idx": [0, 9], "c": "1"}]})"), cat::sl21_basis()),
                    ParseError);
    CHECK_THROWS_AS(basis_from_json(parse_json(R"({"labels": ["a"], "parities": [2]})")), ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidInput);
}

TEST_CASE("reports serialize with counterexamples")
{
    VerificationReport r;
    r.pass("a");
    r.fail("b", "x = 1");
    const Json j = to_json(r);
    CHECK(j["ok"] == false);
    CHECK(j["checks"][1]["counterexample"] == "x = 1");
    CHECK_FALSE(j["checks"][0].contains("counterexample"));
}
