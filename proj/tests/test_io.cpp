#include <doctest.h>

#include <json.hpp>

#include "superschur/catalog.hpp"
#include "superschur/io.hpp"

using namespace superschur;
using nlohmann::json;

TEST_CASE("serialized catalog algebras round-trip bit-exactly") {
    for (const SuperAlgebra& a : {heisenberg_even(1, 1), heisenberg_odd(2), abelian(2, 2),
                                  nonabelian_11(NonAbelian11::solvable)}) {
        const auto doc = algebra_to_json(a, "roundtrip");
        const AlgebraFile back = parse_algebra_json(json::parse(doc.dump()));
        CHECK(back.algebra == a);
        CHECK(back.name == "roundtrip");
        // serialization is stable
        CHECK(algebra_to_json(back.algebra, "roundtrip").dump() == doc.dump());
    }
}

TEST_CASE("fractional coefficients survive the trip") {
    SuperAlgebra::Builder b({"e1", "e2", "e3"}, {});
    Vec v(3);
    v[2] = Rat(-3, 7);
    b.set_bracket(0, 1, v);
    const SuperAlgebra a = b.build();
    const AlgebraFile back = parse_algebra_json(json::parse(algebra_to_json(a, "q").dump()));
    CHECK(back.algebra == a);
    CHECK(back.algebra.basis_bracket(1, 0)[2] == Rat(3, 7));
}

TEST_CASE("double specification is rejected with both locations") {
    const json doc = json::parse(R"json({
        "even": ["a", "b", "c"],
        "brackets": [
            {"left": "a", "right": "b", "value": {"c": "1"}},
            {"left": "b", "right": "a", "value": {"c": "1"}}
        ]
    })json");
    try {
        parse_algebra_json(doc);
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        const std::string what = err.what();
        CHECK(what.find("brackets[2]") != std::string::npos);
        CHECK(what.find("brackets[1]") != std::string::npos);
    }
}

TEST_CASE("ideal and complement labels become subspaces") {
    const json doc = json::parse(R"json({
        "name": "H(1)",
        "even": ["x1", "x2", "z"],
        "brackets": [{"left": "x1", "right": "x2", "value": {"z": "1"}}],
        "ideal": ["z"],
        "complement": ["x1", "x2"]
    })json");
    const AlgebraFile file = parse_algebra_json(doc);
    CHECK(file.algebra == heisenberg_lie(1));
    REQUIRE(file.ideal.has_value());
    CHECK(file.ideal->dim() == Dims{1, 0});
    REQUIRE(file.complement.has_value());
    CHECK(file.complement->dim() == Dims{2, 0});
}

TEST_CASE("malformed input is reported as a parse error") {
    auto expect_parse_error = [](const char* text) {
        CHECK_THROWS_AS(parse_algebra_json(json::parse(text)), ParseError);
    };
    expect_parse_error(R"json({"even": ["a", "a"]})json");  // duplicate label
    expect_parse_error(R"json({"even": ["a"], "odd": ["a"]})json");
    expect_parse_error(R"json({"even": ["a"], "brackets": [{"left": "a"}]})json");
    expect_parse_error(R"json({"even": ["a"], "brackets": [
        {"left": "a", "right": "nope", "value": {}}]})json");
    expect_parse_error(R"json({"even": ["a", "b"], "brackets": [
        {"left": "a", "right": "b", "value": {"a": "1.5"}}]})json");
    expect_parse_error(R"json({"even": ["a", "b"], "brackets": [
        {"left": "a", "right": "b", "value": {"a": "1/0"}}]})json");
    expect_parse_error(R"json({"even": ["a"], "ideal": ["nope"]})json");
    expect_parse_error(R"json(["not", "an", "object"])json");

    CHECK_THROWS_AS(load_algebra_file("/nonexistent/path.json"), ParseError);
}

TEST_CASE("unspecified brackets default to zero") {
    const json doc = json::parse(R"json({"even": ["a", "b"], "odd": ["c"]})json");
    const AlgebraFile file = parse_algebra_json(doc);
    CHECK(file.algebra.is_abelian());
    CHECK(file.algebra.dims() == Dims{2, 1});
}
