#include <doctest.h>

#include "cohomlab/json_io.hpp"

using namespace cohomlab;

TEST_CASE("class functions round trip through json") {
    ClassFunction f = induce_trivial_from_transposition(5);
    json j = class_function_to_json(f);
    CHECK(j.at("m") == 5);
    CHECK(j.at("values").at("[1,1,1,1,1]") == 60);
    CHECK(class_function_from_json(j) == f);

    ClassFunction q(3);
    q.at(Partition({2, 1})) = Rational(1, 2);
    json jq = class_function_to_json(q);
    CHECK(jq.at("values").at("[2,1]") == "1/2");
    CHECK(class_function_from_json(jq) == q);
}

TEST_CASE("integers exceeding 64 bits serialize as strings") {
    Integer big = factorial(25);
    json j = integer_to_json(big);
    CHECK(j.is_string());
    CHECK(integer_from_json(j) == big);
    CHECK(integer_to_json(Integer(42)) == 42);
    CHECK(integer_from_json(json(-7)) == -7);
}

TEST_CASE("graded character json carries the schema fields") {
    GradedCharacter gc = shared_lab().graded(3, Parity::odd, View::canonical);
    json j = graded_character_to_json(gc);
    CHECK(j.at("n") == 3);
    CHECK(j.at("parity") == "odd");
    CHECK(j.at("view") == "canonical");
    REQUIRE(j.at("degrees").size() == 3);
    CHECK(j.at("degrees")[1].at("k") == 1);
    CHECK(j.at("degrees")[1].at("irreducibles")[0].at("partition") == json::array({2, 1}));
    CHECK(j.at("degrees")[1].at("irreducibles")[0].at("multiplicity") == 1);
    // emission is deterministic
    CHECK(graded_character_to_json(gc).dump() == j.dump());
}

TEST_CASE("element json mirrors the presentation order") {
    AlgebraElement x = antisymmetrizer(4);
    json j = element_to_json(x);
    CHECK(j.at("n") == 4);
    CHECK(j.at("parity") == "odd");
    REQUIRE(j.at("terms").size() == 3);
    CHECK(j.at("terms")[2].at("monomial") == json::array({{1, 4}, {2, 3}}));
    CHECK(j.at("terms")[2].at("coefficient") == 8);
}

TEST_CASE("matrix export is dense integer rows") {
    ActionMatrix m = action_matrix(Permutation::transposition(1, 3, 1, 2), 3, 1, Parity::odd);
    json j = matrix_to_json(m);
    REQUIRE(j.size() == 3);
    CHECK(j[0] == json::array({-1, 0, 0}));
    CHECK(j[1] == json::array({0, 0, 1}));
    CHECK(j[2] == json::array({0, 1, 0}));
}
