#include <doctest.h>

#include "slicecert/shape.hpp"

using namespace slicecert;

TEST_CASE("shape parsing accepts well-formed literals") {
    Shape s = Shape::parse("2x3x2");
    CHECK(s.dims() == 3);
    CHECK(s.extent(0) == 2);
    CHECK(s.extent(1) == 3);
    CHECK(s.extent(2) == 2);
    CHECK(s.var_count() == 12);
    CHECK(s.str() == "2x3x2");
    CHECK(Shape::parse("2x3x2") == s);
    CHECK(Shape::parse("2x2") != s);
}

TEST_CASE("shape parsing rejects malformed literals") {
    CHECK_THROWS_AS(Shape::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Shape::parse("2"), std::invalid_argument);    // one direction
    CHECK_THROWS_AS(Shape::parse("1x2"), std::invalid_argument);  // extent < 2
    CHECK_THROWS_AS(Shape::parse("2x0"), std::invalid_argument);
    CHECK_THROWS_AS(Shape::parse("2xx2"), std::invalid_argument);
    CHECK_THROWS_AS(Shape::parse("2x2x"), std::invalid_argument);
    CHECK_THROWS_AS(Shape::parse("x2x2"), std::invalid_argument);
    CHECK_THROWS_AS(Shape::parse("2x-3"), std::invalid_argument);
    CHECK_THROWS_AS(Shape::parse("ax2"), std::invalid_argument);
}

TEST_CASE("variable ids enumerate the array in index order") {
    Shape s = Shape::parse("2x3");
    CHECK(s.var_count() == 6);
    CHECK(s.var_id(VarIndex{1, 1}) == 0);
    CHECK(s.var_id(VarIndex{1, 3}) == 2);
    CHECK(s.var_id(VarIndex{2, 1}) == 3);
    CHECK(s.var_of(4) == VarIndex{2, 2});
    CHECK(s.var_of(s.var_id(VarIndex{2, 3})) == VarIndex{2, 3});

    int seen = 0;
    s.for_each_index([&](const VarIndex& v) {
        CHECK(s.var_id(v) == seen);
        ++seen;
    });
    CHECK(seen == 6);
}

TEST_CASE("variable indices are 1-based and range-checked") {
    Shape s = Shape::parse("2x2");
    CHECK_THROWS_AS(s.var_id(VarIndex{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(s.var_id(VarIndex{1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(s.var_id(VarIndex{1}), std::invalid_argument);  // wrong arity
    CHECK(s.var_of(0).str() == "x[1,1]");
    CHECK(VarIndex{2, 1, 3}.str() == "x[2,1,3]");
}
