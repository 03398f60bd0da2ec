/**
 * @file test_knotio.cpp
 * @brief PD parsing, Seifert pipeline, and knot-table tests.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "floerglue/knotio/laurent.hpp"
#include "floerglue/knotio/pd.hpp"
#include "floerglue/knotio/seifert.hpp"
#include "floerglue/knotio/table.hpp"

using namespace floerglue::knotio;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long long>> cs) {
    LaurentPoly p;
    for (auto [e, c] : cs) p.coeffs[e] = c;
    return p;
}

const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

}  // namespace

TEST_CASE("parse_pd accepts the standard trefoil code") {
    Diagram d = parse_pd(kTrefoilPd);
    CHECK(d.crossings.size() == 3);
    CHECK(d.edge_count() == 6);
    CHECK(d.crossings[0] == std::array<int, 4>{1, 4, 2, 5});
}

TEST_CASE("parse_pd rejects empty text") {
    CHECK_THROWS_AS(parse_pd(""), SyntaxError);
    CHECK_THROWS_AS(parse_pd("   \n\t "), SyntaxError);
    try {
        parse_pd("");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 0);
        CHECK(std::string(e.what()).find("byte 0") != std::string::npos);
    }
}

TEST_CASE("parse_pd reports the byte offset of malformed tokens") {
    try {
        parse_pd("X(1,4,2,5) Y(3,6,4,1)");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 11);
    }
    try {
        parse_pd("X(1,4,2,5) X(3,6,4,1");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 20);  // position where ')' was expected
    }
    CHECK_THROWS_AS(parse_pd("X(1, 4,2,5)"), SyntaxError);
    CHECK_THROWS_AS(parse_pd("X(1,4,2,5)X(3,6,4,1)"), SyntaxError);
}

TEST_CASE("parse_pd rejects bad edge multisets") {
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), EdgeCountError);
    CHECK_THROWS_AS(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,4)"),
                    EdgeCountError);
    CHECK_THROWS_AS(parse_pd("X(1,4,2,7) X(3,6,4,1) X(5,2,6,3)"),
                    EdgeCountError);
}

TEST_CASE("parse_pd rejects split diagrams") {
    CHECK_THROWS_AS(
        parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) "
                 "X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)"),
        Disconnected);
}

TEST_CASE("serialize then parse is the identity on stored diagrams") {
    for (const auto& [name, texts] : stored_diagrams()) {
        for (const auto& text : texts) {
            if (text.empty()) continue;  // zero-crossing unknot has no text form
            Diagram d = parse_pd(text);
            CHECK(serialize_pd(d) == text);
            CHECK(parse_pd(serialize_pd(d)) == d);
            Diagram dj = diagram_from_json(diagram_to_json(d));
            CHECK(dj == d);
        }
    }
    Diagram empty;
    CHECK(diagram_from_json(diagram_to_json(empty)) == empty);
}

TEST_CASE("seifert_matrix on the trefoil gives a genus-1 surface") {
    SeifertData s = seifert_matrix(parse_pd(kTrefoilPd));
    REQUIRE(s.matrix.size() == 2);
    CHECK(s.genus_of_surface == 1);
    // det(V - V^T) = (V01 - V10)^2 for 2x2; it must be 1.
    long long w01 = s.matrix[0][1] - s.matrix[1][0];
    CHECK((w01 == 1 || w01 == -1));
    CHECK(alexander_polynomial(s) == poly({{2, 1}, {0, -1}, {-2, 1}}));
    CHECK(signature(s) == -2);
}

TEST_CASE("seifert_matrix handles the zero-crossing unknot sentinel") {
    SeifertData s = seifert_matrix(Diagram{});
    CHECK(s.matrix.empty());
    CHECK(s.genus_of_surface == 0);
    CHECK(alexander_polynomial(s) == poly({{0, 1}}));
    CHECK(signature(s) == 0);
}

TEST_CASE("seifert_matrix on the figure-eight matches invariant oracles") {
    SeifertData s = seifert_matrix(parse_pd(stored_diagrams().at("4_1")[0]));
    REQUIRE(s.matrix.size() == 2);
    CHECK(s.genus_of_surface == 1);
    CHECK(alexander_polynomial(s) == poly({{2, -1}, {0, 3}, {-2, -1}}));
    CHECK(alexander_polynomial(s).pretty() == "-t + 3 - t^-1");
    CHECK(signature(s) == 0);
}

TEST_CASE("seifert_matrix rejects links and non-braid-position input") {
    // Standard Hopf-link code: two curves, each edge pair (a,c)/(b,d) united.
    CHECK_THROWS_AS(seifert_matrix(parse_pd("X(1,3,2,4) X(3,1,4,2)")), NotKnot);
    // Rotating one crossing breaks the a -> a+1 under-strand convention.
    CHECK_THROWS_AS(seifert_matrix(parse_pd("X(2,5,1,4) X(3,6,4,1) X(5,2,6,3)")),
                    UnsupportedDiagram);
}

TEST_CASE("alexander_polynomial on literal Seifert matrices") {
    SeifertData right{{{-1, 1}, {0, -1}}, 1};
    CHECK(alexander_polynomial(right) == poly({{2, 1}, {0, -1}, {-2, 1}}));
    CHECK(alexander_polynomial(right).pretty() == "t - 1 + t^-1");
    SeifertData left{{{1, 1}, {0, 1}}, 1};
    CHECK(alexander_polynomial(left) == poly({{2, 1}, {0, -1}, {-2, 1}}));
    SeifertData empty{};
    CHECK(alexander_polynomial(empty) == poly({{0, 1}}));
    SeifertData split{{{1, 0}, {0, 1}}, 1};
    CHECK_THROWS_AS(alexander_polynomial(split), NormalizationImpossible);
}

TEST_CASE("signature on literal Seifert matrices") {
    CHECK(signature(SeifertData{{{-1, 1}, {0, -1}}, 1}) == -2);
    CHECK(signature(SeifertData{{{1, 1}, {0, 1}}, 1}) == 2);
    CHECK(signature(SeifertData{}) == 0);
    // Hyperbolic pairing: V + V^T = [[0,1],[1,0]] has signature 0.
    CHECK(signature(SeifertData{{{0, 1}, {0, 0}}, 1}) == 0);
}

TEST_CASE("knot_table regenerates the expected invariants from PD codes") {
    const std::map<std::string, std::pair<LaurentPoly, long long>> expected = {
        {"unknot", {poly({{0, 1}}), 0}},
        {"3_1", {poly({{2, 1}, {0, -1}, {-2, 1}}), -2}},
        {"4_1", {poly({{2, -1}, {0, 3}, {-2, -1}}), 0}},
        {"5_1", {poly({{4, 1}, {2, -1}, {0, 1}, {-2, -1}, {-4, 1}}), -4}},
        {"5_2", {poly({{2, 2}, {0, -3}, {-2, 2}}), -2}},
        {"6_1", {poly({{2, -2}, {0, 5}, {-2, -2}}), 0}},
        {"6_2", {poly({{4, -1}, {2, 3}, {0, -3}, {-2, 3}, {-4, -1}}), -2}},
        {"6_3", {poly({{4, 1}, {2, -3}, {0, 5}, {-2, -3}, {-4, 1}}), 0}},
        {"7_1",
         {poly({{6, 1}, {4, -1}, {2, 1}, {0, -1}, {-2, 1}, {-4, -1}, {-6, 1}}),
          -6}},
        {"7_2", {poly({{2, 3}, {0, -5}, {-2, 3}}), -2}},
        {"7_4", {poly({{2, 4}, {0, -7}, {-2, 4}}), -2}},
        {"8_1", {poly({{2, -3}, {0, 7}, {-2, -3}}), 0}},
        {"9_1",
         {poly({{8, 1},
                {6, -1},
                {4, 1},
                {2, -1},
                {0, 1},
                {-2, -1},
                {-4, 1},
                {-6, -1},
                {-8, 1}}),
          -8}},
        {"T(2,11)",
         {poly({{10, 1},
                {8, -1},
                {6, 1},
                {4, -1},
                {2, 1},
                {0, -1},
                {-2, 1},
                {-4, -1},
                {-6, 1},
                {-8, -1},
                {-10, 1}}),
          -10}},
    };
    const auto& table = knot_table();
    REQUIRE(table.size() == expected.size());
    for (const auto& k : table) {
        REQUIRE(expected.count(k.name));
        const auto& [alex, sig] = expected.at(k.name);
        CHECK(k.alexander == alex);
        CHECK(k.signature == sig);
        CHECK(k.genus() == alex.top() / 2);
    }
}

TEST_CASE("table invariants: symmetry, value at 1, even signature") {
    for (const auto& k : knot_table()) {
        CHECK(k.alexander.symmetric());
        CHECK(k.alexander.at_one() == 1);
        CHECK(k.signature % 2 == 0);
        CHECK(k.genus() == k.alexander.top() / 2);
    }
}

TEST_CASE("lookup_knot resolves names and torus aliases") {
    CHECK(lookup_knot("3_1").signature == -2);
    CHECK(lookup_knot("3_1").alexander.pretty() == "t - 1 + t^-1");
    CHECK(lookup_knot("3_1").genus() == 1);
    CHECK(lookup_knot("unknot").alexander == poly({{0, 1}}));
    CHECK(lookup_knot("unknot").signature == 0);
    CHECK(lookup_knot("unknot").genus() == 0);
    const KnotData& t25 = lookup_knot("T(2,5)");
    CHECK(t25.alexander == poly({{4, 1}, {2, -1}, {0, 1}, {-2, -1}, {-4, 1}}));
    CHECK(t25.signature == -4);
    CHECK(t25.name == "5_1");
    CHECK(lookup_knot("T(2,3)").name == "3_1");
    CHECK(lookup_knot("T(2,7)").name == "7_1");
    CHECK(lookup_knot("T(2,9)").name == "9_1");
    CHECK(lookup_knot("T(2,11)").genus() == 5);
    CHECK_THROWS_AS(lookup_knot("8_19"), UnknownKnot);
}

TEST_CASE("alternative diagrams yield the same invariants") {
    for (const std::string name : {"3_1", "4_1"}) {
        const auto& texts = stored_diagrams().at(name);
        REQUIRE(texts.size() == 2);
        KnotData main = knot_from_diagram(name, parse_pd(texts[0]));
        KnotData alt = knot_from_diagram(name, parse_pd(texts[1]));
        CHECK(main.alexander == alt.alexander);
        CHECK(main.signature == alt.signature);
    }
}

TEST_CASE("product_knot multiplies Delta and adds sigma") {
    KnotData granny = product_knot(lookup_knot("3_1"), lookup_knot("3_1"));
    CHECK(granny.name == "3_1#3_1");
    CHECK(granny.alexander ==
          poly({{4, 1}, {2, -2}, {0, 3}, {-2, -2}, {-4, 1}}));
    CHECK(granny.signature == -4);
    CHECK(granny.genus() == 2);
    KnotData mixed = product_knot(lookup_knot("3_1"), lookup_knot("4_1"));
    CHECK(mixed.alexander.at_one() == 1);
    CHECK(mixed.alexander.symmetric());
    CHECK(mixed.signature == -2);
}

TEST_CASE("knot JSON carries name, polynomial, signature, genus") {
    auto j = knot_to_json(lookup_knot("3_1"));
    CHECK(j.at("name") == "3_1");
    CHECK(j.at("signature") == -2);
    CHECK(j.at("genus") == 1);
    CHECK(j.at("alexander_pretty") == "t - 1 + t^-1");
    CHECK(j.at("alexander").size() == 3);
}

TEST_CASE("normalize_alexander flips sign and rejects asymmetric input") {
    CHECK(normalize_alexander({{0, -3}, {1, 5}, {2, -3}}) ==
          poly({{2, 3}, {0, -5}, {-2, 3}}));
    CHECK_THROWS_AS(normalize_alexander({}), NormalizationImpossible);
    CHECK_THROWS_AS(normalize_alexander({{0, 1}, {1, 2}}),
                    NormalizationImpossible);
    CHECK_THROWS_AS(normalize_alexander({{0, 1}, {1, -2}, {2, 1}}),
                    NormalizationImpossible);
}
