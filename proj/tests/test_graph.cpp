#include <catch2/catch_amalgamated.hpp>

#include "onemap/fraction.hpp"
#include "onemap/graph.hpp"

#include "helpers.hpp"

using namespace onemap;
using onemap::testing::complete_graph;

TEST_CASE("build_graph validates input") {
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{1, 4}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{1, 2}, {2, 1}}), GraphError);
    SimpleGraph g = build_graph(3, {{2, 1}, {3, 2}});
    CHECK(g.m() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.non_edges() == std::vector<Edge>{{1, 3}});
}

TEST_CASE("fraction arithmetic is exact") {
    Fraction b = Fraction(5, 2) * Fraction(4) + Fraction(-4);
    CHECK(b == Fraction(6));
    CHECK(Fraction(5, 2) * Fraction(5) + Fraction(-4) == Fraction(17, 2));
    CHECK(Fraction(1, 3) < Fraction(1, 2));
    CHECK(Fraction(2, 4) == Fraction(1, 2));
    CHECK(Fraction(17, 2).str() == "17/2");
}

TEST_CASE("connectivity levels") {
    CHECK(connectivity_level(build_graph(4, {{1, 2}, {3, 4}})) == 0);
    CHECK(connectivity_level(build_graph(4, {{1, 2}, {2, 3}, {3, 4}})) == 1);
    CHECK(connectivity_level(build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})) == 2);
    CHECK(connectivity_level(complete_graph(4)) == 3);
    CHECK(is_connected(build_graph(1, {})));
    CHECK_FALSE(is_connected(build_graph(2, {})));
}

TEST_CASE("separation pairs of two triangles sharing an edge") {
    // triangles 1-2-3 and 1-2-4 share edge (1,2)
    SimpleGraph g = build_graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
    auto pairs = separation_pairs(g);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].u == 1);
    CHECK(pairs[0].v == 2);
    REQUIRE(pairs[0].components.size() == 2);
    CHECK(pairs[0].components[0] == std::vector<int>{3});
    CHECK(pairs[0].components[1] == std::vector<int>{4});
    CHECK(separation_pairs(complete_graph(4)).empty());
}

TEST_CASE("density bounds") {
    SimpleGraph k7 = complete_graph(7);
    auto d = check_density(k7, DensityClass::OnePlanar);
    CHECK_FALSE(d.pass); // 21 > 4*7-8 = 20
    CHECK(d.bound == Fraction(20));
    CHECK(d.slack == Fraction(1));
    CHECK(check_density(complete_graph(6), DensityClass::OnePlanar).pass); // 15 <= 16
    CHECK_FALSE(check_density(complete_graph(5), DensityClass::Planar).pass);
    CHECK(check_density(complete_graph(4), DensityClass::OuterOnePlanar).pass); // 6 = 6
    CHECK_THROWS_AS(check_density(build_graph(2, {{1, 2}}), DensityClass::Planar),
                    GraphError);
}
