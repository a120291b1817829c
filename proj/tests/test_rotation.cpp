#include <catch2/catch_amalgamated.hpp>

#include "onemap/rotation.hpp"

using namespace onemap;

namespace {

// planar rotation of K4 (tetrahedron): faces 123, 134, 142, 243
EmbeddedGraph k4_planar() {
    return embedded_from_neighbors(4, {{}, {2, 3, 4}, {3, 1, 4}, {1, 2, 4}, {2, 1, 3}});
}

} // namespace

TEST_CASE("embedded_from_neighbors validates") {
    CHECK_THROWS_AS(embedded_from_neighbors(2, {{}, {2}, {}}), GraphError); // one-sided
    CHECK_THROWS_AS(embedded_from_neighbors(2, {{}, {2, 2}, {1, 1}}), GraphError);
    CHECK_THROWS_AS(embedded_from_neighbors(2, {{}, {1}, {1}}), GraphError); // loop
    CHECK_THROWS_AS(embedded_from_neighbors(2, {{}, {3}, {1}}), GraphError); // range
    EmbeddedGraph g = embedded_from_neighbors(3, {{}, {2, 3}, {1, 3}, {1, 2}});
    CHECK(g.m() == 3);
    CHECK(g.neighbors_in_rotation(1) == std::vector<int>{2, 3});
}

TEST_CASE("face tracing on the tetrahedron") {
    EmbeddedGraph g = k4_planar();
    auto faces = trace_faces(g);
    REQUIRE(faces.size() == 4);
    for (const Face& f : faces) CHECK(f.length() == 3);
    CHECK(is_planar_rotation(g).accepted());
}

TEST_CASE("twisted rotation fails Euler") {
    // swap two entries at vertex 4: genus rises
    EmbeddedGraph g = embedded_from_neighbors(4, {{}, {2, 3, 4}, {3, 1, 4}, {1, 2, 4}, {1, 2, 3}});
    Certificate c = is_planar_rotation(g);
    CHECK_FALSE(c.accepted());
    REQUIRE_FALSE(c.violations.empty());
    CHECK(c.violations[0].first == "euler");
}

TEST_CASE("degenerate rotations") {
    EmbeddedGraph one = embedded_from_neighbors(1, {{}, {}});
    CHECK(is_planar_rotation(one).accepted());
    EmbeddedGraph two = embedded_from_neighbors(2, {{}, {}, {}});
    CHECK(is_planar_rotation(two).violations[0].first == "connected");
    EmbeddedGraph edge = embedded_from_neighbors(2, {{}, {2}, {1}});
    CHECK(is_planar_rotation(edge).accepted());
}

TEST_CASE("embedding signature is orientation-invariant") {
    EmbeddedGraph g = k4_planar();
    EmbeddedGraph r = g;
    for (auto& rot : r.rot) std::reverse(rot.begin(), rot.end());
    CHECK(embedding_signature(g) == embedding_signature(r));

    // a different embedding of the same graph signs differently: C4 drawn
    // planar vs with the rotation at 1 flipped (torus)
    EmbeddedGraph c4 = embedded_from_neighbors(4, {{}, {2, 4}, {1, 3}, {2, 4}, {3, 1}});
    EmbeddedGraph c4b = embedded_from_neighbors(4, {{}, {4, 2}, {1, 3}, {2, 4}, {3, 1}});
    CHECK(embedding_signature(c4) == embedding_signature(c4b)); // degree-2 flips are no-ops
}

TEST_CASE("next_half_edge walks the rotation") {
    EmbeddedGraph g = k4_planar();
    int h = g.half_edge(0, 1); // edge (1,2) leaving 1
    int steps = 0;
    int cur = h;
    do {
        cur = g.next_half_edge(cur);
        ++steps;
    } while (cur != h);
    CHECK(steps == 3); // triangle face
}
