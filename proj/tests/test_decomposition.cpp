#include <catch2/catch_amalgamated.hpp>

#include "onemap/decomposition.hpp"
#include "onemap/generators.hpp"

#include "helpers.hpp"

using namespace onemap;
using namespace onemap::testing;

TEST_CASE("decompose two triangles sharing an edge") {
    SimpleGraph g = build_graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
    auto decs = decompose(g);
    REQUIRE(decs.size() == 1);
    CHECK(decs[0].pair.u == 1);
    CHECK(decs[0].pair.v == 2);
    REQUIRE(decs[0].components.size() == 2);
    for (const Component& c : decs[0].components) {
        CHECK(c.graph.n == 3);
        CHECK(c.graph.m() == 3); // triangle, marked edge already present
        CHECK(c.marked_original == make_edge(1, 2));
        CHECK(c.graph.has_edge(c.marked.first, c.marked.second));
    }
    CHECK_THROWS_AS(decompose(build_graph(3, {{1, 2}, {2, 3}})), GraphError);
}

TEST_CASE("decompose adds the marked edge when absent") {
    // 4-cycle: pairs of opposite vertices separate it, (1,3) and (2,4) not edges
    SimpleGraph c4 = build_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    auto decs = decompose(c4);
    REQUIRE(decs.size() == 2);
    for (const auto& d : decs)
        for (const Component& c : d.components) {
            CHECK(c.graph.n == 3);
            CHECK(c.graph.m() == 3);
        }
}

TEST_CASE("component profiles of the figure fixtures") {
    // W-configuration graph: profiles closed
    OnePlanarEmbedding w = fixture_w_config();
    Component cw{w.g, {0, 1, 2, 3, 4, 5, 6}, make_edge(1, 2), make_edge(1, 2)};
    ComponentProfile pw = profile_component(cw);
    CHECK(pw.one_planar == Verdict::Accept);
    CHECK(pw.admits_closed);

    OnePlanarEmbedding b = fixture_b_config();
    Component cb{b.g, {0, 1, 2, 3, 4}, make_edge(1, 2), make_edge(1, 2)};
    ComponentProfile pb = profile_component(cb);
    CHECK(pb.one_planar == Verdict::Accept);
    CHECK(pb.admits_one_sided);
}

TEST_CASE("pearls chain decomposes into the five pictured components") {
    SimpleGraph g = fixture_pearls_chain();
    auto decs = decompose(g);
    REQUIRE_FALSE(decs.empty());
    const Decomposition* at12 = nullptr;
    for (const auto& d : decs)
        if (d.pair.u == 1 && d.pair.v == 2) at12 = &d;
    REQUIRE(at12 != nullptr);
    REQUIRE(at12->components.size() == 5);
    int closed = 0, one_sided = 0, two_sided_only = 0;
    for (const Component& c : at12->components) {
        ComponentProfile p = profile_component(c);
        REQUIRE(p.one_planar == Verdict::Accept);
        REQUIRE_FALSE(p.indeterminate);
        if (p.admits_closed)
            ++closed;
        else if (p.admits_one_sided)
            ++one_sided;
        else
            ++two_sided_only;
    }
    CHECK(closed == 2);
    CHECK(one_sided == 1);
    CHECK(two_sided_only == 2);
}

TEST_CASE("contact classification agrees with the embedding-side one") {
    for (const OnePlanarEmbedding& e : {fixture_w_config(), fixture_b_config(),
                                        fixture_tetrahedron()}) {
        Edge ab = make_edge(1, 2);
        CHECK(classify_by_contacts(e, ab) == classify_open_closed(e, ab));
    }
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        OnePlanarEmbedding e = random_1planar_embedding(6, 1, rng());
        for (const Edge& ab : e.g.edges) {
            if (e.edge_is_crossed(ab)) continue;
            CHECK(classify_by_contacts(e, ab) == classify_open_closed(e, ab));
        }
    }
}

TEST_CASE("greedy count condition matches the exhaustive selection") {
    std::vector<ComponentProfile> ps(3);
    ps[0].one_planar = Verdict::Accept;
    ps[0].admits_planar_e = ps[0].admits_closed = true;
    ps[1] = ps[0];
    ps[1].admits_closed = false;
    ps[1].admits_two_sided = true;
    ps[2] = ps[1];
    CHECK(reduce_plane_maximal(ps).accepted() == plane_maximal_selection_exists(ps));
    ps[2].admits_two_sided = false;
    ps[2].admits_one_sided = true;
    CHECK(reduce_plane_maximal(ps).accepted() == plane_maximal_selection_exists(ps));
    ps[0].admits_closed = false;
    ps[0].admits_two_sided = true;
    CHECK(reduce_plane_maximal(ps).accepted() == plane_maximal_selection_exists(ps));
}

TEST_CASE("lemma pipeline matches direct recognizers on K5 minus e") {
    SimpleGraph g = fixture_k5_minus_e();
    CHECK(lemma_plane_maximal(g).verdict ==
          is_plane_maximal_1planar(g).cert.verdict);
    CHECK(lemma_planar_maximal(g).verdict ==
          is_planar_maximal_1planar(g).cert.verdict);
}

TEST_CASE("lemma pipeline on random biconnected graphs") {
    std::mt19937 rng(5);
    int done = 0;
    for (int trial = 0; trial < 40 && done < 8; ++trial) {
        SimpleGraph g = random_biconnected_graph(5 + static_cast<int>(rng() % 2),
                                                 static_cast<int>(rng() % 4), rng);
        if (separation_pairs(g).empty()) continue;
        Certificate lem = lemma_plane_maximal(g);
        Certificate dir = is_plane_maximal_1planar(g).cert;
        if (lem.verdict == Verdict::Indeterminate ||
            dir.verdict == Verdict::Indeterminate)
            continue;
        CHECK(lem.verdict == dir.verdict);
        Certificate lem2 = lemma_planar_maximal(g);
        Certificate dir2 = is_planar_maximal_1planar(g).cert;
        if (lem2.verdict != Verdict::Indeterminate &&
            dir2.verdict != Verdict::Indeterminate)
            CHECK(lem2.verdict == dir2.verdict);
        ++done;
    }
    CHECK(done > 0);
}
