#include <catch2/catch_amalgamated.hpp>

#include "onemap/generators.hpp"
#include "onemap/io.hpp"
#include "onemap/recognition.hpp"

using namespace onemap;

TEST_CASE("graph fixtures") {
    CHECK(fixture_k5().m() == 10);
    CHECK(fixture_k5_minus_e().m() == 9);
    CHECK_FALSE(fixture_k5_minus_e().has_edge(4, 5));
    SimpleGraph grid = fixture_grid(3, 3);
    CHECK(grid.n == 9);
    CHECK(grid.m() == 12);
    std::vector<std::pair<int, int>> ge(grid.edges.begin(), grid.edges.end());
    CHECK(is_planar_graph_bm(grid.n, ge));
}

TEST_CASE("sparse-ic fixture: 3n-5 edges, IC-planar") {
    CHECK_THROWS_AS(fixture_sparse_ic(4), GraphError);
    for (int n : {5, 6, 7}) {
        SimpleGraph g = fixture_sparse_ic(n);
        CHECK(g.m() == 3 * n - 5);
        // one edge over the planar bound, so the oracle settles at a single
        // crossing, which is independent by itself
        auto r = oracle_1planar(g);
        REQUIRE(r.cert.accepted());
        CHECK(r.embedding->dummy_count() == 1);
        CHECK(is_ic(*r.embedding));
    }
    // exhaustive cross-check at the small end
    bool ic_found = false;
    for_each_embedding(fixture_sparse_ic(5), SearchBudget{},
                       [&](const OnePlanarEmbedding& e) {
                           if (is_ic(e)) ic_found = true;
                           return ic_found;
                       });
    CHECK(ic_found);
}

TEST_CASE("optimal 1-planar generator") {
    CHECK_THROWS_AS(gen_optimal_1planar(7), GraphError);
    CHECK_THROWS_AS(gen_optimal_1planar(9), GraphError);
    try {
        gen_optimal_1planar(9);
    } catch (const GraphError& e) {
        CHECK(std::string(e.what()).find("n=9") != std::string::npos);
    }
    for (int n : {8, 10, 11, 12}) {
        OnePlanarEmbedding e = gen_optimal_1planar_embedding(n);
        CHECK(e.g.m() == 4 * n - 8);
        CHECK(validate_1planar(e).accepted());
    }
    // oracle confirms 1-planarity at the small end
    CHECK(oracle_1planar(gen_optimal_1planar(8)).cert.accepted());
}

TEST_CASE("outer optimal generator") {
    CHECK_THROWS_AS(gen_outer_optimal(5), GraphError);
    SimpleGraph k4 = gen_outer_optimal(4);
    CHECK(k4.m() == 6);
    CHECK(k4.n == 4);
    CHECK(k4.non_edges().empty()); // it is K4
    CHECK(outer_1planar_suite(k4, OuterVariant::Optimal).accepted());
    for (int n : {6, 8, 10}) {
        SimpleGraph g = gen_outer_optimal(n);
        CHECK(2 * g.m() == 5 * n - 8);
        CHECK(outer_1planar_suite(g, OuterVariant::Optimal).accepted());
    }
}

TEST_CASE("random embeddings: valid, deterministic, parameter-faithful") {
    for (unsigned seed : {1u, 7u, 99u}) {
        for (int n : {4, 6, 8}) {
            for (int k = 0; k <= std::min(2, n - 3); ++k) {
                OnePlanarEmbedding e = random_1planar_embedding(n, k, seed);
                CHECK(validate_1planar(e).accepted());
                CHECK(e.g.n == n);
                CHECK(e.dummy_count() == k);
                OnePlanarEmbedding f = random_1planar_embedding(n, k, seed);
                CHECK(serialize_emb(e) == serialize_emb(f)); // identical bytes
            }
        }
    }
    OnePlanarEmbedding a = random_1planar_embedding(6, 1, 1);
    OnePlanarEmbedding b = random_1planar_embedding(6, 1, 2);
    CHECK(serialize_emb(a) != serialize_emb(b)); // seeds matter
    CHECK_THROWS_AS(random_1planar_embedding(4, 5, 1), GraphError);
}

TEST_CASE("fixtures are byte-stable") {
    CHECK(serialize_emb(fixture_kite()) == serialize_emb(fixture_kite()));
    CHECK(serialize_map(fixture_pizza_witness()) == serialize_map(fixture_pizza_witness()));
    CHECK(serialize_gr(fixture_pearls_chain()) == serialize_gr(fixture_pearls_chain()));
}

TEST_CASE("pearls chain graph sanity") {
    SimpleGraph g = fixture_pearls_chain();
    CHECK(connectivity_level(g) >= 2);
    CHECK(oracle_1planar(g).cert.accepted());
}
