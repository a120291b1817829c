#ifndef ONEMAP_TEST_HELPERS_HPP
#define ONEMAP_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "onemap/graph.hpp"
#include "onemap/rotation.hpp"

namespace onemap::testing {

// Seeded connected graph: random spanning tree plus extra edges.
inline SimpleGraph random_connected_graph(int n, int extra, std::mt19937& rng) {
    std::vector<Edge> edges;
    for (int v = 2; v <= n; ++v) {
        std::uniform_int_distribution<int> pick(1, v - 1);
        edges.push_back(make_edge(pick(rng), v));
    }
    SimpleGraph cur = build_graph(n, edges);
    std::vector<Edge> pool = cur.non_edges();
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int i = 0; i < extra && i < static_cast<int>(pool.size()); ++i)
        edges.push_back(pool[static_cast<size_t>(i)]);
    return build_graph(n, edges);
}

// Seeded 2-connected graph: cycle plus random chords.
inline SimpleGraph random_biconnected_graph(int n, int chords, std::mt19937& rng) {
    std::vector<Edge> edges;
    for (int v = 1; v <= n; ++v) edges.push_back(make_edge(v, v % n + 1));
    SimpleGraph cyc = build_graph(n, edges);
    std::vector<Edge> pool = cyc.non_edges();
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int i = 0; i < chords && i < static_cast<int>(pool.size()); ++i)
        edges.push_back(pool[static_cast<size_t>(i)]);
    return build_graph(n, edges);
}

// All labeled graphs on n vertices (edge subsets of K_n).
template <class F>
inline void for_each_labeled_graph(int n, F&& visit) {
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
    for (unsigned long long mask = 0; mask < (1ull << all.size()); ++mask) {
        std::vector<Edge> edges;
        for (size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) edges.push_back(all[i]);
        visit(build_graph(n, edges));
    }
}

inline SimpleGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return build_graph(n, edges);
}

// Random rotation system of g.
inline EmbeddedGraph random_rotation(const SimpleGraph& g, std::mt19937& rng) {
    EmbeddedGraph r;
    r.n = g.n;
    r.edge_list = g.edges;
    r.rot.assign(static_cast<size_t>(g.n) + 1, {});
    for (int eid = 0; eid < g.m(); ++eid) {
        r.rot[static_cast<size_t>(g.edges[static_cast<size_t>(eid)].first)].push_back(eid);
        r.rot[static_cast<size_t>(g.edges[static_cast<size_t>(eid)].second)].push_back(eid);
    }
    for (int v = 1; v <= g.n; ++v)
        std::shuffle(r.rot[static_cast<size_t>(v)].begin(),
                     r.rot[static_cast<size_t>(v)].end(), rng);
    return r;
}

} // namespace onemap::testing

#endif
