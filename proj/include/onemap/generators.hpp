#ifndef ONEMAP_GENERATORS_HPP
#define ONEMAP_GENERATORS_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "onemap/embedding.hpp"
#include "onemap/graph.hpp"
#include "onemap/planarity.hpp"
#include "onemap/recognition.hpp"
#include "onemap/rotation.hpp"
#include "onemap/witness.hpp"

namespace onemap {

// --- fixtures ---------------------------------------------------------------

inline SimpleGraph fixture_k5() {
    std::vector<Edge> es;
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) es.push_back({u, v});
    return build_graph(5, es);
}

inline SimpleGraph fixture_k5_minus_e() {
    std::vector<Edge> es;
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v)
            if (!(u == 4 && v == 5)) es.push_back({u, v});
    return build_graph(5, es);
}

inline SimpleGraph fixture_grid(int rows, int cols) {
    if (rows < 2 || cols < 2) throw GraphError("grid requires rows, cols >= 2");
    auto id = [&](int r, int c) { return r * cols + c + 1; };
    std::vector<Edge> es;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.push_back(make_edge(id(r, c), id(r, c + 1)));
            if (r + 1 < rows) es.push_back(make_edge(id(r, c), id(r + 1, c)));
        }
    return build_graph(rows * cols, es);
}

// K4 drawn planar (rice-ball side).
inline OnePlanarEmbedding fixture_tetrahedron() {
    SimpleGraph g = build_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    OnePlanarEmbedding e;
    e.g = g;
    e.plan = *planar_embedding_bm(g.n, g.edges);
    return e;
}

// K4 drawn as a kite: convex position 1,2,3,4, diagonals (1,3)x(2,4) cross.
inline OnePlanarEmbedding fixture_kite() {
    SimpleGraph g = build_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    std::vector<int> order{1, 2, 3, 4};
    std::vector<int> pos{0, 0, 1, 2, 3};
    return detail::outer_embedding(g, order, pos);
}

inline BipartiteMapWitness fixture_riceball_witness() {
    return embedding_to_witness(fixture_tetrahedron());
}

inline BipartiteMapWitness fixture_pizza_witness() {
    return embedding_to_witness(fixture_kite());
}

namespace detail {

// First enumerated embedding matching a predicate; fixtures found by search
// stay deterministic because enumeration order is fixed.
template <class Pred>
inline OnePlanarEmbedding find_embedding(const SimpleGraph& g, Pred&& pred,
                                         const char* what) {
    std::optional<OnePlanarEmbedding> found;
    SearchBudget budget;
    for_each_embedding(g, budget, [&](const OnePlanarEmbedding& e) {
        if (pred(e)) {
            found = e;
            return true;
        }
        return false;
    });
    if (!found) throw std::logic_error(std::string("fixture search failed: ") + what);
    return *found;
}

} // namespace detail

// Two nested crossings seal both sides of (1,2); vertices 3..6 end up in
// the annulus between them, so no third vertex touches the merged face.
// (With only two inner vertices the double crossing has no planar
// rotation system, hence the four distinct tips.)
inline OnePlanarEmbedding fixture_w_config() {
    SimpleGraph g = build_graph(6, {{1, 2}, {1, 3}, {2, 4}, {1, 5}, {2, 6}});
    return detail::find_embedding(
        g,
        [&](const OnePlanarEmbedding& e) {
            return e.crossings.size() == 2 && !e.edge_is_crossed({1, 2}) &&
                   classify_open_closed(e, {1, 2}) == OpenClosed::Closed;
        },
        "W-configuration");
}

// One crossing caps one side of (1,2); the other side stays open.
inline OnePlanarEmbedding fixture_b_config() {
    SimpleGraph g = build_graph(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    return detail::find_embedding(
        g,
        [&](const OnePlanarEmbedding& e) {
            return e.crossings.size() == 1 && !e.edge_is_crossed({1, 2}) &&
                   classify_open_closed(e, {1, 2}) == OpenClosed::OpenOneSided;
        },
        "B-configuration");
}

// Separation pair {1,2} with five pearls: a B-configuration component, two
// closed (W-style, four tips joined by a path) components and two planar
// components.
inline SimpleGraph fixture_pearls_chain() {
    std::vector<Edge> es{{1, 2},
                         {1, 3}, {3, 4}, {4, 2},                        // G1: one-sided open
                         {1, 5}, {2, 6}, {1, 7}, {2, 8},                // G2: closed (W)
                         {5, 6}, {6, 7}, {7, 8},
                         {1, 9}, {2, 9},                                // G3: open planar
                         {1, 10}, {2, 11}, {1, 12}, {2, 13},            // G4: closed (W)
                         {10, 11}, {11, 12}, {12, 13},
                         {1, 14}, {2, 14}};                             // G5: open planar
    return build_graph(14, es);
}

// Stacked (Apollonian) triangulation plus one crossing pair: a maximal
// IC-planar graph with 3n-5 edges.
inline SimpleGraph fixture_sparse_ic(int n) {
    if (n < 5) throw GraphError("sparse-ic requires n >= 5");
    std::vector<Edge> es{{1, 2}, {1, 3}, {2, 3}};
    for (int v = 4; v <= n; ++v) { // stack into face (1,2,v-1)
        es.push_back({1, v});
        es.push_back({2, v});
        es.push_back(make_edge(v - 1, v));
    }
    es.push_back(make_edge(3, n)); // crosses (1,2)
    return build_graph(n, es);
}

// --- parametric families -----------------------------------------------------

namespace detail {

// Pseudo-double-wheel quadrangulation: even cycle c_1..c_m, inner pole
// adjacent to odd positions, outer pole to even positions. For odd n the
// inner pole of the (n-1)-vertex wheel is split along a quadrilateral.
inline std::pair<int, std::vector<Edge>> quadrangulation(int n) {
    auto pdw = [](int nn) {
        int m = nn - 2; // cycle length, even
        int x = nn - 1, y = nn;
        std::vector<Edge> es;
        for (int i = 1; i <= m; ++i) es.push_back(make_edge(i, i % m + 1));
        for (int i = 1; i <= m; i += 2) es.push_back(make_edge(i, x));
        for (int i = 2; i <= m; i += 2) es.push_back(make_edge(i, y));
        return es;
    };
    if (n % 2 == 0) return {n, pdw(n)};
    // split pole x of the even wheel on n-1 vertices: x1 takes c1,c3,c5,
    // x2 takes c5,c7,...,c1; the square (x1,c1,x2,c5) is the new face
    int m = n - 3; // cycle of the underlying even wheel
    int x1 = m + 1, x2 = m + 2, y = m + 3;
    std::vector<Edge> es;
    for (int i = 1; i <= m; ++i) es.push_back(make_edge(i, i % m + 1));
    for (int i : {1, 3, 5}) es.push_back(make_edge(i, x1));
    for (int i = 5; i <= m; i += 2) es.push_back(make_edge(i, x2));
    es.push_back(make_edge(1, x2));
    for (int i = 2; i <= m; i += 2) es.push_back(make_edge(i, y));
    return {n, es};
}

} // namespace detail

// Optimal 1-planar graph with 4n-8 edges: a 3-connected quadrangulation plus
// both diagonals of every face. Self-validated before return.
inline OnePlanarEmbedding gen_optimal_1planar_embedding(int n) {
    if (n == 9 || n < 8)
        throw GraphError("no optimal 1-planar graph exists for n=" + std::to_string(n));
    auto [nn, qedges] = detail::quadrangulation(n);
    SimpleGraph q = build_graph(nn, qedges);
    auto qemb = planar_embedding_bm(q.n, q.edges);
    if (!qemb) throw std::logic_error("quadrangulation is not planar");
    OnePlanarEmbedding e;
    e.plan = *qemb;
    auto faces = trace_faces(e.plan);
    for (const Face& f : faces) {
        if (f.length() != 4) throw std::logic_error("non-quadrilateral face in wheel");
        detail::insert_quad_crossing(e, f);
    }
    // crossings were appended with plan labels n+1.., matching record order
    std::vector<Edge> ges = q.edges;
    for (const auto& rec : e.crossings) {
        ges.push_back(rec.ab);
        ges.push_back(rec.cd);
    }
    e.g = build_graph(n, ges);
    Certificate ok = validate_1planar(e);
    if (!ok.accepted() || e.g.m() != 4 * n - 8)
        throw std::logic_error("optimal generator failed self-validation");
    return e;
}

inline SimpleGraph gen_optimal_1planar(int n) { return gen_optimal_1planar_embedding(n).g; }

// Optimal outer 1-planar graph with 2.5n-4 edges: a chain of K4s glued on
// shared edges.
inline SimpleGraph gen_outer_optimal(int n) {
    if (n % 2 != 0) throw GraphError("2.5n-4 is not an integer for odd n=" + std::to_string(n));
    if (n < 4) throw GraphError("gen_outer_optimal requires n >= 4");
    std::vector<Edge> es;
    for (int base = 1; base + 3 <= n; base += 2) {
        // K4 on base..base+3; consecutive K4s share the edge (base+2,base+3)
        for (int u = base; u < base + 4; ++u)
            for (int v = u + 1; v < base + 4; ++v) {
                Edge e = make_edge(u, v);
                if (std::find(es.begin(), es.end(), e) == es.end()) es.push_back(e);
            }
    }
    SimpleGraph g = build_graph(n, es);
    if (2 * g.m() != 5 * n - 8) throw std::logic_error("outer-optimal edge count off");
    return g;
}

// Seeded random 1-planar embedding: random stacked triangulation, then each
// crossing replaces a planar edge shared by two triangles with the crossing
// pair of the merged quadrilateral.
inline OnePlanarEmbedding random_1planar_embedding(int n, int crossings, unsigned seed) {
    if (n < 3) throw GraphError("random_1planar_embedding requires n >= 3");
    if (crossings < 0 || crossings > n - 2)
        throw GraphError("crossings must lie in [0, n-2]");
    std::mt19937 rng(seed);

    // random planar triangulation with tracked rotations
    EmbeddedGraph plan;
    plan.n = 3;
    plan.rot.assign(4, {});
    plan.add_edge(1, 2);
    plan.add_edge(2, 3);
    plan.add_edge(1, 3);
    plan.rot[1] = {0, 2};
    plan.rot[2] = {1, 0};
    plan.rot[3] = {2, 1};
    while (plan.n < n) {
        auto faces = trace_faces(plan);
        std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
        detail::insert_vertex_in_face(plan, faces[pick(rng)]);
    }

    std::vector<CrossingRecord> recs;
    std::set<Edge> crossed_pairs;
    for (int ci = 0; ci < crossings; ++ci) {
        bool done = false;
        for (int attempt = 0; attempt < 200 && !done; ++attempt) {
            std::uniform_int_distribution<int> pick(0, plan.m() - 1);
            int eid = pick(rng);
            auto [a, b] = plan.edge_list[static_cast<size_t>(eid)];
            if (a > plan.n || b > plan.n) continue; // stale id (never happens; safety)
            Edge ab = make_edge(a, b);
            if (a > n || b > n || crossed_pairs.count(ab)) continue; // segment or crossed
            // the two faces at eid must be triangles with original corners
            auto faces = trace_faces(plan);
            std::vector<int> opposite;
            for (const Face& f : faces) {
                for (size_t i = 0; i < f.half_edges.size(); ++i)
                    if (f.half_edges[i] / 2 == eid && f.length() == 3) {
                        for (int v : f.vertex_walk(plan))
                            if (v != a && v != b) opposite.push_back(v);
                    }
            }
            if (opposite.size() != 2) continue;
            int c = opposite[0], d = opposite[1];
            if (c == d || c > n || d > n) continue;
            Edge cd = make_edge(c, d);
            if (crossed_pairs.count(cd)) continue;
            // (c,d) may exist planar elsewhere: that copy is rerouted
            // through the crossing, so drop it first
            int cd_eid = -1;
            for (int x = 0; x < plan.m(); ++x)
                if (make_edge(plan.edge_list[static_cast<size_t>(x)].first,
                              plan.edge_list[static_cast<size_t>(x)].second) == cd)
                    cd_eid = x;
            // remove (a,b) and any planar (c,d) from rotations, compact
            std::set<int> dead{eid};
            if (cd_eid >= 0) dead.insert(cd_eid);
            for (int v = 1; v <= plan.n; ++v) {
                auto& r = plan.rot[static_cast<size_t>(v)];
                r.erase(std::remove_if(r.begin(), r.end(),
                                       [&](int x) { return dead.count(x) > 0; }),
                        r.end());
            }
            EmbeddedGraph next;
            next.n = plan.n;
            next.rot.assign(static_cast<size_t>(plan.n) + 1, {});
            std::vector<int> remap(static_cast<size_t>(plan.m()), -1);
            for (int x = 0; x < plan.m(); ++x)
                if (!dead.count(x))
                    remap[static_cast<size_t>(x)] =
                        next.add_edge(plan.edge_list[static_cast<size_t>(x)].first,
                                      plan.edge_list[static_cast<size_t>(x)].second);
            for (int v = 1; v <= plan.n; ++v)
                for (int x : plan.rot[static_cast<size_t>(v)])
                    next.rot[static_cast<size_t>(v)].push_back(remap[static_cast<size_t>(x)]);
            plan = std::move(next);
            // find the merged quadrilateral face (a,c/d,b,d/c) and put the
            // dummy inside, joined to all four corners
            bool placed = false;
            for (const Face& f : trace_faces(plan)) {
                if (f.length() != 4) continue;
                auto wvec = f.vertex_walk(plan);
                std::set<int> ws(wvec.begin(), wvec.end());
                if (ws != std::set<int>{a, b, c, d}) continue;
                int dummy = detail::insert_vertex_in_face(plan, f);
                CrossingRecord rec;
                rec.ab = ab;
                rec.cd = cd;
                rec.dummy = dummy;
                recs.push_back(rec);
                crossed_pairs.insert(ab);
                crossed_pairs.insert(cd);
                placed = true;
                break;
            }
            if (!placed) throw std::logic_error("merged quadrilateral not found");
            done = true;
        }
        if (!done)
            throw GraphError("infeasible parameters: no remaining edge admits a crossing");
    }
    // dummies were appended after 1..n in record order, so labels already
    // match the n+i+1 convention
    std::vector<Edge> ges;
    for (int x = 0; x < plan.m(); ++x) {
        auto [u, v] = plan.edge_list[static_cast<size_t>(x)];
        if (u <= n && v <= n) ges.push_back(make_edge(u, v));
    }
    for (const auto& rec : recs) {
        ges.push_back(rec.ab);
        ges.push_back(rec.cd);
    }
    OnePlanarEmbedding e;
    e.g = build_graph(n, ges);
    e.crossings = recs;
    e.plan = plan;
    for (auto& rec : e.crossings)
        rec.flag = alternation_flag(e.plan, rec).value_or(0);
    Certificate ok = validate_1planar(e);
    if (!ok.accepted()) throw std::logic_error("random generator failed self-validation");
    return e;
}

} // namespace onemap

#endif
