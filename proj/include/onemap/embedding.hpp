#ifndef ONEMAP_EMBEDDING_HPP
#define ONEMAP_EMBEDDING_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "onemap/certificate.hpp"
#include "onemap/graph.hpp"
#include "onemap/rotation.hpp"

namespace onemap {

// One crossing: edges (a,b) x (c,d) replaced by segments through a dummy
// vertex. The flag fixes which of the two alternating rotations the dummy
// carries: 0 -> (a,c,b,d), 1 -> (a,d,b,c).
struct CrossingRecord {
    Edge ab;
    Edge cd;
    int dummy = 0;
    int flag = 0;
};

// 1-planar embedding: base graph, crossing records, and the rotation system
// of the planarization over vertices 1..n (original) and n+1..n+k (dummies).
struct OnePlanarEmbedding {
    SimpleGraph g;
    std::vector<CrossingRecord> crossings;
    EmbeddedGraph plan;

    int dummy_count() const { return static_cast<int>(crossings.size()); }

    bool edge_is_crossed(const Edge& e) const {
        for (const auto& c : crossings)
            if (c.ab == e || c.cd == e) return true;
        return false;
    }

    const CrossingRecord* crossing_of_dummy(int d) const {
        for (const auto& c : crossings)
            if (c.dummy == d) return &c;
        return nullptr;
    }
};

namespace detail {

inline std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// cyclic equality of two sequences (no reflection)
inline bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    size_t k = a.size();
    for (size_t s = 0; s < k; ++s) {
        bool eq = true;
        for (size_t i = 0; i < k && eq; ++i)
            if (a[(s + i) % k] != b[i]) eq = false;
        if (eq) return true;
    }
    return k == 0;
}

} // namespace detail

// Derive the alternation flag from the dummy's rotation: 0 for (a,c,b,d),
// 1 for (a,d,b,c); nullopt if the rotation does not alternate.
inline std::optional<int> alternation_flag(const EmbeddedGraph& plan,
                                           const CrossingRecord& c) {
    if (plan.degree(c.dummy) != 4) return std::nullopt;
    auto nbrs = plan.neighbors_in_rotation(c.dummy);
    auto [a, b] = c.ab;
    auto [cc, d] = c.cd;
    if (detail::cyclic_equal(nbrs, {a, cc, b, d})) return 0;
    if (detail::cyclic_equal(nbrs, {a, d, b, cc})) return 1;
    return std::nullopt;
}

// The full validity check for 1-planar embeddings (dummy degree and
// alternation, one crossing per edge, distinct endpoints, segment structure,
// Euler planarity of the planarization).
inline Certificate validate_1planar(const OnePlanarEmbedding& e) {
    Certificate cert = Certificate::accept();
    int n = e.g.n;
    int k = e.dummy_count();
    if (e.plan.n != n + k)
        return Certificate::reject("planarization-size",
                                   "expected " + std::to_string(n + k) + " vertices, got " +
                                   std::to_string(e.plan.n));
    std::set<Edge> crossed_edges;
    for (size_t i = 0; i < e.crossings.size(); ++i) {
        const auto& c = e.crossings[i];
        std::string loc = "crossing " + std::to_string(i + 1) + " " +
                          detail::edge_str(c.ab) + "x" + detail::edge_str(c.cd);
        std::set<int> ends{c.ab.first, c.ab.second, c.cd.first, c.cd.second};
        if (ends.size() != 4) cert.add_violation("incident-edges-cross", loc);
        if (!e.g.has_edge(c.ab.first, c.ab.second) || !e.g.has_edge(c.cd.first, c.cd.second))
            cert.add_violation("crossing-edge-missing-from-graph", loc);
        if (c.dummy != n + static_cast<int>(i) + 1)
            cert.add_violation("dummy-label", loc);
        for (const Edge& ce : {c.ab, c.cd})
            if (!crossed_edges.insert(ce).second)
                cert.add_violation("edge-crossed-twice", detail::edge_str(ce));
    }
    if (!cert.accepted()) return cert;

    // exact segment structure of the planarization
    std::multiset<Edge> expect;
    for (const Edge& ed : e.g.edges)
        if (!crossed_edges.count(ed)) expect.insert(ed);
    for (const auto& c : e.crossings) {
        expect.insert(make_edge(c.ab.first, c.dummy));
        expect.insert(make_edge(c.ab.second, c.dummy));
        expect.insert(make_edge(c.cd.first, c.dummy));
        expect.insert(make_edge(c.cd.second, c.dummy));
    }
    std::multiset<Edge> have;
    for (const Edge& ed : e.plan.edge_list) have.insert(make_edge(ed.first, ed.second));
    if (expect != have)
        return Certificate::reject("planarization-edges",
                                   "planarization edge set does not match graph plus segments");

    for (const auto& c : e.crossings) {
        if (e.plan.degree(c.dummy) != 4) {
            cert.add_violation("dummy-degree", "dummy " + std::to_string(c.dummy));
            continue;
        }
        auto fl = alternation_flag(e.plan, c);
        if (!fl)
            cert.add_violation("dummy-alternation", "dummy " + std::to_string(c.dummy));
        else if (*fl != c.flag)
            cert.add_violation("dummy-flag", "dummy " + std::to_string(c.dummy) +
                               " rotation encodes flag " + std::to_string(*fl));
    }
    if (!cert.accepted()) return cert;

    Certificate planar = is_planar_rotation(e.plan);
    if (!planar.accepted()) {
        for (auto& v : planar.violations) cert.add_violation(v.first, v.second);
    }
    return cert;
}

// IC: every vertex is an endpoint of at most one crossed edge.
inline bool is_ic(const OnePlanarEmbedding& e) {
    std::vector<int> count(static_cast<size_t>(e.g.n) + 1, 0);
    for (const auto& c : e.crossings)
        for (int v : {c.ab.first, c.ab.second, c.cd.first, c.cd.second})
            ++count[static_cast<size_t>(v)];
    for (int v = 1; v <= e.g.n; ++v)
        if (count[static_cast<size_t>(v)] > 1) return false;
    return true;
}

// Crossing-augmented: the four endpoints of every crossing induce a K4,
// i.e. the quadrilateral edges {a,c},{c,b},{b,d},{d,a} all exist in G.
inline Certificate is_crossing_augmented(const OnePlanarEmbedding& e) {
    Certificate cert = Certificate::accept();
    for (const auto& c : e.crossings) {
        auto [a, b] = c.ab;
        auto [cc, d] = c.cd;
        for (const Edge& q : {make_edge(a, cc), make_edge(cc, b), make_edge(b, d), make_edge(d, a)})
            if (!e.g.has_edge(q.first, q.second)) {
                cert.add_violation("missing-kite-edge",
                                   detail::edge_str(q) + " for crossing " +
                                   detail::edge_str(c.ab) + "x" + detail::edge_str(c.cd));
                break; // first missing kite edge per crossing
            }
    }
    return cert;
}

namespace detail {

// Insert a chord between two corners of a face. Corner i sits at
// tail(F[i]) between the incoming half-edge F[i-1] and outgoing F[i].
// Returns the new edge id.
inline int insert_chord(EmbeddedGraph& g, const Face& f, size_t i, size_t j) {
    int u = g.tail(f.half_edges[i]);
    int v = g.tail(f.half_edges[j]);
    int eid = g.add_edge(u, v);
    auto insert_before = [&](int vert, int out_eid) {
        auto& r = g.rot[static_cast<size_t>(vert)];
        auto it = std::find(r.begin(), r.end(), out_eid);
        r.insert(it, eid);
    };
    insert_before(u, f.half_edges[i] / 2);
    insert_before(v, f.half_edges[j] / 2);
    return eid;
}

// Insert a new vertex inside a face, joined to every corner; keeps the
// rotation system planar. Returns the new vertex label (appended).
inline int insert_vertex_in_face(EmbeddedGraph& g, const Face& f) {
    int v = ++g.n;
    g.rot.push_back({});
    for (size_t i = 0; i < f.half_edges.size(); ++i) {
        int h = f.half_edges[i];
        int corner = g.tail(h);
        int eid = g.add_edge(corner, v);
        auto& r = g.rot[static_cast<size_t>(corner)];
        auto it = std::find(r.begin(), r.end(), h / 2);
        r.insert(it, eid); // before the outgoing edge of this corner
        g.rot[static_cast<size_t>(v)].push_back(eid);
    }
    // the new vertex sees the corners in reverse face order
    std::reverse(g.rot[static_cast<size_t>(v)].begin(), g.rot[static_cast<size_t>(v)].end());
    return v;
}

// Insert the two crossing diagonals into a quadrilateral face.
inline void insert_quad_crossing(OnePlanarEmbedding& e, const Face& f) {
    EmbeddedGraph& plan = e.plan;
    std::array<int, 4> corner{};
    for (int i = 0; i < 4; ++i) corner[static_cast<size_t>(i)] =
        plan.tail(f.half_edges[static_cast<size_t>(i)]);
    int dummy = ++plan.n;
    plan.rot.push_back({});
    CrossingRecord rec;
    rec.ab = make_edge(corner[0], corner[2]);
    rec.cd = make_edge(corner[1], corner[3]);
    rec.dummy = dummy;
    for (int i = 0; i < 4; ++i) {
        int h = f.half_edges[static_cast<size_t>(i)];
        int eid = plan.add_edge(corner[static_cast<size_t>(i)], dummy);
        auto& r = plan.rot[static_cast<size_t>(corner[static_cast<size_t>(i)])];
        auto it = std::find(r.begin(), r.end(), h / 2);
        r.insert(it, eid);
        plan.rot[static_cast<size_t>(dummy)].push_back(eid);
    }
    // reverse face order, same as insert_vertex_in_face
    std::reverse(plan.rot[static_cast<size_t>(dummy)].begin(),
                 plan.rot[static_cast<size_t>(dummy)].end());
    rec.flag = alternation_flag(plan, rec).value_or(0);
    e.crossings.push_back(rec);
}

} // namespace detail

// Augment every crossing to a kite: missing quadrilateral edges are routed
// planar hugging the crossing (inserted at the corners of its dummy).
// Idempotent; introduces no new crossings.
inline OnePlanarEmbedding kite_augment(const OnePlanarEmbedding& e) {
    OnePlanarEmbedding out = e;
    for (const auto& c : out.crossings) {
        auto [a, b] = c.ab;
        auto [cc, d] = c.cd;
        for (const Edge& q : {make_edge(a, cc), make_edge(cc, b), make_edge(b, d), make_edge(d, a)}) {
            if (out.g.has_edge(q.first, q.second)) continue;
            // find the face with consecutive corners u -> dummy -> w
            auto faces = trace_faces(out.plan);
            bool done = false;
            for (const Face& f : faces) {
                size_t len = f.half_edges.size();
                for (size_t i = 0; i < len && !done; ++i) {
                    int h1 = f.half_edges[i];
                    int h2 = f.half_edges[(i + 1) % len];
                    if (out.plan.head(h1) != c.dummy || out.plan.tail(h2) != c.dummy) continue;
                    int u = out.plan.tail(h1);
                    int w = out.plan.head(h2);
                    if (make_edge(u, w) != q) continue;
                    detail::insert_chord(out.plan, f, i, (i + 2) % len);
                    done = true;
                }
                if (done) break;
            }
            std::vector<Edge> es = out.g.edges;
            es.push_back(q);
            out.g = build_graph(out.g.n, es);
        }
    }
    return out;
}

// Separated embedding: planarization multigraph with parallel planar copies
// of (u,v) added at separation pairs so every face touches at most one
// component of G - {u,v}.
struct SeparatedEmbedding {
    OnePlanarEmbedding base;
    EmbeddedGraph plan;                         // with copies
    std::vector<std::pair<int, Edge>> copies;   // (edge id in plan, separation pair)
};

inline SeparatedEmbedding separated_embedding(const OnePlanarEmbedding& e) {
    if (connectivity_level(e.g) < 2)
        throw GraphError("separated_embedding requires a 2-connected base graph");
    SeparatedEmbedding out;
    out.base = e;
    out.plan = e.plan;
    auto pairs = separation_pairs(e.g);
    for (const auto& sp : pairs) {
        // copies are parallel to an existing edge; non-adjacent separation
        // pairs get none
        if (!e.g.has_edge(sp.u, sp.v)) continue;
        // component id per original vertex (u,v -> -1)
        std::vector<int> comp(static_cast<size_t>(e.g.n) + 1, -1);
        for (size_t ci = 0; ci < sp.components.size(); ++ci)
            for (int v : sp.components[ci]) comp[static_cast<size_t>(v)] = static_cast<int>(ci);
        auto comps_of_vertex = [&](int v) -> std::set<int> {
            std::set<int> s;
            if (v <= e.g.n) {
                if (comp[static_cast<size_t>(v)] >= 0) s.insert(comp[static_cast<size_t>(v)]);
            } else if (const CrossingRecord* c = e.crossing_of_dummy(v)) {
                for (int x : {c->ab.first, c->ab.second, c->cd.first, c->cd.second})
                    if (comp[static_cast<size_t>(x)] >= 0) s.insert(comp[static_cast<size_t>(x)]);
            }
            return s;
        };
        for (int guard = 0; guard < 4 * e.g.n + 16; ++guard) {
            auto faces = trace_faces(out.plan);
            bool inserted = false;
            for (const Face& f : faces) {
                std::set<int> touched;
                std::vector<size_t> u_pos, v_pos;
                const auto walk = f.vertex_walk(out.plan);
                for (size_t i = 0; i < walk.size(); ++i) {
                    for (int ci : comps_of_vertex(walk[i])) touched.insert(ci);
                    if (walk[i] == sp.u) u_pos.push_back(i);
                    if (walk[i] == sp.v) v_pos.push_back(i);
                }
                if (touched.size() < 2 || u_pos.empty() || v_pos.empty()) continue;
                // pick corners so both sides of the chord keep a component
                size_t bi = u_pos[0], bj = v_pos[0];
                bool found = false;
                for (size_t pi : u_pos) {
                    for (size_t pj : v_pos) {
                        std::set<int> left, right;
                        for (size_t x = 0; x < walk.size(); ++x) {
                            bool between = pi < pj ? (x > pi && x < pj) : (x > pi || x < pj);
                            for (int ci : comps_of_vertex(walk[x]))
                                (between ? left : right).insert(ci);
                        }
                        if (!left.empty() && !right.empty() && left != right) {
                            bi = pi;
                            bj = pj;
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                int eid = detail::insert_chord(out.plan, f, bi, bj);
                out.copies.push_back({eid, make_edge(sp.u, sp.v)});
                inserted = true;
                break;
            }
            if (!inserted) break;
        }
    }
    return out;
}

// Fully triangulated: every face of the separated planarization is a
// triangle (three edges or edge segments).
inline Certificate is_fully_triangulated(const OnePlanarEmbedding& e) {
    SeparatedEmbedding sep = separated_embedding(e);
    for (const Face& f : trace_faces(sep.plan)) {
        if (f.length() != 3) {
            std::string walk;
            for (int v : f.vertex_walk(sep.plan)) walk += std::to_string(v) + " ";
            return Certificate::reject("non-triangular-face",
                                       "face of length " + std::to_string(f.length()) +
                                       ": " + walk);
        }
    }
    return Certificate::accept();
}

// Planar-maximal embedding: no face of the planarization contains two
// distinct non-adjacent original vertices (such a pair admits a planar edge).
inline Certificate is_planar_maximal_embedding(const OnePlanarEmbedding& e) {
    for (const Face& f : trace_faces(e.plan)) {
        std::set<int> orig;
        for (int v : f.vertex_walk(e.plan))
            if (v <= e.g.n) orig.insert(v);
        for (auto it = orig.begin(); it != orig.end(); ++it)
            for (auto jt = std::next(it); jt != orig.end(); ++jt)
                if (!e.g.has_edge(*it, *jt)) {
                    std::string walk;
                    for (int v : f.vertex_walk(e.plan)) walk += std::to_string(v) + " ";
                    return Certificate::reject("addable-planar-edge",
                                               detail::edge_str({*it, *jt}) +
                                               " in face: " + walk);
                }
    }
    return Certificate::accept();
}

enum class OpenClosed { Closed, OpenOneSided, OpenTwoSided };

inline const char* open_closed_name(OpenClosed c) {
    switch (c) {
        case OpenClosed::Closed: return "closed";
        case OpenClosed::OpenOneSided: return "open-one-sided";
        case OpenClosed::OpenTwoSided: return "open-two-sided";
    }
    return "?";
}

// Remove the designated planar outer edge (a,b) and inspect the merged face:
// closed if no vertex of G besides a,b lies on it; otherwise open on the
// sides (a->b boundary walks) that expose a third vertex.
inline OpenClosed classify_open_closed(const OnePlanarEmbedding& e, Edge ab) {
    ab = make_edge(ab.first, ab.second);
    if (!e.g.has_edge(ab.first, ab.second))
        throw GraphError("edge " + detail::edge_str(ab) + " not in graph");
    if (e.edge_is_crossed(ab))
        throw GraphError("edge " + detail::edge_str(ab) + " is crossed, not planar");
    // locate the edge id in the planarization
    int removed = -1;
    for (int eid = 0; eid < e.plan.m(); ++eid)
        if (make_edge(e.plan.edge_list[static_cast<size_t>(eid)].first,
                      e.plan.edge_list[static_cast<size_t>(eid)].second) == ab) {
            removed = eid;
            break;
        }
    // a half-edge following (a->b) in its face survives removal and marks
    // the merged face
    int h_ab = e.plan.half_edge(removed, ab.first);
    int marker = e.plan.next_half_edge(h_ab);
    if (marker / 2 == removed) marker = e.plan.next_half_edge(marker);

    EmbeddedGraph cut = e.plan;
    for (int v : {ab.first, ab.second}) {
        auto& r = cut.rot[static_cast<size_t>(v)];
        r.erase(std::remove(r.begin(), r.end(), removed), r.end());
    }
    // removed edge stays in edge_list but is absent from all rotations,
    // so face tracing never reaches it; remap the marker unchanged
    auto walk_of = [&](int start) {
        std::vector<int> w;
        int h = start;
        do {
            w.push_back(cut.tail(h));
            h = cut.next_half_edge(h);
        } while (h != start);
        return w;
    };
    auto has_third = [&](const std::vector<int>& w) {
        for (int v : w)
            if (v <= e.g.n && v != ab.first && v != ab.second) return true;
        return false;
    };
    std::vector<int> outer = walk_of(marker);
    auto pos_a = std::find(outer.begin(), outer.end(), ab.first);
    auto pos_b = std::find(outer.begin(), outer.end(), ab.second);
    if (pos_a == outer.end() || pos_b == outer.end()) {
        // (a,b) was a bridge of the planarization: the merged region splits
        // into one boundary walk around each endpoint; classify them as the
        // two sides
        int h_ba = e.plan.half_edge(removed, ab.second);
        int marker2 = e.plan.next_half_edge(h_ba);
        if (marker2 / 2 == removed) marker2 = e.plan.next_half_edge(marker2);
        int open_sides = has_third(outer) ? 1 : 0;
        if (marker2 / 2 != removed && has_third(walk_of(marker2))) ++open_sides;
        if (open_sides == 0) return OpenClosed::Closed;
        return open_sides == 1 ? OpenClosed::OpenOneSided : OpenClosed::OpenTwoSided;
    }
    size_t ia = static_cast<size_t>(pos_a - outer.begin());
    size_t ib = static_cast<size_t>(pos_b - outer.begin());
    int open_sides = 0;
    for (int side = 0; side < 2; ++side) {
        size_t from = side == 0 ? ia : ib;
        size_t to = side == 0 ? ib : ia;
        bool open = false;
        for (size_t x = (from + 1) % outer.size(); x != to; x = (x + 1) % outer.size()) {
            int v = outer[x];
            if (v <= e.g.n && v != ab.first && v != ab.second) open = true;
        }
        if (open) ++open_sides;
    }
    if (open_sides == 0) return OpenClosed::Closed;
    return open_sides == 1 ? OpenClosed::OpenOneSided : OpenClosed::OpenTwoSided;
}

} // namespace onemap

#endif
