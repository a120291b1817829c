#ifndef ONEMAP_DECOMPOSITION_HPP
#define ONEMAP_DECOMPOSITION_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "onemap/certificate.hpp"
#include "onemap/embedding.hpp"
#include "onemap/graph.hpp"
#include "onemap/recognition.hpp"

namespace onemap {

// One component G_i + e of a separation-pair decomposition, relabeled to
// contiguous 1..k; label[] maps back to the original vertices.
struct Component {
    SimpleGraph graph;
    std::vector<int> label;  // label[i] = original vertex of relabeled i (1-based)
    Edge marked;             // e = (u,v), relabeled
    Edge marked_original;
};

struct Decomposition {
    SeparationPair pair;
    std::vector<Component> components;
};

// Every separation pair with the components of G - {u,v}, each augmented by
// u, v and the marked edge e = (u,v).
inline std::vector<Decomposition> decompose(const SimpleGraph& g) {
    if (connectivity_level(g) < 2) throw GraphError("decompose requires a 2-connected graph");
    std::vector<Decomposition> out;
    for (const SeparationPair& sp : separation_pairs(g)) {
        Decomposition dec;
        dec.pair = sp;
        for (const auto& comp_vertices : sp.components) {
            Component c;
            std::vector<int> verts = comp_vertices;
            verts.push_back(sp.u);
            verts.push_back(sp.v);
            std::sort(verts.begin(), verts.end());
            c.label.assign(static_cast<size_t>(verts.size()) + 1, 0);
            std::map<int, int> relabel;
            for (size_t i = 0; i < verts.size(); ++i) {
                relabel[verts[static_cast<size_t>(i)]] = static_cast<int>(i) + 1;
                c.label[i + 1] = verts[i];
            }
            std::set<int> inside(verts.begin(), verts.end());
            std::vector<Edge> edges;
            for (const Edge& e : g.edges)
                if (inside.count(e.first) && inside.count(e.second))
                    edges.push_back(make_edge(relabel[e.first], relabel[e.second]));
            c.marked_original = make_edge(sp.u, sp.v);
            c.marked = make_edge(relabel[sp.u], relabel[sp.v]);
            if (std::find(edges.begin(), edges.end(), c.marked) == edges.end())
                edges.push_back(c.marked);
            // edges of g between two other components never qualify: their
            // endpoints lie in one component by definition
            c.graph = build_graph(static_cast<int>(verts.size()), edges);
            dec.components.push_back(std::move(c));
        }
        out.push_back(std::move(dec));
    }
    return out;
}

// Which interfaces the component admits across its 1-planar embeddings
// with the marked edge drawn planar.
struct ComponentProfile {
    Component comp;
    Verdict one_planar = Verdict::Reject;
    bool admits_closed = false;
    bool admits_one_sided = false;
    bool admits_two_sided = false;
    bool admits_planar_e = false;
    bool indeterminate = false; // enumeration incomplete: false flags unreliable
};

inline ComponentProfile profile_component(const Component& c,
                                          const SearchBudget& budget = SearchBudget{}) {
    ComponentProfile p;
    p.comp = c;
    OracleResult base = oracle_1planar(c.graph, budget);
    p.one_planar = base.cert.verdict;
    if (p.one_planar != Verdict::Accept) {
        p.indeterminate = p.one_planar == Verdict::Indeterminate;
        return p;
    }
    EnumStatus st = for_each_embedding(c.graph, budget, [&](const OnePlanarEmbedding& e) {
        if (e.edge_is_crossed(c.marked)) return false;
        p.admits_planar_e = true;
        switch (classify_open_closed(e, c.marked)) {
            case OpenClosed::Closed: p.admits_closed = true; break;
            case OpenClosed::OpenOneSided: p.admits_one_sided = true; break;
            case OpenClosed::OpenTwoSided: p.admits_two_sided = true; break;
        }
        return p.admits_closed && p.admits_one_sided && p.admits_two_sided;
    });
    if (st == EnumStatus::Budget) p.indeterminate = true;
    return p;
}

// Map-side secondary classification: a side of the marked planar edge is
// closed iff its incident face carries no original vertex besides the
// endpoints (the contact point there is a 4-point, not a 3-point).
inline OpenClosed classify_by_contacts(const OnePlanarEmbedding& e, Edge ab) {
    ab = make_edge(ab.first, ab.second);
    if (!e.g.has_edge(ab.first, ab.second) || e.edge_is_crossed(ab))
        throw GraphError("classify_by_contacts requires a planar edge of G");
    int eid = -1;
    for (int i = 0; i < e.plan.m(); ++i)
        if (make_edge(e.plan.edge_list[static_cast<size_t>(i)].first,
                      e.plan.edge_list[static_cast<size_t>(i)].second) == ab)
            eid = i;
    int open_sides = 0;
    for (const Face& f : trace_faces(e.plan)) {
        std::vector<size_t> at;
        for (size_t i = 0; i < f.half_edges.size(); ++i)
            if (f.half_edges[i] / 2 == eid) at.push_back(i);
        if (at.empty()) continue;
        if (at.size() == 1) {
            for (int v : f.vertex_walk(e.plan))
                if (v <= e.g.n && v != ab.first && v != ab.second) {
                    ++open_sides;
                    break;
                }
        } else {
            // bridge: the face carries both sides of (a,b); the stretches
            // between its two traversals are the two sides
            std::vector<int> walk = f.vertex_walk(e.plan);
            size_t sz = f.half_edges.size();
            for (int side = 0; side < 2; ++side) {
                size_t from = at[static_cast<size_t>(side)];
                size_t to = at[static_cast<size_t>(1 - side)];
                for (size_t i = (from + 1) % sz; i != to; i = (i + 1) % sz) {
                    int v = walk[i];
                    if (v <= e.g.n && v != ab.first && v != ab.second) {
                        ++open_sides;
                        break;
                    }
                }
            }
        }
    }
    if (open_sides == 0) return OpenClosed::Closed;
    return open_sides == 1 ? OpenClosed::OpenOneSided : OpenClosed::OpenTwoSided;
}

// Exhaustive variant of the plane-maximal count condition: does any
// selection of one admitted interface per component satisfy
// #two-sided <= #closed + 1? (The marked edge (u,v) itself occupies one
// slot in the cyclic arrangement around the pair and is closed on both
// sides, so it can absorb one two-sided component.) Used to validate the
// greedy rule.
inline bool plane_maximal_selection_exists(const std::vector<ComponentProfile>& ps) {
    size_t k = ps.size();
    std::vector<std::vector<int>> choices(k); // 0 closed, 1 one-sided, 2 two-sided
    for (size_t i = 0; i < k; ++i) {
        if (ps[i].admits_closed) choices[i].push_back(0);
        if (ps[i].admits_one_sided) choices[i].push_back(1);
        if (ps[i].admits_two_sided) choices[i].push_back(2);
        if (choices[i].empty()) return false;
    }
    std::vector<size_t> ix(k, 0);
    while (true) {
        int closed = 0, two_sided = 0;
        for (size_t i = 0; i < k; ++i) {
            int c = choices[i][ix[i]];
            if (c == 0) ++closed;
            if (c == 2) ++two_sided;
        }
        if (two_sided <= closed + 1) return true;
        size_t i = 0;
        while (i < k && ++ix[i] == choices[i].size()) ix[i++] = 0;
        if (i == k) return false;
    }
}

// Planar-maximal asks that every embedding be planar-maximal, so a
// component counts as open as soon as it admits any open embedding: two
// such components can always be embedded with their open sides facing each
// other, which exposes a non-adjacent cross-component pair.
inline Certificate reduce_planar_maximal(const std::vector<ComponentProfile>& ps) {
    int open_admitting = 0;
    for (const auto& p : ps) {
        if (p.one_planar == Verdict::Indeterminate || p.indeterminate)
            return Certificate::indeterminate("component profile incomplete");
        if (p.one_planar == Verdict::Reject || !p.admits_planar_e)
            return Certificate::reject("component-not-1-planar",
                                       "component lacks an embedding with the marked edge "
                                       "planar");
        if (p.admits_one_sided || p.admits_two_sided) ++open_admitting;
    }
    if (open_admitting <= 1) return Certificate::accept();
    return Certificate::reject("too-many-open-components",
                               std::to_string(open_admitting) +
                               " components admit an open embedding");
}

// Plane-maximal: some selection of embeddings keeps every two-sided open
// component next to closed neighbors. Around the pair the components and
// the marked edge sit in a cycle; two-sided components must alternate with
// closed objects, and the edge is one such object, hence the +1.
// Greedy: prefer closed, then one-sided.
inline Certificate reduce_plane_maximal(const std::vector<ComponentProfile>& ps) {
    int closed = 0, two_sided = 0;
    for (const auto& p : ps) {
        if (p.one_planar == Verdict::Indeterminate || p.indeterminate)
            return Certificate::indeterminate("component profile incomplete");
        if (p.one_planar == Verdict::Reject || !p.admits_planar_e)
            return Certificate::reject("component-not-1-planar",
                                       "component lacks an embedding with the marked edge "
                                       "planar");
        if (p.admits_closed)
            ++closed;
        else if (!p.admits_one_sided)
            ++two_sided; // forced two-sided open
    }
    if (two_sided <= closed + 1) return Certificate::accept();
    return Certificate::reject("count-condition",
                               std::to_string(two_sided) + " two-sided open vs " +
                               std::to_string(closed) +
                               " closed components plus the marked edge");
}

namespace detail {

inline Certificate lemma_maximal_impl(const SimpleGraph& g, const SearchBudget& budget,
                                      bool planar_maximal,
                                      std::map<SimpleGraph, Verdict>& memo) {
    if (auto it = memo.find(g); it != memo.end()) {
        Certificate c;
        c.verdict = it->second;
        if (c.verdict == Verdict::Reject) c.violations.push_back({"memoized", ""});
        if (c.verdict == Verdict::Indeterminate) c.notes.push_back("memoized");
        return c;
    }
    if (connectivity_level(g) < 2)
        throw GraphError("lemma reduction requires a 2-connected graph");
    Certificate out;
    auto pairs = separation_pairs(g);
    if (pairs.empty()) {
        // 3-connected base case: delegate to the direct recognizer
        out = planar_maximal ? is_planar_maximal_1planar(g, budget).cert
                             : is_plane_maximal_1planar(g, budget).cert;
    } else if (auto bad = std::find_if(pairs.begin(), pairs.end(),
                                       [&](const SeparationPair& sp) {
                                           return !g.has_edge(sp.u, sp.v);
                                       });
               bad != pairs.end()) {
        // a non-adjacent separation pair is co-facial in every embedding,
        // so the edge (u,v) is always addable
        out = Certificate::reject("pair-not-adjacent",
                                  "separation pair (" + std::to_string(bad->u) + "," +
                                  std::to_string(bad->v) + ") is a non-edge");
    } else {
        // decompose at the lexicographically least pair, recurse per component
        SimpleGraph base = g;
        Decomposition dec;
        dec.pair = pairs[0];
        {
            auto all = decompose(g);
            dec = all[0];
        }
        std::vector<ComponentProfile> profiles;
        out = Certificate::accept();
        for (const Component& c : dec.components) {
            Certificate sub = lemma_maximal_impl(c.graph, budget, planar_maximal, memo);
            if (sub.verdict == Verdict::Reject) {
                out = Certificate::reject("component-not-maximal",
                                          "component at pair (" + std::to_string(dec.pair.u) +
                                          "," + std::to_string(dec.pair.v) + ")");
                break;
            }
            if (sub.verdict == Verdict::Indeterminate) {
                out = sub;
                break;
            }
            profiles.push_back(profile_component(c, budget));
        }
        if (out.accepted())
            out = planar_maximal ? reduce_planar_maximal(profiles)
                                 : reduce_plane_maximal(profiles);
    }
    memo.emplace(g, out.verdict);
    return out;
}

} // namespace detail

// Lemma pipeline: recursive separation-pair reduction of the plane-/planar-
// maximality question, bottoming out at 3-connected components.
inline Certificate lemma_planar_maximal(const SimpleGraph& g,
                                        const SearchBudget& budget = SearchBudget{}) {
    std::map<SimpleGraph, Verdict> memo;
    return detail::lemma_maximal_impl(g, budget, true, memo);
}

inline Certificate lemma_plane_maximal(const SimpleGraph& g,
                                       const SearchBudget& budget = SearchBudget{}) {
    std::map<SimpleGraph, Verdict> memo;
    return detail::lemma_maximal_impl(g, budget, false, memo);
}

} // namespace onemap

#endif
