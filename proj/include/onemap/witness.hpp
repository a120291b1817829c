#ifndef ONEMAP_WITNESS_HPP
#define ONEMAP_WITNESS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "onemap/certificate.hpp"
#include "onemap/embedding.hpp"
#include "onemap/graph.hpp"
#include "onemap/rotation.hpp"

namespace onemap {

// Embedded planar bipartite graph B = (V,U,F): countries 1..nV, points
// nV+1..nV+nU with degree 2, 3 or 4. Its half square is the map graph.
struct BipartiteMapWitness {
    int nV = 0;
    int nU = 0;
    EmbeddedGraph b; // over nV + nU vertices

    bool is_point(int v) const { return v > nV; }
};

inline Certificate validate_witness(const BipartiteMapWitness& w) {
    Certificate cert = Certificate::accept();
    if (w.b.n != w.nV + w.nU)
        return Certificate::reject("witness-size", "vertex count mismatch");
    for (const Edge& e : w.b.edge_list) {
        bool fp = w.is_point(e.first), sp = w.is_point(e.second);
        if (fp == sp)
            cert.add_violation("not-bipartite",
                               "edge (" + std::to_string(e.first) + "," +
                               std::to_string(e.second) + ")");
    }
    for (int u = w.nV + 1; u <= w.b.n; ++u) {
        int d = w.b.degree(u);
        if (d < 2 || d > 4)
            cert.add_violation("point-degree",
                               "point u" + std::to_string(u - w.nV) + " has degree " +
                               std::to_string(d));
    }
    if (!cert.accepted()) return cert;
    Certificate planar = is_planar_rotation(w.b);
    if (!planar.accepted())
        for (auto& v : planar.violations) cert.add_violation(v.first, v.second);
    return cert;
}

// Graph on the countries; edge {x,y} iff some point is adjacent to both.
// Output is simple (duplicates collapsed).
inline SimpleGraph half_square(const BipartiteMapWitness& w) {
    std::set<Edge> edges;
    for (int u = w.nV + 1; u <= w.b.n; ++u) {
        auto nbrs = w.b.neighbors_in_rotation(u);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j)
                if (nbrs[i] != nbrs[j]) edges.insert(make_edge(nbrs[i], nbrs[j]));
    }
    return build_graph(w.nV, {edges.begin(), edges.end()});
}

// B is a k-map witness for the maximum point degree k.
inline int max_point_degree(const BipartiteMapWitness& w) {
    int k = 0;
    for (int u = w.nV + 1; u <= w.b.n; ++u) k = std::max(k, w.b.degree(u));
    return k;
}

// Hole-free criterion: every face of B has length four or six.
// Every face must have length 4 or 6; on top of the length criterion, a
// 4-face must pass exactly one corner point (degree >= 3) and a 6-face none.
// A 4-face without a corner is an empty lens between two boundary arcs and a
// 6-face with one is a pocket next to a crossing; both bound uncovered area.
inline Certificate is_hole_free(const BipartiteMapWitness& w) {
    for (const Face& f : trace_faces(w.b)) {
        std::string walk;
        for (int v : f.vertex_walk(w.b)) walk += std::to_string(v) + " ";
        if (f.length() != 4 && f.length() != 6)
            return Certificate::reject("face-length",
                                       "face of length " + std::to_string(f.length()) +
                                       ": " + walk);
        int corners = 0;
        for (int v : f.vertex_walk(w.b))
            if (v > w.nV && w.b.rot[static_cast<size_t>(v)].size() >= 3) ++corners;
        if (corners != (6 - f.length()) / 2)
            return Certificate::reject("hole",
                                       "face of length " + std::to_string(f.length()) +
                                       " passes " + std::to_string(corners) +
                                       " corner point(s): " + walk);
    }
    return Certificate::accept();
}

namespace detail {

// Witness from any planar-embedded multigraph whose vertices 1..n are
// countries and n+1..n+k are degree-4 crossing points: every plain edge is
// subdivided by a fresh degree-2 point, crossing points join U directly.
inline BipartiteMapWitness witness_from_planarization(int n_countries,
                                                      const EmbeddedGraph& plan) {
    int n = n_countries;
    int k = plan.n - n; // crossing dummies
    BipartiteMapWitness w;
    w.nV = n;
    int next_point = n + k + 1;
    std::vector<int> sub_point(static_cast<size_t>(plan.m()), -1);
    for (int eid = 0; eid < plan.m(); ++eid) {
        const Edge& e = plan.edge_list[static_cast<size_t>(eid)];
        if (e.first <= n && e.second <= n) sub_point[static_cast<size_t>(eid)] = next_point++;
    }
    w.nU = next_point - 1 - n;
    w.b.n = n + w.nU;
    w.b.rot.assign(static_cast<size_t>(w.b.n) + 1, {});

    std::map<std::pair<int, int>, int> beid; // (plan eid, endpoint) -> witness edge id
    auto witness_edge = [&](int plan_eid, int endpoint, int point) {
        auto key = std::make_pair(plan_eid, endpoint);
        auto it = beid.find(key);
        if (it != beid.end()) return it->second;
        int id = w.b.add_edge(endpoint, point);
        beid.emplace(key, id);
        return id;
    };
    // country rotations follow the planarization rotations
    for (int v = 1; v <= n; ++v) {
        for (int eid : plan.rot[static_cast<size_t>(v)]) {
            int other = plan.other_end(eid, v);
            int point = other > n ? other : sub_point[static_cast<size_t>(eid)];
            w.b.rot[static_cast<size_t>(v)].push_back(witness_edge(eid, v, point));
        }
    }
    // crossing points keep their (alternating) rotations
    for (int d = n + 1; d <= n + k; ++d) {
        for (int eid : plan.rot[static_cast<size_t>(d)]) {
            int other = plan.other_end(eid, d);
            w.b.rot[static_cast<size_t>(d)].push_back(witness_edge(eid, other, d));
        }
    }
    // subdivision points see their two endpoints
    for (int eid = 0; eid < plan.m(); ++eid) {
        int p = sub_point[static_cast<size_t>(eid)];
        if (p < 0) continue;
        const Edge& e = plan.edge_list[static_cast<size_t>(eid)];
        w.b.rot[static_cast<size_t>(p)].push_back(witness_edge(eid, e.first, p));
        w.b.rot[static_cast<size_t>(p)].push_back(witness_edge(eid, e.second, p));
    }
    return w;
}

} // namespace detail

// Theorem-direction construction: planar edges become degree-2 points,
// crossings become degree-4 points whose rotation keeps the alternation.
// Requires a crossing-augmented embedding, otherwise the half square would
// exceed G.
inline BipartiteMapWitness embedding_to_witness(const OnePlanarEmbedding& e) {
    Certificate aug = is_crossing_augmented(e);
    if (!aug.accepted())
        throw GraphError("embedding_to_witness requires a crossing-augmented embedding: " +
                         (aug.violations.empty() ? std::string("?") : aug.violations[0].second));
    return detail::witness_from_planarization(e.g.n, e.plan);
}

// Witness of the separated embedding (parallel copies each get their own
// subdivision point, so B stays simple).
inline BipartiteMapWitness separated_witness(const SeparatedEmbedding& s) {
    return detail::witness_from_planarization(s.base.g.n, s.plan);
}

// Reverse construction: contract degree-2 points, expand degree-3 points to
// planar triangles and degree-4 points to kites, then collapse parallel
// copies (whole edges, so the rotation system stays planar).
inline OnePlanarEmbedding witness_to_embedding(const BipartiteMapWitness& w) {
    Certificate ok = validate_witness(w);
    if (!ok.accepted())
        throw GraphError("witness_to_embedding requires a valid witness");
    int n = w.nV;

    // multigraph planarization with provisional dummy labels = point labels
    EmbeddedGraph plan;
    plan.n = w.b.n; // compacted later
    plan.rot.assign(static_cast<size_t>(plan.n) + 1, {});
    std::vector<char> is_seg; // per edge id: segment to a dummy?
    auto add = [&](int a, int b, bool seg) {
        plan.edge_list.push_back({a, b});
        is_seg.push_back(seg ? 1 : 0);
        return plan.m() - 1;
    };

    // per (point, country) the ordered edge ids spliced into the country's
    // rotation where the point used to be
    std::map<std::pair<int, int>, std::vector<int>> contribution;
    std::vector<int> deg4_points;
    for (int p = n + 1; p <= w.b.n; ++p) {
        auto pn = w.b.neighbors_in_rotation(p);
        int d = static_cast<int>(pn.size());
        if (d == 2) {
            int e = add(pn[0], pn[1], false);
            contribution[{p, pn[0]}] = {e};
            contribution[{p, pn[1]}] = {e};
        } else if (d == 3) {
            int e01 = add(pn[0], pn[1], false);
            int e12 = add(pn[1], pn[2], false);
            int e20 = add(pn[2], pn[0], false);
            // at each country: edge to its successor around p, then to its
            // predecessor
            contribution[{p, pn[0]}] = {e01, e20};
            contribution[{p, pn[1]}] = {e12, e01};
            contribution[{p, pn[2]}] = {e20, e12};
        } else { // d == 4: kite
            deg4_points.push_back(p);
            int q01 = add(pn[0], pn[1], false);
            int q12 = add(pn[1], pn[2], false);
            int q23 = add(pn[2], pn[3], false);
            int q30 = add(pn[3], pn[0], false);
            int s0 = add(pn[0], p, true);
            int s1 = add(pn[1], p, true);
            int s2 = add(pn[2], p, true);
            int s3 = add(pn[3], p, true);
            contribution[{p, pn[0]}] = {q01, s0, q30};
            contribution[{p, pn[1]}] = {q12, s1, q01};
            contribution[{p, pn[2]}] = {q23, s2, q12};
            contribution[{p, pn[3]}] = {q30, s3, q23};
            plan.rot[static_cast<size_t>(p)] = {s0, s1, s2, s3};
        }
    }
    for (int v = 1; v <= n; ++v) {
        for (int eid : w.b.rot[static_cast<size_t>(v)]) {
            int p = w.b.other_end(eid, v);
            for (int x : contribution[{p, v}]) plan.rot[static_cast<size_t>(v)].push_back(x);
        }
    }

    // crossing records from degree-4 points: opposite countries cross
    std::map<int, CrossingRecord> rec_of_point;
    for (int p : deg4_points) {
        auto pn = w.b.neighbors_in_rotation(p);
        CrossingRecord rec;
        rec.ab = make_edge(pn[0], pn[2]);
        rec.cd = make_edge(pn[1], pn[3]);
        rec.dummy = p; // provisional
        rec_of_point[p] = rec;
    }
    std::set<Edge> crossed;
    for (auto& [p, rec] : rec_of_point)
        for (const Edge& ce : {rec.ab, rec.cd})
            if (!crossed.insert(ce).second)
                throw GraphError("witness crosses edge (" + std::to_string(ce.first) + "," +
                                 std::to_string(ce.second) + ") at two points; unsupported");

    // collapse duplicates among the expanded planar edges: the kite of one
    // 4-point can re-create a pair that another point already carries, either
    // as its crossed pair or as another kite side. Keep the crossing (the
    // graph retains the edge through the record) or the first planar copy;
    // deletions are whole edges, so the rotation system stays planar.
    std::set<int> dead;
    {
        std::set<Edge> kept;
        for (int eid = 0; eid < plan.m(); ++eid) {
            if (is_seg[static_cast<size_t>(eid)]) continue;
            Edge e = make_edge(plan.edge_list[static_cast<size_t>(eid)].first,
                               plan.edge_list[static_cast<size_t>(eid)].second);
            if (crossed.count(e) || !kept.insert(e).second) dead.insert(eid);
        }
    }

    // compact: drop dead edges, relabel dummies to n+1..n+k in point order
    std::map<int, int> vmap;
    for (int v = 1; v <= n; ++v) vmap[v] = v;
    std::vector<CrossingRecord> crossings;
    for (size_t i = 0; i < deg4_points.size(); ++i) {
        vmap[deg4_points[i]] = n + static_cast<int>(i) + 1;
        CrossingRecord rec = rec_of_point[deg4_points[i]];
        rec.dummy = n + static_cast<int>(i) + 1;
        crossings.push_back(rec);
    }
    EmbeddedGraph out_plan;
    out_plan.n = n + static_cast<int>(deg4_points.size());
    out_plan.rot.assign(static_cast<size_t>(out_plan.n) + 1, {});
    std::vector<int> emap(static_cast<size_t>(plan.m()), -1);
    for (int eid = 0; eid < plan.m(); ++eid) {
        if (dead.count(eid)) continue;
        const Edge& e = plan.edge_list[static_cast<size_t>(eid)];
        emap[static_cast<size_t>(eid)] =
            out_plan.add_edge(vmap.at(e.first), vmap.at(e.second));
    }
    for (const auto& [old_v, new_v] : vmap) {
        for (int eid : plan.rot[static_cast<size_t>(old_v)])
            if (emap[static_cast<size_t>(eid)] >= 0)
                out_plan.rot[static_cast<size_t>(new_v)].push_back(emap[static_cast<size_t>(eid)]);
    }

    std::set<Edge> gedges;
    for (int eid = 0; eid < plan.m(); ++eid)
        if (!is_seg[static_cast<size_t>(eid)] && !dead.count(eid))
            gedges.insert(make_edge(plan.edge_list[static_cast<size_t>(eid)].first,
                                    plan.edge_list[static_cast<size_t>(eid)].second));
    for (const auto& rec : crossings) {
        gedges.insert(rec.ab);
        gedges.insert(rec.cd);
    }
    OnePlanarEmbedding out;
    out.g = build_graph(n, {gedges.begin(), gedges.end()});
    out.crossings = crossings;
    out.plan = out_plan;
    for (auto& rec : out.crossings)
        rec.flag = alternation_flag(out.plan, rec).value_or(0);
    return out;
}

} // namespace onemap

#endif
