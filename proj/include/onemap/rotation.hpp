#ifndef ONEMAP_ROTATION_HPP
#define ONEMAP_ROTATION_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "onemap/certificate.hpp"
#include "onemap/graph.hpp"

namespace onemap {

// A graph with a rotation system: at each vertex a cyclic list of incident
// edge ids. Edge-id based so parallel edges (separated embeddings) work.
// Half-edge h = 2*eid + dir; dir 0 runs tail->head of edges[eid].
struct EmbeddedGraph {
    int n = 0;
    std::vector<Edge> edge_list;                 // not necessarily normalized order
    std::vector<std::vector<int>> rot;           // rot[v] = cyclic edge ids, v in 1..n

    int m() const { return static_cast<int>(edge_list.size()); }

    int tail(int h) const {
        const Edge& e = edge_list[static_cast<size_t>(h / 2)];
        return (h & 1) ? e.second : e.first;
    }
    int head(int h) const {
        const Edge& e = edge_list[static_cast<size_t>(h / 2)];
        return (h & 1) ? e.first : e.second;
    }
    int half_edge(int eid, int from) const {
        return 2 * eid + (edge_list[static_cast<size_t>(eid)].first == from ? 0 : 1);
    }

    int other_end(int eid, int v) const {
        const Edge& e = edge_list[static_cast<size_t>(eid)];
        return e.first == v ? e.second : e.first;
    }

    int add_edge(int u, int v) {
        edge_list.push_back({u, v});
        return m() - 1;
    }

    int degree(int v) const { return static_cast<int>(rot[static_cast<size_t>(v)].size()); }

    // Successor convention: after arriving at v along eid, the face walk
    // leaves along the next edge in rot[v].
    int next_half_edge(int h) const {
        int v = head(h);
        int eid = h / 2;
        const auto& r = rot[static_cast<size_t>(v)];
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == eid)
                return half_edge(r[(i + 1) % r.size()], v);
        throw std::logic_error("edge missing from rotation at vertex " + std::to_string(v));
    }

    std::vector<int> neighbors_in_rotation(int v) const {
        std::vector<int> out;
        for (int eid : rot[static_cast<size_t>(v)]) out.push_back(other_end(eid, v));
        return out;
    }
};

// Build from per-vertex cyclic neighbor lists (simple graphs only).
inline EmbeddedGraph embedded_from_neighbors(int n,
                                             const std::vector<std::vector<int>>& nbrs) {
    EmbeddedGraph eg;
    eg.n = n;
    eg.rot.assign(static_cast<size_t>(n) + 1, {});
    std::map<Edge, int> eid_of;
    for (int v = 1; v <= n; ++v) {
        for (int w : nbrs[static_cast<size_t>(v)]) {
            if (w < 1 || w > n || w == v)
                throw GraphError("bad neighbor " + std::to_string(w) + " at vertex " +
                                 std::to_string(v));
            Edge e = make_edge(v, w);
            auto it = eid_of.find(e);
            int eid;
            if (it == eid_of.end()) {
                eid = static_cast<int>(eg.edge_list.size());
                eg.edge_list.push_back(e);
                eid_of.emplace(e, eid);
            } else {
                eid = it->second;
            }
            eg.rot[static_cast<size_t>(v)].push_back(eid);
        }
    }
    // each edge must appear exactly once in each endpoint's rotation
    for (int eid = 0; eid < eg.m(); ++eid) {
        for (int v : {eg.edge_list[static_cast<size_t>(eid)].first,
                      eg.edge_list[static_cast<size_t>(eid)].second}) {
            int count = 0;
            for (int x : eg.rot[static_cast<size_t>(v)])
                if (x == eid) ++count;
            if (count != 1)
                throw GraphError("edge (" +
                                 std::to_string(eg.edge_list[static_cast<size_t>(eid)].first) + "," +
                                 std::to_string(eg.edge_list[static_cast<size_t>(eid)].second) +
                                 ") appears " + std::to_string(count) +
                                 " times in rotation at " + std::to_string(v));
        }
    }
    return eg;
}

// A face as the cyclic sequence of directed half-edges on its boundary.
struct Face {
    std::vector<int> half_edges;

    std::vector<int> vertex_walk(const EmbeddedGraph& g) const {
        std::vector<int> w;
        for (int h : half_edges) w.push_back(g.tail(h));
        return w;
    }
    int length() const { return static_cast<int>(half_edges.size()); }
};

namespace detail {

// Lexicographically least rotation of a cyclic int sequence.
inline std::vector<int> canonical_cycle(std::vector<int> c) {
    if (c.empty()) return c;
    std::vector<int> best = c;
    for (size_t s = 1; s < c.size(); ++s) {
        std::rotate(c.begin(), c.begin() + 1, c.end());
        if (c < best) best = c;
    }
    return best;
}

} // namespace detail

// Every directed half-edge appears in exactly one face. Faces are
// canonicalized to start at their lexicographically least half-edge
// rotation, and listed sorted for determinism.
inline std::vector<Face> trace_faces(const EmbeddedGraph& g) {
    std::vector<char> used(static_cast<size_t>(2 * g.m()), 0);
    std::vector<Face> faces;
    for (int h0 = 0; h0 < 2 * g.m(); ++h0) {
        if (used[static_cast<size_t>(h0)]) continue;
        Face f;
        int h = h0;
        do {
            used[static_cast<size_t>(h)] = 1;
            f.half_edges.push_back(h);
            h = g.next_half_edge(h);
        } while (h != h0);
        f.half_edges = detail::canonical_cycle(f.half_edges);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.half_edges < b.half_edges;
    });
    return faces;
}

inline int count_faces(const EmbeddedGraph& g) {
    return static_cast<int>(trace_faces(g).size());
}

// Genus-0 check via Euler's formula: V - E + F = 2. Connected input only.
inline Certificate is_planar_rotation(const EmbeddedGraph& g) {
    // connectivity over the embedded graph
    if (g.n >= 1) {
        std::vector<char> vis(static_cast<size_t>(g.n) + 1, 0);
        std::vector<int> stack{1};
        vis[1] = 1;
        int seen = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++seen;
            for (int eid : g.rot[static_cast<size_t>(v)]) {
                int w = g.other_end(eid, v);
                if (!vis[static_cast<size_t>(w)]) {
                    vis[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (seen != g.n)
            return Certificate::reject("connected", "graph is disconnected");
    }
    int f = g.m() == 0 ? 1 : count_faces(g); // edgeless sphere: one face
    if (g.n - g.m() + f != 2)
        return Certificate::reject("euler",
                                   "V-E+F = " + std::to_string(g.n) + "-" +
                                   std::to_string(g.m()) + "+" + std::to_string(f) +
                                   " != 2");
    return Certificate::accept();
}

inline bool euler_planar(const EmbeddedGraph& g) {
    return is_planar_rotation(g).accepted();
}

// Canonical signature of an embedding up to sphere homeomorphism:
// face multiset, minimized over the two global orientations.
inline std::string embedding_signature(const EmbeddedGraph& g) {
    auto render = [&](bool reversed) {
        std::vector<std::vector<int>> cycles;
        EmbeddedGraph h = g;
        if (reversed)
            for (auto& r : h.rot) std::reverse(r.begin(), r.end());
        for (const Face& f : trace_faces(h))
            cycles.push_back(detail::canonical_cycle(f.vertex_walk(h)));
        std::sort(cycles.begin(), cycles.end());
        std::string s;
        for (const auto& c : cycles) {
            for (int v : c) s += std::to_string(v) + ",";
            s += ";";
        }
        return s;
    };
    std::string a = render(false);
    std::string b = render(true);
    return a < b ? a : b;
}

} // namespace onemap

#endif
