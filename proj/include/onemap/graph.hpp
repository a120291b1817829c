#ifndef ONEMAP_GRAPH_HPP
#define ONEMAP_GRAPH_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "onemap/fraction.hpp"

namespace onemap {

// Vertices are 1-based contiguous labels throughout; file formats and
// certificates reference these labels directly.
using Edge = std::pair<int, int>; // normalized: first < second

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

// Simple undirected graph. Immutable after construction.
struct SimpleGraph {
    int n = 0;
    std::vector<Edge> edges; // sorted, unique, normalized

    int m() const { return static_cast<int>(edges.size()); }

    bool has_edge(int u, int v) const {
        return std::binary_search(edges.begin(), edges.end(), make_edge(u, v));
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
        for (const auto& [u, v] : edges) {
            adj[static_cast<size_t>(u)].push_back(v);
            adj[static_cast<size_t>(v)].push_back(u);
        }
        return adj;
    }

    std::vector<Edge> non_edges() const {
        std::vector<Edge> out;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (!has_edge(u, v)) out.push_back({u, v});
        return out;
    }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n == b.n && a.edges == b.edges;
    }
    friend bool operator<(const SimpleGraph& a, const SimpleGraph& b) {
        return std::tie(a.n, a.edges) < std::tie(b.n, b.edges);
    }
};

// Validates and normalizes an edge list. Input order is irrelevant.
inline SimpleGraph build_graph(int n, const std::vector<Edge>& edge_list) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    std::set<Edge> seen;
    for (const auto& [u, v] : edge_list) {
        if (u == v)
            throw GraphError("self-loop at " + std::to_string(u));
        if (u < 1 || u > n || v < 1 || v > n)
            throw GraphError("endpoint out of range in edge (" + std::to_string(u) +
                             "," + std::to_string(v) + ")");
        Edge e = make_edge(u, v);
        if (!seen.insert(e).second)
            throw GraphError("duplicate edge (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ")");
    }
    SimpleGraph g;
    g.n = n;
    g.edges.assign(seen.begin(), seen.end());
    return g;
}

namespace detail {

// Connectivity of the subgraph induced by dropping `removed` vertices.
inline bool connected_without(const SimpleGraph& g,
                              const std::vector<std::vector<int>>& adj,
                              const std::vector<int>& removed) {
    std::vector<char> dead(static_cast<size_t>(g.n) + 1, 0);
    for (int r : removed) dead[static_cast<size_t>(r)] = 1;
    int start = 0;
    int alive = 0;
    for (int v = 1; v <= g.n; ++v)
        if (!dead[static_cast<size_t>(v)]) { ++alive; if (!start) start = v; }
    if (alive == 0) return true;
    std::vector<char> vis(static_cast<size_t>(g.n) + 1, 0);
    std::vector<int> stack{start};
    vis[static_cast<size_t>(start)] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : adj[static_cast<size_t>(v)])
            if (!dead[static_cast<size_t>(w)] && !vis[static_cast<size_t>(w)]) {
                vis[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    return count == alive;
}

} // namespace detail

inline bool is_connected(const SimpleGraph& g) {
    if (g.n == 0) return true;
    return detail::connected_without(g, g.adjacency(), {});
}

// 0 = disconnected, otherwise the largest c <= 3 with G c-connected
// (3 means "at least 3-connected"). Complete graphs: min(3, n-1).
inline int connectivity_level(const SimpleGraph& g) {
    if (g.n < 1) throw GraphError("connectivity_level requires n >= 1");
    if (g.n == 1) return 1;
    auto adj = g.adjacency();
    if (!detail::connected_without(g, adj, {})) return 0;
    int cap = std::min(3, g.n - 1); // K_n has connectivity n-1
    int level = 1;
    // c-connected iff no set of c-1 vertices disconnects
    for (int c = 2; c <= cap; ++c) {
        bool ok = true;
        if (c == 2) {
            for (int v = 1; v <= g.n && ok; ++v)
                if (!detail::connected_without(g, adj, {v})) ok = false;
        } else {
            for (int u = 1; u <= g.n && ok; ++u)
                for (int v = u + 1; v <= g.n && ok; ++v)
                    if (!detail::connected_without(g, adj, {u, v})) ok = false;
        }
        if (!ok) break;
        level = c;
    }
    return level;
}

struct SeparationPair {
    int u = 0, v = 0;
    std::vector<std::vector<int>> components; // partition of V \ {u,v}, each sorted
};

// Brute force over all C(n,2) pairs. Requires a 2-connected input.
inline std::vector<SeparationPair> separation_pairs(const SimpleGraph& g) {
    if (connectivity_level(g) < 2)
        throw GraphError("separation_pairs requires a 2-connected graph");
    auto adj = g.adjacency();
    std::vector<SeparationPair> out;
    for (int u = 1; u <= g.n; ++u) {
        for (int v = u + 1; v <= g.n; ++v) {
            std::vector<char> dead(static_cast<size_t>(g.n) + 1, 0);
            dead[static_cast<size_t>(u)] = dead[static_cast<size_t>(v)] = 1;
            std::vector<int> comp_id(static_cast<size_t>(g.n) + 1, -1);
            int ncomp = 0;
            for (int s = 1; s <= g.n; ++s) {
                if (dead[static_cast<size_t>(s)] || comp_id[static_cast<size_t>(s)] >= 0)
                    continue;
                std::vector<int> stack{s};
                comp_id[static_cast<size_t>(s)] = ncomp;
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    for (int w : adj[static_cast<size_t>(x)])
                        if (!dead[static_cast<size_t>(w)] && comp_id[static_cast<size_t>(w)] < 0) {
                            comp_id[static_cast<size_t>(w)] = ncomp;
                            stack.push_back(w);
                        }
                }
                ++ncomp;
            }
            if (ncomp >= 2) {
                SeparationPair sp;
                sp.u = u;
                sp.v = v;
                sp.components.resize(static_cast<size_t>(ncomp));
                for (int x = 1; x <= g.n; ++x)
                    if (comp_id[static_cast<size_t>(x)] >= 0)
                        sp.components[static_cast<size_t>(comp_id[static_cast<size_t>(x)])].push_back(x);
                out.push_back(std::move(sp));
            }
        }
    }
    return out; // lexicographic by (u,v) by construction
}

enum class DensityClass { Planar, OnePlanar, IcPlanar, OuterOnePlanar, MaximalIcFamily };

inline Fraction density_coeff_a(DensityClass c) {
    switch (c) {
        case DensityClass::Planar: return Fraction(3);
        case DensityClass::OnePlanar: return Fraction(4);
        case DensityClass::IcPlanar: return Fraction(13, 4);
        case DensityClass::OuterOnePlanar: return Fraction(5, 2);
        case DensityClass::MaximalIcFamily: return Fraction(3);
    }
    return Fraction(0);
}

inline Fraction density_coeff_b(DensityClass c) {
    switch (c) {
        case DensityClass::Planar: return Fraction(-6);
        case DensityClass::OnePlanar: return Fraction(-8);
        case DensityClass::IcPlanar: return Fraction(-6);
        case DensityClass::OuterOnePlanar: return Fraction(-4);
        case DensityClass::MaximalIcFamily: return Fraction(-5);
    }
    return Fraction(0);
}

inline const char* density_class_name(DensityClass c) {
    switch (c) {
        case DensityClass::Planar: return "planar";
        case DensityClass::OnePlanar: return "one-planar";
        case DensityClass::IcPlanar: return "ic-planar";
        case DensityClass::OuterOnePlanar: return "outer-one-planar";
        case DensityClass::MaximalIcFamily: return "maximal-ic-family";
    }
    return "?";
}

struct DensityResult {
    bool pass = false;
    Fraction bound;
    Fraction slack; // m - (a*n + b), exact
};

inline DensityResult check_density(const SimpleGraph& g, DensityClass c) {
    if (g.n < 3) throw GraphError("check_density requires n >= 3");
    DensityResult r;
    r.bound = density_coeff_a(c) * Fraction(g.n) + density_coeff_b(c);
    r.slack = Fraction(g.m()) - r.bound;
    r.pass = r.slack <= Fraction(0);
    return r;
}

} // namespace onemap

#endif
