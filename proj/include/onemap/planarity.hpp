#ifndef ONEMAP_PLANARITY_HPP
#define ONEMAP_PLANARITY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "onemap/graph.hpp"
#include "onemap/rotation.hpp"

namespace onemap {

// ---------------------------------------------------------------------------
// Primary planarity core: Boyer-Myrvold via Boost, with rotation extraction.
// ---------------------------------------------------------------------------

// Input as 1-based vertex count + edge list (simple). Returns a rotation
// system witnessing planarity, or nullopt if nonplanar.
inline std::optional<EmbeddedGraph> planar_embedding_bm(int n,
                                                        const std::vector<Edge>& edges) {
    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
    BGraph bg(static_cast<size_t>(n));
    for (size_t i = 0; i < edges.size(); ++i) {
        auto res = boost::add_edge(static_cast<size_t>(edges[i].first - 1),
                                   static_cast<size_t>(edges[i].second - 1), bg);
        boost::put(boost::edge_index, bg, res.first, static_cast<int>(i));
    }
    using EdgeDesc = boost::graph_traits<BGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> emb(static_cast<size_t>(n));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = emb.data());
    if (!planar) return std::nullopt;
    EmbeddedGraph eg;
    eg.n = n;
    eg.edge_list = edges;
    eg.rot.assign(static_cast<size_t>(n) + 1, {});
    auto eidx = boost::get(boost::edge_index, bg);
    for (int v = 1; v <= n; ++v)
        for (const EdgeDesc& ed : emb[static_cast<size_t>(v - 1)])
            eg.rot[static_cast<size_t>(v)].push_back(eidx[ed]);
    return eg;
}

inline bool is_planar_graph_bm(int n, const std::vector<Edge>& edges) {
    return planar_embedding_bm(n, edges).has_value();
}

// ---------------------------------------------------------------------------
// Second, independent planarity implementation: Demoucron-Malgrange-Pertuiset
// face-by-face insertion. Decision only; used for dual-implementation checks.
// ---------------------------------------------------------------------------

namespace dmp {

// Planarity of one 2-connected graph given as adjacency sets over 0..n-1.
inline bool planar_biconnected(int n, const std::vector<std::set<int>>& adj) {
    int m = 0;
    for (const auto& a : adj) m += static_cast<int>(a.size());
    m /= 2;
    if (n < 5 || m < 9) return true; // smaller than K5 and K3,3
    if (m > 3 * n - 6) return false;

    // start from any cycle: walk greedily along unvisited vertices until a
    // visited non-predecessor neighbor closes one (degrees >= 2 here)
    std::vector<int> cyc;
    {
        std::vector<int> order;
        std::vector<int> pos(static_cast<size_t>(n), -1);
        int v = 0;
        while (cyc.empty()) {
            pos[static_cast<size_t>(v)] = static_cast<int>(order.size());
            order.push_back(v);
            int prev = order.size() >= 2 ? order[order.size() - 2] : -1;
            int next = -1;
            for (int w : adj[static_cast<size_t>(v)]) {
                if (pos[static_cast<size_t>(w)] >= 0) {
                    if (w != prev) {
                        cyc.assign(order.begin() + pos[static_cast<size_t>(w)], order.end());
                        break;
                    }
                } else if (next < 0) {
                    next = w;
                }
            }
            if (!cyc.empty()) break;
            if (next < 0) return true; // dead end: no cycle at all
            v = next;
        }
        if (cyc.size() < 3) return true;
    }

    std::vector<char> embedded_v(static_cast<size_t>(n), 0);
    std::set<Edge> embedded_e;
    auto add_emb_edge = [&](int a, int b) { embedded_e.insert(make_edge(a, b)); };
    for (size_t i = 0; i < cyc.size(); ++i) {
        embedded_v[static_cast<size_t>(cyc[i])] = 1;
        add_emb_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
    }

    // faces as vertex sets only (enough for DMP admissibility)
    std::vector<std::vector<int>> faces{cyc, cyc};

    while (static_cast<int>(embedded_e.size()) < m) {
        // bridges (fragments) relative to the embedded subgraph
        // fragment = connected component of G - embedded vertices, plus its
        // attachments; plus single unembedded edges between embedded vertices
        struct Frag {
            std::vector<int> attachments;     // embedded contact vertices
            std::vector<int> interior;        // unembedded vertices
        };
        std::vector<Frag> frags;
        std::vector<int> frag_of(static_cast<size_t>(n), -1);
        for (int s = 0; s < n; ++s) {
            if (embedded_v[static_cast<size_t>(s)] || frag_of[static_cast<size_t>(s)] >= 0)
                continue;
            Frag fr;
            std::set<int> att;
            std::vector<int> stack{s};
            frag_of[static_cast<size_t>(s)] = static_cast<int>(frags.size());
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                fr.interior.push_back(v);
                for (int w : adj[static_cast<size_t>(v)]) {
                    if (embedded_v[static_cast<size_t>(w)]) {
                        att.insert(w);
                    } else if (frag_of[static_cast<size_t>(w)] < 0) {
                        frag_of[static_cast<size_t>(w)] = static_cast<int>(frags.size());
                        stack.push_back(w);
                    }
                }
            }
            fr.attachments.assign(att.begin(), att.end());
            frags.push_back(std::move(fr));
        }
        for (int v = 0; v < n; ++v) {
            if (!embedded_v[static_cast<size_t>(v)]) continue;
            for (int w : adj[static_cast<size_t>(v)]) {
                if (w <= v || !embedded_v[static_cast<size_t>(w)]) continue;
                if (embedded_e.count(make_edge(v, w))) continue;
                Frag fr;
                fr.attachments = {v, w};
                frags.push_back(std::move(fr));
            }
        }
        if (frags.empty()) break;

        // admissible faces per fragment
        int pick = -1;
        std::vector<int> pick_faces;
        for (size_t fi = 0; fi < frags.size(); ++fi) {
            std::vector<int> admissible;
            for (size_t k = 0; k < faces.size(); ++k) {
                bool ok = true;
                for (int a : frags[fi].attachments) {
                    if (std::find(faces[k].begin(), faces[k].end(), a) == faces[k].end()) {
                        ok = false;
                        break;
                    }
                }
                if (ok) admissible.push_back(static_cast<int>(k));
            }
            if (admissible.empty()) return false;
            if (pick < 0 || admissible.size() == 1) {
                pick = static_cast<int>(fi);
                pick_faces = admissible;
                if (admissible.size() == 1 && frags[fi].attachments.size() >= 2) break;
            }
        }

        // embed an alpha-path of the chosen fragment into an admissible face
        const Frag& fr = frags[static_cast<size_t>(pick)];
        std::vector<int> path; // attachment ... attachment through interior
        if (fr.interior.empty()) {
            path = {fr.attachments[0], fr.attachments[1]};
        } else if (fr.attachments.size() == 1) {
            // 2-connected input should prevent this, but stay safe:
            // attach a single edge into the fragment and continue
            int a = fr.attachments[0];
            int inside = -1;
            for (int w : adj[static_cast<size_t>(a)])
                if (!embedded_v[static_cast<size_t>(w)] &&
                    frag_of[static_cast<size_t>(w)] == pick) { inside = w; break; }
            path = {a, inside};
            embedded_v[static_cast<size_t>(inside)] = 1;
            add_emb_edge(a, inside);
            // vertex joins the face it was placed in; faces unchanged otherwise
            faces[static_cast<size_t>(pick_faces[0])].push_back(inside);
            continue;
        } else {
            // BFS inside the fragment from one attachment to another
            int a0 = fr.attachments[0];
            std::vector<int> prev(static_cast<size_t>(n), -2);
            std::vector<int> queue;
            for (int w : adj[static_cast<size_t>(a0)])
                if (!embedded_v[static_cast<size_t>(w)] && frag_of[static_cast<size_t>(w)] == pick &&
                    prev[static_cast<size_t>(w)] == -2) {
                    prev[static_cast<size_t>(w)] = a0;
                    queue.push_back(w);
                }
            int endv = -1;
            for (size_t qi = 0; qi < queue.size() && endv < 0; ++qi) {
                int v = queue[qi];
                for (int w : adj[static_cast<size_t>(v)]) {
                    if (embedded_v[static_cast<size_t>(w)]) {
                        if (w != a0) {
                            path.clear();
                            path.push_back(w);
                            int x = v;
                            while (x != a0) {
                                path.push_back(x);
                                x = prev[static_cast<size_t>(x)];
                            }
                            path.push_back(a0);
                            endv = w;
                            break;
                        }
                    } else if (prev[static_cast<size_t>(w)] == -2) {
                        prev[static_cast<size_t>(w)] = v;
                        queue.push_back(w);
                    }
                }
            }
            if (endv < 0) {
                // fragment hangs on one attachment only; embed one edge
                int inside = queue.empty() ? -1 : queue[0];
                embedded_v[static_cast<size_t>(inside)] = 1;
                add_emb_edge(a0, inside);
                faces[static_cast<size_t>(pick_faces[0])].push_back(inside);
                continue;
            }
        }

        for (size_t i = 0; i + 1 < path.size(); ++i) {
            add_emb_edge(path[i], path[i + 1]);
            embedded_v[static_cast<size_t>(path[i])] = 1;
        }
        embedded_v[static_cast<size_t>(path.back())] = 1;

        // split the chosen face along the path
        int fk = pick_faces[0];
        std::vector<int> face = faces[static_cast<size_t>(fk)];
        int s = path.front(), t = path.back();
        auto pos_s = std::find(face.begin(), face.end(), s) - face.begin();
        // rotate face to start at s
        std::rotate(face.begin(), face.begin() + pos_s, face.end());
        auto pos_t = std::find(face.begin(), face.end(), t) - face.begin();
        std::vector<int> side1(face.begin(), face.begin() + pos_t + 1); // s..t
        std::vector<int> side2(face.begin() + pos_t, face.end());       // t..end
        side2.push_back(s);
        std::vector<int> mid(path.begin() + 1, path.end() - 1); // interior of path
        std::vector<int> f1 = side1;
        for (auto it = mid.rbegin(); it != mid.rend(); ++it) f1.push_back(*it);
        std::vector<int> f2 = side2;
        for (int v : mid) f2.push_back(v);
        faces[static_cast<size_t>(fk)] = f1;
        faces.push_back(f2);
    }
    return true;
}

} // namespace dmp

// Planarity of an arbitrary simple graph by the DMP algorithm applied per
// biconnected component.
inline bool is_planar_graph_dmp(int n, const std::vector<Edge>& edges) {
    if (n == 0) return true;
    // biconnected components via lowpoint DFS (edge stacking)
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n) + 1);
    for (size_t i = 0; i < edges.size(); ++i) {
        adj[static_cast<size_t>(edges[i].first)].push_back({edges[i].second, static_cast<int>(i)});
        adj[static_cast<size_t>(edges[i].second)].push_back({edges[i].first, static_cast<int>(i)});
    }
    std::vector<int> disc(static_cast<size_t>(n) + 1, -1), low(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<int>> comps; // lists of edge ids
    std::vector<int> estack;
    int timer = 0;
    // recursive lambda
    auto dfs = [&](auto&& self, int v, int pe) -> void {
        disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
        for (auto [w, eid] : adj[static_cast<size_t>(v)]) {
            if (eid == pe) continue;
            if (disc[static_cast<size_t>(w)] < 0) {
                estack.push_back(eid);
                self(self, w, eid);
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
                if (low[static_cast<size_t>(w)] >= disc[static_cast<size_t>(v)]) {
                    std::vector<int> comp;
                    while (true) {
                        int e = estack.back();
                        estack.pop_back();
                        comp.push_back(e);
                        if (e == eid) break;
                    }
                    comps.push_back(std::move(comp));
                }
            } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(v)]) {
                estack.push_back(eid);
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
            }
        }
    };
    for (int v = 1; v <= n; ++v)
        if (disc[static_cast<size_t>(v)] < 0) dfs(dfs, v, -1);

    for (const auto& comp : comps) {
        // relabel component vertices to 0..k-1
        std::map<int, int> id;
        for (int eid : comp) {
            id.emplace(edges[static_cast<size_t>(eid)].first, 0);
            id.emplace(edges[static_cast<size_t>(eid)].second, 0);
        }
        int k = 0;
        for (auto& [v, x] : id) x = k++;
        std::vector<std::set<int>> cadj(static_cast<size_t>(k));
        for (int eid : comp) {
            int a = id[edges[static_cast<size_t>(eid)].first];
            int b = id[edges[static_cast<size_t>(eid)].second];
            cadj[static_cast<size_t>(a)].insert(b);
            cadj[static_cast<size_t>(b)].insert(a);
        }
        if (!dmp::planar_biconnected(k, cadj)) return false;
    }
    return true;
}

} // namespace onemap

#endif
