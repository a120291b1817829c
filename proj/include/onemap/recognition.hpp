#ifndef ONEMAP_RECOGNITION_HPP
#define ONEMAP_RECOGNITION_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "onemap/certificate.hpp"
#include "onemap/embedding.hpp"
#include "onemap/graph.hpp"
#include "onemap/planarity.hpp"
#include "onemap/rotation.hpp"
#include "onemap/witness.hpp"

namespace onemap {

// Exhaustive searches stand in for the cited polynomial algorithms;
// exceeding any ceiling yields an indeterminate verdict, never a wrong one.
struct SearchBudget {
    int max_vertices = 16;
    int max_edges = 64;
    long long max_candidates = 2'000'000;
    double time_ceiling_seconds = 120.0;
};

struct OracleResult {
    Certificate cert;
    std::optional<OnePlanarEmbedding> embedding;
};

struct RotationResult {
    Certificate cert;
    std::optional<OnePlanarEmbedding> embedding;
};

struct ClassResult {
    Certificate cert;
    std::optional<OnePlanarEmbedding> embedding;
    std::optional<BipartiteMapWitness> witness;
};

namespace detail {

struct BudgetState {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long candidates = 0;

    bool exceeded(const SearchBudget& b) {
        if (++candidates > b.max_candidates) return true;
        double sec = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start).count();
        return sec > b.time_ceiling_seconds;
    }
};

// Candidate crossing pairs: edge-id pairs with four distinct endpoints,
// lexicographic by (i,j).
inline std::vector<std::pair<int, int>> crossing_candidates(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < g.m(); ++i)
        for (int j = i + 1; j < g.m(); ++j) {
            const Edge& a = g.edges[static_cast<size_t>(i)];
            const Edge& b = g.edges[static_cast<size_t>(j)];
            if (a.first != b.first && a.first != b.second && a.second != b.first &&
                a.second != b.second)
                out.push_back({i, j});
        }
    return out;
}

// All matchings of exactly k candidate pairs (no edge in two pairs), lex
// order over candidate indices. f(cur) returning true stops the walk.
template <class F>
inline bool matchings_of_size(const std::vector<std::pair<int, int>>& cand, int m, int k,
                              F&& f) {
    std::vector<char> used(static_cast<size_t>(m), 0);
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, size_t from) -> bool {
        if (static_cast<int>(cur.size()) == k) return f(cur);
        for (size_t ci = from; ci < cand.size(); ++ci) {
            auto [i, j] = cand[ci];
            if (used[static_cast<size_t>(i)] || used[static_cast<size_t>(j)]) continue;
            used[static_cast<size_t>(i)] = used[static_cast<size_t>(j)] = 1;
            cur.push_back(cand[ci]);
            bool stop = self(self, ci + 1);
            cur.pop_back();
            used[static_cast<size_t>(i)] = used[static_cast<size_t>(j)] = 0;
            if (stop) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

inline std::string crossing_set_str(const SimpleGraph& g,
                                    const std::vector<std::pair<int, int>>& cross) {
    if (cross.empty()) return "none";
    std::string s;
    for (auto [i, j] : cross) {
        if (!s.empty()) s += "; ";
        s += edge_str(g.edges[static_cast<size_t>(i)]) + "x" +
             edge_str(g.edges[static_cast<size_t>(j)]);
    }
    return s;
}

// Wheel gadget: each crossing becomes a W4 wheel (center + 4-cycle rim)
// whose rim vertices attach to the four crossing endpoints in alternating
// order a,c,b,d. The gadgeted graph is planar iff the crossing set admits a
// planar embedding of the planarization with an alternating rotation at
// every dummy (the 3-connected wheel is rigid up to reflection, and
// reflection toggles the flag).
struct WheelGadget {
    int n_total = 0;
    std::vector<Edge> edges;                       // gadget graph
    std::vector<int> plan_of_gadget;               // gadget eid -> plan eid, -1 internal
    std::vector<Edge> plan_edges;                  // planarization edge list
    std::vector<CrossingRecord> recs;              // flags left 0
    std::vector<std::array<int, 4>> seg_plan;      // per crossing: plan eids, rim order
    std::vector<std::array<int, 4>> spoke_gadget;  // per crossing: spoke gadget eids
    std::vector<int> center;
};

inline WheelGadget build_gadget(const SimpleGraph& g,
                                const std::vector<std::pair<int, int>>& cross) {
    int n = g.n;
    int k = static_cast<int>(cross.size());
    WheelGadget w;
    w.n_total = n + 5 * k;
    std::vector<char> crossed(static_cast<size_t>(g.m()), 0);
    for (auto [i, j] : cross)
        crossed[static_cast<size_t>(i)] = crossed[static_cast<size_t>(j)] = 1;
    for (int eid = 0; eid < g.m(); ++eid) {
        if (crossed[static_cast<size_t>(eid)]) continue;
        w.plan_of_gadget.push_back(static_cast<int>(w.plan_edges.size()));
        w.plan_edges.push_back(g.edges[static_cast<size_t>(eid)]);
        w.edges.push_back(g.edges[static_cast<size_t>(eid)]);
    }
    for (int ci = 0; ci < k; ++ci) {
        auto [i, j] = cross[static_cast<size_t>(ci)];
        auto [a, b] = g.edges[static_cast<size_t>(i)];
        auto [c, d] = g.edges[static_cast<size_t>(j)];
        int dummy = n + ci + 1;
        CrossingRecord rec;
        rec.ab = {a, b};
        rec.cd = {c, d};
        rec.dummy = dummy;
        w.recs.push_back(rec);
        std::array<int, 4> attach{a, c, b, d}; // alternating around the dummy
        std::array<int, 4> segs{};
        for (int t = 0; t < 4; ++t) {
            segs[static_cast<size_t>(t)] = static_cast<int>(w.plan_edges.size());
            w.plan_edges.push_back(make_edge(attach[static_cast<size_t>(t)], dummy));
        }
        w.seg_plan.push_back(segs);
        auto rim = [&](int t) { return n + 5 * ci + 1 + t; };
        int z = n + 5 * ci + 5;
        w.center.push_back(z);
        for (int t = 0; t < 4; ++t) { // rim cycle
            w.plan_of_gadget.push_back(-1);
            w.edges.push_back(make_edge(rim(t), rim((t + 1) % 4)));
        }
        std::array<int, 4> spokes{};
        for (int t = 0; t < 4; ++t) {
            spokes[static_cast<size_t>(t)] = static_cast<int>(w.edges.size());
            w.plan_of_gadget.push_back(-1);
            w.edges.push_back(make_edge(z, rim(t)));
        }
        w.spoke_gadget.push_back(spokes);
        for (int t = 0; t < 4; ++t) { // attachments carry the segments
            w.plan_of_gadget.push_back(w.seg_plan.back()[static_cast<size_t>(t)]);
            w.edges.push_back(make_edge(rim(t), attach[static_cast<size_t>(t)]));
        }
    }
    return w;
}

// Contract each wheel back to its dummy: the dummy rotation is the center's
// spoke order read as attachment endpoints, rotations at original vertices
// carry over with attachment edges relabeled to segments.
inline OnePlanarEmbedding embedding_from_gadget(const SimpleGraph& g, const WheelGadget& w,
                                                const EmbeddedGraph& gemb) {
    OnePlanarEmbedding out;
    out.g = g;
    out.crossings = w.recs;
    out.plan.n = g.n + static_cast<int>(w.recs.size());
    out.plan.edge_list = w.plan_edges;
    out.plan.rot.assign(static_cast<size_t>(out.plan.n) + 1, {});
    for (int v = 1; v <= g.n; ++v)
        for (int geid : gemb.rot[static_cast<size_t>(v)])
            out.plan.rot[static_cast<size_t>(v)].push_back(
                w.plan_of_gadget[static_cast<size_t>(geid)]);
    for (size_t ci = 0; ci < w.recs.size(); ++ci) {
        int dummy = w.recs[ci].dummy;
        for (int geid : gemb.rot[static_cast<size_t>(w.center[ci])])
            for (int t = 0; t < 4; ++t)
                if (w.spoke_gadget[ci][static_cast<size_t>(t)] == geid)
                    out.plan.rot[static_cast<size_t>(dummy)].push_back(
                        w.seg_plan[ci][static_cast<size_t>(t)]);
    }
    for (auto& rec : out.crossings)
        rec.flag = alternation_flag(out.plan, rec).value_or(0);
    return out;
}

} // namespace detail

// Exhaustive 1-planarity oracle: crossing sets by size then lex, wheel
// gadget + Boyer-Myrvold per set, embedding extracted from the first hit.
namespace detail {

// Construction fast path for edge-maximal density: an optimal 1-planar graph
// (m = 4n-8) is a 3-connected quadrangulation plus both diagonals of every
// face. The quadrangulation is bipartite and the diagonals are monochromatic,
// so the skeleton is recovered by trying all 2-colorings. Any embedding built
// this way is validated before being returned, so the path is sound; a miss
// just falls back to the generic search.
inline std::optional<OnePlanarEmbedding> optimal_skeleton_embedding(const SimpleGraph& g) {
    int n = g.n;
    if (n < 8 || n > 62 || g.m() != 4 * n - 8) return std::nullopt;
    for (unsigned long long mask = 0; mask < (1ull << (n - 1)); ++mask) {
        auto color = [&](int v) {
            return v == 1 ? 0 : static_cast<int>(mask >> (v - 2) & 1);
        };
        std::vector<Edge> skel;
        std::set<Edge> diag;
        for (const Edge& e : g.edges)
            if (color(e.first) != color(e.second))
                skel.push_back(e);
            else
                diag.insert(e);
        if (static_cast<int>(skel.size()) != 2 * n - 4) continue;
        if (!is_connected(build_graph(n, skel))) continue;
        auto emb = planar_embedding_bm(n, skel);
        if (!emb) continue;
        auto faces = trace_faces(*emb);
        if (faces.size() != static_cast<size_t>(n - 2)) continue;
        bool ok = true;
        std::set<Edge> used;
        for (const Face& f : faces) {
            if (f.length() != 4) {
                ok = false;
                break;
            }
            auto w = f.vertex_walk(*emb);
            for (const Edge& d : {make_edge(w[0], w[2]), make_edge(w[1], w[3])})
                if (!diag.count(d) || !used.insert(d).second) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (!ok || used != diag) continue;
        OnePlanarEmbedding e;
        e.plan = *emb;
        for (const Face& f : faces) insert_quad_crossing(e, f);
        e.g = g;
        if (validate_1planar(e).accepted()) return e;
    }
    return std::nullopt;
}

} // namespace detail

inline OracleResult oracle_1planar(const SimpleGraph& g,
                                   const SearchBudget& budget = SearchBudget{},
                                   bool prune = true) {
    if (!is_connected(g)) throw GraphError("oracle_1planar requires a connected graph");
    OracleResult res;
    if (g.n > budget.max_vertices || g.m() > budget.max_edges) {
        res.cert = Certificate::indeterminate("budget exceeded: instance size");
        return res;
    }
    if (prune && g.n >= 3) {
        DensityResult d = check_density(g, DensityClass::OnePlanar);
        if (!d.pass) {
            res.cert = Certificate::reject("density", "m=" + std::to_string(g.m()) +
                                           " exceeds 4n-8=" + d.bound.str());
            return res;
        }
    }
    if (auto fast = detail::optimal_skeleton_embedding(g)) {
        res.cert = Certificate::accept();
        res.cert.notes.push_back("quadrangulation-skeleton construction");
        res.embedding = std::move(fast);
        return res;
    }
    detail::BudgetState bs;
    auto cand = detail::crossing_candidates(g);
    // planarization has m+2k edges on n+k vertices; planarity forces the
    // lower bound on k
    int klo = (prune && g.n >= 3) ? std::max(0, g.m() - 3 * g.n + 6) : 0;
    int khi = g.m() / 2;
    bool budget_hit = false;
    for (int k = klo; k <= khi && !budget_hit; ++k) {
        bool found = detail::matchings_of_size(
            cand, g.m(), k, [&](const std::vector<std::pair<int, int>>& cur) {
                if (bs.exceeded(budget)) {
                    budget_hit = true;
                    return true;
                }
                detail::WheelGadget w = detail::build_gadget(g, cur);
                auto gemb = planar_embedding_bm(w.n_total, w.edges);
                if (!gemb) return false;
                res.embedding = detail::embedding_from_gadget(g, w, *gemb);
                res.cert = Certificate::accept();
                res.cert.notes.push_back("crossings: " + detail::crossing_set_str(g, cur));
                return true;
            });
        if (found && !budget_hit) return res;
    }
    res.cert = budget_hit
                   ? Certificate::indeterminate("budget exceeded during crossing-set search")
                   : Certificate::reject("not-1-planar",
                                         "no crossing set yields a 1-planar embedding");
    return res;
}

// Independent second oracle: same search shape, planarity decided by the
// Demoucron-Malgrange-Pertuiset implementation instead of Boyer-Myrvold.
inline Verdict oracle_1planar_second(const SimpleGraph& g,
                                     const SearchBudget& budget = SearchBudget{}) {
    if (!is_connected(g))
        throw GraphError("oracle_1planar_second requires a connected graph");
    if (g.n > budget.max_vertices || g.m() > budget.max_edges)
        return Verdict::Indeterminate;
    if (g.n >= 3 && !check_density(g, DensityClass::OnePlanar).pass) return Verdict::Reject;
    detail::BudgetState bs;
    auto cand = detail::crossing_candidates(g);
    int klo = g.n >= 3 ? std::max(0, g.m() - 3 * g.n + 6) : 0;
    bool budget_hit = false;
    for (int k = klo; k <= g.m() / 2 && !budget_hit; ++k) {
        bool found = detail::matchings_of_size(
            cand, g.m(), k, [&](const std::vector<std::pair<int, int>>& cur) {
                if (bs.exceeded(budget)) {
                    budget_hit = true;
                    return true;
                }
                detail::WheelGadget w = detail::build_gadget(g, cur);
                return is_planar_graph_dmp(w.n_total, w.edges);
            });
        if (found && !budget_hit) return Verdict::Accept;
    }
    return budget_hit ? Verdict::Indeterminate : Verdict::Reject;
}

// 1-planarity of a fixed rotation system: rotations at original vertices
// stay put (crossed edges replaced in place by their segments); search over
// crossing sets (size then lex) and alternation flags (lex), Euler check per
// candidate. Reports the first, hence lex-least, accepting candidate.
inline RotationResult rotation_1planar(const SimpleGraph& g, const EmbeddedGraph& r,
                                       const SearchBudget& budget = SearchBudget{}) {
    RotationResult res;
    if (r.n != g.n) throw GraphError("rotation system has wrong vertex count");
    std::map<Edge, int> geid_of;
    for (int i = 0; i < g.m(); ++i) geid_of[g.edges[static_cast<size_t>(i)]] = i;
    if (r.m() != g.m()) throw GraphError("rotation system has wrong edge count");
    std::vector<int> gmap(static_cast<size_t>(r.m()), -1); // r eid -> g eid
    for (int eid = 0; eid < r.m(); ++eid) {
        Edge e = make_edge(r.edge_list[static_cast<size_t>(eid)].first,
                           r.edge_list[static_cast<size_t>(eid)].second);
        auto it = geid_of.find(e);
        if (it == geid_of.end()) throw GraphError("rotation edge " + detail::edge_str(e) +
                                                  " not in graph");
        gmap[static_cast<size_t>(eid)] = it->second;
    }
    if (g.n > budget.max_vertices || g.m() > budget.max_edges) {
        res.cert = Certificate::indeterminate("budget exceeded: instance size");
        return res;
    }

    detail::BudgetState bs;
    auto cand = detail::crossing_candidates(g);
    bool budget_hit = false;
    for (int k = 0; k <= g.m() / 2 && !budget_hit; ++k) {
        bool found = detail::matchings_of_size(
            cand, g.m(), k, [&](const std::vector<std::pair<int, int>>& cur) {
                // planarization skeleton for this crossing set
                std::vector<char> crossed(static_cast<size_t>(g.m()), 0);
                for (auto [i, j] : cur)
                    crossed[static_cast<size_t>(i)] = crossed[static_cast<size_t>(j)] = 1;
                EmbeddedGraph plan;
                plan.n = g.n + k;
                plan.rot.assign(static_cast<size_t>(plan.n) + 1, {});
                std::vector<int> plain_pid(static_cast<size_t>(g.m()), -1);
                for (int eid = 0; eid < g.m(); ++eid)
                    if (!crossed[static_cast<size_t>(eid)])
                        plain_pid[static_cast<size_t>(eid)] =
                            plan.add_edge(g.edges[static_cast<size_t>(eid)].first,
                                          g.edges[static_cast<size_t>(eid)].second);
                std::map<std::pair<int, int>, int> seg_pid; // (g eid, endpoint) -> plan eid
                std::vector<CrossingRecord> recs;
                std::vector<std::array<int, 4>> segs; // per crossing: a,c,b,d order
                for (size_t ci = 0; ci < cur.size(); ++ci) {
                    auto [i, j] = cur[ci];
                    auto [a, b] = g.edges[static_cast<size_t>(i)];
                    auto [c, d] = g.edges[static_cast<size_t>(j)];
                    int dummy = g.n + static_cast<int>(ci) + 1;
                    CrossingRecord rec;
                    rec.ab = {a, b};
                    rec.cd = {c, d};
                    rec.dummy = dummy;
                    recs.push_back(rec);
                    std::array<int, 4> s{};
                    s[0] = plan.add_edge(a, dummy);
                    s[1] = plan.add_edge(c, dummy);
                    s[2] = plan.add_edge(b, dummy);
                    s[3] = plan.add_edge(d, dummy);
                    segs.push_back(s);
                    seg_pid[{i, a}] = s[0];
                    seg_pid[{i, b}] = s[2];
                    seg_pid[{j, c}] = s[1];
                    seg_pid[{j, d}] = s[3];
                }
                for (int v = 1; v <= g.n; ++v)
                    for (int reid : r.rot[static_cast<size_t>(v)]) {
                        int geid = gmap[static_cast<size_t>(reid)];
                        int pid = crossed[static_cast<size_t>(geid)]
                                      ? seg_pid.at({geid, v})
                                      : plain_pid[static_cast<size_t>(geid)];
                        plan.rot[static_cast<size_t>(v)].push_back(pid);
                    }
                // alternation flags in lex order (crossing 0 most significant)
                for (long long flags = 0; flags < (1LL << k); ++flags) {
                    if (bs.exceeded(budget)) {
                        budget_hit = true;
                        return true;
                    }
                    for (int ci = 0; ci < k; ++ci) {
                        int f = static_cast<int>((flags >> (k - 1 - ci)) & 1);
                        const auto& s = segs[static_cast<size_t>(ci)];
                        int dummy = recs[static_cast<size_t>(ci)].dummy;
                        plan.rot[static_cast<size_t>(dummy)] =
                            f == 0 ? std::vector<int>{s[0], s[1], s[2], s[3]}  // a,c,b,d
                                   : std::vector<int>{s[0], s[3], s[2], s[1]}; // a,d,b,c
                        recs[static_cast<size_t>(ci)].flag = f;
                    }
                    if (euler_planar(plan)) {
                        OnePlanarEmbedding emb;
                        emb.g = g;
                        emb.crossings = recs;
                        emb.plan = plan;
                        res.embedding = std::move(emb);
                        res.cert = Certificate::accept();
                        res.cert.notes.push_back("crossings: " +
                                                 detail::crossing_set_str(g, cur));
                        return true;
                    }
                }
                return false;
            });
        if (found && !budget_hit) return res;
    }
    res.cert = budget_hit
                   ? Certificate::indeterminate("budget exceeded during crossing-set search")
                   : Certificate::reject("rotation-not-1-planar",
                                         "no crossing set extends the rotation system to a "
                                         "1-planar embedding");
    return res;
}

enum class EnumStatus { Complete, Stopped, Budget };

// Enumerate all 1-planar embeddings of G up to sphere homeomorphism:
// accepting crossing sets x all planar rotation systems of the
// planarization (dummies restricted to their two alternating rotations),
// deduplicated by canonical face signature. visit returning true stops.
template <class Visit>
inline EnumStatus for_each_embedding(const SimpleGraph& g, const SearchBudget& budget,
                                     Visit&& visit) {
    if (!is_connected(g)) throw GraphError("for_each_embedding requires a connected graph");
    if (g.n > budget.max_vertices || g.m() > budget.max_edges) return EnumStatus::Budget;
    if (g.n >= 3 && !check_density(g, DensityClass::OnePlanar).pass)
        return EnumStatus::Complete; // nothing to enumerate
    detail::BudgetState bs;
    auto cand = detail::crossing_candidates(g);
    std::set<std::string> seen;
    int klo = g.n >= 3 ? std::max(0, g.m() - 3 * g.n + 6) : 0;
    EnumStatus status = EnumStatus::Complete;
    for (int k = klo; k <= g.m() / 2 && status == EnumStatus::Complete; ++k) {
        detail::matchings_of_size(
            cand, g.m(), k, [&](const std::vector<std::pair<int, int>>& cur) {
                if (bs.exceeded(budget)) {
                    status = EnumStatus::Budget;
                    return true;
                }
                // feasibility pre-filter: skip crossing sets with no
                // alternating planar embedding at all
                detail::WheelGadget w = detail::build_gadget(g, cur);
                if (!is_planar_graph_bm(w.n_total, w.edges)) return false;

                EmbeddedGraph plan;
                plan.n = g.n + k;
                plan.rot.assign(static_cast<size_t>(plan.n) + 1, {});
                plan.edge_list = w.plan_edges;
                std::vector<CrossingRecord> recs = w.recs;
                // incidence lists of the planarization at original vertices
                std::vector<std::vector<int>> inc(static_cast<size_t>(g.n) + 1);
                for (int pid = 0; pid < plan.m(); ++pid)
                    for (int v : {plan.edge_list[static_cast<size_t>(pid)].first,
                                  plan.edge_list[static_cast<size_t>(pid)].second})
                        if (v <= g.n) inc[static_cast<size_t>(v)].push_back(pid);
                // rotation options: originals get (d-1)! cyclic orders,
                // dummies their two alternating orders
                std::vector<std::vector<std::vector<int>>> options(
                    static_cast<size_t>(plan.n) + 1);
                for (int v = 1; v <= g.n; ++v) {
                    std::vector<int> base = inc[static_cast<size_t>(v)];
                    std::sort(base.begin(), base.end());
                    if (base.size() <= 2) {
                        options[static_cast<size_t>(v)].push_back(base);
                    } else {
                        do {
                            options[static_cast<size_t>(v)].push_back(base);
                        } while (std::next_permutation(base.begin() + 1, base.end()));
                    }
                }
                for (int ci = 0; ci < k; ++ci) {
                    const auto& s = w.seg_plan[static_cast<size_t>(ci)]; // a,c,b,d order
                    int dummy = recs[static_cast<size_t>(ci)].dummy;
                    options[static_cast<size_t>(dummy)] = {
                        {s[0], s[1], s[2], s[3]},  // flag 0: a,c,b,d
                        {s[0], s[3], s[2], s[1]}}; // flag 1: a,d,b,c
                }
                // odometer over the rotation choices
                std::vector<size_t> ix(static_cast<size_t>(plan.n) + 1, 0);
                while (true) {
                    if (bs.exceeded(budget)) {
                        status = EnumStatus::Budget;
                        return true;
                    }
                    for (int v = 1; v <= plan.n; ++v)
                        plan.rot[static_cast<size_t>(v)] =
                            options[static_cast<size_t>(v)][ix[static_cast<size_t>(v)]];
                    if (euler_planar(plan)) {
                        std::string sig = embedding_signature(plan);
                        if (seen.insert(sig).second) {
                            OnePlanarEmbedding emb;
                            emb.g = g;
                            emb.crossings = recs;
                            for (auto& rec : emb.crossings)
                                rec.flag = alternation_flag(plan, rec).value_or(0);
                            emb.plan = plan;
                            if (visit(emb)) {
                                status = EnumStatus::Stopped;
                                return true;
                            }
                        }
                    }
                    int v = 1;
                    while (v <= plan.n) {
                        if (++ix[static_cast<size_t>(v)] <
                            options[static_cast<size_t>(v)].size())
                            break;
                        ix[static_cast<size_t>(v)] = 0;
                        ++v;
                    }
                    if (v > plan.n) break;
                }
                return false;
            });
    }
    return status;
}

// Maximal 1-planar: 1-planar and no single-edge extension is. Outer loop
// over non-edges in lex order; the first addable edge is reported.
inline ClassResult is_maximal_1planar(const SimpleGraph& g,
                                      const SearchBudget& budget = SearchBudget{}) {
    ClassResult res;
    OracleResult base = oracle_1planar(g, budget);
    if (base.cert.verdict != Verdict::Accept) {
        res.cert = base.cert.verdict == Verdict::Reject
                       ? Certificate::reject("not-1-planar", "base graph is not 1-planar")
                       : base.cert;
        return res;
    }
    for (const Edge& e : g.non_edges()) {
        std::vector<Edge> es = g.edges;
        es.push_back(e);
        OracleResult ext = oracle_1planar(build_graph(g.n, es), budget);
        if (ext.cert.verdict == Verdict::Accept) {
            res.cert = Certificate::reject("addable-edge", detail::edge_str(e));
            return res;
        }
        if (ext.cert.verdict == Verdict::Indeterminate) {
            res.cert = ext.cert;
            return res;
        }
    }
    res.cert = Certificate::accept();
    res.embedding = base.embedding;
    return res;
}

// Optimal 1-planar: exactly 4n-8 edges and 1-planar (n >= 8).
inline ClassResult is_optimal_1planar(const SimpleGraph& g,
                                      const SearchBudget& budget = SearchBudget{}) {
    if (g.n < 8) throw GraphError("is_optimal_1planar requires n >= 8");
    ClassResult res;
    if (g.m() != 4 * g.n - 8) {
        res.cert = Certificate::reject("edge-count", "m=" + std::to_string(g.m()) +
                                       " but 4n-8=" + std::to_string(4 * g.n - 8));
        return res;
    }
    OracleResult base = oracle_1planar(g, budget);
    if (base.cert.verdict == Verdict::Accept) {
        res.cert = Certificate::accept();
        res.embedding = base.embedding;
    } else if (base.cert.verdict == Verdict::Reject) {
        res.cert = Certificate::reject("not-1-planar", "m = 4n-8 but G is not 1-planar");
    } else {
        res.cert = base.cert;
    }
    return res;
}

// Plane-maximal: some embedding is planar-maximal. Planar-maximal: all are.
inline ClassResult is_plane_maximal_1planar(const SimpleGraph& g,
                                            const SearchBudget& budget = SearchBudget{}) {
    ClassResult res;
    std::optional<OnePlanarEmbedding> found;
    EnumStatus st = for_each_embedding(g, budget, [&](const OnePlanarEmbedding& e) {
        if (is_planar_maximal_embedding(e).accepted()) {
            found = e;
            return true;
        }
        return false;
    });
    if (found) {
        res.cert = Certificate::accept();
        res.embedding = found;
    } else if (st == EnumStatus::Budget) {
        res.cert = Certificate::indeterminate("budget exceeded during embedding enumeration");
    } else if (!oracle_1planar(g, budget).cert.accepted()) {
        res.cert = Certificate::reject("not-1-planar", "graph has no 1-planar embedding");
    } else {
        res.cert = Certificate::reject("no-planar-maximal-embedding",
                                       "every embedding admits a planar edge");
    }
    return res;
}

inline ClassResult is_planar_maximal_1planar(const SimpleGraph& g,
                                             const SearchBudget& budget = SearchBudget{}) {
    ClassResult res;
    OracleResult base = oracle_1planar(g, budget);
    if (base.cert.verdict != Verdict::Accept) {
        res.cert = base.cert.verdict == Verdict::Reject
                       ? Certificate::reject("not-1-planar", "graph has no 1-planar embedding")
                       : base.cert;
        return res;
    }
    Certificate counter = Certificate::accept();
    EnumStatus st = for_each_embedding(g, budget, [&](const OnePlanarEmbedding& e) {
        Certificate c = is_planar_maximal_embedding(e);
        if (!c.accepted()) {
            counter = c;
            return true;
        }
        return false;
    });
    if (!counter.accepted()) {
        res.cert = Certificate::reject("non-planar-maximal-embedding",
                                       counter.violations[0].second);
    } else if (st == EnumStatus::Budget) {
        res.cert = Certificate::indeterminate("budget exceeded during embedding enumeration");
    } else {
        res.cert = Certificate::accept();
        res.embedding = base.embedding;
    }
    return res;
}

// Crossing-augmented 1-planar == 4-map graph; the witness B accompanies an
// accept. Planar graphs qualify vacuously via a crossing-free embedding.
inline ClassResult is_crossing_augmented_1planar(const SimpleGraph& g,
                                                 const SearchBudget& budget = SearchBudget{}) {
    ClassResult res;
    if (!is_connected(g)) {
        // disconnected: planar means crossing-free, hence vacuously augmented
        if (is_planar_graph_bm(g.n, g.edges)) {
            res.cert = Certificate::accept();
            res.cert.notes.push_back("disconnected planar graph: crossing-free embedding");
        } else {
            res.cert = Certificate::indeterminate("disconnected non-planar input unsupported");
        }
        return res;
    }
    std::optional<OnePlanarEmbedding> found;
    EnumStatus st = for_each_embedding(g, budget, [&](const OnePlanarEmbedding& e) {
        if (is_crossing_augmented(e).accepted()) {
            found = e;
            return true;
        }
        return false;
    });
    if (found) {
        res.cert = Certificate::accept();
        res.embedding = found;
        res.witness = embedding_to_witness(*found);
    } else if (st == EnumStatus::Budget) {
        res.cert = Certificate::indeterminate("budget exceeded during embedding enumeration");
    } else {
        res.cert = Certificate::reject("not-crossing-augmented",
                                       "no embedding has a kite at every crossing");
    }
    return res;
}

// Fully triangulated 1-planar == hole-free 4-map graph (2-connected input).
inline ClassResult is_fully_triangulated_1planar(const SimpleGraph& g,
                                                 const SearchBudget& budget = SearchBudget{}) {
    if (connectivity_level(g) < 2)
        throw GraphError("is_fully_triangulated_1planar requires a 2-connected graph");
    ClassResult res;
    if (separation_pairs(g).empty()) {
        // 3-connected: no parallel copies, so the planarization itself must
        // triangulate: m + 2k = 3(n+k) - 6 forces k = m - 3n + 6
        int kstar = g.m() - 3 * g.n + 6;
        if (kstar < 0 || 2 * kstar > g.m()) {
            res.cert = Certificate::reject(
                "triangle-count", "3-connected with m=" + std::to_string(g.m()) +
                                  ", no crossing count k satisfies m+2k = 3(n+k)-6");
            return res;
        }
    }
    std::optional<OnePlanarEmbedding> found;
    EnumStatus st = for_each_embedding(g, budget, [&](const OnePlanarEmbedding& e) {
        if (is_fully_triangulated(e).accepted()) {
            found = e;
            return true;
        }
        return false;
    });
    if (found) {
        res.cert = Certificate::accept();
        res.embedding = found;
        res.witness = separated_witness(separated_embedding(*found));
    } else if (st == EnumStatus::Budget) {
        res.cert = Certificate::indeterminate("budget exceeded during embedding enumeration");
    } else {
        res.cert = Certificate::reject("not-fully-triangulated",
                                       "no embedding has a triangulated separated embedding");
    }
    return res;
}

// ---------------------------------------------------------------------------
// Outer 1-planar: chord model. Vertices on a circle, edges as chords, two
// chords cross iff their endpoints interleave; each chord crossed at most
// once.
// ---------------------------------------------------------------------------

enum class OuterVariant {
    Plain,
    CrossingAugmented,
    FullyTriangulated,
    PlaneMaximal,
    PlanarMaximal,
    Maximal,
    Optimal
};

inline const char* outer_variant_name(OuterVariant v) {
    switch (v) {
        case OuterVariant::Plain: return "outer-1-planar";
        case OuterVariant::CrossingAugmented: return "crossing-augmented";
        case OuterVariant::FullyTriangulated: return "fully-triangulated";
        case OuterVariant::PlaneMaximal: return "plane-maximal";
        case OuterVariant::PlanarMaximal: return "planar-maximal";
        case OuterVariant::Maximal: return "maximal";
        case OuterVariant::Optimal: return "optimal";
    }
    return "?";
}

namespace detail {

// Chords (u,v),(x,y) cross iff exactly one of x,y lies strictly inside the
// arc u..v.
inline bool chords_cross(const std::vector<int>& pos, const Edge& e, const Edge& f) {
    int a = pos[static_cast<size_t>(e.first)], b = pos[static_cast<size_t>(e.second)];
    if (a > b) std::swap(a, b);
    auto inside = [&](int v) {
        int p = pos[static_cast<size_t>(v)];
        return a < p && p < b;
    };
    return inside(f.first) != inside(f.second);
}

// crossing count per edge for a cyclic order; empty if some pair of edges
// shares an endpoint yet interleaves (impossible) -- just the counts.
inline std::vector<int> outer_crossing_counts(const SimpleGraph& g,
                                              const std::vector<int>& pos) {
    std::vector<int> cnt(static_cast<size_t>(g.m()), 0);
    for (int i = 0; i < g.m(); ++i)
        for (int j = i + 1; j < g.m(); ++j) {
            const Edge& e = g.edges[static_cast<size_t>(i)];
            const Edge& f = g.edges[static_cast<size_t>(j)];
            if (e.first == f.first || e.first == f.second || e.second == f.first ||
                e.second == f.second)
                continue;
            if (chords_cross(pos, e, f)) {
                ++cnt[static_cast<size_t>(i)];
                ++cnt[static_cast<size_t>(j)];
            }
        }
    return cnt;
}

// Build the 1-planar embedding realized by a chord diagram: rotations sort
// neighbors by circular position, dummies by the circular positions of the
// four crossing endpoints.
inline OnePlanarEmbedding outer_embedding(const SimpleGraph& g,
                                          const std::vector<int>& order,
                                          const std::vector<int>& pos) {
    std::vector<std::pair<int, int>> cross;
    for (int i = 0; i < g.m(); ++i)
        for (int j = i + 1; j < g.m(); ++j) {
            const Edge& e = g.edges[static_cast<size_t>(i)];
            const Edge& f = g.edges[static_cast<size_t>(j)];
            if (e.first == f.first || e.first == f.second || e.second == f.first ||
                e.second == f.second)
                continue;
            if (chords_cross(pos, e, f)) cross.push_back({i, j});
        }
    std::vector<char> crossed(static_cast<size_t>(g.m()), 0);
    for (auto [i, j] : cross)
        crossed[static_cast<size_t>(i)] = crossed[static_cast<size_t>(j)] = 1;

    OnePlanarEmbedding out;
    out.g = g;
    out.plan.n = g.n + static_cast<int>(cross.size());
    out.plan.rot.assign(static_cast<size_t>(out.plan.n) + 1, {});
    std::vector<int> plain_pid(static_cast<size_t>(g.m()), -1);
    for (int eid = 0; eid < g.m(); ++eid)
        if (!crossed[static_cast<size_t>(eid)])
            plain_pid[static_cast<size_t>(eid)] =
                out.plan.add_edge(g.edges[static_cast<size_t>(eid)].first,
                                  g.edges[static_cast<size_t>(eid)].second);
    std::map<std::pair<int, int>, int> seg_pid;
    for (size_t ci = 0; ci < cross.size(); ++ci) {
        auto [i, j] = cross[ci];
        auto [a, b] = g.edges[static_cast<size_t>(i)];
        auto [c, d] = g.edges[static_cast<size_t>(j)];
        int dummy = g.n + static_cast<int>(ci) + 1;
        CrossingRecord rec;
        rec.ab = {a, b};
        rec.cd = {c, d};
        rec.dummy = dummy;
        out.crossings.push_back(rec);
        seg_pid[{i, a}] = out.plan.add_edge(a, dummy);
        seg_pid[{j, c}] = out.plan.add_edge(c, dummy);
        seg_pid[{i, b}] = out.plan.add_edge(b, dummy);
        seg_pid[{j, d}] = out.plan.add_edge(d, dummy);
        // dummy rotation: the four endpoints in their circular order
        std::vector<std::pair<int, int>> around; // (position, segment pid)
        around.push_back({pos[static_cast<size_t>(a)], seg_pid[{i, a}]});
        around.push_back({pos[static_cast<size_t>(b)], seg_pid[{i, b}]});
        around.push_back({pos[static_cast<size_t>(c)], seg_pid[{j, c}]});
        around.push_back({pos[static_cast<size_t>(d)], seg_pid[{j, d}]});
        std::sort(around.begin(), around.end());
        for (auto& [p, pid] : around)
            out.plan.rot[static_cast<size_t>(dummy)].push_back(pid);
    }
    auto adj = g.adjacency();
    std::map<Edge, int> geid_of;
    for (int i = 0; i < g.m(); ++i) geid_of[g.edges[static_cast<size_t>(i)]] = i;
    int n = g.n;
    for (int v = 1; v <= n; ++v) {
        std::vector<std::pair<int, int>> by_dist; // (cyclic distance, neighbor)
        for (int w : adj[static_cast<size_t>(v)]) {
            int d = (pos[static_cast<size_t>(w)] - pos[static_cast<size_t>(v)] + n) % n;
            by_dist.push_back({d, w});
        }
        std::sort(by_dist.begin(), by_dist.end());
        for (auto& [d, w] : by_dist) {
            int geid = geid_of.at(make_edge(v, w));
            out.plan.rot[static_cast<size_t>(v)].push_back(
                crossed[static_cast<size_t>(geid)] ? seg_pid.at({geid, v})
                                                   : plain_pid[static_cast<size_t>(geid)]);
        }
    }
    (void)order;
    for (auto& rec : out.crossings)
        rec.flag = alternation_flag(out.plan, rec).value_or(0);
    return out;
}

inline std::string order_str(const std::vector<int>& order) {
    std::string s = "order:";
    for (int v : order) s += " " + std::to_string(v);
    return s;
}

} // namespace detail

inline Certificate outer_1planar_suite(const SimpleGraph& g, OuterVariant variant,
                                       const SearchBudget& budget = SearchBudget{}) {
    if (g.n < 3) throw GraphError("outer_1planar_suite requires n >= 3");
    if (g.n > budget.max_vertices || g.m() > budget.max_edges)
        return Certificate::indeterminate("budget exceeded: instance size");
    if (variant == OuterVariant::Optimal) {
        // m = 2.5n - 4 exactly
        if (Fraction(g.m()) != Fraction(5, 2) * Fraction(g.n) - Fraction(4))
            return Certificate::reject("edge-count",
                                       "m=" + std::to_string(g.m()) + " but 2.5n-4=" +
                                       (Fraction(5, 2) * Fraction(g.n) - Fraction(4)).str());
    }
    if (variant == OuterVariant::FullyTriangulated && connectivity_level(g) < 2)
        return Certificate::reject("not-2-connected",
                                   "fully-triangulated requires a 2-connected graph");
    // density cutoff for the plain question
    if (Fraction(5, 2) * Fraction(g.n) - Fraction(4) < Fraction(g.m()))
        return Certificate::reject("density", "m=" + std::to_string(g.m()) +
                                   " exceeds 2.5n-4");

    detail::BudgetState bs;
    std::vector<int> rest;
    for (int v = 2; v <= g.n; ++v) rest.push_back(v);
    bool any_accepting = false;
    Certificate witness_cert = Certificate::reject("unset", "");
    bool forall_fail = false;
    std::string forall_fail_loc;

    auto planar_addable = [&](const std::vector<int>& pos) -> std::optional<Edge> {
        // a non-edge insertable without any crossing
        for (const Edge& e : g.non_edges()) {
            bool crosses = false;
            for (int i = 0; i < g.m() && !crosses; ++i) {
                const Edge& f = g.edges[static_cast<size_t>(i)];
                if (e.first == f.first || e.first == f.second || e.second == f.first ||
                    e.second == f.second)
                    continue;
                if (detail::chords_cross(pos, e, f)) crosses = true;
            }
            if (!crosses) return e;
        }
        return std::nullopt;
    };

    do {
        if (bs.exceeded(budget))
            return Certificate::indeterminate("budget exceeded during order enumeration");
        std::vector<int> order{1};
        order.insert(order.end(), rest.begin(), rest.end());
        if (g.n >= 3 && order[1] > order.back()) continue; // reflection dedup
        std::vector<int> pos(static_cast<size_t>(g.n) + 1, 0);
        for (size_t i = 0; i < order.size(); ++i)
            pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
        auto cnt = detail::outer_crossing_counts(g, pos);
        if (std::any_of(cnt.begin(), cnt.end(), [](int c) { return c > 1; })) continue;
        any_accepting = true;

        switch (variant) {
            case OuterVariant::Plain:
            case OuterVariant::Optimal:
            case OuterVariant::Maximal: {
                Certificate c = Certificate::accept();
                c.notes.push_back(detail::order_str(order));
                witness_cert = c;
                break;
            }
            case OuterVariant::CrossingAugmented: {
                bool ok = true;
                for (int i = 0; i < g.m() && ok; ++i)
                    for (int j = i + 1; j < g.m() && ok; ++j) {
                        const Edge& e = g.edges[static_cast<size_t>(i)];
                        const Edge& f = g.edges[static_cast<size_t>(j)];
                        if (e.first == f.first || e.first == f.second ||
                            e.second == f.first || e.second == f.second)
                            continue;
                        if (!detail::chords_cross(pos, e, f)) continue;
                        for (const Edge& q :
                             {make_edge(e.first, f.first), make_edge(f.first, e.second),
                              make_edge(e.second, f.second), make_edge(f.second, e.first)})
                            if (!g.has_edge(q.first, q.second)) ok = false;
                    }
                if (ok) {
                    Certificate c = Certificate::accept();
                    c.notes.push_back(detail::order_str(order));
                    witness_cert = c;
                }
                break;
            }
            case OuterVariant::FullyTriangulated: {
                OnePlanarEmbedding e = detail::outer_embedding(g, order, pos);
                if (is_fully_triangulated(e).accepted()) {
                    Certificate c = Certificate::accept();
                    c.notes.push_back(detail::order_str(order));
                    witness_cert = c;
                }
                break;
            }
            case OuterVariant::PlaneMaximal:
            case OuterVariant::PlanarMaximal: {
                auto addable = planar_addable(pos);
                if (!addable) {
                    Certificate c = Certificate::accept();
                    c.notes.push_back(detail::order_str(order));
                    witness_cert = c;
                } else if (variant == OuterVariant::PlanarMaximal) {
                    forall_fail = true;
                    forall_fail_loc = detail::edge_str(*addable) + " addable planar, " +
                                      detail::order_str(order);
                }
                break;
            }
        }
        if (witness_cert.accepted() && variant != OuterVariant::PlanarMaximal &&
            variant != OuterVariant::Maximal)
            return witness_cert;
        if (forall_fail)
            return Certificate::reject("non-planar-maximal-order", forall_fail_loc);
    } while (std::next_permutation(rest.begin(), rest.end()));

    if (!any_accepting)
        return Certificate::reject("not-outer-1-planar",
                                   "no cyclic order keeps every chord crossed at most once");
    switch (variant) {
        case OuterVariant::Plain:
        case OuterVariant::Optimal:
            return witness_cert; // accepted above
        case OuterVariant::PlanarMaximal:
            return witness_cert.accepted()
                       ? witness_cert
                       : Certificate::reject("no-planar-maximal-order",
                                             "no accepting order is planar-maximal");
        case OuterVariant::Maximal: {
            for (const Edge& e : g.non_edges()) {
                std::vector<Edge> es = g.edges;
                es.push_back(e);
                Certificate ext =
                    outer_1planar_suite(build_graph(g.n, es), OuterVariant::Plain, budget);
                if (ext.accepted())
                    return Certificate::reject("addable-edge", detail::edge_str(e));
                if (ext.verdict == Verdict::Indeterminate) return ext;
            }
            return witness_cert;
        }
        case OuterVariant::CrossingAugmented:
            return Certificate::reject("not-crossing-augmented",
                                       "no accepting order has a kite at every crossing");
        case OuterVariant::FullyTriangulated:
            return Certificate::reject("not-fully-triangulated",
                                       "no accepting order is fully triangulated");
        case OuterVariant::PlaneMaximal:
            return Certificate::reject("no-planar-maximal-order",
                                       "every accepting order leaves a planar edge addable");
    }
    return Certificate::reject("unreachable", "");
}

} // namespace onemap

#endif
