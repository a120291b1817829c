#ifndef ONEMAP_IO_HPP
#define ONEMAP_IO_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "onemap/embedding.hpp"
#include "onemap/graph.hpp"
#include "onemap/rotation.hpp"
#include "onemap/witness.hpp"

namespace onemap {

class ParseError : public GraphError {
public:
    ParseError(int line, const std::string& msg)
        : GraphError("line " + std::to_string(line) + ": " + msg) {}
};

namespace detail {

// Tokenized non-empty lines with their 1-based line numbers; '#' starts a
// comment anywhere.
inline std::vector<std::pair<int, std::vector<std::string>>> tokenize(std::istream& in) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back({no, toks});
    }
    return out;
}

inline int parse_int(int line, const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
}

// vertex token, optionally ':'-suffixed and/or letter-prefixed
inline int parse_label(int line, std::string s, char prefix = '\0') {
    if (!s.empty() && s.back() == ':') s.pop_back();
    if (prefix != '\0') {
        if (s.empty() || s[0] != prefix)
            throw ParseError(line, std::string("expected a '") + prefix + "'-label, got '" +
                             s + "'");
        s.erase(s.begin());
    }
    return parse_int(line, s);
}

} // namespace detail

// --- .gr: `graph <n>`, then `e <u> <v>` per edge ----------------------------

inline SimpleGraph parse_gr(std::istream& in) {
    auto lines = detail::tokenize(in);
    if (lines.empty()) throw ParseError(1, "empty graph file");
    auto& [hline, head] = lines.front();
    if (head.size() != 2 || head[0] != "graph")
        throw ParseError(hline, "expected header 'graph <n>'");
    int n = detail::parse_int(hline, head[1]);
    std::vector<Edge> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto& [no, toks] = lines[i];
        if (toks[0] != "e" || toks.size() != 3)
            throw ParseError(no, "expected edge line 'e <u> <v>'");
        edges.push_back({detail::parse_int(no, toks[1]), detail::parse_int(no, toks[2])});
    }
    try {
        return build_graph(n, edges);
    } catch (const GraphError& ex) {
        throw ParseError(hline, ex.what());
    }
}

inline std::string serialize_gr(const SimpleGraph& g) {
    std::ostringstream out;
    out << "graph " << g.n << "\n";
    for (const Edge& e : g.edges) out << "e " << e.first << " " << e.second << "\n";
    return out.str();
}

// --- .emb: `embedding <n> <k>`, `cross <i> <a> <b> <c> <d> <flag>`,
//           `rot <v>: <cyclic neighbor list>` --------------------------------

inline OnePlanarEmbedding parse_emb(std::istream& in) {
    auto lines = detail::tokenize(in);
    if (lines.empty()) throw ParseError(1, "empty embedding file");
    auto& [hline, head] = lines.front();
    if (head.size() != 3 || head[0] != "embedding")
        throw ParseError(hline, "expected header 'embedding <n> <k>'");
    int n = detail::parse_int(hline, head[1]);
    int k = detail::parse_int(hline, head[2]);
    if (n < 1 || k < 0) throw ParseError(hline, "bad embedding header counts");

    std::vector<CrossingRecord> recs(static_cast<size_t>(k));
    std::vector<char> seen_cross(static_cast<size_t>(k), 0);
    std::vector<std::vector<int>> nbrs(static_cast<size_t>(n + k) + 1);
    std::vector<char> seen_rot(static_cast<size_t>(n + k) + 1, 0);
    for (size_t li = 1; li < lines.size(); ++li) {
        auto& [no, toks] = lines[li];
        if (toks[0] == "cross") {
            if (toks.size() != 7)
                throw ParseError(no, "expected 'cross <i> <a> <b> <c> <d> <flag>'");
            int i = detail::parse_int(no, toks[1]);
            if (i < 1 || i > k) throw ParseError(no, "crossing index out of range");
            if (seen_cross[static_cast<size_t>(i - 1)])
                throw ParseError(no, "duplicate crossing " + std::to_string(i));
            seen_cross[static_cast<size_t>(i - 1)] = 1;
            CrossingRecord& r = recs[static_cast<size_t>(i - 1)];
            int a = detail::parse_int(no, toks[2]), b = detail::parse_int(no, toks[3]);
            int c = detail::parse_int(no, toks[4]), d = detail::parse_int(no, toks[5]);
            for (int v : {a, b, c, d})
                if (v < 1 || v > n) throw ParseError(no, "crossing endpoint out of range");
            r.ab = make_edge(a, b);
            r.cd = make_edge(c, d);
            r.dummy = n + i;
            r.flag = detail::parse_int(no, toks[6]);
            if (r.flag != 0 && r.flag != 1) throw ParseError(no, "flag must be 0 or 1");
        } else if (toks[0] == "rot") {
            if (toks.size() < 2) throw ParseError(no, "expected 'rot <v>: <neighbors>'");
            int v = detail::parse_label(no, toks[1]);
            if (v < 1 || v > n + k) throw ParseError(no, "rotation vertex out of range");
            if (seen_rot[static_cast<size_t>(v)])
                throw ParseError(no, "duplicate rotation for vertex " + std::to_string(v));
            seen_rot[static_cast<size_t>(v)] = 1;
            for (size_t t = 2; t < toks.size(); ++t)
                nbrs[static_cast<size_t>(v)].push_back(detail::parse_int(no, toks[t]));
        } else {
            throw ParseError(no, "unknown line '" + toks[0] + "'");
        }
    }
    for (int i = 1; i <= k; ++i)
        if (!seen_cross[static_cast<size_t>(i - 1)])
            throw ParseError(hline, "missing crossing " + std::to_string(i));
    for (int v = 1; v <= n + k; ++v)
        if (!seen_rot[static_cast<size_t>(v)])
            throw ParseError(hline, "missing rotation for vertex " + std::to_string(v));

    OnePlanarEmbedding e;
    try {
        e.plan = embedded_from_neighbors(n + k, nbrs);
    } catch (const GraphError& ex) {
        throw ParseError(hline, ex.what());
    }
    e.crossings = recs;
    std::set<Edge> ges;
    for (const Edge& ed : e.plan.edge_list)
        if (ed.first <= n && ed.second <= n) ges.insert(make_edge(ed.first, ed.second));
    for (const auto& r : recs) {
        ges.insert(r.ab);
        ges.insert(r.cd);
    }
    try {
        e.g = build_graph(n, {ges.begin(), ges.end()});
    } catch (const GraphError& ex) {
        throw ParseError(hline, ex.what());
    }
    return e;
}

inline std::string serialize_emb(const OnePlanarEmbedding& e) {
    std::ostringstream out;
    out << "embedding " << e.g.n << " " << e.dummy_count() << "\n";
    for (size_t i = 0; i < e.crossings.size(); ++i) {
        const auto& r = e.crossings[i];
        out << "cross " << i + 1 << " " << r.ab.first << " " << r.ab.second << " "
            << r.cd.first << " " << r.cd.second << " " << r.flag << "\n";
    }
    for (int v = 1; v <= e.plan.n; ++v) {
        out << "rot " << v << ":";
        for (int w : e.plan.neighbors_in_rotation(v)) out << " " << w;
        out << "\n";
    }
    return out.str();
}

// --- .map: `witness <|V|> <|U|>`, `pt u<i>: <countries>`,
//           `rot v<j>: <points>` ---------------------------------------------

inline BipartiteMapWitness parse_map(std::istream& in) {
    auto lines = detail::tokenize(in);
    if (lines.empty()) throw ParseError(1, "empty witness file");
    auto& [hline, head] = lines.front();
    if (head.size() != 3 || head[0] != "witness")
        throw ParseError(hline, "expected header 'witness <|V|> <|U|>'");
    int nV = detail::parse_int(hline, head[1]);
    int nU = detail::parse_int(hline, head[2]);
    if (nV < 1 || nU < 0) throw ParseError(hline, "bad witness header counts");
    std::vector<std::vector<int>> nbrs(static_cast<size_t>(nV + nU) + 1);
    std::vector<char> seen(static_cast<size_t>(nV + nU) + 1, 0);
    for (size_t li = 1; li < lines.size(); ++li) {
        auto& [no, toks] = lines[li];
        if (toks[0] == "pt") {
            if (toks.size() < 2) throw ParseError(no, "expected 'pt u<i>: <countries>'");
            int i = detail::parse_label(no, toks[1], 'u');
            if (i < 1 || i > nU) throw ParseError(no, "point index out of range");
            int v = nV + i;
            if (seen[static_cast<size_t>(v)])
                throw ParseError(no, "duplicate point u" + std::to_string(i));
            seen[static_cast<size_t>(v)] = 1;
            for (size_t t = 2; t < toks.size(); ++t) {
                int c = detail::parse_label(no, toks[t], 'v');
                if (c < 1 || c > nV) throw ParseError(no, "country index out of range");
                nbrs[static_cast<size_t>(v)].push_back(c);
            }
        } else if (toks[0] == "rot") {
            if (toks.size() < 2) throw ParseError(no, "expected 'rot v<j>: <points>'");
            int j = detail::parse_label(no, toks[1], 'v');
            if (j < 1 || j > nV) throw ParseError(no, "country index out of range");
            if (seen[static_cast<size_t>(j)])
                throw ParseError(no, "duplicate rotation for country v" + std::to_string(j));
            seen[static_cast<size_t>(j)] = 1;
            for (size_t t = 2; t < toks.size(); ++t) {
                int p = detail::parse_label(no, toks[t], 'u');
                if (p < 1 || p > nU) throw ParseError(no, "point index out of range");
                nbrs[static_cast<size_t>(j)].push_back(nV + p);
            }
        } else {
            throw ParseError(no, "unknown line '" + toks[0] + "'");
        }
    }
    for (int v = 1; v <= nV + nU; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw ParseError(hline, "missing rotation for " +
                             (v <= nV ? "v" + std::to_string(v)
                                      : "u" + std::to_string(v - nV)));
    BipartiteMapWitness w;
    w.nV = nV;
    w.nU = nU;
    try {
        w.b = embedded_from_neighbors(nV + nU, nbrs);
    } catch (const GraphError& ex) {
        throw ParseError(hline, ex.what());
    }
    return w;
}

inline std::string serialize_map(const BipartiteMapWitness& w) {
    std::ostringstream out;
    out << "witness " << w.nV << " " << w.nU << "\n";
    for (int i = 1; i <= w.nU; ++i) {
        out << "pt u" << i << ":";
        for (int c : w.b.neighbors_in_rotation(w.nV + i)) out << " v" << c;
        out << "\n";
    }
    for (int j = 1; j <= w.nV; ++j) {
        out << "rot v" << j << ":";
        for (int p : w.b.neighbors_in_rotation(j)) out << " u" << p - w.nV;
        out << "\n";
    }
    return out.str();
}

// --- convenience -------------------------------------------------------------

template <class T, class Parser>
inline T load_file(const std::string& path, Parser&& p) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return p(in);
}

inline SimpleGraph load_gr(const std::string& path) {
    return load_file<SimpleGraph>(path, [](std::istream& in) { return parse_gr(in); });
}
inline OnePlanarEmbedding load_emb(const std::string& path) {
    return load_file<OnePlanarEmbedding>(path,
                                         [](std::istream& in) { return parse_emb(in); });
}
inline BipartiteMapWitness load_map(const std::string& path) {
    return load_file<BipartiteMapWitness>(path,
                                          [](std::istream& in) { return parse_map(in); });
}

inline void save_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot open " + path + " for writing");
    out << content;
}

} // namespace onemap

#endif
