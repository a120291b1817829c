// onemap: validators, recognizers, transforms and generators for 1-planar
// embeddings and their map-graph witnesses.
//
// Exit codes: 0 accept/success, 1 reject, 2 invalid input, 3 budget exceeded.

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "onemap/decomposition.hpp"
#include "onemap/generators.hpp"
#include "onemap/io.hpp"
#include "onemap/recognition.hpp"

using namespace onemap;

namespace {

void print_certificate(const Certificate& c, std::ostream& out) {
    out << "verdict " << verdict_name(c.verdict) << "\n";
    for (const auto& [rule, loc] : c.violations)
        out << "violation " << rule << (loc.empty() ? "" : ": " + loc) << "\n";
    for (const std::string& n : c.notes) std::cerr << "note: " << n << "\n";
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Accept: return 0;
        case Verdict::Reject: return 1;
        case Verdict::Indeterminate: return 3;
    }
    return 2;
}

int finish(const Certificate& c, const std::optional<OnePlanarEmbedding>& emb,
           const std::optional<BipartiteMapWitness>& wit) {
    print_certificate(c, std::cout);
    if (c.accepted()) {
        if (emb) std::cout << serialize_emb(*emb);
        if (wit) std::cout << serialize_map(*wit);
    }
    return exit_code(c.verdict);
}

std::optional<OuterVariant> outer_variant_of(const std::string& name) {
    for (OuterVariant v : {OuterVariant::Plain, OuterVariant::CrossingAugmented,
                           OuterVariant::FullyTriangulated, OuterVariant::PlaneMaximal,
                           OuterVariant::PlanarMaximal, OuterVariant::Maximal,
                           OuterVariant::Optimal}) {
        std::string n = v == OuterVariant::Plain ? "plain" : outer_variant_name(v);
        if (name == n) return v;
    }
    return std::nullopt;
}

int run_check(const std::string& property, const std::string& file,
              const SearchBudget& budget) {
    // embedding-file properties
    if (property == "planar-rotation")
        return finish(is_planar_rotation(load_emb(file).plan), {}, {});
    if (property == "1planar-embedding")
        return finish(validate_1planar(load_emb(file)), {}, {});
    if (property == "ic") {
        OnePlanarEmbedding e = load_emb(file);
        Certificate v = validate_1planar(e);
        if (!v.accepted()) return finish(v, {}, {});
        return finish(is_ic(e) ? Certificate::accept()
                               : Certificate::reject("independent-crossings",
                                                     "two crossings share an endpoint"),
                      {}, {});
    }
    if (property == "crossing-augmented")
        return finish(is_crossing_augmented(load_emb(file)), {}, {});
    if (property == "fully-triangulated")
        return finish(is_fully_triangulated(load_emb(file)), {}, {});
    if (property == "planar-maximal-embedding")
        return finish(is_planar_maximal_embedding(load_emb(file)), {}, {});
    // witness-file properties
    if (property == "hole-free") {
        BipartiteMapWitness w = load_map(file);
        Certificate v = validate_witness(w);
        if (!v.accepted()) return finish(v, {}, {});
        return finish(is_hole_free(w), {}, {});
    }
    // graph-file properties
    if (property == "1planar") {
        OracleResult r = oracle_1planar(load_gr(file), budget);
        return finish(r.cert, r.embedding, {});
    }
    if (property == "rotation-1planar") {
        OnePlanarEmbedding e = load_emb(file);
        if (e.dummy_count() != 0)
            throw GraphError("rotation-1planar expects an .emb with k=0 "
                             "(a rotation system of the graph itself)");
        RotationResult r = rotation_1planar(e.g, e.plan, budget);
        return finish(r.cert, r.embedding, {});
    }
    if (property == "maximal") {
        ClassResult r = is_maximal_1planar(load_gr(file), budget);
        return finish(r.cert, r.embedding, r.witness);
    }
    if (property == "optimal") {
        ClassResult r = is_optimal_1planar(load_gr(file), budget);
        return finish(r.cert, r.embedding, r.witness);
    }
    if (property == "plane-maximal") {
        ClassResult r = is_plane_maximal_1planar(load_gr(file), budget);
        return finish(r.cert, r.embedding, r.witness);
    }
    if (property == "planar-maximal") {
        ClassResult r = is_planar_maximal_1planar(load_gr(file), budget);
        return finish(r.cert, r.embedding, r.witness);
    }
    if (property == "crossing-augmented-graph") {
        ClassResult r = is_crossing_augmented_1planar(load_gr(file), budget);
        return finish(r.cert, r.embedding, r.witness);
    }
    if (property == "fully-triangulated-graph") {
        ClassResult r = is_fully_triangulated_1planar(load_gr(file), budget);
        return finish(r.cert, r.embedding, r.witness);
    }
    if (property.rfind("outer:", 0) == 0) {
        auto v = outer_variant_of(property.substr(6));
        if (!v) throw GraphError("unknown outer variant '" + property.substr(6) + "'");
        return finish(outer_1planar_suite(load_gr(file), *v, budget), {}, {});
    }
    throw GraphError("unknown property '" + property + "'");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        save_file(out_path, content);
}

int run_transform(const std::string& op, const std::string& in,
                  const std::string& out) {
    if (op == "to-witness") {
        emit(out, serialize_map(embedding_to_witness(load_emb(in))));
        return 0;
    }
    if (op == "to-embedding") {
        emit(out, serialize_emb(witness_to_embedding(load_map(in))));
        return 0;
    }
    if (op == "kite-augment") {
        emit(out, serialize_emb(kite_augment(load_emb(in))));
        return 0;
    }
    if (op == "separate") {
        // the separated planarization is a multigraph; report its faces
        SeparatedEmbedding s = separated_embedding(load_emb(in));
        std::ostringstream os;
        os << "separated " << s.plan.n << " " << s.copies.size() << "\n";
        for (const Face& f : trace_faces(s.plan)) {
            os << "face";
            for (int v : f.vertex_walk(s.plan)) os << " " << v;
            os << "\n";
        }
        emit(out, os.str());
        return 0;
    }
    if (op == "half-square") {
        emit(out, serialize_gr(half_square(load_map(in))));
        return 0;
    }
    if (op == "planarize") {
        OnePlanarEmbedding e = load_emb(in);
        std::vector<Edge> edges;
        for (const Edge& ed : e.plan.edge_list) edges.push_back(make_edge(ed.first, ed.second));
        emit(out, serialize_gr(build_graph(e.plan.n, edges)));
        return 0;
    }
    throw GraphError("unknown transform '" + op + "'");
}

int run_generate(const std::string& family, const std::vector<std::string>& params,
                 const std::string& out) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw GraphError("family '" + family + "' takes " + std::to_string(k) +
                             " parameter(s)");
    };
    auto as_int = [](const std::string& s) {
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            throw GraphError("bad integer parameter '" + s + "'");
        }
    };
    if (family == "optimal-1planar") {
        need(1);
        emit(out, serialize_gr(gen_optimal_1planar(as_int(params[0]))));
        return 0;
    }
    if (family == "outer-optimal") {
        need(1);
        emit(out, serialize_gr(gen_outer_optimal(as_int(params[0]))));
        return 0;
    }
    if (family == "random") {
        need(3);
        emit(out, serialize_emb(random_1planar_embedding(
                      as_int(params[0]), as_int(params[1]),
                      static_cast<unsigned>(as_int(params[2])))));
        return 0;
    }
    if (family == "fixture") {
        if (params.empty()) throw GraphError("fixture name required");
        const std::string& name = params[0];
        auto n_arg = [&] { need(2); return as_int(params[1]); };
        if (name == "tetrahedron") { need(1); emit(out, serialize_emb(fixture_tetrahedron())); return 0; }
        if (name == "kite") { need(1); emit(out, serialize_emb(fixture_kite())); return 0; }
        if (name == "riceball-witness") { need(1); emit(out, serialize_map(fixture_riceball_witness())); return 0; }
        if (name == "pizza-witness") { need(1); emit(out, serialize_map(fixture_pizza_witness())); return 0; }
        if (name == "K5") { need(1); emit(out, serialize_gr(fixture_k5())); return 0; }
        if (name == "K5-minus-e") { need(1); emit(out, serialize_gr(fixture_k5_minus_e())); return 0; }
        if (name == "W-config") { need(1); emit(out, serialize_emb(fixture_w_config())); return 0; }
        if (name == "B-config") { need(1); emit(out, serialize_emb(fixture_b_config())); return 0; }
        if (name == "pearls-chain") { need(1); emit(out, serialize_gr(fixture_pearls_chain())); return 0; }
        if (name == "sparse-ic") { emit(out, serialize_gr(fixture_sparse_ic(n_arg()))); return 0; }
        if (name == "grid") {
            need(3);
            emit(out, serialize_gr(fixture_grid(as_int(params[1]), as_int(params[2]))));
            return 0;
        }
        throw GraphError("unknown fixture '" + name + "'");
    }
    throw GraphError("unknown family '" + family + "'");
}

int run_decompose(const std::string& file, const std::string& prefix) {
    SimpleGraph g = load_gr(file);
    auto decs = decompose(g);
    if (decs.empty()) {
        std::cout << "no separation pairs (3-connected)\n";
        return 0;
    }
    for (size_t d = 0; d < decs.size(); ++d) {
        const Decomposition& dec = decs[d];
        std::cout << "pair " << dec.pair.u << " " << dec.pair.v << " components "
                  << dec.components.size() << "\n";
        for (size_t i = 0; i < dec.components.size(); ++i) {
            const Component& c = dec.components[i];
            std::cout << "component " << i + 1 << " marked " << c.marked.first << " "
                      << c.marked.second << " labels";
            for (size_t v = 1; v < c.label.size(); ++v) std::cout << " " << c.label[v];
            std::cout << "\n";
            if (!prefix.empty()) {
                std::string path = prefix + "_p" + std::to_string(dec.pair.u) + "_" +
                                   std::to_string(dec.pair.v) + "_c" +
                                   std::to_string(i + 1) + ".gr";
                save_file(path, serialize_gr(c.graph));
                std::cout << "wrote " << path << "\n";
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-planar embeddings and 4-map witnesses: check, transform, "
                 "generate, decompose"};
    app.require_subcommand(1);

    SearchBudget budget;
    app.add_option("--budget", budget.max_candidates, "max search candidates");
    app.add_option("--max-vertices", budget.max_vertices, "oracle vertex ceiling");
    app.add_option("--time-limit", budget.time_ceiling_seconds, "search time ceiling (s)");

    std::string property, file, op, in_path, out_path, family, dec_file, prefix;
    std::vector<std::string> params;

    CLI::App* check = app.add_subcommand("check", "validate a property of a file");
    check->add_option("property", property)->required();
    check->add_option("file", file)->required();

    CLI::App* transform = app.add_subcommand("transform", "convert between formats");
    transform->add_option("op", op)->required();
    transform->add_option("input", in_path)->required();
    transform->add_option("-o,--output", out_path);

    CLI::App* generate = app.add_subcommand("generate", "emit fixtures and families");
    generate->add_option("family", family)->required();
    generate->add_option("params", params);
    generate->add_option("-o,--output", out_path);

    CLI::App* decomp = app.add_subcommand("decompose", "separation-pair decomposition");
    decomp->add_option("file", dec_file)->required();
    decomp->add_option("-o,--output-prefix", prefix);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(property, file, budget);
        if (transform->parsed()) return run_transform(op, in_path, out_path);
        if (generate->parsed()) return run_generate(family, params, out_path);
        if (decomp->parsed()) return run_decompose(dec_file, prefix);
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
