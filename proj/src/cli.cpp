#include "gvt/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "gvt/json_io.hpp"
#include "gvt/svg.hpp"

namespace gvt {

namespace {

struct Options {
    std::string graph_path, config_path, out_path, field_override;
    std::string at, f1, f2, fvec, act, alpha, gamma, point, bbox, t0;
    Int window = 3;
    Int n = 1;
    long long seed = 0;
    bool dump = false;
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw ValidationError("bad JSON in '" + path + "': " + ex.what());
    }
    return j;
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) throw ValidationError("cannot write '" + opt.out_path + "'");
        f << text;
    } else {
        out << text;
    }
}

void emit_json(const Options& opt, std::ostream& out, const Json& j) {
    emit(opt, out, j.dump(2) + "\n");
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

IntVV parse_int_list(const std::string& s, int n, const std::string& what) {
    auto toks = split_commas(s);
    if (static_cast<int>(toks.size()) != n)
        throw ValidationError(what + " needs " + std::to_string(n) + " comma-separated values");
    IntVV out(n);
    for (int i = 0; i < n; ++i) {
        try {
            out[i] = std::stoll(toks[i]);
        } catch (...) {
            throw ValidationError("bad integer in " + what + ": '" + toks[i] + "'");
        }
    }
    return out;
}

RatVV parse_rat_list(const std::string& s, int n, const std::string& what) {
    auto toks = split_commas(s);
    if (static_cast<int>(toks.size()) != n)
        throw ValidationError(what + " needs " + std::to_string(n) + " comma-separated values");
    RatVV out(n);
    for (int i = 0; i < n; ++i) out[i] = parse_rat(toks[i]);
    return out;
}

// Commands over a fixed field K.
template <class K>
struct FieldRunner {
    const Options& opt;
    const Graph& g;
    ArrangementConfig<K> cfg;
    std::ostream& out;

    std::vector<K> parse_units(const std::string& s, int n, const std::string& what) {
        auto toks = split_commas(s);
        if (static_cast<int>(toks.size()) != n)
            throw ValidationError(what + " needs " + std::to_string(n) + " values");
        std::vector<K> units;
        for (const auto& t : toks) units.push_back(parse_scalar(t, cfg.one()));
        return units;
    }

    int ideal() {
        IntVV f = parse_int_list(opt.fvec, g.num_vertices(), "--f");
        LevelVector lev = dee(g, cfg.ell, cfg.m, f, 1);
        ActiveSubgraph active = active_subgraph(g, lev);
        Json arr = Json::array();
        for (const auto& b : cycle_binomials(g, active.edges, lev, cfg.a, cfg.b_edge))
            arr.push_back(binomial_to_json(g, b));
        emit_json(opt, out, Json{{"f", opt.fvec}, {"binomials", arr}});
        return 0;
    }

    int point() {
        IntVV f = parse_int_list(opt.fvec, g.num_vertices(), "--f");
        RPoint<K> p = base_point(cfg, opt.n, f);
        if (!opt.act.empty())
            p = act(cfg, parse_units(opt.act, g.num_vertices(), "--act"), p);
        emit_json(opt, out, rpoint_to_json(cfg, p));
        return 0;
    }

    int orbit() {
        Json pj = opt.point == "-" ? Json::parse(std::string(std::istreambuf_iterator<char>(std::cin), {}))
                                   : load_json(opt.point);
        RPoint<K> p = parse_rpoint(cfg, pj);
        Json j;
        if (member_window_suspect(cfg, p, opt.window))
            j["warning"] = "point levels exceed the search window; result may be incomplete";
        auto cls = classify_orbit(cfg, p);
        if (!cls) {
            j["orbit"] = nullptr;
        } else {
            Json c = Json::array();
            for (const K& u : cls->c) c.push_back(field_str(u));
            Json fv = Json::array();
            for (int v = 0; v < g.num_vertices(); ++v) fv.push_back(cls->f[v]);
            j["orbit"] = Json{{"n", cls->n}, {"f", fv}, {"c", c}};
        }
        auto f = member_Y(cfg, p, opt.window);
        j["member_of"] = f ? Json(f_key(*f)) : Json(nullptr);
        emit_json(opt, out, j);
        return 0;
    }

    int zeta() {
        IntEV alpha = parse_int_list(opt.alpha, g.num_edges(), "--alpha");
        IntEV gamma = parse_int_list(opt.gamma, g.num_edges(), "--gamma");
        ZetaPoint<K> z = zeta_point(cfg, alpha, gamma);
        Int s = 0;
        for (int e = 0; e < g.num_edges(); ++e)
            s += alpha[e] * gamma[e] * cfg.ell[e] - cfg.m[e] * gamma[e];
        emit_json(opt, out,
                  Json{{"p", field_str(z.p)}, {"q", field_str(z.q)}, {"s", s}});
        return 0;
    }

    int fiber() {
        IntEV window = IntEV::Constant(g.num_edges(), opt.window);
        auto eqs = family_equations(cfg, window);
        Json j;
        if (opt.dump || opt.t0.empty()) {
            Json arr = Json::array();
            for (const auto& eq : eqs) arr.push_back(tequation_to_json(g, eq));
            j["equations"] = arr;
        }
        if (!opt.t0.empty()) {
            K t0 = parse_scalar(opt.t0, cfg.one());
            Assignment<K> assign = solve_generic_fiber(cfg, window, t0);
            Json arr = Json::array();
            for (const auto& [key, val] : assign)
                arr.push_back(Json{{"edge", g.edge_name(key.first)},
                                   {"level", key.second},
                                   {"x", field_str(val.first)},
                                   {"xbar", field_str(val.second)}});
            j["t0"] = opt.t0;
            j["assignment"] = arr;
            j["verified"] = evaluate_family(cfg, eqs, assign, t0);
        }
        emit_json(opt, out, j);
        return 0;
    }
};

int dispatch_field_command(const std::string& cmd, const Options& opt, const Graph& g,
                           const RawConfig& raw, std::ostream& out) {
    FieldSpec fs = raw.field;
    if (!opt.field_override.empty()) fs = parse_field(opt.field_override);
    auto run = [&](auto runner) -> int {
        if (cmd == "ideal") return runner.ideal();
        if (cmd == "point") return runner.point();
        if (cmd == "orbit") return runner.orbit();
        if (cmd == "zeta") return runner.zeta();
        if (cmd == "fiber") return runner.fiber();
        throw std::logic_error("unreachable command");
    };
    if (fs.is_fp) {
        Fp one(1, fs.p), zero(0, fs.p);
        auto cfg = instantiate_config<Fp>(g, raw, one, zero);
        return run(FieldRunner<Fp>{opt, g, std::move(cfg), out});
    }
    auto cfg = instantiate_config<Rat>(g, raw, Rat(1), Rat(0));
    return run(FieldRunner<Rat>{opt, g, std::move(cfg), out});
}

int run_parsed(const std::string& cmd, const Options& opt, std::ostream& out) {
    if (opt.graph_path.empty()) throw ValidationError("--graph is required");
    Graph g = parse_graph(load_json(opt.graph_path));
    RawConfig raw =
        opt.config_path.empty() ? default_config(g) : parse_config(g, load_json(opt.config_path));

    if (cmd == "check") {
        Json j;
        j["graph"] = Json{{"vertices", g.num_vertices()},
                          {"edges", g.num_edges()},
                          {"cycle_rank", g.cycle_rank()},
                          {"diameter", g.diameter()}};
        Json ell = Json::array(), m = Json::array();
        for (int e = 0; e < g.num_edges(); ++e) {
            ell.push_back(raw.ell[e]);
            m.push_back(raw.m[e]);
        }
        Json tree = Json::array();
        for (int e : raw.tree_edges) tree.push_back(g.edge_name(e));
        j["config"] = Json{{"l", ell},
                           {"m", m},
                           {"field", raw.field.is_fp ? "fp:" + std::to_string(raw.field.p) : "q"},
                           {"tree", tree}};
        j["seed"] = opt.seed;
        emit_json(opt, out, j);
        return 0;
    }
    if (cmd == "trees") {
        emit_json(opt, out,
                  Json{{"spanning_trees", spanning_tree_count(g).convert_to<Int>()},
                       {"lattice_index", laplacian_lattice_index(g).convert_to<Int>()}});
        return 0;
    }
    if (cmd == "bonds") {
        Json arr = Json::array();
        for (const Bond& b : enumerate_bonds(g)) {
            Json x = Json::array();
            for (int v = 0; v < g.num_vertices(); ++v)
                if (b.x[v]) x.push_back(g.vertex_name(v));
            Json co = Json::array();
            for (int e = 0; e < g.num_edges(); ++e) co.push_back(b.cochain[e]);
            arr.push_back(Json{{"x", x}, {"cochain", co}, {"norm_sq", b.norm_sq}});
        }
        emit_json(opt, out, Json{{"bonds", arr}});
        return 0;
    }
    if (cmd == "cac") {
        CACPoset cac = enumerate_cac(g);
        Json faces = Json::object();
        for (const CACOrientation& d : cac.elems()) {
            Json parts = Json::array();
            for (const auto& part : d.witness) {
                Json p = Json::array();
                for (int v : part) p.push_back(g.vertex_name(v));
                parts.push_back(p);
            }
            std::vector<bool> keep(g.num_edges(), true);
            for (OrientedEdge oe : d.edges) keep[oe.edge] = false;
            faces[edges_key(g, d.edges)] =
                Json{{"witness", parts},
                     {"components", component_count(components(g, keep))}};
        }
        emit_json(opt, out, Json{{"count", cac.size()}, {"faces", faces}});
        return 0;
    }
    if (cmd == "cell") {
        CellGeometry cell = cell_geometry(g);
        Json verts = Json::array();
        for (const CellVertex& cv : cell.vertices) {
            RatVV full = RatVV::Zero(g.num_vertices());
            for (int v = 1; v < g.num_vertices(); ++v) full[v] = cv.potential[v - 1];
            verts.push_back(ratvv_to_json(laplacian<Rat>(g, full)));
        }
        Json faces = Json::object();
        for (const CellFace& face : cell.faces) {
            Json vids = Json::array();
            for (int v : face.vertex_ids) vids.push_back(v);
            Json tb = Json::array();
            for (int b : face.tight_bonds) tb.push_back(b);
            faces[edges_key(g, cell.cac[face.cac_index].edges)] =
                Json{{"dim", face.dim}, {"vertices", vids}, {"tight_bonds", tb}};
        }
        Json bonds = Json::array();
        for (const Bond& b : cell.bonds) {
            Json co = Json::array();
            for (int e = 0; e < g.num_edges(); ++e) co.push_back(b.cochain[e]);
            bonds.push_back(co);
        }
        emit_json(opt, out,
                  Json{{"vertex_count", cell.vertices.size()},
                       {"vertices", verts},
                       {"bonds", bonds},
                       {"faces", faces}});
        return 0;
    }

    TilingContext ctx(g, raw.ell, raw.m);
    if (cmd == "tiles") {
        Json tiles = Json::object();
        IntVV f = IntVV::Zero(g.num_vertices());
        for (int v = 1; v < g.num_vertices(); ++v) f[v] = -opt.window;
        bool more = g.num_vertices() > 1;
        if (!more) tiles[f_key(f)] = tile_to_json(ctx, build_tile(ctx, f));
        while (more) {
            try {
                Tile t = build_tile(ctx, f);
                tiles[f_key(f)] = tile_to_json(ctx, t);
            } catch (const NotATileError&) {
            }
            int v = 1;
            while (v < g.num_vertices() && f[v] == opt.window) {
                f[v] = -opt.window;
                ++v;
            }
            if (v >= g.num_vertices()) break;
            ++f[v];
        }
        emit_json(opt, out, Json{{"window", opt.window}, {"tiles", tiles}});
        return 0;
    }
    if (cmd == "locate") {
        RatVV x = parse_rat_list(opt.at, g.num_vertices(), "--at");
        auto hits = locate_point(ctx, x, opt.window);
        Json arr = Json::array();
        for (const Tile& t : hits) arr.push_back(tile_to_json(ctx, t));
        emit_json(opt, out, Json{{"count", hits.size()}, {"tiles", arr}});
        return 0;
    }
    if (cmd == "adjacency") {
        IntVV f1 = parse_int_list(opt.f1, g.num_vertices(), "--f1");
        IntVV f2 = parse_int_list(opt.f2, g.num_vertices(), "--f2");
        auto sf = tiles_adjacent(ctx, f1, f2);
        Json j;
        j["adjacent"] = sf.has_value();
        if (sf) j["shared_face"] = shared_face_to_json(g, *sf);
        emit_json(opt, out, j);
        return 0;
    }
    if (cmd == "render") {
        BBox bb;
        if (!opt.bbox.empty()) {
            auto toks = split_commas(opt.bbox);
            if (toks.size() != 4) throw ValidationError("--bbox needs x0,y0,x1,y1");
            try {
                bb = BBox{std::stod(toks[0]), std::stod(toks[1]), std::stod(toks[2]),
                          std::stod(toks[3])};
            } catch (...) {
                throw ValidationError("bad --bbox value");
            }
        } else {
            bb = BBox{-2, -2, 2, 2};
        }
        emit(opt, out, render_tiling(ctx, bb));
        return 0;
    }

    return dispatch_field_command(cmd, opt, g, raw, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact twisted mixed Voronoi tilings and their toric arrangements"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--graph", opt.graph_path, "graph JSON file")->expected(1);
    app.add_option("--config", opt.config_path, "config JSON file (l, m, a, b, field, tree)");
    app.add_option("--window", opt.window, "enumeration window for f / levels");
    app.add_option("--seed", opt.seed, "PRNG seed recorded in outputs");
    app.add_option("--out", opt.out_path, "write output to this path instead of stdout");
    app.add_option("--field", opt.field_override, "field override: q or fp:P");

    const std::vector<std::string> cmds = {"check", "trees",  "bonds",     "cac",
                                           "cell",  "tiles",  "locate",    "adjacency",
                                           "ideal", "point",  "orbit",     "zeta",
                                           "fiber", "render"};
    for (const auto& name : cmds) {
        CLI::App* sub = app.add_subcommand(name);
        sub->fallthrough();
        if (name == "locate") sub->add_option("--at", opt.at, "H_0 point, comma-separated rationals");
        if (name == "adjacency") {
            sub->add_option("--f1", opt.f1, "first f vector")->required();
            sub->add_option("--f2", opt.f2, "second f vector")->required();
        }
        if (name == "ideal" || name == "point")
            sub->add_option("--f", opt.fvec, "f vector, comma-separated integers")->required();
        if (name == "point") {
            sub->add_option("--n", opt.n, "denominator n of the orbit point");
            sub->add_option("--act", opt.act, "act by this character (one unit per vertex)");
        }
        if (name == "orbit")
            sub->add_option("--point", opt.point, "RPoint JSON file, or - for stdin")->required();
        if (name == "zeta") {
            sub->add_option("--alpha", opt.alpha, "alpha, one integer per edge")->required();
            sub->add_option("--gamma", opt.gamma, "cycle gamma, one integer per edge")->required();
        }
        if (name == "fiber") {
            sub->add_option("--t0", opt.t0, "evaluate/solve at this nonzero t0");
            sub->add_flag("--dump", opt.dump, "dump the family equations");
        }
        if (name == "render") sub->add_option("--bbox", opt.bbox, "x0,y0,x1,y1");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        return run_parsed(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const SizeError& ex) {
        err << "size error: " << ex.what() << "\n";
        return 3;
    } catch (const WindowError& ex) {
        err << "window error: " << ex.what() << "\n";
        return 3;
    } catch (const ValidationError& ex) {
        err << "validation error: " << ex.what() << "\n";
        return 2;
    }
}

}  // namespace gvt
