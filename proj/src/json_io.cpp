#include "gvt/json_io.hpp"

#include <algorithm>

namespace gvt {

Graph parse_graph(const Json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("graph JSON needs 'vertices' and 'edges'");
    std::vector<std::string> names;
    for (const Json& v : j.at("vertices")) names.push_back(v.get<std::string>());
    std::vector<std::pair<int, int>> ends;
    std::vector<std::string> edge_names;
    bool any_named = false;
    int k = 0;
    for (const Json& e : j.at("edges")) {
        ++k;
        auto find = [&](const std::string& name) {
            for (int v = 0; v < static_cast<int>(names.size()); ++v)
                if (names[v] == name) return v;
            throw ValidationError("edge endpoint '" + name + "' is not a vertex");
        };
        ends.emplace_back(find(e.at("tail").get<std::string>()),
                          find(e.at("head").get<std::string>()));
        if (e.contains("name")) {
            any_named = true;
            edge_names.push_back(e.at("name").get<std::string>());
        } else {
            edge_names.push_back("e" + std::to_string(k));
        }
    }
    (void)any_named;
    return Graph(std::move(names), std::move(ends), std::move(edge_names));
}

Json graph_to_json(const Graph& g) {
    Json verts = Json::array();
    for (int v = 0; v < g.num_vertices(); ++v) verts.push_back(g.vertex_name(v));
    Json edges = Json::array();
    for (int e = 0; e < g.num_edges(); ++e)
        edges.push_back(Json{{"tail", g.vertex_name(g.tail(e))},
                             {"head", g.vertex_name(g.head(e))},
                             {"name", g.edge_name(e)}});
    return Json{{"vertices", verts}, {"edges", edges}};
}

FieldSpec parse_field(const std::string& s) {
    FieldSpec fs;
    if (s == "q") return fs;
    if (s.rfind("fp:", 0) == 0) {
        fs.is_fp = true;
        try {
            fs.p = std::stoll(s.substr(3));
        } catch (...) {
            throw ValidationError("bad field spec '" + s + "'");
        }
        if (fs.p > (1 << 30)) throw ValidationError("modulus too large");
        if (!Fp::is_prime(fs.p)) throw ValidationError("modulus must be prime");
        return fs;
    }
    throw ValidationError("field must be 'q' or 'fp:P'");
}

namespace {

IntEV parse_edge_map(const Graph& g, const Json& j, Int fallback) {
    IntEV out = IntEV::Constant(g.num_edges(), fallback);
    if (j.is_null()) return out;
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != g.num_edges())
            throw ValidationError("per-edge list has wrong length");
        for (int e = 0; e < g.num_edges(); ++e) out[e] = j.at(e).get<Int>();
        return out;
    }
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            out[g.edge_index(it.key())] = it.value().get<Int>();
        return out;
    }
    throw ValidationError("per-edge values must be a list or an object");
}

}  // namespace

RawConfig default_config(const Graph& g) {
    RawConfig raw;
    raw.ell = IntEV::Constant(g.num_edges(), 1);
    raw.m = IntEV::Zero(g.num_edges());
    raw.tree_edges = min_spanning_tree(g);
    return raw;
}

RawConfig parse_config(const Graph& g, const Json& j) {
    RawConfig raw = default_config(g);
    if (j.contains("l")) raw.ell = parse_edge_map(g, j.at("l"), 1);
    if (j.contains("m")) raw.m = parse_edge_map(g, j.at("m"), 0);
    if (j.contains("field")) raw.field = parse_field(j.at("field").get<std::string>());

    if (j.contains("tree")) {
        raw.tree_edges.clear();
        for (const Json& name : j.at("tree"))
            raw.tree_edges.push_back(g.edge_index(name.get<std::string>()));
    }

    if (j.contains("a")) {
        const Json& ja = j.at("a");
        raw.a.assign(g.num_edges(), "1");
        if (ja.is_array()) {
            if (static_cast<int>(ja.size()) != g.num_edges())
                throw ValidationError("'a' list has wrong length");
            for (int e = 0; e < g.num_edges(); ++e) raw.a[e] = ja.at(e).get<std::string>();
        } else if (ja.is_object()) {
            for (auto it = ja.begin(); it != ja.end(); ++it)
                raw.a[g.edge_index(it.key())] = it.value().get<std::string>();
        } else {
            throw ValidationError("'a' must be a list or an object");
        }
    }

    std::vector<bool> in_tree(g.num_edges(), false);
    for (int e : raw.tree_edges) {
        if (e < 0 || e >= g.num_edges() || in_tree[e])
            throw ValidationError("bad tree edge list");
        in_tree[e] = true;
    }
    std::vector<int> nontree;
    for (int e = 0; e < g.num_edges(); ++e)
        if (!in_tree[e]) nontree.push_back(e);

    if (j.contains("b")) {
        const Json& jb = j.at("b");
        raw.b_values.assign(nontree.size(), "1");
        if (jb.is_array()) {
            if (jb.size() != nontree.size())
                throw ValidationError("'b' list must have one value per non-tree edge");
            for (size_t i = 0; i < nontree.size(); ++i)
                raw.b_values[i] = jb.at(i).get<std::string>();
        } else if (jb.is_object()) {
            for (auto it = jb.begin(); it != jb.end(); ++it) {
                int e = g.edge_index(it.key());
                auto pos = std::find(nontree.begin(), nontree.end(), e);
                if (pos == nontree.end())
                    throw ValidationError("'b' keys must be non-tree edges, got " + it.key());
                raw.b_values[pos - nontree.begin()] = it.value().get<std::string>();
            }
        } else {
            throw ValidationError("'b' must be a list or an object");
        }
    }
    return raw;
}

std::string f_key(const IntVV& f) {
    std::string s;
    for (int v = 0; v < f.size(); ++v) {
        if (v) s += ",";
        s += std::to_string(f[v]);
    }
    return s;
}

IntVV parse_f_key(const std::string& s, int n) {
    IntVV f(n);
    size_t pos = 0;
    for (int v = 0; v < n; ++v) {
        size_t comma = s.find(',', pos);
        std::string tok = comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
        try {
            f[v] = std::stoll(tok);
        } catch (...) {
            throw ValidationError("bad integer vector '" + s + "'");
        }
        if (comma == std::string::npos && v + 1 < n)
            throw ValidationError("integer vector '" + s + "' has too few entries");
        pos = comma + 1;
    }
    return f;
}

std::string edges_key(const Graph& g, const std::vector<OrientedEdge>& edges) {
    std::string s;
    for (OrientedEdge oe : edges) {
        if (!s.empty()) s += ",";
        s += g.edge_name(oe.edge);
        s += oe.fwd ? "+" : "-";
    }
    return s;
}

std::string level_str(const LevelVector& lv, int e) {
    if (lv.integral(e)) return std::to_string(lv.twice(e) / 2);
    return std::to_string(lv.twice(e)) + "/2";
}

Json level_vector_to_json(const Graph& g, const LevelVector& lv) {
    Json arr = Json::array();
    for (int e = 0; e < g.num_edges(); ++e) arr.push_back(level_str(lv, e));
    return arr;
}

Json ratvv_to_json(const RatVV& x) {
    Json arr = Json::array();
    for (int i = 0; i < x.size(); ++i) arr.push_back(rat_str(x[i]));
    return arr;
}

RatVV parse_ratvv(const Json& j, int n) {
    if (static_cast<int>(j.size()) != n) throw ValidationError("vector has wrong length");
    RatVV x(n);
    for (int i = 0; i < n; ++i) x[i] = parse_rat(j.at(i).get<std::string>());
    return x;
}

IntVV parse_intvv(const Json& j, int n) {
    if (static_cast<int>(j.size()) != n) throw ValidationError("vector has wrong length");
    IntVV x(n);
    for (int i = 0; i < n; ++i) x[i] = j.at(i).get<Int>();
    return x;
}

IntEV parse_intev(const Json& j, int m) {
    if (static_cast<int>(j.size()) != m) throw ValidationError("vector has wrong length");
    IntEV x(m);
    for (int i = 0; i < m; ++i) x[i] = j.at(i).get<Int>();
    return x;
}

Json var_to_json(const Graph& g, const Var& v) {
    return Json::array({g.edge_name(v.edge), v.level, v.bar ? "-" : "+"});
}

Json tile_to_json(const TilingContext& ctx, const Tile& t) {
    const Graph& g = ctx.graph();
    Json j;
    Json fv = Json::array();
    for (int v = 0; v < g.num_vertices(); ++v) fv.push_back(t.f[v]);
    j["f"] = fv;
    j["level"] = level_vector_to_json(g, t.level);
    Json active = Json::array();
    for (int e = 0; e < g.num_edges(); ++e)
        if (t.active.edges[e]) active.push_back(g.edge_name(e));
    j["active"] = active;
    j["center"] = ratvv_to_json(t.center);
    Json verts = Json::array();
    for (const RatVV& img : t.geom->vertex_images) {
        RatVV pt = t.center + img;
        verts.push_back(ratvv_to_json(pt));
    }
    j["vertices"] = verts;
    return j;
}

Json shared_face_to_json(const Graph& g, const SharedFace& sf) {
    Json j;
    j["alpha"] = level_vector_to_json(g, sf.alpha);
    j["d1"] = edges_key(g, sf.d1.edges);
    j["d2"] = edges_key(g, sf.d2.edges);
    Json comps = Json::array();
    for (const auto& z : sf.components) {
        Json c = Json::array();
        for (int v : z) c.push_back(g.vertex_name(v));
        comps.push_back(c);
    }
    j["components"] = comps;
    return j;
}

}  // namespace gvt
