#pragma once

#include <json.hpp>
#include <string>

#include "gvt/arrangement.hpp"
#include "gvt/degeneration.hpp"
#include "gvt/tiling.hpp"

namespace gvt {

using Json = nlohmann::ordered_json;

/// {"vertices":["u","v"],"edges":[{"tail":"u","head":"v","name":"e1"}]}
/// Edge order in the file defines indices and the reference orientation;
/// names default to e1, e2, ...
Graph parse_graph(const Json& j);
Json graph_to_json(const Graph& g);

/// Field choice: exact rationals ("q") or a prime field ("fp:P").
struct FieldSpec {
    bool is_fp = false;
    Int p = 0;
};
FieldSpec parse_field(const std::string& s);

/// Config file contents before field instantiation. Characters stay as
/// strings ("p/q"); b is keyed by non-tree edge name or given as a list.
struct RawConfig {
    IntEV ell, m;
    std::vector<std::string> a;
    std::vector<std::string> b_values;  ///< aligned with non-tree edges
    FieldSpec field;
    std::vector<int> tree_edges;
};
RawConfig parse_config(const Graph& g, const Json& j);
RawConfig default_config(const Graph& g);

inline Rat parse_scalar(const std::string& s, const Rat&) { return parse_rat(s); }
inline Fp parse_scalar(const std::string& s, const Fp& like) {
    Rat r = parse_rat(s);
    Fp num(numerator(r).convert_to<Int>(), like.modulus());
    Fp den(denominator(r).convert_to<Int>(), like.modulus());
    return num / den;
}

template <class K>
ArrangementConfig<K> instantiate_config(const Graph& g, const RawConfig& raw, const K& one,
                                        const K& zero) {
    std::vector<K> a, b;
    for (const auto& s : raw.a) a.push_back(parse_scalar(s, one));
    for (const auto& s : raw.b_values) b.push_back(parse_scalar(s, one));
    return make_config<K>(g, raw.ell, raw.m, std::move(a), std::move(b), one, zero,
                          raw.tree_edges);
}

// ---- canonical keys -------------------------------------------------------

/// "0,1,2" for an f vector.
std::string f_key(const IntVV& f);
IntVV parse_f_key(const std::string& s, int n);

/// "e1+,e2-" for a sorted oriented edge set; "" for the empty set.
std::string edges_key(const Graph& g, const std::vector<OrientedEdge>& edges);

std::string level_str(const LevelVector& lv, int e);

// ---- value serialization --------------------------------------------------

Json level_vector_to_json(const Graph& g, const LevelVector& lv);
Json ratvv_to_json(const RatVV& x);
RatVV parse_ratvv(const Json& j, int n);
IntVV parse_intvv(const Json& j, int n);
IntEV parse_intev(const Json& j, int m);

template <class K>
Json rpoint_to_json(const ArrangementConfig<K>& cfg, const RPoint<K>& p) {
    Json edges = Json::array();
    for (int e = 0; e < cfg.g.num_edges(); ++e) {
        Json je;
        je["edge"] = cfg.g.edge_name(e);
        if (p.edges[e].ratio) {
            je["kind"] = "interior";
            je["level"] = p.edges[e].twice_level / 2;
            je["ratio"] = field_str(*p.edges[e].ratio);
        } else {
            je["kind"] = "node";
            je["level"] = std::to_string(p.edges[e].twice_level) + "/2";
        }
        edges.push_back(je);
    }
    return Json{{"edges", edges}};
}

template <class K>
RPoint<K> parse_rpoint(const ArrangementConfig<K>& cfg, const Json& j) {
    RPoint<K> p;
    p.edges.resize(cfg.g.num_edges());
    std::vector<bool> seen(cfg.g.num_edges(), false);
    if (!j.contains("edges")) throw ValidationError("point JSON needs an 'edges' array");
    for (const Json& je : j.at("edges")) {
        int e = cfg.g.edge_index(je.at("edge").get<std::string>());
        if (seen[e]) throw ValidationError("duplicate edge in point JSON");
        seen[e] = true;
        std::string kind = je.at("kind").get<std::string>();
        if (kind == "interior") {
            Int level = je.at("level").get<Int>();
            p.edges[e].twice_level = 2 * level;
            p.edges[e].ratio = parse_scalar(je.at("ratio").get<std::string>(), cfg.one());
        } else if (kind == "node") {
            Rat lv = parse_rat(je.at("level").get<std::string>());
            Rat doubled = lv * 2;
            if (denominator(doubled) != 1 || numerator(doubled) % 2 == 0)
                throw ValidationError("node level must be a strict half integer");
            p.edges[e].twice_level = numerator(doubled).convert_to<Int>();
        } else {
            throw ValidationError("point edge kind must be 'interior' or 'node'");
        }
    }
    for (int e = 0; e < cfg.g.num_edges(); ++e)
        if (!seen[e]) throw ValidationError("point JSON misses edge " + cfg.g.edge_name(e));
    validate_rpoint(cfg, p);
    return p;
}

Json var_to_json(const Graph& g, const Var& v);

template <class K>
Json binomial_to_json(const Graph& g, const Binomial<K>& b) {
    auto side = [&](const Monomial& m) {
        Json arr = Json::array();
        for (const auto& [var, exp] : m)
            for (Int k = 0; k < exp; ++k) arr.push_back(var_to_json(g, var));
        return arr;
    };
    return Json{{"lhs", side(b.lhs)}, {"rhs", side(b.rhs)}, {"coeff", field_str(b.coeff)}};
}

template <class K>
Json tequation_to_json(const Graph& g, const TEquation<K>& eq) {
    auto side = [&](const Monomial& m) {
        Json arr = Json::array();
        for (const auto& [var, exp] : m)
            for (Int k = 0; k < exp; ++k) arr.push_back(var_to_json(g, var));
        return arr;
    };
    Json j{{"lhs", side(eq.lhs)},
           {"rhs", side(eq.rhs)},
           {"coeff", field_str(eq.coeff.scalar)},
           {"t_exp", eq.coeff.t_exp}};
    j["kind"] = eq.kind == TEquation<K>::Kind::ChainPair ? "chain_pair" : "cycle_level";
    return j;
}

Json tile_to_json(const TilingContext& ctx, const Tile& t);
Json shared_face_to_json(const Graph& g, const SharedFace& sf);

}  // namespace gvt
