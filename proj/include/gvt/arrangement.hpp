#pragma once

#include <optional>
#include <vector>

#include "gvt/cochain.hpp"
#include "gvt/fp.hpp"
#include "gvt/tiling.hpp"
#include "gvt/toric.hpp"

namespace gvt {

/// Data of one arrangement Y^{a,b}: lengths, twisting, the character a per
/// reference edge (a_ebar = a_e^{-1} implied) and the character b given on
/// the fundamental cycles of a fixed spanning tree, extended to all edges
/// by 1 on tree edges. The tree is part of the configuration.
template <class K>
struct ArrangementConfig {
    Graph g;
    IntEV ell, m;
    std::vector<K> a;        ///< per reference edge
    std::vector<K> b_edge;   ///< extension of b: 1 on tree edges
    std::vector<int> tree_edges;
    K one_value, zero_value;

    const K& one() const { return one_value; }
    const K& zero() const { return zero_value; }

    /// b as a character of C^1(G,Z) evaluated on an integer cochain.
    K b_of(const IntEV& gamma) const {
        K acc = one_value;
        for (int e = 0; e < g.num_edges(); ++e)
            if (gamma[e] != 0) acc = acc * field_pow(b_edge[e], gamma[e]);
        return acc;
    }
    K a_of(const IntEV& gamma) const {
        K acc = one_value;
        for (int e = 0; e < g.num_edges(); ++e)
            if (gamma[e] != 0) acc = acc * field_pow(a[e], gamma[e]);
        return acc;
    }
};

/// Builds a configuration; `b_by_nontree` is aligned with the non-tree
/// edges (ascending edge index). Empty character vectors mean trivial.
template <class K>
ArrangementConfig<K> make_config(Graph g, IntEV ell, IntEV m, std::vector<K> a,
                                 std::vector<K> b_by_nontree, K one, K zero,
                                 std::vector<int> tree_edges = {}) {
    ArrangementConfig<K> cfg{std::move(g), std::move(ell), std::move(m), {}, {}, {}, one, zero};
    const int n = cfg.g.num_vertices(), mm = cfg.g.num_edges();
    if (cfg.ell.size() != mm || cfg.m.size() != mm)
        throw ValidationError("length/twisting size mismatch");
    for (int e = 0; e < mm; ++e)
        if (cfg.ell[e] < 1) throw ValidationError("edge lengths must be >= 1");

    if (a.empty()) a.assign(mm, one);
    if (static_cast<int>(a.size()) != mm) throw ValidationError("a must have one unit per edge");
    for (const K& u : a)
        if (field_is_zero(u)) throw ValidationError("character a must be nonzero");
    cfg.a = std::move(a);

    cfg.tree_edges = tree_edges.empty() ? min_spanning_tree(cfg.g) : std::move(tree_edges);
    if (static_cast<int>(cfg.tree_edges.size()) != n - 1)
        throw ValidationError("tree must have |V|-1 edges");
    std::vector<bool> in_tree(mm, false);
    for (int e : cfg.tree_edges) {
        if (e < 0 || e >= mm || in_tree[e]) throw ValidationError("bad tree edge list");
        in_tree[e] = true;
    }
    if (component_count(components(cfg.g, in_tree)) != 1)
        throw ValidationError("tree edges do not span the graph");

    std::vector<int> nontree;
    for (int e = 0; e < mm; ++e)
        if (!in_tree[e]) nontree.push_back(e);
    if (b_by_nontree.empty()) b_by_nontree.assign(nontree.size(), one);
    if (b_by_nontree.size() != nontree.size())
        throw ValidationError("b must have one unit per non-tree edge");
    cfg.b_edge.assign(mm, one);
    for (size_t i = 0; i < nontree.size(); ++i) {
        if (field_is_zero(b_by_nontree[i]))
            throw ValidationError("character b must be nonzero");
        cfg.b_edge[nontree[i]] = b_by_nontree[i];
    }
    return cfg;
}

/// Point of the arrangement R: per reference edge either a node at a strict
/// half level, or an interior position (integer level, nonzero ratio
/// x_e/x_ebar at that level).
template <class K>
struct RPoint {
    struct EdgeState {
        Int twice_level = 0;
        std::optional<K> ratio;  ///< engaged exactly when the level is integral
    };
    std::vector<EdgeState> edges;

    LevelVector levels() const {
        IntEV t(static_cast<int>(edges.size()));
        for (size_t e = 0; e < edges.size(); ++e) t[static_cast<int>(e)] = edges[e].twice_level;
        return LevelVector(std::move(t));
    }
    bool operator==(const RPoint& o) const {
        if (edges.size() != o.edges.size()) return false;
        for (size_t e = 0; e < edges.size(); ++e) {
            if (edges[e].twice_level != o.edges[e].twice_level) return false;
            if (edges[e].ratio.has_value() != o.edges[e].ratio.has_value()) return false;
            if (edges[e].ratio && !(*edges[e].ratio == *o.edges[e].ratio)) return false;
        }
        return true;
    }
};

template <class K>
void validate_rpoint(const ArrangementConfig<K>& cfg, const RPoint<K>& p) {
    if (static_cast<int>(p.edges.size()) != cfg.g.num_edges())
        throw ValidationError("point has wrong edge count");
    for (int e = 0; e < cfg.g.num_edges(); ++e) {
        bool integral = p.edges[e].twice_level % 2 == 0;
        if (integral != p.edges[e].ratio.has_value())
            throw ValidationError("edge " + cfg.g.edge_name(e) +
                                  ": interior needs an integer level, node a half level");
        if (p.edges[e].ratio && field_is_zero(*p.edges[e].ratio))
            throw ValidationError("edge " + cfg.g.edge_name(e) + ": ratio must be nonzero");
    }
}

/// Representative chain coordinates (x_{e,i} : x_{ebar,i}) of a point at an
/// integer level i: (0:1) below the point's level, (1:0) above, (ratio:1)
/// at an interior level.
template <class K>
std::pair<K, K> chain_pair(const ArrangementConfig<K>& cfg, const RPoint<K>& p, int edge,
                           Int i) {
    const auto& st = p.edges[edge];
    if (2 * i < st.twice_level) return {cfg.zero(), cfg.one()};
    if (2 * i > st.twice_level) return {cfg.one(), cfg.zero()};
    return {*st.ratio, cfg.one()};
}

/// Canonical orbit representative p^n_f: ratio b_e a_e^{level} on integer
/// levels, nodes at half levels.
template <class K>
RPoint<K> base_point(const ArrangementConfig<K>& cfg, Int n, const IntVV& f) {
    LevelVector lev = dee(cfg.g, cfg.ell, cfg.m, f, n);
    RPoint<K> p;
    p.edges.resize(cfg.g.num_edges());
    for (int e = 0; e < cfg.g.num_edges(); ++e) {
        p.edges[e].twice_level = lev.twice(e);
        if (lev.integral(e))
            p.edges[e].ratio = cfg.b_edge[e] * field_pow(cfg.a[e], lev.int_level(e));
    }
    return p;
}

/// Torus action: each interior ratio is multiplied by c_head/c_tail; nodes
/// and levels are fixed. c and lambda*c act identically.
template <class K>
RPoint<K> act(const ArrangementConfig<K>& cfg, const std::vector<K>& c, RPoint<K> p) {
    if (static_cast<int>(c.size()) != cfg.g.num_vertices())
        throw ValidationError("character size mismatch");
    for (const K& u : c)
        if (field_is_zero(u)) throw ValidationError("character must have nonzero units");
    for (int e = 0; e < cfg.g.num_edges(); ++e)
        if (p.edges[e].ratio)
            p.edges[e].ratio = *p.edges[e].ratio * c[cfg.g.head(e)] / c[cfg.g.tail(e)];
    return p;
}

template <class K>
K eval_monomial(const ArrangementConfig<K>& cfg, const RPoint<K>& p, const Monomial& mono) {
    K acc = cfg.one();
    for (const auto& [var, exp] : mono) {
        auto pair = chain_pair(cfg, p, var.edge, var.level);
        K val = var.bar ? pair.second : pair.first;
        if (field_is_zero(val)) return cfg.zero();
        acc = acc * field_pow(val, exp);
    }
    return acc;
}

/// Membership of p in the component P^{a,b}_{l,m,f}: the stratum must sit
/// inside P_{level(f)} and every cycle binomial of the active subgraph must
/// vanish at the chain coordinates.
template <class K>
bool member_component(const ArrangementConfig<K>& cfg, const RPoint<K>& p, const IntVV& f) {
    LevelVector lf = dee(cfg.g, cfg.ell, cfg.m, f, 1);
    for (int e = 0; e < cfg.g.num_edges(); ++e) {
        Int dp = p.edges[e].twice_level, df = lf.twice(e);
        if (dp == df) continue;
        // a half step is allowed only from an integral level of f
        bool ok = (std::abs(dp - df) == 1) && lf.integral(e) && !p.edges[e].ratio;
        if (!ok) return false;
    }
    ActiveSubgraph active = active_subgraph(cfg.g, lf);
    for (const Binomial<K>& b :
         cycle_binomials(cfg.g, active.edges, lf, cfg.a, cfg.b_edge)) {
        K lhs = eval_monomial(cfg, p, b.lhs);
        K rhs = eval_monomial(cfg, p, b.rhs);
        if (!(lhs == K(b.coeff * rhs))) return false;
    }
    return true;
}

/// True when the point's levels are too large for the f-window to be
/// conclusive (documented heuristic; membership search itself is exact).
template <class K>
bool member_window_suspect(const ArrangementConfig<K>& cfg, const RPoint<K>& p, Int window) {
    Int need = 0;
    for (int e = 0; e < cfg.g.num_edges(); ++e) {
        Int lev = p.edges[e].twice_level;
        if (lev < 0) lev = -lev;
        need = std::max(need, (lev / 2 + 1) * cfg.ell[e] + std::abs(cfg.m[e]));
    }
    return need * std::max(1, cfg.g.diameter()) > window * 2;
}

/// First normalized f (increasing max|f|, then lexicographic) with
/// connected active subgraph whose component contains p.
template <class K>
std::optional<IntVV> member_Y(const ArrangementConfig<K>& cfg, const RPoint<K>& p, Int window) {
    const int n = cfg.g.num_vertices();
    IntVV f = IntVV::Zero(n);
    auto try_f = [&](const IntVV& cand) -> bool {
        LevelVector lf = dee(cfg.g, cfg.ell, cfg.m, cand, 1);
        if (!active_subgraph(cfg.g, lf).connected) return false;
        return member_component(cfg, p, cand);
    };
    if (n == 1) return f;  // single vertex: empty product of chains
    for (Int shell = 0; shell <= window; ++shell) {
        // lexicographic enumeration of [-shell, shell]^(n-1), filtered to
        // max norm exactly shell
        IntVV cur = IntVV::Zero(n);
        for (int v = 1; v < n; ++v) cur[v] = -shell;
        for (;;) {
            Int maxabs = 0;
            for (int v = 1; v < n; ++v) maxabs = std::max(maxabs, std::abs(cur[v]));
            if (maxabs == shell && try_f(cur)) return cur;
            int v = 1;
            while (v < n && cur[v] == shell) {
                cur[v] = -shell;
                ++v;
            }
            if (v == n) break;
            ++cur[v];
        }
    }
    return std::nullopt;
}

template <class K>
struct ZetaPoint {
    IntEV alpha, gamma;
    K p, q;  ///< the projective pair (P : Q), never both zero
};

/// The coefficient point of the (alpha, gamma) equation: (1:0), (0:1) or
/// (1 : b(gamma) prod a_e^{alpha_e gamma_e}) by the sign of
/// sum(alpha_e gamma_e l_e - m_e gamma_e).
template <class K>
ZetaPoint<K> zeta_point(const ArrangementConfig<K>& cfg, const IntEV& alpha,
                        const IntEV& gamma) {
    if (apply_d_star<Int>(cfg.g, gamma) != IntVV::Zero(cfg.g.num_vertices()))
        throw ValidationError("gamma is not a cycle (d* gamma != 0)");
    Int s = 0;
    for (int e = 0; e < cfg.g.num_edges(); ++e)
        s += alpha[e] * gamma[e] * cfg.ell[e] - cfg.m[e] * gamma[e];
    ZetaPoint<K> z{alpha, gamma, cfg.one(), cfg.one()};
    if (s < 0) {
        z.q = cfg.zero();
    } else if (s > 0) {
        z.p = cfg.zero();
    } else {
        IntEV ag(cfg.g.num_edges());
        for (int e = 0; e < cfg.g.num_edges(); ++e) ag[e] = alpha[e] * gamma[e];
        z.q = cfg.b_of(gamma) * cfg.a_of(ag);
    }
    return z;
}

/// Evaluates the (alpha, gamma) equation of Y_z at p's chain coordinates.
template <class K>
bool check_z_equation(const ArrangementConfig<K>& cfg, const RPoint<K>& p, const IntEV& alpha,
                      const IntEV& gamma) {
    ZetaPoint<K> z = zeta_point<K>(cfg, alpha, gamma);
    K lhs = z.p, rhs = z.q;
    for (int e = 0; e < cfg.g.num_edges(); ++e) {
        if (gamma[e] == 0) continue;
        auto pair = chain_pair(cfg, p, e, alpha[e]);
        K xe = pair.first, xbar = pair.second;
        Int k = std::abs(gamma[e]);
        K for_lhs = gamma[e] > 0 ? xe : xbar;
        K for_rhs = gamma[e] > 0 ? xbar : xe;
        lhs = field_is_zero(for_lhs) ? cfg.zero() : K(lhs * field_pow(for_lhs, k));
        rhs = field_is_zero(for_rhs) ? cfg.zero() : K(rhs * field_pow(for_rhs, k));
        if (field_is_zero(lhs) && field_is_zero(rhs)) return true;
    }
    return lhs == rhs;
}

template <class K>
struct OrbitClass {
    Int n = 1;
    IntVV f;
    std::vector<K> c;
};

/// Writes p as act(c, p^n_f): solves the level vector for (n, f), then the
/// character by ratio propagation over each interior component. Returns
/// nothing when the level vector is not realizable; throws NotInYError when
/// the ratios are inconsistent with any orbit point.
template <class K>
std::optional<OrbitClass<K>> classify_orbit(const ArrangementConfig<K>& cfg,
                                            const RPoint<K>& p) {
    validate_rpoint(cfg, p);
    auto nf = solve_level_function(cfg.g, cfg.ell, cfg.m, p.levels());
    if (!nf) return std::nullopt;
    OrbitClass<K> out;
    out.n = nf->first;
    out.f = nf->second;
    RPoint<K> base = base_point(cfg, out.n, out.f);

    const int n = cfg.g.num_vertices();
    std::vector<bool> interior(cfg.g.num_edges());
    for (int e = 0; e < cfg.g.num_edges(); ++e) interior[e] = p.edges[e].ratio.has_value();
    std::vector<int> comp = components(cfg.g, interior);

    out.c.assign(n, cfg.one());
    std::vector<bool> fixed(n, false);
    for (int root = 0; root < n; ++root) {
        if (fixed[root]) continue;
        fixed[root] = true;
        std::vector<int> stack = {root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (OrientedEdge oe : cfg.g.out_edges(v)) {
                if (!interior[oe.edge]) continue;
                int w = cfg.g.head(oe);
                K quot = *p.edges[oe.edge].ratio / *base.edges[oe.edge].ratio;
                if (!oe.fwd) quot = field_pow(quot, -1);
                // quot = c_head/c_tail along the reference orientation of oe
                K expect = out.c[v] * quot;
                if (!fixed[w]) {
                    out.c[w] = expect;
                    fixed[w] = true;
                    stack.push_back(w);
                } else if (!(out.c[w] == expect)) {
                    throw NotInYError("ratios are inconsistent with any orbit point");
                }
            }
        }
    }
    if (!(act(cfg, out.c, base) == p))
        throw std::logic_error("orbit classification failed to reproduce the point");
    return out;
}

}  // namespace gvt
