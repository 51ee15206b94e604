#pragma once

#include <map>
#include <string>
#include <vector>

#include "gvt/arrangement.hpp"

namespace gvt {

/// Coefficient scalar * t^t_exp with t an exact indeterminate.
template <class K>
struct TCoeff {
    K scalar;
    Int t_exp = 0;

    K at(const ArrangementConfig<K>& cfg, const K& t0) const {
        if (t_exp == 0) return scalar;
        if (field_is_zero(t0)) return cfg.zero();
        return scalar * field_pow(t0, t_exp);
    }
};

/// Equation of the degeneration family:  lhs = coeff * rhs. The sides are
/// arranged so the t-exponent is nonnegative.
template <class K>
struct TEquation {
    enum class Kind { ChainPair, CycleLevel };
    Kind kind;
    Monomial lhs, rhs;
    TCoeff<K> coeff;
    // provenance
    int edge = -1;        ///< ChainPair: the edge of (e,i,j)
    Int i = 0, j = 0;     ///< ChainPair levels
    int cycle_index = -1; ///< CycleLevel: index into simple_cycles_one_orientation
    IntEV alpha;          ///< CycleLevel: the level choice (zero off the cycle)
};

/// All chain-pair equations with -n_e <= i < j <= n_e and all cycle-level
/// equations for simple cycles and alpha windows, sides picked by the sign
/// of sum(gamma alpha l - m gamma). Alpha entries off the cycle support do
/// not enter the equation and are fixed to zero.
template <class K>
std::vector<TEquation<K>> family_equations(const ArrangementConfig<K>& cfg,
                                           const IntEV& window) {
    const Graph& g = cfg.g;
    if (window.size() != g.num_edges()) throw ValidationError("window size mismatch");
    for (int e = 0; e < g.num_edges(); ++e)
        if (window[e] < 0) throw ValidationError("window must be nonnegative");

    std::vector<TEquation<K>> out;
    for (int e = 0; e < g.num_edges(); ++e)
        for (Int i = -window[e]; i <= window[e]; ++i)
            for (Int j = i + 1; j <= window[e]; ++j) {
                TEquation<K> eq;
                eq.kind = TEquation<K>::Kind::ChainPair;
                eq.edge = e;
                eq.i = i;
                eq.j = j;
                eq.lhs = make_monomial({Var{e, i, false}, Var{e, j, true}});
                eq.rhs = make_monomial({Var{e, i, true}, Var{e, j, false}});
                // a-exponent i-j (not j-i): with j-i the cycle-level
                // equations over all alpha windows would force a^2-torsion
                // and empty t != 0 fibers; i-j is the unique choice that
                // keeps the generic fiber a torsor and still specializes to
                // the Y_z system at t = 0.
                eq.coeff = TCoeff<K>{field_pow(cfg.a[e], i - j), cfg.ell[e] * (j - i)};
                out.push_back(std::move(eq));
            }

    auto cycles = simple_cycles_one_orientation(g);
    for (int ci = 0; ci < static_cast<int>(cycles.size()); ++ci) {
        IntEV gamma = cycles[ci].as_cochain(g);
        std::vector<int> supp;
        for (int e = 0; e < g.num_edges(); ++e)
            if (gamma[e] != 0) supp.push_back(e);
        // odometer over alpha on the support
        std::vector<Int> alpha_s(supp.size());
        for (size_t k = 0; k < supp.size(); ++k) alpha_s[k] = -window[supp[k]];
        for (;;) {
            IntEV alpha = IntEV::Zero(g.num_edges());
            for (size_t k = 0; k < supp.size(); ++k) alpha[supp[k]] = alpha_s[k];

            Int s = 0;
            IntEV ag = IntEV::Zero(g.num_edges());
            for (int e : supp) {
                s += gamma[e] * alpha[e] * cfg.ell[e] - cfg.m[e] * gamma[e];
                ag[e] = alpha[e] * gamma[e];
            }
            K big_c = cfg.b_of(gamma) * cfg.a_of(ag);

            std::vector<Var> plain, barred;
            for (int e : supp) {
                Int k = std::abs(gamma[e]);
                for (Int rep = 0; rep < k; ++rep) {
                    plain.push_back(Var{e, alpha[e], gamma[e] < 0});
                    barred.push_back(Var{e, alpha[e], gamma[e] > 0});
                }
            }
            TEquation<K> eq;
            eq.kind = TEquation<K>::Kind::CycleLevel;
            eq.cycle_index = ci;
            eq.alpha = alpha;
            if (s >= 0) {
                // C * barred = t^s * plain  ->  barred = C^{-1} t^s plain
                eq.lhs = make_monomial(std::move(barred));
                eq.rhs = make_monomial(std::move(plain));
                eq.coeff = TCoeff<K>{field_pow(big_c, -1), s};
            } else {
                // C t^{-s} * barred = plain  ->  plain = C t^{-s} barred
                eq.lhs = make_monomial(std::move(plain));
                eq.rhs = make_monomial(std::move(barred));
                eq.coeff = TCoeff<K>{big_c, -s};
            }
            out.push_back(std::move(eq));

            size_t k = 0;
            while (k < supp.size() && alpha_s[k] == window[supp[k]]) {
                alpha_s[k] = -window[supp[k]];
                ++k;
            }
            if (k == supp.size()) break;
            ++alpha_s[k];
        }
    }
    return out;
}

/// Chain coordinates per (edge, level): the pair (x_{e,i}, x_{ebar,i}).
template <class K>
using Assignment = std::map<std::pair<int, Int>, std::pair<K, K>>;

template <class K>
K assignment_value(const Assignment<K>& a, const Var& v) {
    auto it = a.find({v.edge, v.level});
    if (it == a.end())
        throw ValidationError("assignment misses edge " + std::to_string(v.edge) + " level " +
                              std::to_string(v.level));
    return v.bar ? it->second.second : it->second.first;
}

/// True when every equation holds at t = t0.
template <class K>
bool evaluate_family(const ArrangementConfig<K>& cfg, const std::vector<TEquation<K>>& eqs,
                     const Assignment<K>& assign, const K& t0) {
    for (const auto& [key, pair] : assign)
        if (field_is_zero(pair.first) && field_is_zero(pair.second))
            throw ValidationError("assignment has an all-zero coordinate pair");
    auto eval = [&](const Monomial& m) {
        K acc = cfg.one();
        for (const auto& [var, exp] : m) {
            K val = assignment_value(assign, var);
            if (field_is_zero(val)) return cfg.zero();
            acc = acc * field_pow(val, exp);
        }
        return acc;
    };
    for (const TEquation<K>& eq : eqs) {
        K lhs = eval(eq.lhs);
        K rhs = eval(eq.rhs);
        K c = eq.coeff.at(cfg, t0);
        K scaled = field_is_zero(c) || field_is_zero(rhs) ? cfg.zero() : K(c * rhs);
        if (!(lhs == scaled)) return false;
    }
    return true;
}

/// Point of the generic fiber at t0 != 0: spanning-tree level-0 ratios set
/// to 1, non-tree ratios solved from the fundamental-cycle equations, all
/// other levels filled by the chain-pair recursion. Every coordinate is a
/// unit; over Q no roots are ever required.
template <class K>
Assignment<K> solve_generic_fiber(const ArrangementConfig<K>& cfg, const IntEV& window,
                                  const K& t0) {
    if (field_is_zero(t0)) throw ValidationError("t0 must be nonzero on the generic fiber");
    const Graph& g = cfg.g;
    std::vector<bool> in_tree(g.num_edges(), false);
    for (int e : cfg.tree_edges) in_tree[e] = true;

    std::vector<K> mu0(g.num_edges(), cfg.one());
    for (int e = 0; e < g.num_edges(); ++e) {
        if (in_tree[e]) continue;
        OrientedCycle fc = fundamental_cycle(g, cfg.tree_edges, e);
        IntEV gamma = fc.as_cochain(g);
        Int mg = 0;
        for (int f = 0; f < g.num_edges(); ++f) mg += cfg.m[f] * gamma[f];
        // prod_f mu_f(0)^gamma_f = b(gamma) t0^mg with tree ratios 1
        mu0[e] = cfg.b_of(gamma) * field_pow(t0, mg);
    }

    Assignment<K> out;
    for (int e = 0; e < g.num_edges(); ++e)
        for (Int i = -window[e]; i <= window[e]; ++i) {
            K ratio = mu0[e] * field_pow(cfg.a[e], i) * field_pow(t0, -i * cfg.ell[e]);
            out[{e, i}] = {ratio, cfg.one()};
        }
    return out;
}

/// Windowed chain coordinates of a point of R (the special-fiber side).
template <class K>
Assignment<K> assignment_from_rpoint(const ArrangementConfig<K>& cfg, const RPoint<K>& p,
                                     const IntEV& window) {
    Assignment<K> out;
    for (int e = 0; e < cfg.g.num_edges(); ++e)
        for (Int i = -window[e]; i <= window[e]; ++i) out[{e, i}] = chain_pair(cfg, p, e, i);
    return out;
}

/// Character c with level-0 ratios of `to` equal to (c_head/c_tail) times
/// those of `from`; tree-solved, verified on non-tree edges.
template <class K>
std::vector<K> torsor_transporter(const ArrangementConfig<K>& cfg, const Assignment<K>& from,
                                  const Assignment<K>& to, const K& t0) {
    const Graph& g = cfg.g;
    if (field_is_zero(t0)) throw ValidationError("t0 must be nonzero");
    auto ratio0 = [&](const Assignment<K>& a, int e) {
        auto it = a.find({e, 0});
        if (it == a.end()) throw ValidationError("assignment misses level 0");
        if (field_is_zero(it->second.first) || field_is_zero(it->second.second))
            throw ValidationError("generic-fiber coordinates must be units");
        return K(it->second.first / it->second.second);
    };
    std::vector<K> c(g.num_vertices(), cfg.one());
    std::vector<bool> fixed(g.num_vertices(), false);
    fixed[0] = true;
    std::vector<bool> in_tree(g.num_edges(), false);
    for (int e : cfg.tree_edges) in_tree[e] = true;
    // propagate along the tree
    for (int round = 0; round < g.num_vertices(); ++round)
        for (int e = 0; e < g.num_edges(); ++e) {
            if (!in_tree[e]) continue;
            int u = g.tail(e), v = g.head(e);
            K quot = ratio0(to, e) / ratio0(from, e);  // = c_v / c_u
            if (fixed[u] && !fixed[v]) {
                c[v] = c[u] * quot;
                fixed[v] = true;
            } else if (fixed[v] && !fixed[u]) {
                c[u] = c[v] / quot;
                fixed[u] = true;
            }
        }
    for (int e = 0; e < g.num_edges(); ++e) {
        K quot = ratio0(to, e) / ratio0(from, e);
        if (!(K(c[g.head(e)] / c[g.tail(e)]) == quot))
            throw NotSameFiberError("assignments are not on the same fiber: edge " +
                                    g.edge_name(e));
    }
    return c;
}

/// Limit of the generic fiber under the one-parameter character c_v = t^k_v
/// as t -> 0, by lowest-t-degree bookkeeping; lands on a point of R.
template <class K>
RPoint<K> one_parameter_limit(const ArrangementConfig<K>& cfg,
                              const std::vector<Int>& vertex_exp) {
    const Graph& g = cfg.g;
    if (static_cast<int>(vertex_exp.size()) != g.num_vertices())
        throw ValidationError("vertex exponent size mismatch");
    std::vector<bool> in_tree(g.num_edges(), false);
    for (int e : cfg.tree_edges) in_tree[e] = true;

    RPoint<K> p;
    p.edges.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        // symbolic level-i ratio: unit_e(i) * t^(d0 - i l_e + shift)
        K unit0 = cfg.one();
        Int d0 = 0;
        if (!in_tree[e]) {
            OrientedCycle fc = fundamental_cycle(g, cfg.tree_edges, e);
            IntEV gamma = fc.as_cochain(g);
            for (int f = 0; f < g.num_edges(); ++f) d0 += cfg.m[f] * gamma[f];
            unit0 = cfg.b_of(gamma);
        }
        Int shift = vertex_exp[g.head(e)] - vertex_exp[g.tail(e)];
        Int top = d0 + shift;  // t-degree at level i is top - i*l_e, strictly decreasing
        if (top % cfg.ell[e] == 0) {
            Int level = top / cfg.ell[e];
            p.edges[e].twice_level = 2 * level;
            p.edges[e].ratio = unit0 * field_pow(cfg.a[e], level);
        } else {
            p.edges[e].twice_level = 2 * floor_div(top, cfg.ell[e]) + 1;
        }
    }
    return p;
}

}  // namespace gvt
