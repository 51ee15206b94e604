#include "gvt/flows.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "gvt/cochain.hpp"

namespace gvt {

namespace {

std::string cycle_label(const Graph& g, const OrientedCycle& c) {
    std::string s;
    for (OrientedEdge oe : c.edges) {
        if (!s.empty()) s += ",";
        s += g.edge_name(oe.edge);
        s += oe.fwd ? "+" : "-";
    }
    return s;
}

Int h_sum(const std::vector<Int>& h, const OrientedCycle& c) {
    Int s = 0;
    for (OrientedEdge oe : c.edges) s += h[oe.edge];
    return s;
}

}  // namespace

IntEV bounded_flow(const Graph& g, const IntEV& beta, const std::vector<Int>& h) {
    const int m = g.num_edges();
    if (static_cast<int>(h.size()) != m) throw ValidationError("h size mismatch");
    for (Int v : h)
        if (v < 0) throw ValidationError("h must be nonnegative");

    const std::vector<OrientedCycle> cycles = simple_cycles(g);
    for (const OrientedCycle& c : cycles) {
        Int s = cycle_sum(beta, c);
        if (s > h_sum(h, c))
            throw HypothesisError("cycle sum exceeds bound on cycle " + cycle_label(g, c));
    }

    // Shrink h away from tight cycles, then read eta off the tight set.
    std::vector<Int> hh = h;
    for (;;) {
        std::set<OrientedEdge> tight;
        for (const OrientedCycle& c : cycles)
            if (cycle_sum(beta, c) == h_sum(hh, c))
                for (OrientedEdge oe : c.edges) tight.insert(oe);
        int shrink = -1;
        for (int e = 0; e < m && shrink < 0; ++e)
            if (hh[e] > 0 && !tight.count(OrientedEdge(e, true)) &&
                !tight.count(OrientedEdge(e, false)))
                shrink = e;
        if (shrink >= 0) {
            --hh[shrink];
            continue;
        }
        IntEV eta = IntEV::Zero(m);
        for (int e = 0; e < m; ++e) {
            if (hh[e] == 0) continue;
            bool fwd = tight.count(OrientedEdge(e, true));
            bool bwd = tight.count(OrientedEdge(e, false));
            if (fwd && bwd)
                throw std::logic_error("both orientations tight with positive bound");
            if (fwd) eta[e] = hh[e];
            if (bwd) eta[e] = -hh[e];
        }
        for (const OrientedCycle& c : cycles)
            if (cycle_sum(eta, c) != cycle_sum(beta, c))
                throw std::logic_error("bounded_flow produced wrong cycle sums");
        return eta;
    }
}

namespace {

// Everything below works on the sub-instance induced on the vertices of
// `mask`; edges with an endpoint outside are ignored.

bool edge_inside(const Graph& g, const std::vector<bool>& mask, int e) {
    return mask[g.tail(e)] && mask[g.head(e)];
}

// Traversal may not use an oriented edge whose reversal lies in D.
bool compatible(const std::vector<bool>& rev_in_d_fwd, const std::vector<bool>& rev_in_d_bwd,
                OrientedEdge oe) {
    return oe.fwd ? !rev_in_d_bwd[oe.edge] : !rev_in_d_fwd[oe.edge];
}

struct DSet {
    std::vector<bool> fwd, bwd;  // membership of (e,+) and (e,-) in D
};

// Cuts X inside `mask` with all crossing edges entering X from D.
// Calls fn(X) for each; fn may return true to stop early.
template <class Fn>
void for_each_d_cut(const Graph& g, const std::vector<bool>& mask, const DSet& d, Fn fn) {
    std::vector<int> verts;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (mask[v]) verts.push_back(v);
    const int k = static_cast<int>(verts.size());
    for (unsigned long bits = 1; bits + 1 < (1ul << k); ++bits) {
        std::vector<bool> x(g.num_vertices(), false);
        for (int i = 0; i < k; ++i)
            if ((bits >> i) & 1) x[verts[i]] = true;
        bool ok = true;
        for (int e = 0; e < g.num_edges() && ok; ++e) {
            if (!edge_inside(g, mask, e)) continue;
            bool t = x[g.tail(e)], h = x[g.head(e)];
            if (!t && h && !d.fwd[e]) ok = false;  // enters X forward, not in D
            if (t && !h && !d.bwd[e]) ok = false;  // enters X backward, not in D
        }
        if (ok && fn(x)) return;
    }
}

Int vertex_set_sum(const IntVV& h, const std::vector<bool>& x) {
    Int s = 0;
    for (int v = 0; v < h.size(); ++v)
        if (x[v]) s += h[v];
    return s;
}

// BFS from the negative vertices along D-compatible oriented edges; returns
// the reached set, plus a path to the first positive vertex found (if any).
struct Reach {
    std::vector<bool> reached;
    int positive = -1;
    std::vector<OrientedEdge> path;  // from some negative vertex to `positive`
};

Reach reach_from_negative(const Graph& g, const std::vector<bool>& mask, const IntVV& h,
                          const DSet& d) {
    Reach r;
    r.reached.assign(g.num_vertices(), false);
    std::vector<OrientedEdge> via(g.num_vertices(), OrientedEdge{-1, true});
    std::vector<int> prev(g.num_vertices(), -1);
    std::queue<int> q;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (mask[v] && h[v] < 0) {
            r.reached[v] = true;
            prev[v] = v;
            q.push(v);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (h[v] > 0 && r.positive < 0) {
            r.positive = v;
            for (int w = v; prev[w] != w; w = prev[w]) r.path.push_back(via[w]);
            std::reverse(r.path.begin(), r.path.end());
        }
        for (OrientedEdge oe : g.out_edges(v)) {
            if (!edge_inside(g, mask, oe.edge)) continue;
            if (!compatible(d.fwd, d.bwd, oe)) continue;
            int w = g.head(oe);
            if (!r.reached[w]) {
                r.reached[w] = true;
                prev[w] = v;
                via[w] = oe;
                q.push(w);
            }
        }
    }
    return r;
}

// The construction from the inductive proof; only runs on instances whose
// D-compatible cuts all have h(X) >= 0.
IntEV construct_flow(const Graph& g, const std::vector<bool>& mask, IntVV h, const DSet& d) {
    IntEV eta = IntEV::Zero(g.num_edges());
    bool all_zero = true;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (mask[v] && h[v] != 0) all_zero = false;
    if (all_zero) return eta;

    Reach r = reach_from_negative(g, mask, h, d);
    if (r.positive < 0) throw std::logic_error("feasible instance has no augmenting path");
    const int u = r.positive;
    const int v_src = r.path.empty() ? u : g.tail(r.path.front());

    Int eps = std::min(h[u], -h[v_src]);
    for_each_d_cut(g, mask, d, [&](const std::vector<bool>& x) {
        if (x[u] && !x[v_src]) eps = std::min(eps, vertex_set_sum(h, x));
        return false;
    });

    IntVV h_eps = h;
    h_eps[u] -= eps;
    h_eps[v_src] += eps;

    if (h_eps[u] == 0 || h_eps[v_src] == 0) {
        eta = construct_flow(g, mask, h_eps, d);
    } else {
        std::vector<bool> split;
        for_each_d_cut(g, mask, d, [&](const std::vector<bool>& x) {
            if (x[u] && !x[v_src] && vertex_set_sum(h_eps, x) == 0) {
                split = x;
                return true;
            }
            return false;
        });
        if (split.empty()) throw std::logic_error("epsilon not limited by any cut");
        std::vector<bool> rest(g.num_vertices(), false);
        for (int v = 0; v < g.num_vertices(); ++v) rest[v] = mask[v] && !split[v];
        eta = construct_flow(g, split, h_eps, d) + construct_flow(g, rest, h_eps, d);
    }
    for (OrientedEdge oe : r.path) eta[oe.edge] += oe.fwd ? eps : -eps;
    return eta;
}

}  // namespace

FlowCertificate nonneg_flow(const Graph& g, const IntVV& h,
                            const std::vector<OrientedEdge>& d_set) {
    const int m = g.num_edges();
    if (h.size() != g.num_vertices()) throw ValidationError("h size mismatch");
    Int total = 0;
    for (int v = 0; v < h.size(); ++v) total += h[v];
    if (total != 0) throw ValidationError("h must sum to zero");

    DSet d;
    d.fwd.assign(m, false);
    d.bwd.assign(m, false);
    for (OrientedEdge oe : d_set) {
        if (oe.edge < 0 || oe.edge >= m) throw ValidationError("D references unknown edge");
        auto& side = oe.fwd ? d.fwd : d.bwd;
        auto& other = oe.fwd ? d.bwd : d.fwd;
        if (side[oe.edge] || other[oe.edge])
            throw ValidationError("D is not an orientation of a subset: edge " +
                                  g.edge_name(oe.edge) + " repeated");
        side[oe.edge] = true;
    }

    std::vector<bool> all(g.num_vertices(), true);

    // Exhaustive violating-cut search decides feasibility.
    std::optional<std::vector<bool>> worst;
    Int worst_val = 0;
    for_each_d_cut(g, all, d, [&](const std::vector<bool>& x) {
        Int s = vertex_set_sum(h, x);
        if (s < 0 && (!worst || s < worst_val)) {
            worst = x;
            worst_val = s;
        }
        return false;
    });
    FlowCertificate cert;
    if (worst) {
        cert.cut = worst;
        return cert;
    }
    cert.flow = construct_flow(g, all, h, d);
    return cert;
}

}  // namespace gvt
