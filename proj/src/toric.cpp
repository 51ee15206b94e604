#include "gvt/toric.hpp"

#include <algorithm>

#include "gvt/cell.hpp"

namespace gvt {

Cone normal_cone(const Graph& g, const CACOrientation& d) {
    Cone cone;
    for (const Bond& b : enumerate_bonds(g)) {
        auto supp = positive_support(b.cochain);
        if (std::includes(d.edges.begin(), d.edges.end(), supp.begin(), supp.end()))
            cone.generators.push_back(b.cochain);
    }
    std::vector<const IntEV*> ptrs;
    for (const auto& v : cone.generators) ptrs.push_back(&v);
    cone.rank = span_rank(ptrs, g.num_edges());
    return cone;
}

Monomial make_monomial(std::vector<Var> vars) {
    std::sort(vars.begin(), vars.end());
    Monomial m;
    for (const Var& v : vars) {
        if (!m.empty() && m.back().first == v)
            m.back().second += 1;
        else
            m.emplace_back(v, 1);
    }
    return m;
}

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

}  // namespace

std::vector<OrientedEdge> complete_orientation(const Graph& g,
                                               const std::vector<OrientedEdge>& a_set) {
    const int m = g.num_edges();
    std::vector<int> dir(m, 0);  // 0 unset, +1 reference, -1 reversed
    for (OrientedEdge oe : a_set) {
        if (oe.edge < 0 || oe.edge >= m) throw ValidationError("A references unknown edge");
        int want = oe.fwd ? 1 : -1;
        if (dir[oe.edge] != 0 && dir[oe.edge] != want)
            throw ValidationError("A orients edge " + g.edge_name(oe.edge) + " both ways");
        dir[oe.edge] = want;
    }

    // A extends to an acyclic orientation exactly when it contains no
    // directed cycle itself; a blocked A yields a witnessing cycle.
    for (const OrientedCycle& c : simple_cycles(g)) {
        bool inside = true;
        for (OrientedEdge oe : c.edges)
            inside = inside && dir[oe.edge] == (oe.fwd ? 1 : -1);
        if (inside)
            throw HypothesisError("cycle " + cycle_label(g, c) +
                                  " is oriented entirely inside A");
    }

    // Topological order of (V, A), smallest vertex first; remaining edges
    // follow the order.
    const int n = g.num_vertices();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> succ(n);
    for (int e = 0; e < m; ++e) {
        if (dir[e] == 0) continue;
        int from = dir[e] > 0 ? g.tail(e) : g.head(e);
        int to = dir[e] > 0 ? g.head(e) : g.tail(e);
        succ[from].push_back(to);
        indeg[to]++;
    }
    std::vector<int> position(n, -1);
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v)
            if (!placed[v] && indeg[v] == 0) pick = v;
        if (pick < 0) throw std::logic_error("acyclic A admits a topological order");
        placed[pick] = true;
        position[pick] = step;
        for (int w : succ[pick]) --indeg[w];
    }

    std::vector<OrientedEdge> full;
    for (int e = 0; e < m; ++e) {
        bool fwd = dir[e] != 0 ? dir[e] > 0 : position[g.tail(e)] < position[g.head(e)];
        full.push_back(OrientedEdge(e, fwd));
        OrientedEdge oe = full.back();
        if (position[g.tail(oe)] >= position[g.head(oe)])
            throw std::logic_error("completed orientation violates the topological order");
    }
    return full;
}

std::vector<std::vector<int>> orbit_closure(const Graph& g, const CACOrientation& d) {
    std::vector<bool> keep(g.num_edges(), true);
    for (OrientedEdge oe : d.edges) keep[oe.edge] = false;
    std::vector<int> comp = components(g, keep);
    const int k = component_count(comp);

    // Component DAG from the D-edges; all edges between two components
    // point the same way for a coherent orientation.
    std::vector<std::vector<bool>> arc(k, std::vector<bool>(k, false));
    for (OrientedEdge oe : d.edges) {
        int a = comp[g.tail(oe)], b = comp[g.head(oe)];
        if (a == b) throw ValidationError("D is not coherent: edge inside a component");
        arc[a][b] = true;
    }
    std::vector<int> indeg(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (arc[a][b]) ++indeg[b];

    std::vector<int> order;
    std::vector<bool> placed(k, false);
    for (int step = 0; step < k; ++step) {
        int pick = -1;
        for (int c = 0; c < k && pick < 0; ++c)
            if (!placed[c] && indeg[c] == 0) pick = c;
        if (pick < 0) throw ValidationError("D induces a cycle between components");
        placed[pick] = true;
        order.push_back(pick);
        for (int b = 0; b < k; ++b)
            if (arc[pick][b]) --indeg[b];
    }

    std::vector<std::vector<int>> out(k);
    std::vector<int> position(k);
    for (int i = 0; i < k; ++i) position[order[i]] = i;
    for (int v = 0; v < g.num_vertices(); ++v) out[position[comp[v]]].push_back(v);
    for (OrientedEdge oe : d.edges)
        if (position[comp[g.tail(oe)]] >= position[comp[g.head(oe)]])
            throw std::logic_error("component order violates D");
    return out;
}

}  // namespace gvt
