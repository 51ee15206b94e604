#include "gvt/cycles.hpp"

#include <algorithm>
#include <queue>

namespace gvt {

namespace {

using Key = std::vector<std::pair<int, int>>;

Key canonical_key(const OrientedCycle& c) {
    const int k = c.size();
    Key lin(k);
    for (int i = 0; i < k; ++i) lin[i] = {c.edges[i].edge, c.edges[i].fwd ? 0 : 1};
    Key best;
    for (int r = 0; r < k; ++r) {
        Key rot(k);
        for (int i = 0; i < k; ++i) rot[i] = lin[(r + i) % k];
        if (best.empty() || rot < best) best = rot;
    }
    return best;
}

void dfs_cycles(const Graph& g, const std::vector<bool>& edge_mask, int start, int v,
                std::vector<bool>& on_path, std::vector<OrientedEdge>& path,
                std::vector<OrientedCycle>& out) {
    for (OrientedEdge oe : g.out_edges(v)) {
        if (!edge_mask.empty() && !edge_mask[oe.edge]) continue;
        int w = g.head(oe);
        if (w == start) {
            if (path.size() >= 2 || (path.size() == 1 && oe.edge != path[0].edge)) {
                OrientedCycle c;
                c.edges = path;
                c.edges.push_back(oe);
                out.push_back(std::move(c));
            }
        } else if (w > start && !on_path[w]) {
            on_path[w] = true;
            path.push_back(oe);
            dfs_cycles(g, edge_mask, start, w, on_path, path, out);
            path.pop_back();
            on_path[w] = false;
        }
    }
}

}  // namespace

std::vector<OrientedCycle> simple_cycles(const Graph& g,
                                         const std::vector<bool>& edge_mask) {
    std::vector<OrientedCycle> out;
    std::vector<bool> on_path(g.num_vertices(), false);
    std::vector<OrientedEdge> path;
    for (int s = 0; s < g.num_vertices(); ++s) {
        on_path[s] = true;
        dfs_cycles(g, edge_mask, s, s, on_path, path, out);
        on_path[s] = false;
    }
    std::sort(out.begin(), out.end(), [](const OrientedCycle& a, const OrientedCycle& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return canonical_key(a) < canonical_key(b);
    });
    return out;
}

std::vector<OrientedCycle> simple_cycles_one_orientation(
    const Graph& g, const std::vector<bool>& edge_mask) {
    std::vector<OrientedCycle> out;
    for (const OrientedCycle& c : simple_cycles(g, edge_mask))
        if (canonical_key(c) < canonical_key(c.reversed())) out.push_back(c);
    return out;
}

std::vector<int> min_spanning_tree(const Graph& g) {
    std::vector<int> parent(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<int> tree;
    for (int e = 0; e < g.num_edges(); ++e) {
        int a = find(g.tail(e)), b = find(g.head(e));
        if (a != b) {
            parent[a] = b;
            tree.push_back(e);
        }
    }
    return tree;
}

OrientedCycle fundamental_cycle(const Graph& g, const std::vector<int>& tree_edges,
                                int nontree_edge) {
    std::vector<bool> in_tree(g.num_edges(), false);
    for (int e : tree_edges) in_tree[e] = true;

    // BFS along tree edges from head back to tail.
    const int src = g.head(nontree_edge), dst = g.tail(nontree_edge);
    std::vector<OrientedEdge> via(g.num_vertices(), OrientedEdge{-1, true});
    std::vector<int> prev(g.num_vertices(), -1);
    std::queue<int> q;
    prev[src] = src;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (OrientedEdge oe : g.out_edges(v)) {
            if (!in_tree[oe.edge]) continue;
            int w = g.head(oe);
            if (prev[w] < 0) {
                prev[w] = v;
                via[w] = oe;
                q.push(w);
            }
        }
    }
    if (prev[dst] < 0) throw ValidationError("tree does not span the graph");

    std::vector<OrientedEdge> back;
    for (int v = dst; v != src; v = prev[v]) back.push_back(via[v]);
    OrientedCycle c;
    c.edges.push_back(OrientedEdge(nontree_edge, true));
    for (auto it = back.rbegin(); it != back.rend(); ++it) c.edges.push_back(*it);
    return c;
}

CycleSpace cycle_space(const Graph& g) {
    CycleSpace cs;
    cs.tree_edges = min_spanning_tree(g);
    std::vector<bool> in_tree(g.num_edges(), false);
    for (int e : cs.tree_edges) in_tree[e] = true;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (in_tree[e]) continue;
        cs.nontree_edges.push_back(e);
        cs.fundamental.push_back(fundamental_cycle(g, cs.tree_edges, e));
    }
    cs.simple = simple_cycles(g);
    return cs;
}

}  // namespace gvt
