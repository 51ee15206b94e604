#include "gvt/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace gvt {

Graph::Graph(std::vector<std::string> vertex_names,
             std::vector<std::pair<int, int>> edge_ends,
             std::vector<std::string> edge_names)
    : vertex_names_(std::move(vertex_names)) {
    const int n = static_cast<int>(vertex_names_.size());
    if (n == 0) throw ValidationError("graph needs at least one vertex");
    std::set<std::string> seen(vertex_names_.begin(), vertex_names_.end());
    if (static_cast<int>(seen.size()) != n)
        throw ValidationError("duplicate vertex names");

    const int m = static_cast<int>(edge_ends.size());
    if (edge_names.empty()) {
        edge_names.reserve(m);
        for (int e = 0; e < m; ++e) edge_names.push_back("e" + std::to_string(e + 1));
    }
    if (static_cast<int>(edge_names.size()) != m)
        throw ValidationError("edge name count does not match edge count");
    std::set<std::string> eseen(edge_names.begin(), edge_names.end());
    if (static_cast<int>(eseen.size()) != m)
        throw ValidationError("duplicate edge names");
    edge_names_ = std::move(edge_names);

    tails_.reserve(m);
    heads_.reserve(m);
    for (int e = 0; e < m; ++e) {
        auto [t, h] = edge_ends[e];
        if (t < 0 || t >= n || h < 0 || h >= n)
            throw ValidationError("edge endpoint out of range");
        if (t == h)
            throw ValidationError("self loop at vertex '" + vertex_names_[t] + "'");
        tails_.push_back(t);
        heads_.push_back(h);
    }

    out_.assign(n, {});
    for (int e = 0; e < m; ++e) {
        out_[tails_[e]].push_back(OrientedEdge(e, true));
        out_[heads_[e]].push_back(OrientedEdge(e, false));
    }

    if (component_count(components(*this, {})) != 1)
        throw ValidationError("graph is not connected");
}

int Graph::vertex_index(const std::string& name) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (vertex_names_[v] == name) return v;
    throw ValidationError("unknown vertex '" + name + "'");
}

int Graph::edge_index(const std::string& name) const {
    for (int e = 0; e < num_edges(); ++e)
        if (edge_names_[e] == name) return e;
    throw ValidationError("unknown edge '" + name + "'");
}

int Graph::diameter() const {
    const int n = num_vertices();
    int diam = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (OrientedEdge oe : out_[v]) {
                int w = head(oe);
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        for (int d : dist) diam = std::max(diam, d);
    }
    return diam;
}

std::vector<int> components(const Graph& g, const std::vector<bool>& edge_mask) {
    const int n = g.num_vertices();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!edge_mask.empty() && !edge_mask[e]) continue;
        int a = find(g.tail(e)), b = find(g.head(e));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (comp[r] < 0) comp[r] = next++;
        comp[v] = comp[r];
    }
    return comp;
}

bool induced_connected(const Graph& g, const std::vector<bool>& vset,
                       const std::vector<bool>& edge_mask) {
    int start = -1, count = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (vset[v]) {
            if (start < 0) start = v;
            ++count;
        }
    if (count == 0) return false;
    std::vector<bool> seen(g.num_vertices(), false);
    std::queue<int> q;
    seen[start] = true;
    q.push(start);
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (OrientedEdge oe : g.out_edges(v)) {
            if (!edge_mask.empty() && !edge_mask[oe.edge]) continue;
            int w = g.head(oe);
            if (vset[w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == count;
}

}  // namespace gvt
