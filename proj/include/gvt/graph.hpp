#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gvt/errors.hpp"
#include "gvt/numeric.hpp"

namespace gvt {

/// One of the two orientations of an edge. `fwd` means the stored
/// reference orientation of the edge.
struct OrientedEdge {
    int edge = -1;
    bool fwd = true;

    OrientedEdge() = default;
    OrientedEdge(int e, bool f) : edge(e), fwd(f) {}
    OrientedEdge rev() const { return {edge, !fwd}; }
    auto operator<=>(const OrientedEdge&) const = default;
};

/// Finite connected loopless multigraph with a fixed reference orientation
/// per edge. Vertex and edge indices are stable for the object's lifetime;
/// edge order defines the reference orientation and all enumeration orders.
class Graph {
  public:
    Graph(std::vector<std::string> vertex_names,
          std::vector<std::pair<int, int>> edge_ends,
          std::vector<std::string> edge_names = {});

    int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
    int num_edges() const { return static_cast<int>(tails_.size()); }
    /// Rank of H^1(G,Z): |E| - |V| + 1.
    int cycle_rank() const { return num_edges() - num_vertices() + 1; }

    int tail(int e) const { return tails_[e]; }
    int head(int e) const { return heads_[e]; }
    int tail(OrientedEdge oe) const { return oe.fwd ? tails_[oe.edge] : heads_[oe.edge]; }
    int head(OrientedEdge oe) const { return oe.fwd ? heads_[oe.edge] : tails_[oe.edge]; }

    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    const std::string& edge_name(int e) const { return edge_names_[e]; }
    int vertex_index(const std::string& name) const;
    int edge_index(const std::string& name) const;

    /// Orientations with tail v, in edge order (both parallel copies listed).
    const std::vector<OrientedEdge>& out_edges(int v) const { return out_[v]; }
    int degree(int v) const { return static_cast<int>(out_[v].size()); }

    /// Graph diameter in hop count.
    int diameter() const;

  private:
    std::vector<std::string> vertex_names_;
    std::vector<std::string> edge_names_;
    std::vector<int> tails_;
    std::vector<int> heads_;
    std::vector<std::vector<OrientedEdge>> out_;
};

/// Component id per vertex of the spanning subgraph picked out by
/// `edge_mask` (empty mask = all edges). Ids are 0-based, ordered by the
/// smallest vertex index in each component.
std::vector<int> components(const Graph& g, const std::vector<bool>& edge_mask);

inline int component_count(const std::vector<int>& comp) {
    int m = -1;
    for (int c : comp) m = std::max(m, c);
    return m + 1;
}

/// True when the subgraph induced on `vset` (within `edge_mask`) is connected;
/// an empty vertex set counts as disconnected.
bool induced_connected(const Graph& g, const std::vector<bool>& vset,
                       const std::vector<bool>& edge_mask = {});

}  // namespace gvt
