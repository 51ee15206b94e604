#pragma once

#include <vector>

#include "gvt/cochain.hpp"
#include "gvt/graph.hpp"

namespace gvt {

/// Closed walk of oriented edges with no repeated vertex. As a cochain it
/// lies in the kernel of d*.
struct OrientedCycle {
    std::vector<OrientedEdge> edges;

    IntEV as_cochain(const Graph& g) const {
        IntEV out = IntEV::Zero(g.num_edges());
        for (OrientedEdge oe : edges) out[oe.edge] += oe.fwd ? 1 : -1;
        return out;
    }
    OrientedCycle reversed() const {
        OrientedCycle r;
        for (auto it = edges.rbegin(); it != edges.rend(); ++it) r.edges.push_back(it->rev());
        return r;
    }
    int size() const { return static_cast<int>(edges.size()); }
};

/// All simple oriented cycles of the spanning subgraph picked out by
/// `edge_mask` (empty mask = all edges), each undirected cycle in both
/// orientations, sorted canonically (shorter first, then lexicographic by
/// rotated (edge, direction) sequence).
std::vector<OrientedCycle> simple_cycles(const Graph& g,
                                         const std::vector<bool>& edge_mask = {});

/// One orientation per undirected simple cycle, canonical choice.
std::vector<OrientedCycle> simple_cycles_one_orientation(
    const Graph& g, const std::vector<bool>& edge_mask = {});

struct CycleSpace {
    std::vector<int> tree_edges;              ///< spanning tree, ascending edge index
    std::vector<OrientedCycle> fundamental;   ///< per non-tree edge, containing it forward
    std::vector<int> nontree_edges;           ///< aligned with `fundamental`
    std::vector<OrientedCycle> simple;        ///< both orientations, canonical order
};

/// Spanning tree, fundamental cycle basis and the simple-cycle list.
/// Basis size is |E| - |V| + 1; every listed cycle maps to 0 under d*.
CycleSpace cycle_space(const Graph& g);

/// Spanning tree of the whole graph by ascending edge index.
std::vector<int> min_spanning_tree(const Graph& g);

/// Fundamental cycle of a non-tree edge: the edge forward, then the tree
/// path from its head back to its tail.
OrientedCycle fundamental_cycle(const Graph& g, const std::vector<int>& tree_edges,
                                int nontree_edge);

}  // namespace gvt
