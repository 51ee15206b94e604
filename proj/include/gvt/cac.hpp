#pragma once

#include <vector>

#include "gvt/graph.hpp"

namespace gvt {

/// Coherent acyclic orientation of a cut subgraph: the oriented-edge set
/// E(D) plus one ordered-partition witness. Equality of CAC elements is
/// equality of E(D); distinct ordered partitions can induce the same D when
/// parts have no connecting edges.
struct CACOrientation {
    std::vector<OrientedEdge> edges;            ///< sorted canonical E(D)
    std::vector<std::vector<int>> witness;      ///< ordered partition of V

    bool operator==(const CACOrientation& o) const { return edges == o.edges; }
};

/// Oriented edges of the cut subgraph induced by an ordered partition:
/// all edges between distinct parts, oriented from the lower-indexed part
/// to the higher-indexed one.
CACOrientation cac_from_partition(const Graph& g,
                                  const std::vector<std::vector<int>>& parts);

/// All coherent acyclic orientations, ordered D1 <= D2 iff E(D2) is a
/// subset of E(D1); the empty orientation (whole cell) is the top.
class CACPoset {
  public:
    explicit CACPoset(std::vector<CACOrientation> elems) : elems_(std::move(elems)) {}

    const std::vector<CACOrientation>& elems() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const CACOrientation& operator[](int i) const { return elems_[i]; }

    /// Index of the element with this (sorted) oriented-edge set, -1 if absent.
    int find(const std::vector<OrientedEdge>& sorted_edges) const;

    /// D_i precedes D_j: E(D_j) subset of E(D_i).
    bool leq(int i, int j) const;

  private:
    std::vector<CACOrientation> elems_;
};

inline constexpr int kMaxCACVertices = 8;

/// Enumerates all ordered partitions of V, maps each to its E(D), dedupes.
CACPoset enumerate_cac(const Graph& g);

}  // namespace gvt
