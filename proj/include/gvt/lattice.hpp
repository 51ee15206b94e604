#pragma once

#include <vector>

#include "gvt/cochain.hpp"
#include "gvt/graph.hpp"

namespace gvt {

/// Cut element d(chi_X) with both induced sides connected. These generate
/// the cut lattice and carry the facet hyperplanes 2<x,beta> = |beta|^2.
struct Bond {
    std::vector<bool> x;  ///< defining vertex set
    IntEV cochain;        ///< d(chi_X), values in {-1,0,1}
    Int norm_sq = 0;      ///< number of crossing edges
};

inline constexpr int kMaxBondVertices = 16;

/// All bonds, both X and V-X emitted (giving +-beta), ordered by vertex-set
/// bitmask; exhaustive over subsets, deduplicated by cochain value.
std::vector<Bond> enumerate_bonds(const Graph& g);

/// Kirchhoff count: |det| of a principal minor of the Laplacian.
BigInt spanning_tree_count(const Graph& g);

/// Index of the Laplacian lattice inside H_{0,Z}, via the Smith normal form
/// of the Laplacian written on a basis of H_{0,Z}.
BigInt laplacian_lattice_index(const Graph& g);

/// Oriented edges where the cochain is positive.
std::vector<OrientedEdge> positive_support(const IntEV& cochain);

}  // namespace gvt
