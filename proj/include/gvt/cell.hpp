#pragma once

#include <vector>

#include "gvt/cac.hpp"
#include "gvt/lattice.hpp"
#include "gvt/linalg.hpp"

namespace gvt {

/// Vertex of a Voronoi cell, stored as the potential g with g(v0) = 0;
/// the cut-space point is d(g) and the H_0 image is the Laplacian of g.
struct CellVertex {
    RatVV potential;
};

/// Face of the cell, one per CAC element: the tight bond set U_D, the
/// vertices lying on all of them, and the affine-hull dimension.
struct CellFace {
    int cac_index = -1;
    std::vector<int> tight_bonds;
    std::vector<int> vertex_ids;
    int dim = -1;
};

/// Voronoi cell of the origin for the spanning connected subgraph picked
/// out by `edge_mask`, cut out by 2<x,beta> <= |beta|^2 over its bonds.
struct CellGeometry {
    std::vector<bool> edge_mask;
    std::vector<Bond> bonds;             ///< bonds of the subgraph, cochains on ambient edges
    std::vector<CellVertex> vertices;
    CACPoset cac{{}};                    ///< populated by cell_geometry(g) only
    std::vector<CellFace> faces;         ///< aligned with cac.elems()
};

/// Bonds plus exact vertex enumeration (tight full-rank subsets, feasibility
/// filtered, deduplicated). The subgraph must be spanning and connected.
CellGeometry cell_core(const Graph& g, const std::vector<bool>& edge_mask);

/// Full-graph cell with the face poset matched to enumerate_cac via the
/// tight-set map U_D = { bonds with positive support inside E(D) }.
CellGeometry cell_geometry(const Graph& g);

/// Face of the cell computed from vertex-facet incidences alone (no CAC
/// input): the closed tight sets of the incidence relation.
struct GeomFace {
    std::vector<int> tight_bonds;
    std::vector<int> vertex_ids;
    int dim = -1;
};

/// The geometric face lattice, ordered by vertex-set inclusion; computed by
/// closing per-vertex tight sets under intersection.
std::vector<GeomFace> geometric_face_lattice(const Graph& g, const CellGeometry& cell);

/// The poset map phi: union of positive supports of the tight bonds.
std::vector<OrientedEdge> phi_of_tight_set(const CellGeometry& cell,
                                           const std::vector<int>& tight_bonds);

/// Bonds of the spanning subgraph: X with both induced sides connected
/// within the mask; cochains extended by zero to the ambient edge set.
std::vector<Bond> subgraph_bonds(const Graph& g, const std::vector<bool>& edge_mask);

/// Rank over Q of a set of edge vectors.
int span_rank(const std::vector<const IntEV*>& vecs, int edge_count);

}  // namespace gvt
