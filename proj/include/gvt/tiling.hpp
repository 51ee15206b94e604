#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gvt/cac.hpp"
#include "gvt/cell.hpp"
#include "gvt/halfint.hpp"

namespace gvt {

/// Twisted floor-level vector d^{m,n}_f: on each reference edge e = uv,
/// half the difference of floor((f(v)-f(u)+n m_e)/(n l_e)) and the same for
/// the reversal. Integer exactly when n l_e divides f(v)-f(u)+n m_e.
LevelVector dee(const Graph& g, const IntEV& ell, const IntEV& m, const IntVV& f,
                Int n = 1);

struct ActiveSubgraph {
    std::vector<bool> edges;         ///< integer-level edges
    std::vector<int> component;      ///< per vertex
    int num_components = 0;
    bool connected = false;
};

/// Spanning subgraph keeping exactly the integer-level edges.
ActiveSubgraph active_subgraph(const Graph& g, const LevelVector& level);

/// Cached per-subgraph geometry: bonds, cell vertices, the inverse reduced
/// Laplacian used for exact membership solves, and coordinate bounds of the
/// cell in H_0.
struct SubgraphData {
    std::vector<bool> mask;
    std::vector<Bond> bonds;
    std::vector<CellVertex> cell_vertices;
    std::vector<RatVV> vertex_images;  ///< Laplacian images in H_0 coordinates
    RatMat laplacian_inv;              ///< inverse reduced Laplacian of the subgraph
    std::vector<int> degree;           ///< subgraph degree per vertex
    RatVV box_min, box_max;            ///< per-coordinate hull of the cell
};

/// Shared enumeration state for one (graph, lengths, twisting) triple.
class TilingContext {
  public:
    TilingContext(Graph g, IntEV ell, IntEV m);

    const Graph& graph() const { return g_; }
    const IntEV& ell() const { return ell_; }
    const IntEV& twisting() const { return m_; }

    LevelVector level_of(const IntVV& f, Int n = 1) const;
    std::shared_ptr<const SubgraphData> subgraph_data(const std::vector<bool>& mask) const;

  private:
    Graph g_;
    IntEV ell_, m_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<bool>, std::shared_ptr<const SubgraphData>> cache_;
};

/// Cell of the twisted mixed Voronoi tiling: the Voronoi cell of the active
/// subgraph translated by d*(level).
struct Tile {
    IntVV f;
    LevelVector level;
    ActiveSubgraph active;
    RatVV center;
    std::shared_ptr<const SubgraphData> geom;
};

/// Builds the tile of a normalized f (f(v0) = 0). Throws NotATileError when
/// the active subgraph is disconnected.
Tile build_tile(const TilingContext& ctx, const IntVV& f);

/// Exact closed-cell membership.
bool tile_contains(const TilingContext& ctx, const Tile& tile, const RatVV& x);

/// All tiles within the window containing x (boundary points belong to
/// several); WindowError when none is found. Results ordered by f.
std::vector<Tile> locate_point(const TilingContext& ctx, const RatVV& x, Int window);

/// Intersection data of two adjacent tiles.
struct SharedFace {
    LevelVector alpha;
    CACOrientation d1, d2;
    std::vector<bool> kept_edges;              ///< equal-level edges of both actives
    std::vector<std::vector<int>> components;  ///< vertex sets of the kept subgraph
};

/// The level criterion for tile adjacency: D1, D2 from the increasing level
/// sets of f2 - f1; a SharedFace exactly when d1 + chi_{D1}/2 = d2 + chi_{D2}/2.
std::optional<SharedFace> tiles_adjacent(const TilingContext& ctx, const IntVV& f1,
                                         const IntVV& f2);

/// Finds (n, f) with level vector alpha, or nothing: equalities on integer
/// edges, open intervals on half edges, exact rational feasibility, then
/// denominators cleared.
std::optional<std::pair<Int, IntVV>> solve_level_function(const Graph& g, const IntEV& ell,
                                                          const IntEV& m,
                                                          const LevelVector& alpha);

/// Documented heuristic lower bound for a window sure to cover x.
Int suggested_window(const Graph& g, const IntEV& ell, const RatVV& x);

}  // namespace gvt
