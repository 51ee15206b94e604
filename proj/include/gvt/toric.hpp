#pragma once

#include <vector>

#include "gvt/cac.hpp"
#include "gvt/cycles.hpp"
#include "gvt/fp.hpp"
#include "gvt/halfint.hpp"
#include "gvt/lattice.hpp"

namespace gvt {

/// Normal cone sigma_D of the Voronoi cell: generated by the bonds whose
/// positive support lies inside E(D).
struct Cone {
    std::vector<IntEV> generators;
    int rank = 0;
};

Cone normal_cone(const Graph& g, const CACOrientation& d);

/// Chain coordinate x_{e,i} (bar = false) or x_{ebar,i} (bar = true), the
/// level index always read on the reference orientation.
struct Var {
    int edge;
    Int level;
    bool bar;
    auto operator<=>(const Var&) const = default;
};

/// Sorted (Var, exponent) list with positive exponents.
using Monomial = std::vector<std::pair<Var, Int>>;

Monomial make_monomial(std::vector<Var> vars);

/// Equation  lhs = coeff * rhs; the two sides share no variable.
template <class K>
struct Binomial {
    Monomial lhs, rhs;
    K coeff;
};

/// One equation per simple oriented cycle of the subgraph (canonical
/// orientation; the reverse gives the inverse coefficient and is omitted):
///   prod_{e in gamma} x_{e, lev(e)}  =  (prod_{e in gamma} b_e a_e^{lev(e)})
///                                       * prod_{e in gamma-bar} x_{e, lev(e)}
/// with a_ebar = a_e^{-1}, b_ebar = b_e^{-1} and levels on reference
/// orientations. The level must be integral on every subgraph edge.
template <class K>
std::vector<Binomial<K>> cycle_binomials(const Graph& g, const std::vector<bool>& subgraph,
                                         const LevelVector& level, const std::vector<K>& a_edge,
                                         const std::vector<K>& b_edge) {
    for (int e = 0; e < g.num_edges(); ++e)
        if ((subgraph.empty() || subgraph[e]) && !level.integral(e))
            throw ValidationError("level vector is not integral on edge " + g.edge_name(e));

    std::vector<Binomial<K>> out;
    for (const OrientedCycle& c : simple_cycles_one_orientation(g, subgraph)) {
        Binomial<K> b;
        std::vector<Var> lhs, rhs;
        bool first = true;
        for (OrientedEdge oe : c.edges) {
            Int lev = level.int_level(oe.edge);
            lhs.push_back(Var{oe.edge, lev, !oe.fwd});
            rhs.push_back(Var{oe.edge, lev, oe.fwd});
            K factor = b_edge[oe.edge] * field_pow(a_edge[oe.edge], lev);
            if (!oe.fwd) factor = field_pow(factor, -1);
            b.coeff = first ? factor : K(b.coeff * factor);
            first = false;
        }
        b.lhs = make_monomial(std::move(lhs));
        b.rhs = make_monomial(std::move(rhs));
        out.push_back(std::move(b));
    }
    return out;
}

/// Completes an orientation A of a subset of edges to an acyclic
/// orientation of all of G. Requires: for every simple oriented cycle, A
/// meets the cycle iff it meets the reversal; otherwise throws
/// HypothesisError naming a witnessing cycle.
std::vector<OrientedEdge> complete_orientation(const Graph& g,
                                               const std::vector<OrientedEdge>& a_set);

/// Connected components Y_1..Y_d of G - E(D), ordered so that every D-edge
/// goes from a lower- to a higher-indexed component (lexicographic-minimal
/// topological order). The closure of the torus orbit T_D is the product of
/// the component toric varieties.
std::vector<std::vector<int>> orbit_closure(const Graph& g, const CACOrientation& d);

}  // namespace gvt
