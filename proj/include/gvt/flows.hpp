#pragma once

#include <optional>
#include <vector>

#include "gvt/cycles.hpp"
#include "gvt/graph.hpp"

namespace gvt {

/// Outcome of a nonnegative-flow query: exactly one branch is populated.
struct FlowCertificate {
    std::optional<IntEV> flow;               ///< eta with d* eta = h, eta >= 0 on D
    std::optional<std::vector<bool>> cut;    ///< violating X: E(V-X,X) in D, h(X) < 0

    bool found() const { return flow.has_value(); }
};

/// Integral eta with |eta_e| <= h(e) on every edge and the same pairing as
/// `beta` against every cycle. Requires |sum beta over gamma| <= sum h over
/// gamma for every simple oriented cycle gamma; otherwise throws
/// HypothesisError naming a witnessing cycle.
IntEV bounded_flow(const Graph& g, const IntEV& beta, const std::vector<Int>& h);

/// Integral eta with d* eta = h and eta >= 0 on the oriented edge set D, or
/// a violating cut. D must orient a subset of edges (never both e and its
/// reversal); h must sum to zero.
FlowCertificate nonneg_flow(const Graph& g, const IntVV& h,
                            const std::vector<OrientedEdge>& d_set);

/// Pairing sum of a cochain along an oriented cycle.
inline Int cycle_sum(const IntEV& beta, const OrientedCycle& c) {
    Int s = 0;
    for (OrientedEdge oe : c.edges) s += oe.fwd ? beta[oe.edge] : -beta[oe.edge];
    return s;
}

}  // namespace gvt
