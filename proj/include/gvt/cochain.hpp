#pragma once

#include <vector>

#include "gvt/graph.hpp"
#include "gvt/numeric.hpp"

namespace gvt {

/// d(f)(e) = f(head e) - f(tail e) on every reference-oriented edge.
template <class S>
EdgeVec<S> apply_d(const Graph& g, const VertexVec<S>& f) {
    EdgeVec<S> out(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) out[e] = f[g.head(e)] - f[g.tail(e)];
    return out;
}

/// Adjoint of d: d*(a)(v) = sum over edges into v minus sum out of v.
template <class S>
VertexVec<S> apply_d_star(const Graph& g, const EdgeVec<S>& a) {
    VertexVec<S> out = VertexVec<S>::Zero(g.num_vertices());
    for (int e = 0; e < g.num_edges(); ++e) {
        out[g.head(e)] += a[e];
        out[g.tail(e)] -= a[e];
    }
    return out;
}

template <class S>
VertexVec<S> laplacian(const Graph& g, const VertexVec<S>& f) {
    return apply_d_star(g, apply_d(g, f));
}

/// The cut element d(chi_X): -1 on E(X, V-X), +1 on E(V-X, X), 0 elsewhere,
/// read on reference orientations. Its positive support is E(V-X, X).
inline IntEV cut_element(const Graph& g, const std::vector<bool>& in_x) {
    IntEV out = IntEV::Zero(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        bool t = in_x[g.tail(e)], h = in_x[g.head(e)];
        if (t && !h) out[e] = -1;
        if (!t && h) out[e] = 1;
    }
    return out;
}

/// Value of a cochain on an oriented edge (negated on reversals).
template <class S>
S cochain_at(const EdgeVec<S>& a, OrientedEdge oe) {
    return oe.fwd ? a[oe.edge] : S(-a[oe.edge]);
}

/// Dense Laplacian matrix d* d.
template <class S>
Mat<S> laplacian_matrix(const Graph& g) {
    Mat<S> L = Mat<S>::Zero(g.num_vertices(), g.num_vertices());
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.tail(e), v = g.head(e);
        L(u, u) += 1;
        L(v, v) += 1;
        L(u, v) -= 1;
        L(v, u) -= 1;
    }
    return L;
}

}  // namespace gvt
