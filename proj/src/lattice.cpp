#include "gvt/lattice.hpp"

#include <algorithm>
#include <set>

#include "gvt/linalg.hpp"

namespace gvt {

std::vector<Bond> enumerate_bonds(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kMaxBondVertices)
        throw SizeError("bond enumeration capped at " + std::to_string(kMaxBondVertices) +
                        " vertices, got " + std::to_string(n));
    std::vector<Bond> bonds;
    std::set<std::vector<Int>> seen;
    for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
        std::vector<bool> x(n), co(n);
        for (int v = 0; v < n; ++v) {
            x[v] = (mask >> v) & 1;
            co[v] = !x[v];
        }
        if (!induced_connected(g, x) || !induced_connected(g, co)) continue;
        Bond b;
        b.x = x;
        b.cochain = cut_element(g, x);
        b.norm_sq = b.cochain.squaredNorm();
        std::vector<Int> key(b.cochain.data(), b.cochain.data() + b.cochain.size());
        if (seen.insert(key).second) bonds.push_back(std::move(b));
    }
    return bonds;
}

std::vector<OrientedEdge> positive_support(const IntEV& cochain) {
    std::vector<OrientedEdge> out;
    for (int e = 0; e < cochain.size(); ++e) {
        if (cochain[e] > 0) out.push_back(OrientedEdge(e, true));
        if (cochain[e] < 0) out.push_back(OrientedEdge(e, false));
    }
    return out;
}

BigInt spanning_tree_count(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 1) return 1;
    BigMat l = laplacian_matrix<BigInt>(g);
    BigMat minor = l.block(1, 1, n - 1, n - 1);
    return abs(int_det(minor));
}

BigInt laplacian_lattice_index(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 1) return 1;
    // Columns of the Laplacian, written on the basis chi_{v_i} - chi_{v_0}
    // of H_{0,Z}: coordinates are the entries at v_1..v_{n-1}.
    BigMat l = laplacian_matrix<BigInt>(g);
    BigMat m = l.block(1, 0, n - 1, n);
    std::vector<BigInt> inv = smith_invariants(m);
    if (static_cast<int>(inv.size()) != n - 1) return 0;  // not full rank
    BigInt idx = 1;
    for (const BigInt& d : inv) idx *= d;
    return idx;
}

}  // namespace gvt
