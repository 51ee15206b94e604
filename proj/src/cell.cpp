#include "gvt/cell.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gvt/cochain.hpp"

namespace gvt {

std::vector<Bond> subgraph_bonds(const Graph& g, const std::vector<bool>& edge_mask) {
    const int n = g.num_vertices();
    if (n > kMaxBondVertices)
        throw SizeError("bond enumeration capped at " + std::to_string(kMaxBondVertices) +
                        " vertices");
    std::vector<Bond> bonds;
    std::set<std::vector<Int>> seen;
    for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
        std::vector<bool> x(n), co(n);
        for (int v = 0; v < n; ++v) {
            x[v] = (mask >> v) & 1;
            co[v] = !x[v];
        }
        if (!induced_connected(g, x, edge_mask) || !induced_connected(g, co, edge_mask))
            continue;
        Bond b;
        b.x = x;
        b.cochain = cut_element(g, x);
        for (int e = 0; e < g.num_edges(); ++e)
            if (!edge_mask.empty() && !edge_mask[e]) b.cochain[e] = 0;
        b.norm_sq = b.cochain.squaredNorm();
        if (b.norm_sq == 0) continue;
        std::vector<Int> key(b.cochain.data(), b.cochain.data() + b.cochain.size());
        if (seen.insert(key).second) bonds.push_back(std::move(b));
    }
    return bonds;
}

namespace {

// Row of the halfspace 2<d(gpot), beta> <= |beta|^2 as a linear form in the
// potential coordinates g(v_1)..g(v_{n-1}), with g(v_0) = 0.
RatVV halfspace_row(const Graph& g, const std::vector<bool>& edge_mask, const Bond& b) {
    const int n = g.num_vertices();
    RatVV row = RatVV::Zero(n - 1);
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!edge_mask.empty() && !edge_mask[e]) continue;
        if (b.cochain[e] == 0) continue;
        int h = g.head(e), t = g.tail(e);
        if (h != 0) row[h - 1] += 2 * b.cochain[e];
        if (t != 0) row[t - 1] -= 2 * b.cochain[e];
    }
    return row;
}

}  // namespace

CellGeometry cell_core(const Graph& g, const std::vector<bool>& edge_mask) {
    const int n = g.num_vertices();
    CellGeometry cell;
    cell.edge_mask = edge_mask.empty() ? std::vector<bool>(g.num_edges(), true) : edge_mask;
    if (component_count(components(g, cell.edge_mask)) != 1)
        throw ValidationError("cell geometry needs a connected spanning subgraph");
    cell.bonds = subgraph_bonds(g, cell.edge_mask);
    const int dim = n - 1;
    if (dim == 0) {
        cell.vertices.push_back(CellVertex{RatVV::Zero(0)});
        return cell;
    }

    const int nb = static_cast<int>(cell.bonds.size());
    std::vector<RatVV> rows(nb);
    for (int i = 0; i < nb; ++i) rows[i] = halfspace_row(g, cell.edge_mask, cell.bonds[i]);

    // Exact vertex enumeration: solve every full-rank tight subset of size
    // dim, keep feasible solutions, dedupe.
    std::set<std::vector<std::pair<std::string, std::string>>> seen;
    std::vector<int> comb(dim);
    for (int i = 0; i < dim; ++i) comb[i] = i;
    auto advance = [&]() -> bool {
        int i = dim - 1;
        while (i >= 0 && comb[i] == nb - dim + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    if (nb < dim) throw std::logic_error("fewer bonds than the cell dimension");
    do {
        RatMat a(dim, dim);
        RatVV rhs(dim);
        for (int i = 0; i < dim; ++i) {
            a.row(i) = rows[comb[i]].transpose();
            rhs[i] = cell.bonds[comb[i]].norm_sq;
        }
        if (rat_rank(a) != dim) continue;
        auto sol = rat_solve(a, rhs);
        if (!sol) continue;
        bool feasible = true;
        for (int i = 0; i < nb && feasible; ++i)
            if (rows[i].dot(*sol) > Rat(cell.bonds[i].norm_sq)) feasible = false;
        if (!feasible) continue;
        std::vector<std::pair<std::string, std::string>> key;
        for (int i = 0; i < dim; ++i)
            key.emplace_back(numerator((*sol)[i]).str(), denominator((*sol)[i]).str());
        if (seen.insert(key).second) cell.vertices.push_back(CellVertex{*sol});
    } while (advance());

    std::sort(cell.vertices.begin(), cell.vertices.end(),
              [](const CellVertex& a, const CellVertex& b) {
                  for (int i = 0; i < a.potential.size(); ++i)
                      if (a.potential[i] != b.potential[i])
                          return a.potential[i] < b.potential[i];
                  return false;
              });
    return cell;
}

int span_rank(const std::vector<const IntEV*>& vecs, int edge_count) {
    if (vecs.empty()) return 0;
    RatMat m(static_cast<int>(vecs.size()), edge_count);
    for (int i = 0; i < static_cast<int>(vecs.size()); ++i)
        for (int e = 0; e < edge_count; ++e) m(i, e) = (*vecs[i])[e];
    return rat_rank(m);
}

namespace {

bool vertex_tight_on(const Graph& g, const CellGeometry& cell, const CellVertex& v,
                     const Bond& b) {
    RatVV row = halfspace_row(g, cell.edge_mask, b);
    return row.dot(v.potential) == Rat(b.norm_sq);
}

}  // namespace

CellGeometry cell_geometry(const Graph& g) {
    CellGeometry cell = cell_core(g, {});
    cell.cac = enumerate_cac(g);
    const int nb = static_cast<int>(cell.bonds.size());
    const int nv = static_cast<int>(cell.vertices.size());

    std::vector<std::vector<bool>> tight(nv, std::vector<bool>(nb, false));
    for (int v = 0; v < nv; ++v)
        for (int b = 0; b < nb; ++b)
            tight[v][b] = vertex_tight_on(g, cell, cell.vertices[v], cell.bonds[b]);

    std::vector<std::vector<OrientedEdge>> supp(nb);
    for (int b = 0; b < nb; ++b) supp[b] = positive_support(cell.bonds[b].cochain);

    for (int d = 0; d < cell.cac.size(); ++d) {
        const auto& edges = cell.cac[d].edges;
        CellFace face;
        face.cac_index = d;
        for (int b = 0; b < nb; ++b)
            if (std::includes(edges.begin(), edges.end(), supp[b].begin(), supp[b].end()))
                face.tight_bonds.push_back(b);
        for (int v = 0; v < nv; ++v) {
            bool all = true;
            for (int b : face.tight_bonds) all = all && tight[v][b];
            if (all) face.vertex_ids.push_back(v);
        }
        std::vector<const IntEV*> span;
        for (int b : face.tight_bonds) span.push_back(&cell.bonds[b].cochain);
        face.dim = (g.num_vertices() - 1) - span_rank(span, g.num_edges());
        cell.faces.push_back(std::move(face));
    }
    return cell;
}

std::vector<GeomFace> geometric_face_lattice(const Graph& g, const CellGeometry& cell) {
    const int nb = static_cast<int>(cell.bonds.size());
    const int nv = static_cast<int>(cell.vertices.size());
    std::vector<std::vector<bool>> tight(nv, std::vector<bool>(nb, false));
    for (int v = 0; v < nv; ++v)
        for (int b = 0; b < nb; ++b)
            tight[v][b] = vertex_tight_on(g, cell, cell.vertices[v], cell.bonds[b]);

    // Close the per-vertex tight sets under intersection.
    std::set<std::vector<int>> closed;
    std::vector<std::vector<int>> work;
    for (int v = 0; v < nv; ++v) {
        std::vector<int> t;
        for (int b = 0; b < nb; ++b)
            if (tight[v][b]) t.push_back(b);
        if (closed.insert(t).second) work.push_back(t);
    }
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            std::vector<int> inter;
            std::set_intersection(work[i].begin(), work[i].end(), work[j].begin(),
                                  work[j].end(), std::back_inserter(inter));
            if (closed.insert(inter).second) work.push_back(inter);
        }

    std::vector<GeomFace> faces;
    for (const auto& t : closed) {
        GeomFace f;
        f.tight_bonds = t;
        for (int v = 0; v < nv; ++v) {
            bool all = true;
            for (int b : t) all = all && tight[v][b];
            if (all) f.vertex_ids.push_back(v);
        }
        std::vector<const IntEV*> span;
        for (int b : t) span.push_back(&cell.bonds[b].cochain);
        f.dim = (g.num_vertices() - 1) - span_rank(span, g.num_edges());
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const GeomFace& a, const GeomFace& b) {
        if (a.tight_bonds.size() != b.tight_bonds.size())
            return a.tight_bonds.size() > b.tight_bonds.size();
        return a.tight_bonds < b.tight_bonds;
    });
    return faces;
}

std::vector<OrientedEdge> phi_of_tight_set(const CellGeometry& cell,
                                           const std::vector<int>& tight_bonds) {
    std::set<OrientedEdge> acc;
    for (int b : tight_bonds)
        for (OrientedEdge oe : positive_support(cell.bonds[b].cochain)) acc.insert(oe);
    return std::vector<OrientedEdge>(acc.begin(), acc.end());
}

}  // namespace gvt
