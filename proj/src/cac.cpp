#include "gvt/cac.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gvt {

CACOrientation cac_from_partition(const Graph& g,
                                  const std::vector<std::vector<int>>& parts) {
    const int n = g.num_vertices();
    std::vector<int> part_of(n, -1);
    for (int p = 0; p < static_cast<int>(parts.size()); ++p)
        for (int v : parts[p]) {
            if (v < 0 || v >= n || part_of[v] >= 0)
                throw ValidationError("not an ordered partition of V");
            part_of[v] = p;
        }
    for (int v = 0; v < n; ++v)
        if (part_of[v] < 0) throw ValidationError("partition misses a vertex");

    CACOrientation d;
    d.witness = parts;
    for (int e = 0; e < g.num_edges(); ++e) {
        int pt = part_of[g.tail(e)], ph = part_of[g.head(e)];
        if (pt < ph) d.edges.push_back(OrientedEdge(e, true));
        if (pt > ph) d.edges.push_back(OrientedEdge(e, false));
    }
    std::sort(d.edges.begin(), d.edges.end());
    return d;
}

int CACPoset::find(const std::vector<OrientedEdge>& sorted_edges) const {
    for (int i = 0; i < size(); ++i)
        if (elems_[i].edges == sorted_edges) return i;
    return -1;
}

bool CACPoset::leq(int i, int j) const {
    return std::includes(elems_[i].edges.begin(), elems_[i].edges.end(),
                         elems_[j].edges.begin(), elems_[j].edges.end());
}

namespace {

void enumerate_partitions(int n, std::vector<int>& part_of, int v, int used,
                          const std::function<void(const std::vector<int>&, int)>& emit) {
    if (v == n) {
        emit(part_of, used);
        return;
    }
    for (int p = 0; p <= used; ++p) {
        part_of[v] = p;
        enumerate_partitions(n, part_of, v + 1, std::max(used, p + 1), emit);
    }
}

}  // namespace

CACPoset enumerate_cac(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kMaxCACVertices)
        throw SizeError("CAC enumeration capped at " + std::to_string(kMaxCACVertices) +
                        " vertices, got " + std::to_string(n));

    // Unordered partitions in canonical first-occurrence form, then every
    // ordering of the parts.
    std::map<std::vector<OrientedEdge>, CACOrientation> dedup;
    std::vector<int> part_of(n, 0);
    enumerate_partitions(n, part_of, 0, 0, [&](const std::vector<int>& assign, int s) {
        std::vector<std::vector<int>> parts(s);
        for (int v = 0; v < n; ++v) parts[assign[v]].push_back(v);
        std::vector<int> order(s);
        for (int p = 0; p < s; ++p) order[p] = p;
        do {
            std::vector<std::vector<int>> arranged(s);
            for (int p = 0; p < s; ++p) arranged[p] = parts[order[p]];
            CACOrientation d = cac_from_partition(g, arranged);
            dedup.emplace(d.edges, d);  // first witness wins
        } while (std::next_permutation(order.begin(), order.end()));
    });

    std::vector<CACOrientation> elems;
    elems.reserve(dedup.size());
    for (auto& [key, d] : dedup) elems.push_back(std::move(d));
    std::sort(elems.begin(), elems.end(), [](const CACOrientation& a, const CACOrientation& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        return a.edges < b.edges;
    });
    return CACPoset(std::move(elems));
}

}  // namespace gvt
