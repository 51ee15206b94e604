#include "gvt/tiling.hpp"

#include <algorithm>
#include <functional>

#include "gvt/cochain.hpp"
#include "gvt/fourier_motzkin.hpp"

namespace gvt {

LevelVector dee(const Graph& g, const IntEV& ell, const IntEV& m, const IntVV& f, Int n) {
    if (n < 1) throw ValidationError("n must be positive");
    IntEV twice(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        if (ell[e] < 1) throw ValidationError("edge lengths must be >= 1");
        Int num = f[g.head(e)] - f[g.tail(e)] + n * m[e];
        Int den = n * ell[e];
        twice[e] = floor_div(num, den) - floor_div(-num, den);
    }
    return LevelVector(std::move(twice));
}

ActiveSubgraph active_subgraph(const Graph& g, const LevelVector& level) {
    ActiveSubgraph a;
    a.edges.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) a.edges[e] = level.integral(e);
    a.component = components(g, a.edges);
    a.num_components = component_count(a.component);
    a.connected = a.num_components == 1;
    return a;
}

TilingContext::TilingContext(Graph g, IntEV ell, IntEV m)
    : g_(std::move(g)), ell_(std::move(ell)), m_(std::move(m)) {
    if (ell_.size() != g_.num_edges() || m_.size() != g_.num_edges())
        throw ValidationError("length/twisting size mismatch");
    for (int e = 0; e < g_.num_edges(); ++e)
        if (ell_[e] < 1) throw ValidationError("edge lengths must be >= 1");
}

LevelVector TilingContext::level_of(const IntVV& f, Int n) const {
    return dee(g_, ell_, m_, f, n);
}

std::shared_ptr<const SubgraphData> TilingContext::subgraph_data(
    const std::vector<bool>& mask) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(mask);
        if (it != cache_.end()) return it->second;
    }

    const Graph& g = g_;
    const int n = g.num_vertices();
    auto data = std::make_shared<SubgraphData>();
    data->mask = mask;
    CellGeometry cell = cell_core(g, mask);
    data->bonds = std::move(cell.bonds);
    data->cell_vertices = std::move(cell.vertices);

    data->degree.assign(n, 0);
    for (int e = 0; e < g.num_edges(); ++e)
        if (mask[e]) {
            data->degree[g.tail(e)]++;
            data->degree[g.head(e)]++;
        }

    if (n > 1) {
        RatMat lred(n - 1, n - 1);
        lred.setZero();
        for (int e = 0; e < g.num_edges(); ++e) {
            if (!mask[e]) continue;
            int u = g.tail(e), v = g.head(e);
            if (u != 0) lred(u - 1, u - 1) += 1;
            if (v != 0) lred(v - 1, v - 1) += 1;
            if (u != 0 && v != 0) {
                lred(u - 1, v - 1) -= 1;
                lred(v - 1, u - 1) -= 1;
            }
        }
        auto inv = rat_inverse(lred);
        if (!inv) throw std::logic_error("reduced Laplacian of a connected subgraph is singular");
        data->laplacian_inv = std::move(*inv);
    }

    data->box_min = RatVV::Zero(n);
    data->box_max = RatVV::Zero(n);
    for (const CellVertex& cv : data->cell_vertices) {
        RatVV full = RatVV::Zero(n);
        for (int v = 1; v < n; ++v) full[v] = cv.potential[v - 1];
        RatVV img = RatVV::Zero(n);
        for (int e = 0; e < g.num_edges(); ++e) {
            if (!mask[e]) continue;
            Rat diff = full[g.head(e)] - full[g.tail(e)];
            img[g.head(e)] += diff;
            img[g.tail(e)] -= diff;
        }
        data->vertex_images.push_back(img);
        for (int v = 0; v < n; ++v) {
            data->box_min[v] = std::min(data->box_min[v], img[v]);
            data->box_max[v] = std::max(data->box_max[v], img[v]);
        }
    }

    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(mask, data);
    return it->second;
}

Tile build_tile(const TilingContext& ctx, const IntVV& f) {
    const Graph& g = ctx.graph();
    if (f.size() != g.num_vertices()) throw ValidationError("f size mismatch");
    if (f[0] != 0) throw ValidationError("f must be normalized: f(v0) = 0");
    Tile t;
    t.f = f;
    t.level = ctx.level_of(f);
    t.active = active_subgraph(g, t.level);
    if (!t.active.connected)
        throw NotATileError("active subgraph is disconnected for this f");
    t.center = level_d_star(g, t.level);
    t.geom = ctx.subgraph_data(t.active.edges);
    return t;
}

bool tile_contains(const TilingContext& ctx, const Tile& tile, const RatVV& x) {
    const Graph& g = ctx.graph();
    const int n = g.num_vertices();
    // Cheap necessary condition: coordinates of x - center are bounded by
    // half the subgraph degree.
    for (int v = 0; v < n; ++v) {
        Rat diff = x[v] - tile.center[v];
        if (diff < 0) diff = -diff;
        if (2 * diff > tile.geom->degree[v]) return false;
    }
    if (n == 1) return x[0] == 0;

    // Solve the reduced Laplacian for the potential of x - center, then test
    // the bond halfspaces of the active subgraph.
    RatVV rhs(n - 1);
    for (int v = 1; v < n; ++v) rhs[v - 1] = x[v] - tile.center[v];
    RatVV gpot_red = tile.geom->laplacian_inv * rhs;
    RatVV gpot = RatVV::Zero(n);
    for (int v = 1; v < n; ++v) gpot[v] = gpot_red[v - 1];
    for (const Bond& b : tile.geom->bonds) {
        Rat pairing = 0;
        for (int e = 0; e < g.num_edges(); ++e) {
            if (!tile.active.edges[e] || b.cochain[e] == 0) continue;
            pairing += (gpot[g.head(e)] - gpot[g.tail(e)]) * b.cochain[e];
        }
        if (2 * pairing > Rat(b.norm_sq)) return false;
    }
    return true;
}

Int suggested_window(const Graph& g, const IntEV& ell, const RatVV& x) {
    Int max_ell = 1;
    for (int e = 0; e < g.num_edges(); ++e) max_ell = std::max(max_ell, ell[e]);
    Rat norm = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        Rat a = x[v] < 0 ? Rat(-x[v]) : Rat(x[v]);
        norm = std::max(norm, a);
    }
    Int ceil_norm = BigInt(numerator(norm) / denominator(norm)).convert_to<Int>();
    if (Rat(ceil_norm) < norm) ++ceil_norm;
    return max_ell * std::max(1, g.diameter()) * (ceil_norm + 1);
}

namespace {

// Odometer over normalized f: f[0] = 0, remaining entries in [-w, w].
bool next_f(IntVV& f, Int w) {
    for (int v = 1; v < f.size(); ++v) {
        if (f[v] < w) {
            ++f[v];
            for (int u = 1; u < v; ++u) f[u] = -w;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Tile> locate_point(const TilingContext& ctx, const RatVV& x, Int window) {
    const Graph& g = ctx.graph();
    const int n = g.num_vertices();
    if (x.size() != n) throw ValidationError("point dimension mismatch");
    Rat total = 0;
    for (int v = 0; v < n; ++v) total += x[v];
    if (total != 0) throw ValidationError("point must lie in H_0 (coordinates sum to 0)");

    std::vector<Tile> hits;
    IntVV f = IntVV::Zero(n);
    for (int v = 1; v < n; ++v) f[v] = -window;
    bool more = n > 1;
    if (n == 1) {
        Tile t = build_tile(ctx, f);
        if (tile_contains(ctx, t, x)) hits.push_back(std::move(t));
    }
    // Precompute 2x once; candidates are rejected with pure integer
    // arithmetic where possible.
    RatVV x2(n);
    for (int v = 0; v < n; ++v) x2[v] = 2 * x[v];
    const int m = g.num_edges();
    std::vector<Int> twice(m);
    std::vector<Int> center_twice(n);
    std::vector<int> deg(n), uf(n);
    while (more) {
        // level vector, center and active degrees in one integer pass
        std::fill(center_twice.begin(), center_twice.end(), 0);
        std::fill(deg.begin(), deg.end(), 0);
        for (int e = 0; e < m; ++e) {
            Int num = f[g.head(e)] - f[g.tail(e)] + ctx.twisting()[e];
            Int den = ctx.ell()[e];
            Int tw = floor_div(num, den) - floor_div(-num, den);
            twice[e] = tw;
            center_twice[g.head(e)] += tw;
            center_twice[g.tail(e)] -= tw;
            if (tw % 2 == 0) {
                deg[g.tail(e)]++;
                deg[g.head(e)]++;
            }
        }
        bool maybe = true;
        for (int v = 0; v < n && maybe; ++v) {
            if (deg[v] == 0) {  // isolated vertex: active subgraph disconnected
                maybe = false;
                break;
            }
            Rat diff = x2[v] - Rat(center_twice[v]);
            if (diff < 0) diff = -diff;
            if (diff > deg[v]) maybe = false;
        }
        if (maybe && n > 1) {
            // connectivity of the active subgraph
            for (int v = 0; v < n; ++v) uf[v] = v;
            auto find = [&](int v) {
                while (uf[v] != v) v = uf[v] = uf[uf[v]];
                return v;
            };
            int comps = n;
            for (int e = 0; e < m && comps > 1; ++e) {
                if (twice[e] % 2 != 0) continue;
                int a = find(g.tail(e)), b = find(g.head(e));
                if (a != b) {
                    uf[std::max(a, b)] = std::min(a, b);
                    --comps;
                }
            }
            if (comps == 1) {
                Tile t = build_tile(ctx, f);
                if (tile_contains(ctx, t, x)) hits.push_back(std::move(t));
            }
        }
        more = next_f(f, window);
    }
    if (hits.empty())
        throw WindowError("no tile found within window " + std::to_string(window) +
                          "; enlarge the window");
    return hits;
}

std::optional<SharedFace> tiles_adjacent(const TilingContext& ctx, const IntVV& f1,
                                         const IntVV& f2) {
    const Graph& g = ctx.graph();
    LevelVector l1 = ctx.level_of(f1), l2 = ctx.level_of(f2);
    ActiveSubgraph a1 = active_subgraph(g, l1), a2 = active_subgraph(g, l2);
    if (!a1.connected || !a2.connected)
        throw NotATileError("tiles_adjacent requires connected active subgraphs");

    // Level sets of f2 - f1 in increasing order; ties merged.
    IntVV diff = f2 - f1;
    std::vector<Int> values(diff.data(), diff.data() + diff.size());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::vector<int>> parts_up(values.size()), parts_down(values.size());
    for (int v = 0; v < g.num_vertices(); ++v) {
        int k = static_cast<int>(std::lower_bound(values.begin(), values.end(), diff[v]) -
                                 values.begin());
        parts_up[k].push_back(v);
        parts_down[values.size() - 1 - k].push_back(v);
    }

    auto restrict_to = [&](CACOrientation d, const std::vector<bool>& mask) {
        std::vector<OrientedEdge> kept;
        for (OrientedEdge oe : d.edges)
            if (mask[oe.edge]) kept.push_back(oe);
        d.edges = std::move(kept);
        return d;
    };
    CACOrientation d1 = restrict_to(cac_from_partition(g, parts_up), a1.edges);
    CACOrientation d2 = restrict_to(cac_from_partition(g, parts_down), a2.edges);

    // d1 must be exactly the edges of the first active subgraph where the
    // level increased (and symmetrically for d2).
    for (int e = 0; e < g.num_edges(); ++e) {
        bool in_d1 = std::binary_search(d1.edges.begin(), d1.edges.end(), OrientedEdge(e, true)) ||
                     std::binary_search(d1.edges.begin(), d1.edges.end(), OrientedEdge(e, false));
        bool expect = a1.edges[e] && l1.twice(e) != l2.twice(e);
        if (in_d1 != expect) throw std::logic_error("D1 does not match the level criterion");
    }

    auto chi = [&](const CACOrientation& d) {
        IntEV c = IntEV::Zero(g.num_edges());
        for (OrientedEdge oe : d.edges) c[oe.edge] += oe.fwd ? 1 : -1;
        return c;
    };
    IntEV lhs = l1.raw_twice() + chi(d1);
    IntEV rhs = l2.raw_twice() + chi(d2);
    if (lhs != rhs) return std::nullopt;

    SharedFace sf;
    sf.alpha = LevelVector(lhs);
    sf.d1 = std::move(d1);
    sf.d2 = std::move(d2);
    sf.kept_edges.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e)
        sf.kept_edges[e] = a1.edges[e] && a2.edges[e] && l1.twice(e) == l2.twice(e);
    std::vector<int> comp = components(g, sf.kept_edges);
    sf.components.resize(component_count(comp));
    for (int v = 0; v < g.num_vertices(); ++v) sf.components[comp[v]].push_back(v);
    return sf;
}

std::optional<std::pair<Int, IntVV>> solve_level_function(const Graph& g, const IntEV& ell,
                                                          const IntEV& m,
                                                          const LevelVector& alpha) {
    const int n = g.num_vertices();
    // Union-find with integer offsets along integer-level edges:
    // g(v) = g(root(v)) + off(v).
    std::vector<int> parent(n);
    std::vector<Int> off(n, 0);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        if (parent[v] == v) return v;
        int r = find(parent[v]);
        off[v] += off[parent[v]];
        parent[v] = r;
        return r;
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!alpha.integral(e)) continue;
        Int want = alpha.int_level(e) * ell[e] - m[e];  // g(head) - g(tail)
        int rt = find(g.tail(e)), rh = find(g.head(e));
        if (rt == rh) {
            if (off[g.head(e)] - off[g.tail(e)] != want) return std::nullopt;
        } else {
            // attach rh under rt: off must satisfy off[head]+off(rh) - off[tail] = want
            parent[rh] = rt;
            off[rh] = want + off[g.tail(e)] - off[g.head(e)];
        }
    }
    for (int v = 0; v < n; ++v) find(v);

    // One rational variable per root component, the root of v0 pinned to 0.
    std::vector<int> roots;
    for (int v = 0; v < n; ++v)
        if (parent[v] == v) roots.push_back(v);
    std::vector<int> var_of(n, -1);
    int nvars = 0;
    int root0 = find(0);
    for (int r : roots)
        if (r != root0) var_of[r] = nvars++;

    LinearSystem sys(nvars);
    auto add_half_edge = [&](int e) -> bool {
        // l_e (alpha_e - 1/2) < g(head) - g(tail) + m_e < l_e (alpha_e + 1/2)
        Int k = alpha.floor_level(e);
        Rat lower = Rat(ell[e]) * k - m[e];
        Rat upper = Rat(ell[e]) * (k + 1) - m[e];
        int rh = find(g.head(e)), rt = find(g.tail(e));
        Rat constant = Rat(off[g.head(e)]) - Rat(off[g.tail(e)]);
        RatVV coeffs = RatVV::Zero(nvars);
        if (var_of[rh] >= 0) coeffs[var_of[rh]] += 1;
        if (var_of[rt] >= 0) coeffs[var_of[rt]] -= 1;
        if (rh == rt) return constant > lower && constant < upper;
        sys.add_lt(coeffs, upper - constant);
        sys.add_lt(-coeffs, constant - lower);
        return true;
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        if (alpha.integral(e)) continue;
        if (!add_half_edge(e)) return std::nullopt;
    }

    auto point = sys.find_point();
    if (!point) return std::nullopt;

    RatVV gpot(n);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        Rat base = var_of[r] >= 0 ? (*point)[var_of[r]] : Rat(0);
        gpot[v] = base + off[v];
    }
    Rat shift = gpot[0];
    BigInt nn = 1;
    for (int v = 0; v < n; ++v) {
        gpot[v] -= shift;
        nn = lcm(nn, denominator(gpot[v]));
    }
    Int n_scal = nn.convert_to<Int>();
    IntVV f(n);
    for (int v = 0; v < n; ++v)
        f[v] = BigInt(numerator(gpot[v]) * (nn / denominator(gpot[v]))).convert_to<Int>();

    if (dee(g, ell, m, f, n_scal).raw_twice() != alpha.raw_twice())
        throw std::logic_error("solve_level_function produced a wrong witness");
    return std::make_pair(n_scal, f);
}

}  // namespace gvt
