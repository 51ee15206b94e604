#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gvt/cac.hpp"
#include "gvt/cell.hpp"
#include "gvt/tiling.hpp"
#include "support/checks.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using namespace gvt;
using namespace testgraphs;

static IntVV ivv(std::initializer_list<Int> v) {
    IntVV out(static_cast<int>(v.size()));
    int i = 0;
    for (Int x : v) out[i++] = x;
    return out;
}

static IntEV iev(std::initializer_list<Int> v) {
    IntEV out(static_cast<int>(v.size()));
    int i = 0;
    for (Int x : v) out[i++] = x;
    return out;
}

static RatVV rvv(std::initializer_list<Rat> v) {
    RatVV out(static_cast<int>(v.size()));
    int i = 0;
    for (const Rat& x : v) out[i++] = x;
    return out;
}

TEST_CASE("enumerate_cac counts on P2 and K3") {
    auto cac_p2 = enumerate_cac(p2());
    CHECK(cac_p2.size() == 3);

    auto cac_k3 = enumerate_cac(k3());
    CHECK(cac_k3.size() == 13);
    int full = 0;
    for (const auto& d : cac_k3.elems())
        if (d.edges.size() == 3) ++full;
    CHECK(full == 6);  // minimal elements are full acyclic orientations

    // the empty orientation is present (the whole cell)
    CHECK(cac_k3.find({}) >= 0);
}

TEST_CASE("cell geometry of P2 is the segment with vertices +-1/2") {
    CellGeometry cell = cell_geometry(p2());
    REQUIRE(cell.vertices.size() == 2);
    CHECK(cell.vertices[0].potential[0] == Rat(-1, 2));
    CHECK(cell.vertices[1].potential[0] == Rat(1, 2));
    CHECK(cell.bonds.size() == 2);
}

TEST_CASE("cell geometry of K3 is a hexagon") {
    CellGeometry cell = cell_geometry(k3());
    CHECK(cell.vertices.size() == 6);
    auto faces = geometric_face_lattice(k3(), cell);
    CHECK(faces.size() == 13);  // 6 vertices + 6 edges + 1 cell
    int by_dim[3] = {0, 0, 0};
    for (const auto& f : faces) {
        REQUIRE(f.dim >= 0);
        REQUIRE(f.dim <= 2);
        by_dim[f.dim]++;
    }
    CHECK(by_dim[0] == 6);
    CHECK(by_dim[1] == 6);
    CHECK(by_dim[2] == 1);
}

TEST_CASE("cell geometry of B2 is a segment with one vertex per acyclic orientation") {
    CellGeometry cell = cell_geometry(b2());
    CHECK(cell.vertices.size() == 2);
    CHECK(oracles::count_acyclic_orientations(b2()) == 2);
}

TEST_CASE("FP is order-isomorphic to CAC under phi on the small graphs") {
    CHECK(checks::fp_cac_isomorphic(k3(), oracles::count_acyclic_orientations(k3())));
    CHECK(checks::fp_cac_isomorphic(c4(), oracles::count_acyclic_orientations(c4())));
    CHECK(checks::fp_cac_isomorphic(b2(), oracles::count_acyclic_orientations(b2())));
    CHECK(checks::fp_cac_isomorphic(p4(), oracles::count_acyclic_orientations(p4())));
}

TEST_CASE("face dimension matches the component count of G - E(D)") {
    for (const Graph& g : {k3(), c4(), b2(), p4()}) {
        CellGeometry cell = cell_geometry(g);
        for (const CellFace& face : cell.faces) {
            const CACOrientation& d = cell.cac[face.cac_index];
            std::vector<bool> keep(g.num_edges(), true);
            for (OrientedEdge oe : d.edges) keep[oe.edge] = false;
            int comps = component_count(components(g, keep));
            CHECK(face.dim == (g.num_vertices() - 1) - (comps - 1));
        }
    }
}

TEST_CASE("level vectors on hand-checked cases") {
    Graph g = p2();
    CHECK(dee(g, iev({2}), iev({0}), ivv({0, 1}), 1).twice(0) == 1);   // 1/2
    CHECK(dee(g, iev({2}), iev({0}), ivv({0, 0}), 1).twice(0) == 0);
    CHECK(dee(g, iev({1}), iev({0}), ivv({0, 1}), 2).twice(0) == 1);   // 1/2

    // n*l | f-diff + n*m gives the exact ratio
    CHECK(dee(g, iev({2}), iev({0}), ivv({0, 4}), 1).twice(0) == 4);   // level 2
    CHECK(dee(g, iev({2}), iev({1}), ivv({0, 1}), 1).twice(0) == 2);   // (1+1)/2 = 1
}

TEST_CASE("dee via the floor formula equals the case split") {
    std::mt19937_64 rng(7001);
    std::uniform_int_distribution<Int> fv(-9, 9), lv(1, 3), mv(-2, 2), nv(1, 4);
    for (const Graph& g : all_small()) {
        for (int trial = 0; trial < 60; ++trial) {
            IntVV f(g.num_vertices());
            IntEV ell(g.num_edges()), m(g.num_edges());
            for (int v = 0; v < g.num_vertices(); ++v) f[v] = fv(rng);
            for (int e = 0; e < g.num_edges(); ++e) {
                ell[e] = lv(rng);
                m[e] = mv(rng);
            }
            Int n = nv(rng);
            LevelVector lev = dee(g, ell, m, f, n);
            for (int e = 0; e < g.num_edges(); ++e) {
                Int num = f[g.head(e)] - f[g.tail(e)] + n * m[e];
                Int den = n * ell[e];
                if (num % den == 0)
                    CHECK(lev.twice(e) == 2 * (num / den));
                else
                    CHECK(lev.twice(e) == 2 * floor_div(num, den) + 1);
            }
        }
    }
}

TEST_CASE("active_subgraph keeps integer-level edges") {
    Graph g = k3();
    auto whole = active_subgraph(g, LevelVector(iev({0, 0, 0})));
    CHECK(whole.connected);
    CHECK(whole.edges == std::vector<bool>{true, true, true});

    auto p2_half = active_subgraph(p2(), LevelVector(iev({1})));
    CHECK(!p2_half.connected);
    CHECK(p2_half.num_components == 2);

    auto path = active_subgraph(g, LevelVector(iev({0, 0, 1})));
    CHECK(path.connected);
    CHECK(path.edges == std::vector<bool>{true, true, false});
}

TEST_CASE("build_tile on hand-checked cases") {
    Graph g = p2();
    TilingContext ctx(g, iev({2}), iev({0}));

    Tile origin = build_tile(ctx, ivv({0, 0}));
    CHECK(origin.center == rvv({0, 0}));
    REQUIRE(origin.geom->cell_vertices.size() == 2);
    CHECK(origin.geom->cell_vertices[0].potential[0] == Rat(-1, 2));
    CHECK(origin.geom->cell_vertices[1].potential[0] == Rat(1, 2));

    CHECK_THROWS_AS(build_tile(ctx, ivv({0, 1})), NotATileError);

    TilingContext k3ctx(k3(), iev({1, 1, 1}), iev({0, 0, 0}));
    Tile hex = build_tile(k3ctx, ivv({0, 0, 0}));
    CHECK(hex.geom->cell_vertices.size() == 6);
    CHECK(hex.center == RatVV::Zero(3));
}

TEST_CASE("locate_point on hand-checked cases") {
    Graph g = p2();
    TilingContext ctx(g, iev({2}), iev({0}));

    auto hits = locate_point(ctx, rvv({Rat(-3, 10), Rat(3, 10)}), 3);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].f == ivv({0, 0}));

    // center of a tile: that tile only
    Tile t = build_tile(ctx, ivv({0, 2}));
    auto at_center = locate_point(ctx, t.center, 4);
    REQUIRE(at_center.size() == 1);
    CHECK(at_center[0].f == ivv({0, 2}));

    // boundary point lies in both neighbors
    auto boundary = locate_point(ctx, rvv({Rat(-1, 2), Rat(1, 2)}), 4);
    REQUIRE(boundary.size() == 2);
    CHECK(boundary[0].f == ivv({0, 0}));
    CHECK(boundary[1].f == ivv({0, 2}));
}

TEST_CASE("tiles_adjacent on hand-checked cases") {
    Graph g = p2();
    TilingContext ctx(g, iev({2}), iev({0}));

    auto sf = tiles_adjacent(ctx, ivv({0, 0}), ivv({0, 2}));
    REQUIRE(sf.has_value());
    CHECK(sf->alpha.twice(0) == 1);  // single node at 1/2
    CHECK(sf->d1.edges == std::vector<OrientedEdge>{OrientedEdge(0, true)});
    CHECK(sf->d2.edges == std::vector<OrientedEdge>{OrientedEdge(0, false)});

    auto self = tiles_adjacent(ctx, ivv({0, 0}), ivv({0, 0}));
    REQUIRE(self.has_value());
    CHECK(self->d1.edges.empty());
    CHECK(self->d2.edges.empty());
    CHECK(self->alpha.twice(0) == 0);
    CHECK(self->components.size() == 1);  // full tile: one component

    CHECK(!tiles_adjacent(ctx, ivv({0, 0}), ivv({0, 4})).has_value());
}

TEST_CASE("adjacency criterion agrees with exact LP on K3, window 2") {
    Graph g = k3();
    TilingContext ctx(g, iev({1, 2, 1}), iev({0, 1, 0}));
    std::vector<Tile> tiles;
    for (Int a = -2; a <= 2; ++a)
        for (Int b = -2; b <= 2; ++b) {
            try {
                tiles.push_back(build_tile(ctx, ivv({0, a, b})));
            } catch (const NotATileError&) {
            }
        }
    for (size_t i = 0; i < tiles.size(); ++i)
        for (size_t j = i + 1; j < tiles.size(); ++j) {
            auto sf = tiles_adjacent(ctx, tiles[i].f, tiles[j].f);
            bool lp = checks::tiles_overlap_by_lp(ctx, tiles[i], tiles[j]);
            CHECK(sf.has_value() == lp);
            if (sf) {
                RatVV meet = level_d_star(g, sf->alpha);
                CHECK(tile_contains(ctx, tiles[i], meet));
                CHECK(tile_contains(ctx, tiles[j], meet));
            }
        }
}

TEST_CASE("solve_level_function on hand-checked cases") {
    Graph g = p2();
    IntEV ell2 = iev({2}), zero = iev({0});

    auto triv = solve_level_function(g, ell2, zero, LevelVector(iev({0})));
    REQUIRE(triv.has_value());
    CHECK(triv->first == 1);
    CHECK(dee(g, ell2, zero, triv->second, triv->first).twice(0) == 0);

    auto half = solve_level_function(g, ell2, zero, LevelVector(iev({1})));
    REQUIRE(half.has_value());
    CHECK(half->first == 1);
    CHECK(half->second == ivv({0, 1}));

    Graph k = k3();
    auto none = solve_level_function(k, iev({1, 1, 1}), iev({0, 0, 0}),
                                     LevelVector(iev({0, 0, 1})));
    CHECK(!none.has_value());
}

TEST_CASE("solve_level_function round-trips on random levels") {
    std::mt19937_64 rng(7002);
    std::uniform_int_distribution<Int> fv(-6, 6), lv(1, 3), mv(-2, 2), nv(1, 4);
    for (const Graph& g : {k3(), c4(), b2(), theta()}) {
        for (int trial = 0; trial < 40; ++trial) {
            IntVV f(g.num_vertices());
            IntEV ell(g.num_edges()), m(g.num_edges());
            for (int v = 0; v < g.num_vertices(); ++v) f[v] = fv(rng);
            for (int e = 0; e < g.num_edges(); ++e) {
                ell[e] = lv(rng);
                m[e] = mv(rng);
            }
            Int n = nv(rng);
            LevelVector alpha = dee(g, ell, m, f, n);
            auto sol = solve_level_function(g, ell, m, alpha);
            REQUIRE(sol.has_value());
            CHECK(dee(g, ell, m, sol->second, sol->first).raw_twice() == alpha.raw_twice());
        }
    }
}

TEST_CASE("tiling covers random points, interior points exactly once") {
    std::mt19937_64 rng(7003);
    struct Config {
        Graph g;
        IntEV ell, m;
    };
    std::vector<Config> configs = {
        {k3(), iev({1, 2, 1}), iev({0, 1, 0})},
        {b2(), iev({3, 2}), iev({-1, 2})},
        {c4(), iev({1, 1, 2, 1}), iev({0, -1, 0, 1})},
    };
    for (const auto& cfg : configs) {
        TilingContext ctx(cfg.g, cfg.ell, cfg.m);
        const int n = cfg.g.num_vertices();
        for (int trial = 0; trial < 40; ++trial) {
            RatVV x(n);
            Rat sum = 0;
            for (int v = 0; v < n - 1; ++v) {
                x[v] = oracles::random_rat(rng, 4, 13);
                sum += x[v];
            }
            x[n - 1] = -sum;
            Int window = suggested_window(cfg.g, cfg.ell, x);
            auto hits = locate_point(ctx, x, window);
            CHECK(hits.size() >= 1);
            bool strictly_inside = false;
            for (const Tile& t : hits) {
                // interior test: on no bond hyperplane
                RatVV rhs(n - 1);
                for (int v = 1; v < n; ++v) rhs[v - 1] = x[v] - t.center[v];
                RatVV gred = t.geom->laplacian_inv * rhs;
                RatVV gpot = RatVV::Zero(n);
                for (int v = 1; v < n; ++v) gpot[v] = gred[v - 1];
                bool on_boundary = false;
                for (const Bond& b : t.geom->bonds) {
                    Rat pairing = 0;
                    for (int e = 0; e < cfg.g.num_edges(); ++e) {
                        if (!t.active.edges[e] || b.cochain[e] == 0) continue;
                        pairing += (gpot[cfg.g.head(e)] - gpot[cfg.g.tail(e)]) * b.cochain[e];
                    }
                    if (2 * pairing == Rat(b.norm_sq)) on_boundary = true;
                }
                if (!on_boundary) strictly_inside = true;
            }
            if (strictly_inside) CHECK(hits.size() == 1);
        }
    }
}

TEST_CASE("levels of floor(f/n) stay within a half step") {
    std::mt19937_64 rng(7004);
    std::uniform_int_distribution<Int> fv(-9, 9), lv(1, 3), mv(-2, 2), nv(1, 4);
    for (const Graph& g : {k3(), c4(), theta()}) {
        for (int trial = 0; trial < 80; ++trial) {
            IntVV f(g.num_vertices());
            IntEV ell(g.num_edges()), m(g.num_edges());
            for (int v = 0; v < g.num_vertices(); ++v) f[v] = fv(rng);
            for (int e = 0; e < g.num_edges(); ++e) {
                ell[e] = lv(rng);
                m[e] = mv(rng);
            }
            Int n = nv(rng);
            IntVV gfun(g.num_vertices());
            for (int v = 0; v < g.num_vertices(); ++v) gfun[v] = floor_div(f[v], n);
            LevelVector ln = dee(g, ell, m, f, n);
            LevelVector l1 = dee(g, ell, m, gfun, 1);
            for (int e = 0; e < g.num_edges(); ++e) {
                Int gap = l1.twice(e) - ln.twice(e);
                CHECK(gap <= 1);
                CHECK(gap >= -1);
                if (ln.integral(e)) CHECK(gap == 0);
            }
        }
    }
}

TEST_CASE("strict drops pair with strict rises along integral cycles") {
    std::mt19937_64 rng(7005);
    std::uniform_int_distribution<Int> fv(-9, 9), lv(1, 3), mv(-2, 2), nv(1, 4);
    for (const Graph& g : {k3(), c4(), b2(), theta()}) {
        auto cycles = simple_cycles(g);
        for (int trial = 0; trial < 80; ++trial) {
            IntVV f(g.num_vertices()), h(g.num_vertices());
            IntEV ell(g.num_edges()), m(g.num_edges());
            for (int v = 0; v < g.num_vertices(); ++v) {
                f[v] = fv(rng);
                h[v] = fv(rng);
            }
            for (int e = 0; e < g.num_edges(); ++e) {
                ell[e] = lv(rng);
                m[e] = mv(rng);
            }
            Int n = nv(rng), p = nv(rng);
            LevelVector lf = dee(g, ell, m, f, n);
            LevelVector lh = dee(g, ell, m, h, p);
            for (const auto& c : cycles) {
                bool integral = true;
                for (OrientedEdge oe : c.edges) integral = integral && lh.integral(oe.edge);
                if (!integral) continue;
                bool has_lt = false, has_gt = false;
                for (OrientedEdge oe : c.edges) {
                    if (lf.twice(oe) < lh.twice(oe)) has_lt = true;
                    if (lf.twice(oe) > lh.twice(oe)) has_gt = true;
                }
                CHECK(has_lt == has_gt);
            }
        }
    }
}

TEST_CASE("level differences in the cycle space vanish") {
    Graph g = k3();
    IntEV ell = iev({1, 2, 1}), m = iev({0, 1, -1});
    for (Int n = 1; n <= 2; ++n)
        for (Int a1 = -2; a1 <= 2; ++a1)
            for (Int b1 = -2; b1 <= 2; ++b1)
                for (Int a2 = -2; a2 <= 2; ++a2)
                    for (Int b2 = -2; b2 <= 2; ++b2) {
                        LevelVector l1 = dee(g, ell, m, ivv({0, a1, b1}), n);
                        LevelVector l2 = dee(g, ell, m, ivv({0, a2, b2}), n);
                        IntEV diff_twice = l2.raw_twice() - l1.raw_twice();
                        bool integral = true;
                        for (int e = 0; e < 3; ++e) integral = integral && diff_twice[e] % 2 == 0;
                        if (!integral) continue;
                        IntEV diff = diff_twice / 2;
                        if (apply_d_star<Int>(g, diff) == IntVV::Zero(3))
                            CHECK(diff == IntEV::Zero(3));
                    }
}
