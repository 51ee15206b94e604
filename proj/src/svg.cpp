#include "gvt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gvt/json_io.hpp"
#include "gvt/linalg.hpp"

namespace gvt {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);  // normalize -0
    return buf;
}

struct Pt {
    double x = 0, y = 0;
};

bool point_in_rect(const Pt& p, const BBox& b) {
    return p.x >= b.x0 && p.x <= b.x1 && p.y >= b.y0 && p.y <= b.y1;
}

bool point_in_convex(const Pt& q, const std::vector<Pt>& poly) {
    const int k = static_cast<int>(poly.size());
    if (k < 3) return false;
    int sign = 0;
    for (int i = 0; i < k; ++i) {
        const Pt& a = poly[i];
        const Pt& b = poly[(i + 1) % k];
        double cross = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
        if (std::abs(cross) < 1e-12) continue;
        int s = cross > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) return false;
    }
    return true;
}

bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    auto orient = [](const Pt& p, const Pt& q, const Pt& r) {
        double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        return v > 1e-12 ? 1 : v < -1e-12 ? -1 : 0;
    };
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 != o2 && o3 != o4;
}

bool polygon_meets_rect(const std::vector<Pt>& poly, const BBox& bb) {
    for (const Pt& p : poly)
        if (point_in_rect(p, bb)) return true;
    std::vector<Pt> rect = {{bb.x0, bb.y0}, {bb.x1, bb.y0}, {bb.x1, bb.y1}, {bb.x0, bb.y1}};
    for (const Pt& c : rect)
        if (point_in_convex(c, poly)) return true;
    const int k = static_cast<int>(poly.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 4; ++j)
            if (segments_cross(poly[i], poly[(i + 1) % k], rect[j], rect[(j + 1) % 4]))
                return true;
    return false;
}

}  // namespace

std::string render_tiling(const TilingContext& ctx, const BBox& bbox,
                          std::optional<Int> window_opt) {
    const Graph& g = ctx.graph();
    const int n = g.num_vertices();
    const int rank = n - 1;
    if (rank > 2)
        throw UnsupportedRankError("rendering supports rank <= 2, got rank " +
                                   std::to_string(rank));

    std::string body;
    double width = bbox.x1 - bbox.x0, height = bbox.y1 - bbox.y0;
    auto svg_wrap = [&](const std::string& inner) {
        std::string head = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
                           num(bbox.x0) + " " + num(-bbox.y1) + " " + num(std::max(width, 0.0)) +
                           " " + num(std::max(height, 0.0)) + "\">\n";
        return head + inner + "</svg>\n";
    };
    if (bbox.empty()) return svg_wrap("");

    // Gram matrix of the q-form on the basis chi_{v_i} - chi_{v_0} is the
    // inverse reduced Laplacian; its Cholesky factor maps basis coordinates
    // to the rendering plane.
    double u11 = 1, u12 = 0, u22 = 1;
    if (rank >= 1) {
        RatMat lred(rank, rank);
        lred.setZero();
        for (int e = 0; e < g.num_edges(); ++e) {
            int u = g.tail(e), v = g.head(e);
            if (u != 0) lred(u - 1, u - 1) += 1;
            if (v != 0) lred(v - 1, v - 1) += 1;
            if (u != 0 && v != 0) {
                lred(u - 1, v - 1) -= 1;
                lred(v - 1, u - 1) -= 1;
            }
        }
        RatMat gram = *rat_inverse(lred);
        double g11 = gram(0, 0).convert_to<double>();
        u11 = std::sqrt(g11);
        if (rank == 2) {
            double g12 = gram(0, 1).convert_to<double>();
            double g22 = gram(1, 1).convert_to<double>();
            u12 = g12 / u11;
            u22 = std::sqrt(g22 - u12 * u12);
        }
    }
    auto project = [&](const RatVV& h) {
        double a1 = rank >= 1 ? h[1].convert_to<double>() : 0.0;
        double a2 = rank >= 2 ? h[2].convert_to<double>() : 0.0;
        return Pt{u11 * a1 + u12 * a2, rank >= 2 ? u22 * a2 : 0.0};
    };

    Int window;
    if (window_opt) {
        window = *window_opt;
    } else {
        // invert the projection at the bbox corners for a covering window
        double amax = 0;
        for (double x : {bbox.x0, bbox.x1})
            for (double y : {bbox.y0, bbox.y1}) {
                double a2 = rank >= 2 ? y / u22 : 0.0;
                double a1 = (x - u12 * a2) / u11;
                amax = std::max(amax, std::max(std::abs(a1), std::abs(a2)));
            }
        RatVV synth = RatVV::Zero(n);
        Rat val(static_cast<Int>(std::ceil(amax)) + 1);
        Rat total = 0;
        for (int v = 1; v < n; ++v) {
            synth[v] = val;
            total += val;
        }
        synth[0] = -total;
        window = suggested_window(g, ctx.ell(), synth);
    }

    // enumerate tiles in lexicographic f order
    IntVV f = IntVV::Zero(n);
    for (int v = 1; v < n; ++v) f[v] = -window;
    bool more = rank > 0;
    std::string polys, labels, nodes;
    while (more) {
        bool ok = true;
        Tile t;
        try {
            t = build_tile(ctx, f);
        } catch (const NotATileError&) {
            ok = false;
        }
        if (ok) {
            std::vector<Pt> pts;
            for (const RatVV& img : t.geom->vertex_images) {
                RatVV h = t.center + img;
                Pt p = project(h);
                pts.push_back({p.x, -p.y});  // svg y grows downward
            }
            BBox flipped{bbox.x0, -bbox.y1, bbox.x1, -bbox.y0};
            if (rank == 1) {
                double lo = std::min(pts[0].x, pts[1].x), hi = std::max(pts[0].x, pts[1].x);
                if (hi >= bbox.x0 && lo <= bbox.x1 && 0 >= flipped.y0 && 0 <= flipped.y1) {
                    polys += "  <line x1=\"" + num(lo) + "\" y1=\"0\" x2=\"" + num(hi) +
                             "\" y2=\"0\" stroke=\"#333333\" stroke-width=\"0.02\"/>\n";
                    nodes += "  <circle cx=\"" + num(hi) +
                             "\" cy=\"0\" r=\"0.045\" fill=\"#a03333\"/>\n";
                    nodes += "  <circle cx=\"" + num(lo) +
                             "\" cy=\"0\" r=\"0.045\" fill=\"#a03333\"/>\n";
                    labels += "  <text x=\"" + num((lo + hi) / 2) +
                              "\" y=\"-0.1\" font-size=\"0.12\" text-anchor=\"middle\">" +
                              f_key(t.f) + "</text>\n";
                }
            } else {
                // convex order around the centroid
                Pt c{0, 0};
                for (const Pt& p : pts) {
                    c.x += p.x;
                    c.y += p.y;
                }
                c.x /= pts.size();
                c.y /= pts.size();
                std::sort(pts.begin(), pts.end(), [&](const Pt& a, const Pt& b) {
                    return std::atan2(a.y - c.y, a.x - c.x) < std::atan2(b.y - c.y, b.x - c.x);
                });
                if (polygon_meets_rect(pts, flipped)) {
                    std::string attr;
                    for (const Pt& p : pts) {
                        if (!attr.empty()) attr += " ";
                        attr += num(p.x) + "," + num(p.y);
                    }
                    polys += "  <polygon points=\"" + attr +
                             "\" fill=\"#efe9d8\" stroke=\"#4a4a8a\" stroke-width=\"0.03\"/>\n";
                    labels += "  <text x=\"" + num(c.x) + "\" y=\"" + num(c.y) +
                              "\" font-size=\"0.14\" text-anchor=\"middle\">" + f_key(t.f) +
                              "</text>\n";
                }
            }
        }
        // odometer
        int v = 1;
        while (v < n && f[v] == window) {
            f[v] = -window;
            ++v;
        }
        if (v >= n) {
            more = false;
        } else {
            ++f[v];
        }
    }
    return svg_wrap(polys + nodes + labels);
}

}  // namespace gvt
