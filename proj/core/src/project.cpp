#include "knotclass/errors.hpp"
#include "knotclass/knot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace knotclass {

namespace {

struct Vec2 {
    double x, y;
};

double cross2(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
Vec2 sub(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
double norm2(Vec2 a) { return std::hypot(a.x, a.y); }

std::array<double, 3> normalize(std::array<double, 3> v) {
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / n, v[1] / n, v[2] / n};
}

double dot3(const std::array<double, 3>& a, const Point3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> cross3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

} // namespace

Diagram project(const ClosedPolyline& curve, const Direction& dir) {
    if (curve.degenerate_flag)
        throw DegenerateProjection("curve is degenerate");
    const auto d = normalize(dir.v);
    // Right-handed frame (u, v, d).
    std::array<double, 3> e =
        std::fabs(d[0]) < 0.9 ? std::array<double, 3>{1, 0, 0} : std::array<double, 3>{0, 1, 0};
    double ed = e[0] * d[0] + e[1] * d[1] + e[2] * d[2];
    std::array<double, 3> u =
        normalize({e[0] - ed * d[0], e[1] - ed * d[1], e[2] - ed * d[2]});
    std::array<double, 3> v = cross3(d, u);

    const int n = int(curve.vertices.size());
    std::vector<Vec2> p(n);
    std::vector<double> depth(n);
    for (int i = 0; i < n; ++i) {
        p[i] = {dot3(u, curve.vertices[i]), dot3(v, curve.vertices[i])};
        depth[i] = dot3(d, curve.vertices[i]);
    }

    double xmin = p[0].x, xmax = p[0].x, ymin = p[0].y, ymax = p[0].y;
    for (const auto& q : p) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    const double diam = std::hypot(xmax - xmin, ymax - ymin);
    const double eps = kProjectionEps * diam;
    if (!(diam > 0.0))
        throw DegenerateProjection("curve projects to a point");

    for (int i = 0; i < n; ++i) {
        Vec2 edge = sub(p[(i + 1) % n], p[i]);
        if (norm2(edge) <= eps)
            throw DegenerateProjection("edge " + std::to_string(i) +
                                       " projects to (near) zero length");
    }

    Diagram diag;
    diag.edge_count = n;
    diag.direction.v = d;

    struct Hit {
        double param;
        int crossing;
        bool over;
    };
    std::vector<std::vector<Hit>> per_edge(n);
    std::vector<Vec2> crossing_points;

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            Vec2 a = p[i], b = p[(i + 1) % n];
            Vec2 c = p[j], e2 = p[(j + 1) % n];
            Vec2 ab = sub(b, a), ce = sub(e2, c);
            double denom = cross2(ab, ce);
            double la = norm2(ab), lc = norm2(ce);
            if (std::fabs(denom) <= 1e-14 * la * lc) {
                // (Near-)parallel: degenerate only if the segments nearly touch.
                auto seg_point_d = [](Vec2 a0, Vec2 a1, Vec2 q) {
                    Vec2 e = sub(a1, a0);
                    double t = ((q.x - a0.x) * e.x + (q.y - a0.y) * e.y) /
                               (e.x * e.x + e.y * e.y);
                    t = std::clamp(t, 0.0, 1.0);
                    return std::hypot(q.x - (a0.x + t * e.x), q.y - (a0.y + t * e.y));
                };
                double dmin = std::min(std::min(seg_point_d(a, b, c), seg_point_d(a, b, e2)),
                                       std::min(seg_point_d(c, e2, a), seg_point_d(c, e2, b)));
                if (dmin <= eps)
                    throw DegenerateProjection("edges " + std::to_string(i) + " and " +
                                               std::to_string(j) + " are (near) collinear");
                continue;
            }
            double s = cross2(sub(c, a), ce) / denom;
            double t = cross2(sub(c, a), ab) / denom;
            double mi = eps / la, mj = eps / lc;
            if (s < -mi || s > 1 + mi || t < -mj || t > 1 + mj) continue;
            if (s < mi || s > 1 - mi || t < mj || t > 1 - mj)
                throw DegenerateProjection("crossing of edges " + std::to_string(i) + "/" +
                                           std::to_string(j) + " lies at a vertex");
            double hi = depth[i] + s * (depth[(i + 1) % n] - depth[i]);
            double hj = depth[j] + t * (depth[(j + 1) % n] - depth[j]);
            if (std::fabs(hi - hj) <= eps)
                throw DegenerateProjection("depth of edges " + std::to_string(i) + "/" +
                                           std::to_string(j) + " cannot be resolved");
            bool i_over = hi > hj;
            int over_edge = i_over ? i : j;
            int under_edge = i_over ? j : i;
            Vec2 od = i_over ? ab : ce;
            Vec2 ud = i_over ? ce : ab;
            int sign = cross2(od, ud) > 0 ? +1 : -1;
            int cid = int(diag.crossings.size());
            diag.crossings.push_back(
                {under_edge, over_edge, i_over ? t : s, i_over ? s : t, sign});
            crossing_points.push_back({a.x + s * ab.x, a.y + s * ab.y});
            per_edge[i].push_back({s, cid, i_over});
            per_edge[j].push_back({t, cid, !i_over});
        }
    }

    for (std::size_t i = 0; i < crossing_points.size(); ++i)
        for (std::size_t j = i + 1; j < crossing_points.size(); ++j)
            if (norm2(sub(crossing_points[i], crossing_points[j])) <= eps)
                throw DegenerateProjection("multiple crossings coincide (triple point)");

    LinkCode code;
    code.components.emplace_back();
    for (int i = 0; i < n; ++i) {
        auto& hits = per_edge[i];
        std::sort(hits.begin(), hits.end(),
                  [](const Hit& a, const Hit& b) { return a.param < b.param; });
        for (const auto& h : hits) code.components[0].push_back({h.crossing, h.over});
    }
    for (const auto& c : diag.crossings) code.signs.push_back(c.sign);
    diag.code = std::move(code);
    return diag;
}

Direction fibonacci_direction(int i, int n) {
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    double z = 1.0 - 2.0 * (i + 0.5) / n;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = golden * i;
    return Direction{{r * std::cos(phi), r * std::sin(phi), z}};
}

Direction choose_direction(const ClosedPolyline& curve, int samples) {
    if (samples < 1) throw Error("choose_direction: samples must be >= 1");
    int best = -1;
    std::size_t best_count = 0;
    for (int i = 0; i < samples; ++i) {
        try {
            Diagram d = project(curve, fibonacci_direction(i, samples));
            if (best < 0 || d.crossings.size() < best_count) {
                best = i;
                best_count = d.crossings.size();
            }
        } catch (const DegenerateProjection&) {
        }
    }
    if (best < 0)
        throw NoValidDirection("all " + std::to_string(samples) +
                               " sampled directions are degenerate");
    return fibonacci_direction(best, samples);
}

InvariantResult curve_invariant(const ClosedPolyline& curve, int samples, int cap) {
    InvariantResult res;
    if (curve.degenerate_flag) {
        res.polynomial = LaurentPoly::one();
        return res;
    }
    bool have = false;
    Diagram best;
    int best_idx = -1;
    for (int i = 0; i < samples; ++i) {
        try {
            Diagram d = project(curve, fibonacci_direction(i, samples));
            if (!have || d.crossings.size() < best.crossings.size()) {
                best = std::move(d);
                best_idx = i;
                have = true;
            }
        } catch (const DegenerateProjection&) {
        }
    }
    (void)best_idx;
    if (!have)
        throw NoValidDirection("all " + std::to_string(samples) +
                               " sampled directions are degenerate");
    res.polynomial = homfly(best, cap);
    res.direction = best.direction;
    res.crossing_count = int(best.crossings.size());
    return res;
}

} // namespace knotclass
