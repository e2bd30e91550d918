#ifndef KNOTCLASS_TESTS_HELPERS_HPP
#define KNOTCLASS_TESTS_HELPERS_HPP

#include "knotclass/curve.hpp"
#include "knotclass/diagram.hpp"
#include "knotclass/knot.hpp"
#include "knotclass/laurent.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace testutil {

/// splitmix64; deterministic across platforms.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) / double(1ULL << 53); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline knotclass::ClosedPolyline random_polygon(int vertices, std::uint64_t seed) {
    Rng rng(seed);
    knotclass::ClosedPolyline c;
    c.image_id = "random#" + std::to_string(seed);
    for (int i = 0; i < vertices; ++i)
        c.vertices.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    return c;
}

/// Polygonal trefoil sampled from (sin t + 2 sin 2t, cos t - 2 cos 2t, sin 3t).
/// The phase offset avoids the degenerate symmetric placement at offset 0.
inline knotclass::ClosedPolyline parametric_trefoil(int vertices = 12,
                                                    double offset = 0.3,
                                                    bool mirrored = false) {
    knotclass::ClosedPolyline c;
    c.image_id = mirrored ? "trefoil-mirror" : "trefoil";
    for (int i = 0; i < vertices; ++i) {
        double t = offset + 2.0 * M_PI * i / vertices;
        double x = std::sin(t) + 2.0 * std::sin(2.0 * t);
        c.vertices.push_back({mirrored ? -x : x, std::cos(t) - 2.0 * std::cos(2.0 * t),
                              std::sin(3.0 * t)});
    }
    return c;
}

/// Random rotation (from a random unit quaternion), positive scaling, and
/// translation applied to every vertex.
inline knotclass::ClosedPolyline random_rigid_motion(const knotclass::ClosedPolyline& in,
                                                     std::uint64_t seed) {
    Rng rng(seed);
    double q[4];
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& qi : q) {
            qi = rng.uniform(-1, 1);
            norm += qi * qi;
        }
    } while (norm < 1e-6);
    norm = std::sqrt(norm);
    for (double& qi : q) qi /= norm;
    const double w = q[0], x = q[1], y = q[2], z = q[3];
    const double rot[3][3] = {
        {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
        {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
        {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)},
    };
    double scale = rng.uniform(0.2, 5.0);
    double shift[3] = {rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};

    knotclass::ClosedPolyline out = in;
    for (auto& v : out.vertices) {
        double r[3];
        for (int i = 0; i < 3; ++i)
            r[i] = scale * (rot[i][0] * v[0] + rot[i][1] * v[1] + rot[i][2] * v[2]) + shift[i];
        v = {r[0], r[1], r[2]};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Independent HOMFLY oracle: plain skein expansion on Gauss codes with no
// memoization, no kink reduction, and the opposite pivot rule (it resolves
// the LAST badly-met crossing and aims at ascending rather than descending
// diagrams). Exponential; intended for small diagrams only.
// ---------------------------------------------------------------------------

namespace oracle_detail {

using knotclass::LaurentPoly;
using knotclass::LinkCode;
using knotclass::Visit;

inline LaurentPoly delta_pow(int m) {
    // ((a^-1 - a)/z)^m
    LaurentPoly d = LaurentPoly::monomial(-1, -1, 1) - LaurentPoly::monomial(1, -1, 1);
    LaurentPoly out = LaurentPoly::one();
    for (int i = 0; i < m; ++i) out = out * d;
    return out;
}

/// Position of a visit in the global traversal (components in index order).
struct Pos {
    std::size_t comp, idx;
};

/// The last crossing whose first global visit is an over-visit, or -1 when
/// the diagram is ascending (every crossing met first from below).
inline int last_bad_crossing(const LinkCode& c) {
    std::vector<int> seen(c.signs.size(), 0);
    int bad = -1;
    for (const auto& comp : c.components)
        for (const auto& v : comp) {
            if (!seen[v.crossing]) {
                seen[v.crossing] = 1;
                if (v.over) bad = v.crossing;
            }
        }
    return bad;
}

inline void find_visits(const LinkCode& c, int crossing, Pos& first, Pos& second) {
    bool have_first = false;
    for (std::size_t ci = 0; ci < c.components.size(); ++ci)
        for (std::size_t i = 0; i < c.components[ci].size(); ++i)
            if (c.components[ci][i].crossing == crossing) {
                if (!have_first) {
                    first = {ci, i};
                    have_first = true;
                } else {
                    second = {ci, i};
                    return;
                }
            }
}

inline LinkCode switched(const LinkCode& c, int crossing) {
    LinkCode out = c;
    out.signs[crossing] = -out.signs[crossing];
    for (auto& comp : out.components)
        for (auto& v : comp)
            if (v.crossing == crossing) v.over = !v.over;
    return out;
}

/// Remove a crossing id and renumber the rest densely.
inline void drop_crossing(LinkCode& c, int crossing) {
    std::vector<int> remap(c.signs.size(), -1);
    std::vector<int> signs;
    for (std::size_t i = 0; i < c.signs.size(); ++i)
        if (int(i) != crossing) {
            remap[i] = int(signs.size());
            signs.push_back(c.signs[i]);
        }
    c.signs = std::move(signs);
    for (auto& comp : c.components)
        for (auto& v : comp) v.crossing = remap[v.crossing];
}

/// Oriented smoothing: split when both visits share a component, merge
/// otherwise.
inline LinkCode smoothed(const LinkCode& c, int crossing) {
    Pos p1{}, p2{};
    find_visits(c, crossing, p1, p2);
    LinkCode out;
    out.signs = c.signs;
    if (p1.comp == p2.comp) {
        const auto& comp = c.components[p1.comp];
        std::vector<Visit> first_part, second_part;
        for (std::size_t i = p1.idx + 1; i < p2.idx; ++i) first_part.push_back(comp[i]);
        for (std::size_t i = p2.idx + 1; i < comp.size(); ++i) second_part.push_back(comp[i]);
        for (std::size_t i = 0; i < p1.idx; ++i) second_part.push_back(comp[i]);
        for (std::size_t ci = 0; ci < c.components.size(); ++ci)
            if (ci != p1.comp) out.components.push_back(c.components[ci]);
        out.components.push_back(std::move(first_part));
        out.components.push_back(std::move(second_part));
    } else {
        const auto& a = c.components[p1.comp];
        const auto& b = c.components[p2.comp];
        std::vector<Visit> merged;
        for (std::size_t i = 0; i < p1.idx; ++i) merged.push_back(a[i]);
        for (std::size_t i = p2.idx + 1; i < b.size(); ++i) merged.push_back(b[i]);
        for (std::size_t i = 0; i < p2.idx; ++i) merged.push_back(b[i]);
        for (std::size_t i = p1.idx + 1; i < a.size(); ++i) merged.push_back(a[i]);
        for (std::size_t ci = 0; ci < c.components.size(); ++ci)
            if (ci != p1.comp && ci != p2.comp) out.components.push_back(c.components[ci]);
        out.components.push_back(std::move(merged));
    }
    drop_crossing(out, crossing);
    return out;
}

inline LaurentPoly eval(const LinkCode& c) {
    int bad = last_bad_crossing(c);
    if (bad < 0) // ascending diagram: an unlink of its components
        return delta_pow(int(c.components.size()) - 1);
    LinkCode sw = switched(c, bad);
    LinkCode sm = smoothed(c, bad);
    if (c.signs[bad] > 0) // P(L+) = a^2 P(L-) + a z P(L0)
        return eval(sw).shifted(2, 0) + eval(sm).shifted(1, 1);
    // P(L-) = a^-2 P(L+) - a^-1 z P(L0)
    return eval(sw).shifted(-2, 0) - eval(sm).shifted(-1, 1);
}

} // namespace oracle_detail

/// HOMFLY by unmemoized exhaustive skein expansion (independent of the
/// library's engine except for Laurent arithmetic).
inline knotclass::LaurentPoly homfly_oracle(const knotclass::LinkCode& code) {
    return oracle_detail::eval(code);
}

} // namespace testutil

#endif
