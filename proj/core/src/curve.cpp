#include "knotclass/curve.hpp"

#include "knotclass/errors.hpp"

#include <cmath>

namespace knotclass {

namespace {

constexpr double kMergeEps = 1e-9;
constexpr double kJitterAmp = 1e-6;

double dist(const Point3& a, const Point3& b) {
    double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// splitmix64; fixed across platforms so jittered curves are reproducible.
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform_pm1(std::uint64_t& state) {
    return double(splitmix64(state) >> 11) / double(1ULL << 53) * 2.0 - 1.0;
}

} // namespace

std::uint64_t stable_hash(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ClosedPolyline build_curve(const CoordinateSet& coords,
                           std::optional<std::uint64_t> seed_override) {
    if (coords.points.empty()) throw EmptyInput("no coordinates for " + coords.image_id);

    ClosedPolyline curve;
    curve.image_id = coords.image_id;
    curve.jitter_seed = seed_override ? *seed_override : stable_hash(coords.image_id);

    // Merge cyclically-consecutive duplicates.
    std::vector<Point3> merged;
    for (const auto& p : coords.points) {
        if (!merged.empty() && dist(merged.back(), p) <= kMergeEps) continue;
        merged.push_back(p);
    }
    while (merged.size() > 1 && dist(merged.front(), merged.back()) <= kMergeEps)
        merged.pop_back();

    if (merged.size() < 3) {
        curve.vertices = std::move(merged);
        curve.degenerate_flag = true;
        return curve;
    }

    // Break remaining exact coincidences with a seeded jitter.
    std::uint64_t rng = curve.jitter_seed;
    for (std::size_t i = 0; i < merged.size(); ++i) {
        bool clash = false;
        for (std::size_t j = 0; j < i && !clash; ++j)
            if (dist(merged[i], merged[j]) == 0.0) clash = true;
        if (!clash) continue;
        Point3 p = merged[i];
        do {
            merged[i] = {p[0] + kJitterAmp * uniform_pm1(rng),
                         p[1] + kJitterAmp * uniform_pm1(rng),
                         p[2] + kJitterAmp * uniform_pm1(rng)};
            clash = false;
            for (std::size_t j = 0; j < merged.size() && !clash; ++j)
                if (j != i && dist(merged[i], merged[j]) == 0.0) clash = true;
            std::size_t prev = (i + merged.size() - 1) % merged.size();
            std::size_t next = (i + 1) % merged.size();
            if (dist(merged[i], merged[prev]) <= kMergeEps ||
                dist(merged[i], merged[next]) <= kMergeEps)
                clash = true;
        } while (clash);
    }

    curve.vertices = std::move(merged);
    return curve;
}

} // namespace knotclass
