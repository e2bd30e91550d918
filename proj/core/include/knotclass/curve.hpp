#ifndef KNOTCLASS_CURVE_HPP
#define KNOTCLASS_CURVE_HPP

#include "knotclass/featurize.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotclass {

using Point3 = std::array<double, 3>;

/// Closed piecewise-linear curve in RGB space. If degenerate_flag is set
/// the curve collapsed to fewer than 3 distinct vertices and its invariant
/// is the unknot.
struct ClosedPolyline {
    std::string image_id;
    std::vector<Point3> vertices;
    std::uint64_t jitter_seed = 0;
    bool degenerate_flag = false;
};

/// Vertices in coordinate order, closed cyclically. Consecutive duplicates
/// (cyclic distance <= 1e-9) are merged; remaining exact coincidences are
/// broken by a deterministic jitter of at most 1e-6 per axis, seeded from
/// image_id unless a fixed seed is supplied. Throws EmptyInput.
ClosedPolyline build_curve(const CoordinateSet& coords,
                           std::optional<std::uint64_t> seed_override = std::nullopt);

/// FNV-1a hash used for the jitter seed; stable across platforms.
std::uint64_t stable_hash(const std::string& s);

} // namespace knotclass

#endif
