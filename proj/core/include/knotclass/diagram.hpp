#ifndef KNOTCLASS_DIAGRAM_HPP
#define KNOTCLASS_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace knotclass {

/// Unit 3-vector.
struct Direction {
    std::array<double, 3> v;
};

/// One crossing of a planar diagram. Edges are indexed by their starting
/// vertex along the curve; s and t are the intersection parameters in (0,1)
/// along the under and over edge respectively.
struct Crossing {
    int under_edge = 0;
    int over_edge = 0;
    double s = 0.0;
    double t = 0.0;
    int sign = 0; // +1 or -1
};

/// A visit of one crossing along the traversal.
struct Visit {
    int crossing = 0;
    bool over = false;
};

/// Combinatorial knot/link diagram: per-crossing signs plus, per component,
/// the cyclic sequence of crossing visits (a Gauss-code with signs).
/// Components with no visits are unknotted split components.
struct LinkCode {
    std::vector<int> signs;                   // indexed by crossing id
    std::vector<std::vector<Visit>> components;

    std::size_t crossing_count() const { return signs.size(); }
    /// Stable serialization with crossings renumbered in traversal order;
    /// used as memo key and in tests.
    std::string canonical_key() const;
};

/// Geometric knot diagram from a projection: the crossing list plus the
/// traversal encoding of the (single) curve component.
struct Diagram {
    std::vector<Crossing> crossings;
    int edge_count = 0;
    LinkCode code;
    Direction direction{{0.0, 0.0, 1.0}};
};

/// Closure of a braid word: entry +i / -i is a positive / negative crossing
/// of strands i and i+1 (1-based). Convenience for constructing reference
/// diagrams of named knots.
LinkCode braid_closure(const std::vector<int>& word, int strands);

} // namespace knotclass

#endif
