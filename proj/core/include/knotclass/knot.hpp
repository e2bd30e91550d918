#ifndef KNOTCLASS_KNOT_HPP
#define KNOTCLASS_KNOT_HPP

#include "knotclass/curve.hpp"
#include "knotclass/diagram.hpp"
#include "knotclass/laurent.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace knotclass {

using HomflyPolynomial = LaurentPoly;

/// Relative tolerance (w.r.t. projected diameter) below which a projection
/// counts as degenerate.
inline constexpr double kProjectionEps = 1e-9;

inline constexpr int kDefaultCrossingCap = 20;
inline constexpr int kDefaultDirectionSamples = 25;

/// Orthogonal projection onto the plane normal to d. Crossings between all
/// non-adjacent edge pairs; over/under by signed depth along d; sign by the
/// right-hand convention on the oriented strands. Throws
/// DegenerateProjection on triple points, edges projecting to (near) zero
/// length, crossings at vertices, or unresolvable depth.
Diagram project(const ClosedPolyline& curve, const Direction& d);

/// The i-th of n deterministic Fibonacci-sphere directions.
Direction fibonacci_direction(int i, int n);

/// Direction with the fewest crossings among `samples` Fibonacci-sphere
/// candidates; ties broken by sample index. Throws NoValidDirection.
Direction choose_direction(const ClosedPolyline& curve, int samples);

/// HOMFLY polynomial of a diagram via the skein relation
///   a^-1 P(L+) - a P(L-) = z P(L0),  P(unknot) = 1,
/// computed by recursive crossing switches and smoothings toward descending
/// diagrams, memoized on canonical diagram codes. Throws CrossingCapExceeded
/// when the diagram has more than `cap` crossings.
HomflyPolynomial homfly(const LinkCode& code, int cap = kDefaultCrossingCap);
HomflyPolynomial homfly(const Diagram& diag, int cap = kDefaultCrossingCap);

/// Lookup table canonical polynomial string -> knot name.
struct KnotTable {
    std::map<std::string, std::string> entries;
};

inline constexpr const char* kUnknownKnot = "UNKNOWN";

/// Load the knot-table asset: lines "canonical_polynomial<TAB>name".
KnotTable load_knot_table(const std::string& path);

/// Exact lookup by canonical string; "UNKNOWN" on a miss.
std::string knot_name(const HomflyPolynomial& p, const KnotTable& table);

struct InvariantResult {
    HomflyPolynomial polynomial;
    Direction direction{{0.0, 0.0, 1.0}};
    int crossing_count = 0;
};

/// Full invariant of a closed curve: degenerate curves map to P = 1;
/// otherwise the best (fewest-crossing) valid projection direction is used,
/// advancing past degenerate samples.
InvariantResult curve_invariant(const ClosedPolyline& curve,
                                int samples = kDefaultDirectionSamples,
                                int cap = kDefaultCrossingCap);

} // namespace knotclass

#endif
