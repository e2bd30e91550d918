#ifndef KNOTCLASS_ERRORS_HPP
#define KNOTCLASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotclass {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// imageio
struct FileNotFound : Error { using Error::Error; };
struct UnsupportedFormat : Error { using Error::Error; };
struct ChannelMismatch : Error { using Error::Error; };

// kernel bank
struct ParseError : Error { using Error::Error; };
struct DuplicateName : Error { using Error::Error; };
struct UnknownKernel : Error { using Error::Error; };

// featurize
struct PlaneTooSmall : Error { using Error::Error; };
struct TargetTooLarge : Error { using Error::Error; };
struct InfeasibleSchedule : Error { using Error::Error; };

// curve
struct EmptyInput : Error { using Error::Error; };

// knot
struct DegenerateProjection : Error { using Error::Error; };
struct NoValidDirection : Error { using Error::Error; };
struct CrossingCapExceeded : Error { using Error::Error; };

// classify
struct BadLabelSet : Error { using Error::Error; };
struct EmptyClass : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

// selection
struct EmptyCluster : Error { using Error::Error; };
struct NoFiniteD : Error { using Error::Error; };

struct IoError : Error { using Error::Error; };

} // namespace knotclass

#endif
