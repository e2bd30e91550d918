#ifndef KNOTCLASS_CONFIG_HPP
#define KNOTCLASS_CONFIG_HPP

#include "knotclass/classify.hpp"
#include "knotclass/knot.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace knotclass {

/// Pipeline configuration: one plain-text "key = value" file, with CLI
/// flags taking precedence.
struct Config {
    std::string kernel_asset = "core/data/kernels.txt";
    std::string lut_asset = "core/data/nipy_spectral.txt";
    std::string knot_table = "core/data/knots.txt";
    std::string subset = "default13"; // preset name; "all" disables selection
    int cycles = 4;
    double tau = 1.0;
    int samples = kDefaultDirectionSamples;
    int crossing_cap = kDefaultCrossingCap;
    int side = 64; // square input side; images are center-cropped to it
    // "image_id" (default) or a fixed decimal seed
    std::string jitter_seed_policy = "image_id";
    ScoringPolicy scoring = ScoringPolicy::count_as_negative;
    PrecisionMode precision_mode = PrecisionMode::types;

    std::optional<std::uint64_t> fixed_jitter_seed() const;
    void validate() const;
};

Config load_config(const std::string& path);

} // namespace knotclass

#endif
