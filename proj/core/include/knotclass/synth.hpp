#ifndef KNOTCLASS_SYNTH_HPP
#define KNOTCLASS_SYNTH_HPP

#include "knotclass/image.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace knotclass {

/// Parameters of the synthetic two-class corpus: bright quasi-parallel
/// ridges on a dark background; the "fracture" class interrupts each ridge
/// with a dark vertical gap.
struct SynthParams {
    int count_per_class = 10;
    int side = 64;
    int ridges = 4;
    int gap_min = 3; // pixels
    int gap_max = 6;
    double noise = 4.0; // grayscale units
    double wiggle = 1.0; // ridge undulation amplitude factor; 0 = straight ridges
    std::uint64_t seed = 1;
};

struct ManifestEntry {
    std::string filename; // relative to the output directory
    std::string label;
};

/// Generate one image pair deterministically; both classes share the base
/// image, so gap width 0 yields pixel-identical classes.
std::pair<GrayImage, GrayImage> synth_pair(const SynthParams& p, int index);

/// Write PNGs into <outdir>/no_fracture and <outdir>/fracture plus
/// <outdir>/manifest.csv; returns the manifest.
std::vector<ManifestEntry> synth_dataset(const SynthParams& p, const std::string& outdir);

void write_manifest(const std::vector<ManifestEntry>& entries, const std::string& path);
std::vector<ManifestEntry> read_manifest(const std::string& path);

} // namespace knotclass

#endif
