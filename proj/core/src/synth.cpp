#include "knotclass/synth.hpp"

#include "knotclass/curve.hpp" // stable_hash
#include "knotclass/errors.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace knotclass {

namespace {

struct Rng {
    std::uint64_t state;
    // splitmix64
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) / double(1ULL << 53); }
    int uniform_int(int lo, int hi) { // inclusive
        return lo + int(next() % std::uint64_t(hi - lo + 1));
    }
};

std::uint8_t clamp_byte(double v) {
    return std::uint8_t(v < 0 ? 0 : (v > 255 ? 255 : v + 0.5));
}

} // namespace

std::pair<GrayImage, GrayImage> synth_pair(const SynthParams& p, int index) {
    const int s = p.side;
    const double background = 30.0, bright = 200.0;
    const double sigma = double(s) / (4.0 * p.ridges);

    Rng base_rng{p.seed * 0x9e3779b97f4a7c15ULL + std::uint64_t(index)};
    std::vector<double> phase(p.ridges), amp(p.ridges);
    for (int r = 0; r < p.ridges; ++r) {
        phase[r] = base_rng.uniform() * 2.0 * M_PI;
        amp[r] = p.wiggle * sigma * (0.5 + base_rng.uniform());
    }

    GrayImage base;
    base.width = base.height = s;
    base.pixels.resize(std::size_t(s) * s);
    for (int y = 0; y < s; ++y)
        for (int x = 0; x < s; ++x) {
            double v = background;
            for (int r = 0; r < p.ridges; ++r) {
                double cy = (r + 0.5) * s / p.ridges +
                            amp[r] * std::sin(2.0 * M_PI * x / s + phase[r]);
                double d = (y - cy) / sigma;
                v += (bright - background) * std::exp(-0.5 * d * d);
            }
            v += (base_rng.uniform() * 2.0 - 1.0) * p.noise;
            base.pixels[std::size_t(y) * s + x] = clamp_byte(v);
        }

    // The fractured variant shares the base; gap draws are independent of
    // the base stream so both classes consume identical randomness.
    GrayImage fractured = base;
    Rng gap_rng{p.seed * 0xbf58476d1ce4e5b9ULL + std::uint64_t(index) + 1};
    for (int r = 0; r < p.ridges; ++r) {
        int w = p.gap_min == p.gap_max ? p.gap_min : gap_rng.uniform_int(p.gap_min, p.gap_max);
        int x0 = gap_rng.uniform_int(0, s - 1 - std::max(w, 1));
        double cy0 = (r + 0.5) * double(s) / p.ridges;
        int ylo = std::max(0, int(cy0 - amp[r] - 3 * sigma));
        int yhi = std::min(s - 1, int(cy0 + amp[r] + 3 * sigma));
        for (int y = ylo; y <= yhi; ++y)
            for (int x = x0; x < x0 + w; ++x)
                fractured.pixels[std::size_t(y) * s + x] = clamp_byte(background);
    }
    return {base, fractured};
}

std::vector<ManifestEntry> synth_dataset(const SynthParams& p, const std::string& outdir) {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(outdir) / "no_fracture");
    fs::create_directories(fs::path(outdir) / "fracture");
    std::vector<ManifestEntry> manifest;
    for (int i = 0; i < p.count_per_class; ++i) {
        auto [base, fractured] = synth_pair(p, i);
        std::ostringstream name;
        name.width(4);
        name.fill('0');
        name << i;
        std::string rel_n = "no_fracture/img_" + name.str() + ".png";
        std::string rel_f = "fracture/img_" + name.str() + ".png";
        save_gray(base, (fs::path(outdir) / rel_n).string());
        save_gray(fractured, (fs::path(outdir) / rel_f).string());
        manifest.push_back({rel_n, "no_fracture"});
        manifest.push_back({rel_f, "fracture"});
    }
    write_manifest(manifest, (fs::path(outdir) / "manifest.csv").string());
    return manifest;
}

void write_manifest(const std::vector<ManifestEntry>& entries, const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp);
        out << "filename,label\n";
        for (const auto& e : entries) out << e.filename << ',' << e.label << '\n';
    }
    std::filesystem::rename(tmp, path);
}

std::vector<ManifestEntry> read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("manifest not found: " + path);
    std::vector<ManifestEntry> entries;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto comma = line.find_last_of(',');
        if (comma == std::string::npos) throw ParseError(path + ": bad manifest line: " + line);
        entries.push_back({line.substr(0, comma), line.substr(comma + 1)});
    }
    return entries;
}

} // namespace knotclass
