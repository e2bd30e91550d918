#include "knotclass/selection.hpp"

#include "knotclass/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace knotclass {

ClusterStats cluster_stats(const std::vector<Point3>& coords, const std::string& kernel) {
    if (coords.empty()) throw EmptyCluster("no coordinates for kernel '" + kernel + "'");
    ClusterStats s;
    s.kernel = kernel;
    s.count = int(coords.size());
    for (const auto& p : coords)
        for (int i = 0; i < 3; ++i) s.centroid[i] += p[i];
    for (int i = 0; i < 3; ++i) s.centroid[i] /= s.count;
    for (const auto& p : coords) {
        double dx = p[0] - s.centroid[0], dy = p[1] - s.centroid[1], dz = p[2] - s.centroid[2];
        s.spread += std::sqrt(dx * dx + dy * dy + dz * dz);
    }
    return s;
}

double d_metric(const ClusterStats& a, const ClusterStats& b) {
    double dx = a.centroid[0] - b.centroid[0];
    double dy = a.centroid[1] - b.centroid[1];
    double dz = a.centroid[2] - b.centroid[2];
    double num = std::sqrt(dx * dx + dy * dy + dz * dz);
    double den = a.spread + b.spread;
    if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num / den;
}

std::vector<DRecord> d_records(const std::vector<CoordinateSet>& corpus, int cycles) {
    // Pool all points of each kernel across the corpus, preserving the
    // kernel order of the first coordinate set.
    std::vector<std::string> order;
    std::map<std::string, std::vector<Point3>> by_kernel;
    for (const auto& cs : corpus)
        for (std::size_t i = 0; i < cs.points.size(); ++i) {
            const auto& kname = cs.provenance[i].kernel;
            if (!by_kernel.count(kname)) order.push_back(kname);
            by_kernel[kname].push_back(cs.points[i]);
        }
    std::vector<ClusterStats> stats;
    for (const auto& k : order) stats.push_back(cluster_stats(by_kernel[k], k));
    std::vector<DRecord> records;
    for (std::size_t i = 0; i < stats.size(); ++i)
        for (std::size_t j = i + 1; j < stats.size(); ++j)
            records.push_back(
                {stats[i].kernel, stats[j].kernel, cycles, d_metric(stats[i], stats[j])});
    return records;
}

int select_cycles(const std::map<int, std::vector<CoordinateSet>>& corpus_by_cycles) {
    if (corpus_by_cycles.empty()) throw NoFiniteD("no candidate cycle counts");
    int best = 0;
    double best_median = -1.0;
    bool found = false;
    for (const auto& [cycles, corpus] : corpus_by_cycles) {
        std::vector<double> finite;
        for (const auto& rec : d_records(corpus, cycles))
            if (std::isfinite(rec.d)) finite.push_back(rec.d);
        if (finite.empty()) continue;
        std::sort(finite.begin(), finite.end());
        std::size_t n = finite.size();
        double median =
            n % 2 ? finite[n / 2] : 0.5 * (finite[n / 2 - 1] + finite[n / 2]);
        if (!found || median > best_median) { // ties keep the smaller (first) candidate
            best = cycles;
            best_median = median;
            found = true;
        }
    }
    if (!found) throw NoFiniteD("no candidate produced a finite D value");
    return best;
}

namespace {

double mean_crossings(const std::vector<CoordinateSet>& full_sets,
                      const std::vector<std::size_t>& kernel_indices,
                      const SelectionConfig& cfg) {
    double total = 0.0;
    for (std::size_t i = 0; i < full_sets.size(); ++i) {
        const CoordinateSet& full = full_sets[i];
        // Kernels are featurized independently, so the coordinates of a
        // sub-bank are exactly the corresponding 4-point blocks of the
        // full-bank featurization.
        CoordinateSet cs;
        cs.image_id = full.image_id;
        cs.schedule = full.schedule;
        cs.tau = full.tau;
        for (std::size_t k : kernel_indices)
            for (std::size_t j = 4 * k; j < 4 * k + 4; ++j) {
                cs.points.push_back(full.points[j]);
                cs.provenance.push_back(full.provenance[j]);
            }
        ClosedPolyline curve = build_curve(cs);
        if (curve.degenerate_flag) continue; // counts as zero crossings
        int best = -1;
        for (int s = 0; s < cfg.samples; ++s) {
            try {
                Diagram d = project(curve, fibonacci_direction(s, cfg.samples));
                if (best < 0 || int(d.crossings.size()) < best) best = int(d.crossings.size());
            } catch (const DegenerateProjection&) {
            }
        }
        if (best < 0) {
            // No valid direction (e.g. a near-planar 4-point curve): score the
            // candidate at the worst case so the greedy search avoids it.
            std::size_t n = curve.vertices.size();
            total += double(n * (n - 1) / 2);
        } else {
            total += best;
        }
    }
    return total / double(full_sets.size());
}

} // namespace

KernelBank select_kernels(const std::vector<RgbImage>& corpus, const KernelBank& bank,
                          int target, const PoolSchedule& schedule,
                          const SelectionConfig& config) {
    if (target < 1 || target > int(bank.size()))
        throw Error("select_kernels: target out of range");
    std::vector<CoordinateSet> full_sets;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        full_sets.push_back(extract_coordinates(corpus[i], bank, schedule, config.tau,
                                                "select#" + std::to_string(i)));
    std::vector<std::size_t> chosen;
    for (int round = 0; round < target; ++round) {
        std::size_t best_index = bank.size();
        double best_mean = 0.0;
        for (std::size_t c = 0; c < bank.size(); ++c) {
            if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
            auto indices = chosen;
            indices.push_back(c);
            std::sort(indices.begin(), indices.end()); // keep bank order
            double m = mean_crossings(full_sets, indices, config);
            if (best_index == bank.size() || m < best_mean) { // bank order breaks ties
                best_index = c;
                best_mean = m;
            }
        }
        chosen.push_back(best_index);
    }
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::string> names;
    for (std::size_t k : chosen) names.push_back(bank.kernels[k].name);
    return select(bank, names);
}

void export_d_analysis(const std::vector<DRecord>& records, const std::string& path) {
    if (records.empty()) throw Error("export_d_analysis: no records");
    std::ostringstream os;
    os << "kernel,pair,cycles,D\n";
    for (const auto& r : records) {
        os << r.kernel_a << ',' << r.kernel_b << ',' << r.cycles << ',';
        if (std::isinf(r.d))
            os << "inf";
        else
            os << r.d;
        os << '\n';
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    out << os.str();
    if (!out) throw IoError("write failed: " + path);
}

} // namespace knotclass
