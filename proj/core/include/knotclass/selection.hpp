#ifndef KNOTCLASS_SELECTION_HPP
#define KNOTCLASS_SELECTION_HPP

#include "knotclass/curve.hpp"
#include "knotclass/featurize.hpp"
#include "knotclass/knot.hpp"

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace knotclass {

struct ClusterStats {
    std::string kernel;
    Point3 centroid{0, 0, 0};
    double spread = 0.0; // sum of distances to the centroid
    int count = 0;
};

/// Cluster-separation value D of one kernel pair at one cycle count.
/// D = +infinity when both spreads are zero but the centroids differ.
struct DRecord {
    std::string kernel_a;
    std::string kernel_b;
    int cycles = 0;
    double d = 0.0;
};

ClusterStats cluster_stats(const std::vector<Point3>& coords, const std::string& kernel);

/// ||centroid_a - centroid_b|| / (spread_a + spread_b); 0/0 -> 0,
/// x/0 -> +infinity.
double d_metric(const ClusterStats& a, const ClusterStats& b);

/// Per-kernel clusters pooled over a featurized corpus, then D for every
/// kernel pair. Kernel order follows the first coordinate set's provenance.
std::vector<DRecord> d_records(const std::vector<CoordinateSet>& corpus, int cycles);

/// Candidate cycle count maximizing the median finite D over kernel pairs;
/// ties go to the smallest candidate. Throws NoFiniteD.
int select_cycles(const std::map<int, std::vector<CoordinateSet>>& corpus_by_cycles);

struct SelectionConfig {
    double tau = 1.0;
    int samples = kDefaultDirectionSamples;
};

/// Greedy forward selection of `target` kernels minimizing the corpus-mean
/// projected crossing count; ties broken by bank order.
KernelBank select_kernels(const std::vector<RgbImage>& corpus, const KernelBank& bank,
                          int target, const PoolSchedule& schedule,
                          const SelectionConfig& config = {});

/// CSV "kernel,pair,cycles,D"; +infinity rendered as "inf".
void export_d_analysis(const std::vector<DRecord>& records, const std::string& path);

} // namespace knotclass

#endif
