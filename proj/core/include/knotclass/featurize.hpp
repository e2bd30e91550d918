#ifndef KNOTCLASS_FEATURIZE_HPP
#define KNOTCLASS_FEATURIZE_HPP

#include "knotclass/image.hpp"
#include "knotclass/kernels.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace knotclass {

/// Per-cycle pooling targets: strictly decreasing, ending at exactly 2.
struct PoolSchedule {
    std::vector<int> targets;

    int cycles() const { return int(targets.size()); }
};

/// The 52-coordinate (4 per kernel) output of featurization.
struct CoordinateSet {
    std::string image_id;
    std::vector<std::array<double, 3>> points; // (x_R, x_G, x_B)
    struct Provenance {
        std::string kernel;
        int flatten_index; // 0..3, row-major
    };
    std::vector<Provenance> provenance;
    PoolSchedule schedule;
    double tau = 1.0;
};

/// Valid (no padding) 3x3 correlation, stride 1. Output is (w-2) x (h-2).
ChannelPlane convolve3x3(const ChannelPlane& plane, const Kernel& k);

/// Downsample to target x target windows (balanced partition per axis);
/// each output is the softmax(x/tau)-weighted average of its window.
ChannelPlane softmax_pool(const ChannelPlane& plane, int target, double tau);

/// Geometric interpolation from s0 down to 2 over `cycles` steps:
/// t_k = round(exp(((N-k)*ln s0 + k*ln 2)/N)). Throws InfeasibleSchedule
/// when the convolve/pool chain cannot reach 2x2.
PoolSchedule make_schedule(int s0, int cycles);

/// Alternate convolve3x3 and softmax_pool down to 2x2; returns the four
/// values row-major. Non-square planes are center-cropped first.
std::array<double, 4> reduce_channel(const ChannelPlane& plane, const Kernel& k,
                                     const PoolSchedule& schedule, double tau);

/// Reduce all three channels with each kernel of the bank in bank order;
/// point j of kernel k is (R_j, G_j, B_j).
CoordinateSet extract_coordinates(const RgbImage& img, const KernelBank& bank,
                                  const PoolSchedule& schedule, double tau,
                                  const std::string& image_id);

} // namespace knotclass

#endif
