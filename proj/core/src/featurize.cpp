#include "knotclass/featurize.hpp"

#include "knotclass/errors.hpp"

#include <cmath>

namespace knotclass {

ChannelPlane convolve3x3(const ChannelPlane& plane, const Kernel& k) {
    if (plane.width < 3 || plane.height < 3)
        throw PlaneTooSmall("convolve3x3 needs at least 3x3, got " +
                            std::to_string(plane.width) + "x" + std::to_string(plane.height));
    ChannelPlane out(plane.width - 2, plane.height - 2);
    for (int y = 0; y < out.height; ++y)
        for (int x = 0; x < out.width; ++x) {
            double acc = 0.0;
            for (int dy = 0; dy < 3; ++dy)
                for (int dx = 0; dx < 3; ++dx)
                    acc += k.matrix[dy][dx] * plane.at(x + dx, y + dy);
            out.at(x, y) = acc;
        }
    return out;
}

namespace {

// Balanced partition of len into n windows: the first (len mod n) windows
// get ceil(len/n) elements.
std::vector<std::pair<int, int>> balanced_windows(int len, int n) {
    std::vector<std::pair<int, int>> w;
    int big = len % n, small_sz = len / n;
    int pos = 0;
    for (int i = 0; i < n; ++i) {
        int sz = small_sz + (i < big ? 1 : 0);
        w.emplace_back(pos, pos + sz);
        pos += sz;
    }
    return w;
}

} // namespace

ChannelPlane softmax_pool(const ChannelPlane& plane, int target, double tau) {
    if (target < 2 || target > plane.width || target > plane.height)
        throw TargetTooLarge("cannot pool " + std::to_string(plane.width) + "x" +
                             std::to_string(plane.height) + " to " + std::to_string(target));
    auto wx = balanced_windows(plane.width, target);
    auto wy = balanced_windows(plane.height, target);
    ChannelPlane out(target, target);
    for (int j = 0; j < target; ++j)
        for (int i = 0; i < target; ++i) {
            double m = plane.at(wx[i].first, wy[j].first);
            for (int y = wy[j].first; y < wy[j].second; ++y)
                for (int x = wx[i].first; x < wx[i].second; ++x)
                    m = std::max(m, plane.at(x, y));
            double wsum = 0.0, acc = 0.0;
            for (int y = wy[j].first; y < wy[j].second; ++y)
                for (int x = wx[i].first; x < wx[i].second; ++x) {
                    double v = plane.at(x, y);
                    double w = std::exp((v - m) / tau);
                    wsum += w;
                    acc += w * v;
                }
            out.at(i, j) = acc / wsum;
        }
    return out;
}

PoolSchedule make_schedule(int s0, int cycles) {
    if (cycles < 1) throw InfeasibleSchedule("cycles must be >= 1");
    PoolSchedule sched;
    const double ls = std::log(double(s0)), l2 = std::log(2.0);
    for (int k = 1; k <= cycles; ++k)
        sched.targets.push_back(
            int(std::lround(std::exp(((cycles - k) * ls + k * l2) / cycles))));
    sched.targets.back() = 2;
    int prev = s0;
    for (int k = 0; k < cycles; ++k) {
        int t = sched.targets[k];
        int pre = prev - 2; // size after the convolution of this cycle
        bool more = k + 1 < cycles;
        if (t < 2 || (k > 0 && t >= sched.targets[k - 1]) || pre < t || (more && t < 3))
            throw InfeasibleSchedule("no feasible schedule from " + std::to_string(s0) +
                                     " in " + std::to_string(cycles) + " cycles");
        prev = t;
    }
    return sched;
}

std::array<double, 4> reduce_channel(const ChannelPlane& plane, const Kernel& k,
                                     const PoolSchedule& schedule, double tau) {
    ChannelPlane cur = plane;
    if (cur.width != cur.height) {
        int side = std::min(cur.width, cur.height);
        int ox = (cur.width - side) / 2, oy = (cur.height - side) / 2;
        ChannelPlane sq(side, side);
        for (int y = 0; y < side; ++y)
            for (int x = 0; x < side; ++x) sq.at(x, y) = cur.at(x + ox, y + oy);
        cur = std::move(sq);
    }
    for (int t : schedule.targets) {
        cur = convolve3x3(cur, k);
        cur = softmax_pool(cur, t, tau);
    }
    return {cur.at(0, 0), cur.at(1, 0), cur.at(0, 1), cur.at(1, 1)};
}

CoordinateSet extract_coordinates(const RgbImage& img, const KernelBank& bank,
                                  const PoolSchedule& schedule, double tau,
                                  const std::string& image_id) {
    CoordinateSet cs;
    cs.image_id = image_id;
    cs.schedule = schedule;
    cs.tau = tau;
    for (const auto& k : bank.kernels) {
        auto r = reduce_channel(img.r, k, schedule, tau);
        auto g = reduce_channel(img.g, k, schedule, tau);
        auto b = reduce_channel(img.b, k, schedule, tau);
        for (int j = 0; j < 4; ++j) {
            cs.points.push_back({r[j], g[j], b[j]});
            cs.provenance.push_back({k.name, j});
        }
    }
    return cs;
}

} // namespace knotclass
