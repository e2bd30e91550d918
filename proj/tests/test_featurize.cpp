#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "knotclass/errors.hpp"
#include "knotclass/featurize.hpp"

#include <algorithm>
#include <cmath>

using namespace knotclass;

namespace {

ChannelPlane random_plane(int w, int h, std::uint64_t seed, double lo = -1, double hi = 1) {
    testutil::Rng rng(seed);
    ChannelPlane p(w, h);
    for (double& v : p.values) v = rng.uniform(lo, hi);
    return p;
}

/// Direct triple-loop correlation oracle.
ChannelPlane convolve_oracle(const ChannelPlane& in, const Kernel& k) {
    ChannelPlane out(in.width - 2, in.height - 2);
    for (int y = 0; y < out.height; ++y)
        for (int x = 0; x < out.width; ++x) {
            double acc = 0.0;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) acc += k.matrix[r][c] * in.at(x + c, y + r);
            out.at(x, y) = acc;
        }
    return out;
}

Kernel random_kernel(std::uint64_t seed) {
    testutil::Rng rng(seed);
    Kernel k;
    k.name = "rand";
    k.category = KernelCategory::blur;
    for (auto& row : k.matrix)
        for (double& v : row) v = rng.uniform(-2, 2);
    return k;
}

} // namespace

TEST_CASE("convolve3x3 matches the direct-summation oracle") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        int w = 3 + int(seed % 13), h = 3 + int((seed * 7) % 11);
        ChannelPlane plane = random_plane(w, h, 1000 + seed, -50, 50);
        Kernel k = random_kernel(seed);
        ChannelPlane got = convolve3x3(plane, k);
        ChannelPlane want = convolve_oracle(plane, k);
        REQUIRE(got.width == want.width);
        REQUIRE(got.height == want.height);
        for (std::size_t i = 0; i < want.values.size(); ++i)
            CHECK(got.values[i] == doctest::Approx(want.values[i]).epsilon(1e-12));
    }
}

TEST_CASE("convolve3x3 rejects undersized planes") {
    Kernel k = random_kernel(1);
    CHECK_THROWS_AS(convolve3x3(ChannelPlane(2, 5), k), PlaneTooSmall);
    CHECK_THROWS_AS(convolve3x3(ChannelPlane(5, 2), k), PlaneTooSmall);
    ChannelPlane min3 = random_plane(3, 3, 2);
    ChannelPlane out = convolve3x3(min3, k);
    CHECK(out.width == 1);
    CHECK(out.height == 1);
}

TEST_CASE("softmax_pool outputs stay within the window range") {
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        for (double tau : {0.05, 1.0, 100.0}) {
            ChannelPlane plane = random_plane(11, 11, seed, -300, 300);
            ChannelPlane pooled = softmax_pool(plane, 4, tau);
            REQUIRE(pooled.width == 4);
            REQUIRE(pooled.height == 4);
            double lo = *std::min_element(plane.values.begin(), plane.values.end());
            double hi = *std::max_element(plane.values.begin(), plane.values.end());
            for (double v : pooled.values) {
                CHECK(v >= lo - 1e-12);
                CHECK(v <= hi + 1e-12);
            }
        }
}

TEST_CASE("softmax_pool preserves constants exactly") {
    ChannelPlane plane(9, 9, 3.75);
    for (double tau : {0.1, 1.0, 10.0}) {
        ChannelPlane pooled = softmax_pool(plane, 3, tau);
        for (double v : pooled.values) CHECK(v == 3.75);
    }
}

TEST_CASE("softmax_pool approaches max as tau tends to zero and mean as it grows") {
    ChannelPlane plane(4, 4);
    for (int i = 0; i < 16; ++i) plane.values[i] = i; // distinct values 0..15
    // first 2x2 window holds {0, 1, 4, 5}
    ChannelPlane sharp = softmax_pool(plane, 2, 1e-3);
    CHECK(sharp.at(0, 0) == doctest::Approx(5.0).epsilon(1e-6));
    ChannelPlane smooth = softmax_pool(plane, 2, 1e8);
    CHECK(smooth.at(0, 0) == doctest::Approx(2.5).epsilon(1e-6));
}

TEST_CASE("softmax_pool is overflow-safe for large magnitudes") {
    ChannelPlane plane(4, 4, 0.0);
    plane.at(0, 0) = 5000.0;
    plane.at(1, 1) = -5000.0;
    ChannelPlane pooled = softmax_pool(plane, 2, 1.0);
    CHECK(std::isfinite(pooled.at(0, 0)));
    CHECK(pooled.at(0, 0) == doctest::Approx(5000.0).epsilon(1e-9));
}

TEST_CASE("softmax_pool rejects impossible targets") {
    CHECK_THROWS_AS(softmax_pool(ChannelPlane(4, 4), 5, 1.0), TargetTooLarge);
    CHECK_THROWS_AS(softmax_pool(ChannelPlane(4, 4), 1, 1.0), TargetTooLarge);
}

TEST_CASE("make_schedule reproduces the reference chain") {
    PoolSchedule s = make_schedule(950, 4);
    CHECK(s.targets == std::vector<int>{203, 44, 9, 2});
    // chain: 950 -conv-> 948 -pool-> 203 -conv-> 201 -pool-> 44
    //        -conv-> 42 -pool-> 9 -conv-> 7 -pool-> 2
    int size = 950;
    for (int t : s.targets) {
        size -= 2;
        CHECK(t <= size);
        size = t;
    }
    CHECK(size == 2);

    CHECK(make_schedule(64, 4).targets == std::vector<int>{27, 11, 5, 2});
    CHECK(make_schedule(4, 1).targets == std::vector<int>{2});
}

TEST_CASE("make_schedule rejects infeasible requests") {
    CHECK_THROWS_AS(make_schedule(4, 2), InfeasibleSchedule);
    CHECK_THROWS_AS(make_schedule(2, 1), InfeasibleSchedule);
    CHECK_THROWS_AS(make_schedule(950, 0), InfeasibleSchedule);
}

TEST_CASE("reduce_channel yields four row-major values") {
    ChannelPlane plane = random_plane(16, 16, 99);
    Kernel k = random_kernel(7);
    PoolSchedule s = make_schedule(16, 2);
    auto quad = reduce_channel(plane, k, s, 1.0);
    // oracle: run the chain manually
    ChannelPlane cur = plane;
    for (int t : s.targets) cur = softmax_pool(convolve3x3(cur, k), t, 1.0);
    REQUIRE(cur.width == 2);
    REQUIRE(cur.height == 2);
    CHECK(quad[0] == doctest::Approx(cur.at(0, 0)));
    CHECK(quad[1] == doctest::Approx(cur.at(1, 0)));
    CHECK(quad[2] == doctest::Approx(cur.at(0, 1)));
    CHECK(quad[3] == doctest::Approx(cur.at(1, 1)));
}

TEST_CASE("reduce_channel center-crops non-square planes") {
    // A plane whose left/right margins differ from the center must give the
    // same result as its explicit center crop.
    ChannelPlane wide = random_plane(20, 12, 4242);
    ChannelPlane crop(12, 12);
    for (int y = 0; y < 12; ++y)
        for (int x = 0; x < 12; ++x) crop.at(x, y) = wide.at(x + 4, y);
    Kernel k = random_kernel(3);
    PoolSchedule s = make_schedule(12, 2);
    CHECK(reduce_channel(wide, k, s, 1.0) == reduce_channel(crop, k, s, 1.0));
}

TEST_CASE("13-kernel featurization yields exactly 52 coordinates") {
    testutil::Rng rng(5);
    RgbImage img;
    img.width = img.height = 32;
    img.r = img.g = img.b = ChannelPlane(32, 32);
    for (int i = 0; i < 32 * 32; ++i) {
        img.r.values[i] = rng.uniform();
        img.g.values[i] = rng.uniform();
        img.b.values[i] = rng.uniform();
    }
    KernelBank bank13 = select(default_bank(), default_presets().at("default13"));
    REQUIRE(bank13.size() == 13);
    PoolSchedule s = make_schedule(32, 3);
    CoordinateSet cs = extract_coordinates(img, bank13, s, 1.0, "img#1");
    CHECK(cs.points.size() == 52);
    REQUIRE(cs.provenance.size() == 52);
    for (std::size_t i = 0; i < 52; ++i) {
        CHECK(cs.provenance[i].kernel == bank13.kernels[i / 4].name);
        CHECK(cs.provenance[i].flatten_index == int(i % 4));
    }
    CHECK(cs.image_id == "img#1");
    CHECK(cs.tau == 1.0);
}

TEST_CASE("extract_coordinates composes per-channel reductions") {
    testutil::Rng rng(6);
    RgbImage img;
    img.width = img.height = 16;
    img.r = random_plane(16, 16, 61);
    img.g = random_plane(16, 16, 62);
    img.b = random_plane(16, 16, 63);
    KernelBank bank = select(default_bank(), {"sobel_x", "blur_box"});
    PoolSchedule s = make_schedule(16, 2);
    CoordinateSet cs = extract_coordinates(img, bank, s, 2.0, "x");
    REQUIRE(cs.points.size() == 8);
    for (std::size_t k = 0; k < bank.size(); ++k) {
        auto qr = reduce_channel(img.r, bank.kernels[k], s, 2.0);
        auto qg = reduce_channel(img.g, bank.kernels[k], s, 2.0);
        auto qb = reduce_channel(img.b, bank.kernels[k], s, 2.0);
        for (int j = 0; j < 4; ++j) {
            CHECK(cs.points[4 * k + j][0] == doctest::Approx(qr[j]));
            CHECK(cs.points[4 * k + j][1] == doctest::Approx(qg[j]));
            CHECK(cs.points[4 * k + j][2] == doctest::Approx(qb[j]));
        }
    }
}
