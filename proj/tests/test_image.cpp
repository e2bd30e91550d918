#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotclass/errors.hpp"
#include "knotclass/image.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace knotclass;

namespace {

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

GrayImage gradient_image(int w, int h) {
    GrayImage img;
    img.width = w;
    img.height = h;
    img.pixels.resize(std::size_t(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            img.pixels[std::size_t(y) * w + x] = std::uint8_t((x * 7 + y * 13) % 256);
    return img;
}

} // namespace

TEST_CASE("grayscale png round trip") {
    GrayImage img = gradient_image(33, 21);
    std::string path = tmp_path("knotclass_gray.png");
    save_gray(img, path);
    GrayImage back = load_gray(path);
    CHECK(back.width == img.width);
    CHECK(back.height == img.height);
    CHECK(back.pixels == img.pixels);
    std::remove(path.c_str());
}

TEST_CASE("missing file raises FileNotFound") {
    CHECK_THROWS_AS(load_gray(tmp_path("definitely_missing_12345.png")),
                    FileNotFound);
}

TEST_CASE("non-png content is rejected") {
    std::string path = tmp_path("knotclass_not_png.png");
    std::ofstream(path) << "this is not a png";
    CHECK_THROWS_AS(load_gray(path), UnsupportedFormat);
    std::remove(path.c_str());
}

TEST_CASE("identity gray lut") {
    ColorLut lut = ColorLut::identity_gray();
    REQUIRE(lut.entries.size() == 256);
    CHECK(lut.entries[0] == std::array<double, 3>{0, 0, 0});
    CHECK(lut.entries[255][0] == doctest::Approx(1.0));
    CHECK(lut.entries[128][1] == doctest::Approx(128.0 / 255.0));
}

TEST_CASE("lut asset parsing and frozen spectral samples") {
    ColorLut lut = load_lut(std::string(KNOTCLASS_DATA_DIR) + "/nipy_spectral.txt");
    REQUIRE(lut.entries.size() == 256);
    // frozen reference samples of the pseudo-color table
    CHECK(lut.entries[0][0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(lut.entries[0][1] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(lut.entries[0][2] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(lut.entries[128][0] == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(lut.entries[128][1] == doctest::Approx(0.738531).epsilon(1e-4));
    CHECK(lut.entries[128][2] == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(lut.entries[255][0] == doctest::Approx(0.8).epsilon(1e-6));
    CHECK(lut.entries[255][1] == doctest::Approx(0.8).epsilon(1e-6));
    CHECK(lut.entries[255][2] == doctest::Approx(0.8).epsilon(1e-6));
}

TEST_CASE("malformed lut raises ParseError") {
    std::string path = tmp_path("knotclass_bad_lut.txt");
    std::ofstream(path) << "0 0.1 0.2\n"; // missing one column, and not 256 lines
    CHECK_THROWS_AS(load_lut(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("apply_colormap maps every pixel through the lut") {
    GrayImage img = gradient_image(8, 5);
    ColorLut lut = ColorLut::identity_gray();
    RgbImage rgb = apply_colormap(img, lut);
    CHECK(rgb.width == 8);
    CHECK(rgb.height == 5);
    for (int y = 0; y < 5; ++y)
        for (int x = 0; x < 8; ++x) {
            double expect = img.at(x, y) / 255.0;
            CHECK(rgb.r.at(x, y) == doctest::Approx(expect));
            CHECK(rgb.g.at(x, y) == doctest::Approx(expect));
            CHECK(rgb.b.at(x, y) == doctest::Approx(expect));
        }
}

TEST_CASE("split_channels returns the three planes") {
    GrayImage img = gradient_image(6, 4);
    RgbImage rgb = apply_colormap(img, ColorLut::identity_gray());
    auto [r, g, b] = split_channels(rgb);
    CHECK(r.width == 6);
    CHECK(g.height == 4);
    CHECK(r.values == rgb.r.values);
    CHECK(b.values == rgb.b.values);
}

TEST_CASE("rgb png round trip through save_rgb") {
    GrayImage img = gradient_image(16, 16);
    RgbImage rgb = apply_colormap(img, ColorLut::identity_gray());
    std::string path = tmp_path("knotclass_rgb.png");
    save_rgb(rgb, path);
    // identical channels: loads back as gray
    GrayImage back = load_gray(path);
    CHECK(back.pixels == img.pixels);
    std::remove(path.c_str());
}
