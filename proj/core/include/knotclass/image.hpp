#ifndef KNOTCLASS_IMAGE_HPP
#define KNOTCLASS_IMAGE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace knotclass {

/// 8-bit grayscale image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int x, int y) const { return pixels[std::size_t(y) * width + x]; }
};

/// 256-entry colormap; components in [0,1].
struct ColorLut {
    std::vector<std::array<double, 3>> entries; // exactly 256

    /// Identity gray map: entry g -> (g/255, g/255, g/255).
    static ColorLut identity_gray();
};

/// 2D grid of real intensities, row-major. The unit of convolution/pooling.
struct ChannelPlane {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    ChannelPlane() = default;
    ChannelPlane(int w, int h, double fill = 0.0)
        : width(w), height(h), values(std::size_t(w) * h, fill) {}

    double at(int x, int y) const { return values[std::size_t(y) * width + x]; }
    double& at(int x, int y) { return values[std::size_t(y) * width + x]; }
};

struct RgbImage {
    int width = 0;
    int height = 0;
    ChannelPlane r, g, b;
};

/// Load an 8-bit PNG as grayscale. RGB inputs must have identical channels
/// (the red channel is taken); anything else is rejected.
GrayImage load_gray(const std::string& path);

/// Write an 8-bit grayscale PNG.
void save_gray(const GrayImage& img, const std::string& path);

/// Write an 8-bit RGB PNG (values clamped to [0,1] then scaled to 0-255).
void save_rgb(const RgbImage& img, const std::string& path);

/// Load the LUT asset: 256 lines "index r g b".
ColorLut load_lut(const std::string& path);

/// Map each pixel through the LUT.
RgbImage apply_colormap(const GrayImage& img, const ColorLut& lut);

std::tuple<ChannelPlane, ChannelPlane, ChannelPlane> split_channels(const RgbImage& img);

} // namespace knotclass

#endif
