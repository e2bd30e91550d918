#include "knotclass/image.hpp"

#include "knotclass/errors.hpp"

#include <png.h>

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

namespace knotclass {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

std::uint8_t to_byte(double v) {
    v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    return std::uint8_t(v * 255.0 + 0.5);
}

void write_png(const std::string& path, int width, int height, int color_type,
               const std::vector<std::uint8_t>& rows_data, int stride) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot open for writing: " + path);
    PngWriter w;
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!w.png) throw IoError("libpng init failed");
    w.info = png_create_info_struct(w.png);
    if (!w.info) throw IoError("libpng init failed");
    if (setjmp(png_jmpbuf(w.png))) throw IoError("png write failed: " + path);
    png_init_io(w.png, fp.get());
    png_set_IHDR(w.png, w.info, width, height, 8, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);
    for (int y = 0; y < height; ++y)
        png_write_row(w.png, const_cast<png_bytep>(rows_data.data() + std::size_t(y) * stride));
    png_write_end(w.png, nullptr);
}

} // namespace

GrayImage load_gray(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw FileNotFound("no such file: " + path);
    unsigned char sig[8];
    if (std::fread(sig, 1, 8, fp.get()) != 8 || png_sig_cmp(sig, 0, 8))
        throw UnsupportedFormat("not a PNG file: " + path);

    PngReader r;
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!r.png) throw IoError("libpng init failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw IoError("libpng init failed");
    if (setjmp(png_jmpbuf(r.png))) throw UnsupportedFormat("corrupt PNG: " + path);
    png_init_io(r.png, fp.get());
    png_set_sig_bytes(r.png, 8);
    png_read_info(r.png, r.info);

    const int bit_depth = png_get_bit_depth(r.png, r.info);
    const int color_type = png_get_color_type(r.png, r.info);
    if (bit_depth != 8)
        throw UnsupportedFormat(path + ": bit depth " + std::to_string(bit_depth) +
                                ", expected 8");
    if (color_type != PNG_COLOR_TYPE_GRAY && color_type != PNG_COLOR_TYPE_RGB &&
        color_type != PNG_COLOR_TYPE_RGB_ALPHA)
        throw UnsupportedFormat(path + ": unsupported PNG color type");
    if (color_type == PNG_COLOR_TYPE_RGB_ALPHA) png_set_strip_alpha(r.png);
    png_read_update_info(r.png, r.info);

    const int width = int(png_get_image_width(r.png, r.info));
    const int height = int(png_get_image_height(r.png, r.info));
    const int channels = color_type == PNG_COLOR_TYPE_GRAY ? 1 : 3;
    std::vector<std::uint8_t> row(std::size_t(width) * channels);

    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.resize(std::size_t(width) * height);
    for (int y = 0; y < height; ++y) {
        png_read_row(r.png, row.data(), nullptr);
        for (int x = 0; x < width; ++x) {
            if (channels == 1) {
                img.pixels[std::size_t(y) * width + x] = row[x];
            } else {
                std::uint8_t red = row[3 * x], green = row[3 * x + 1], blue = row[3 * x + 2];
                if (red != green || red != blue)
                    throw ChannelMismatch(path + ": RGB channels differ at (" +
                                          std::to_string(x) + "," + std::to_string(y) + ")");
                img.pixels[std::size_t(y) * width + x] = red;
            }
        }
    }
    return img;
}

void save_gray(const GrayImage& img, const std::string& path) {
    write_png(path, img.width, img.height, PNG_COLOR_TYPE_GRAY, img.pixels, img.width);
}

void save_rgb(const RgbImage& img, const std::string& path) {
    std::vector<std::uint8_t> data(std::size_t(img.width) * img.height * 3);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            std::size_t off = (std::size_t(y) * img.width + x) * 3;
            data[off] = to_byte(img.r.at(x, y));
            data[off + 1] = to_byte(img.g.at(x, y));
            data[off + 2] = to_byte(img.b.at(x, y));
        }
    write_png(path, img.width, img.height, PNG_COLOR_TYPE_RGB, data, img.width * 3);
}

ColorLut ColorLut::identity_gray() {
    ColorLut lut;
    lut.entries.resize(256);
    for (int i = 0; i < 256; ++i) {
        double v = i / 255.0;
        lut.entries[i] = {v, v, v};
    }
    return lut;
}

ColorLut load_lut(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("LUT not found: " + path);
    ColorLut lut;
    lut.entries.resize(256);
    std::string line;
    int lineno = 0, count = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        int idx;
        double r, g, b;
        if (!(is >> idx >> r >> g >> b) || idx < 0 || idx > 255)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'index r g b'");
        if (r < 0 || r > 1 || g < 0 || g > 1 || b < 0 || b > 1)
            throw ParseError(path + ":" + std::to_string(lineno) + ": component out of [0,1]");
        lut.entries[idx] = {r, g, b};
        ++count;
    }
    if (count != 256)
        throw ParseError(path + ": expected 256 entries, got " + std::to_string(count));
    return lut;
}

RgbImage apply_colormap(const GrayImage& img, const ColorLut& lut) {
    RgbImage out;
    out.width = img.width;
    out.height = img.height;
    out.r = ChannelPlane(img.width, img.height);
    out.g = ChannelPlane(img.width, img.height);
    out.b = ChannelPlane(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const auto& e = lut.entries[img.pixels[i]];
        out.r.values[i] = e[0];
        out.g.values[i] = e[1];
        out.b.values[i] = e[2];
    }
    return out;
}

std::tuple<ChannelPlane, ChannelPlane, ChannelPlane> split_channels(const RgbImage& img) {
    return {img.r, img.g, img.b};
}

} // namespace knotclass
