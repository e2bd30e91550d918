#ifndef KNOTCLASS_KERNELS_HPP
#define KNOTCLASS_KERNELS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

namespace knotclass {

enum class KernelCategory {
    blur,
    sharpen,
    edge_enhancement,
    edge_detection,
    emboss,
    sobel,
    line_detection,
};

std::string to_string(KernelCategory c);
KernelCategory kernel_category_from_string(const std::string& s);

struct Kernel {
    std::string name;
    KernelCategory category;
    std::array<std::array<double, 3>, 3> matrix; // [row][col]
};

/// Ordered list of named 3x3 kernels. The order is canonical: coordinate
/// order, and hence curve topology, depends on it.
struct KernelBank {
    std::vector<Kernel> kernels;

    std::size_t size() const { return kernels.size(); }
    const Kernel* find(const std::string& name) const;
};

/// A kernel asset file: the bank plus named subset presets.
struct KernelAsset {
    KernelBank bank;
    std::map<std::string, std::vector<std::string>> presets;
};

/// The built-in 28-kernel bank (3 blur, 3 sharpen, 8 edge enhancement,
/// 3 edge detection, 3 emboss, 4 sobel, 4 line detection).
KernelBank default_bank();

/// Name of the built-in 13-kernel preset.
inline constexpr const char* kDefaultPreset = "default13";

/// The built-in presets: default13 (13 kernels) and synthetic6 (a smaller
/// subset for low-crossing end-to-end runs). Both were produced by greedy
/// crossing-minimizing selection over a seeded synthetic ridge corpus.
std::map<std::string, std::vector<std::string>> default_presets();

/// Parse a kernel asset file. Throws ParseError / DuplicateName.
KernelAsset load_bank(const std::string& path);

/// Sub-bank containing the named kernels, in the bank's canonical order
/// (not the request order). Throws UnknownKernel.
KernelBank select(const KernelBank& bank, const std::vector<std::string>& names);

} // namespace knotclass

#endif
