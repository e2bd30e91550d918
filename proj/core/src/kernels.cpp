#include "knotclass/kernels.hpp"

#include "knotclass/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace knotclass {

std::string to_string(KernelCategory c) {
    switch (c) {
        case KernelCategory::blur: return "blur";
        case KernelCategory::sharpen: return "sharpen";
        case KernelCategory::edge_enhancement: return "edge_enhancement";
        case KernelCategory::edge_detection: return "edge_detection";
        case KernelCategory::emboss: return "emboss";
        case KernelCategory::sobel: return "sobel";
        case KernelCategory::line_detection: return "line_detection";
    }
    return "?";
}

KernelCategory kernel_category_from_string(const std::string& s) {
    if (s == "blur") return KernelCategory::blur;
    if (s == "sharpen") return KernelCategory::sharpen;
    if (s == "edge_enhancement") return KernelCategory::edge_enhancement;
    if (s == "edge_detection") return KernelCategory::edge_detection;
    if (s == "emboss") return KernelCategory::emboss;
    if (s == "sobel") return KernelCategory::sobel;
    if (s == "line_detection") return KernelCategory::line_detection;
    throw ParseError("unknown kernel category: '" + s + "'");
}

const Kernel* KernelBank::find(const std::string& name) const {
    for (const auto& k : kernels)
        if (k.name == name) return &k;
    return nullptr;
}

KernelBank default_bank() {
    using C = KernelCategory;
    auto k = [](const char* name, C cat, std::array<std::array<double, 3>, 3> m) {
        return Kernel{name, cat, m};
    };
    const double t = 1.0 / 3.0;
    KernelBank bank;
    bank.kernels = {
        // blur
        k("blur_box", C::blur, {{{1 / 9., 1 / 9., 1 / 9.}, {1 / 9., 1 / 9., 1 / 9.}, {1 / 9., 1 / 9., 1 / 9.}}}),
        k("blur_gaussian", C::blur, {{{1 / 16., 2 / 16., 1 / 16.}, {2 / 16., 4 / 16., 2 / 16.}, {1 / 16., 2 / 16., 1 / 16.}}}),
        k("blur_motion_diag", C::blur, {{{t, 0, 0}, {0, t, 0}, {0, 0, t}}}),
        // sharpen
        k("sharpen_basic", C::sharpen, {{{0, -1, 0}, {-1, 5, -1}, {0, -1, 0}}}),
        k("sharpen_strong", C::sharpen, {{{-1, -1, -1}, {-1, 9, -1}, {-1, -1, -1}}}),
        k("sharpen_cross", C::sharpen, {{{1, -2, 1}, {-2, 5, -2}, {1, -2, 1}}}),
        // edge enhancement: directional difference against one neighbour
        k("enhance_n", C::edge_enhancement, {{{0, -1, 0}, {0, 1, 0}, {0, 0, 0}}}),
        k("enhance_ne", C::edge_enhancement, {{{0, 0, -1}, {0, 1, 0}, {0, 0, 0}}}),
        k("enhance_e", C::edge_enhancement, {{{0, 0, 0}, {0, 1, -1}, {0, 0, 0}}}),
        k("enhance_se", C::edge_enhancement, {{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}}),
        k("enhance_s", C::edge_enhancement, {{{0, 0, 0}, {0, 1, 0}, {0, -1, 0}}}),
        k("enhance_sw", C::edge_enhancement, {{{0, 0, 0}, {0, 1, 0}, {-1, 0, 0}}}),
        k("enhance_w", C::edge_enhancement, {{{0, 0, 0}, {-1, 1, 0}, {0, 0, 0}}}),
        k("enhance_nw", C::edge_enhancement, {{{-1, 0, 0}, {0, 1, 0}, {0, 0, 0}}}),
        // edge detection
        k("edge_laplace4", C::edge_detection, {{{0, 1, 0}, {1, -4, 1}, {0, 1, 0}}}),
        k("edge_laplace8", C::edge_detection, {{{1, 1, 1}, {1, -8, 1}, {1, 1, 1}}}),
        k("edge_outline", C::edge_detection, {{{-1, -1, -1}, {-1, 8, -1}, {-1, -1, -1}}}),
        // emboss
        k("emboss_se", C::emboss, {{{-2, -1, 0}, {-1, 1, 1}, {0, 1, 2}}}),
        k("emboss_ne", C::emboss, {{{0, -1, -2}, {1, 1, -1}, {2, 1, 0}}}),
        k("emboss_s", C::emboss, {{{-1, -1, -1}, {0, 1, 0}, {1, 1, 1}}}),
        // sobel
        k("sobel_x", C::sobel, {{{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}}}),
        k("sobel_y", C::sobel, {{{-1, -2, -1}, {0, 0, 0}, {1, 2, 1}}}),
        k("sobel_d45", C::sobel, {{{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}}}),
        k("sobel_d135", C::sobel, {{{2, 1, 0}, {1, 0, -1}, {0, -1, -2}}}),
        // line detection
        k("line_h", C::line_detection, {{{-1, -1, -1}, {2, 2, 2}, {-1, -1, -1}}}),
        k("line_v", C::line_detection, {{{-1, 2, -1}, {-1, 2, -1}, {-1, 2, -1}}}),
        k("line_d45", C::line_detection, {{{-1, -1, 2}, {-1, 2, -1}, {2, -1, -1}}}),
        k("line_d135", C::line_detection, {{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}}),
    };
    return bank;
}

std::map<std::string, std::vector<std::string>> default_presets() {
    // Both presets come from greedy crossing-minimizing selection
    // (select_kernels) over a seeded synthetic ridge corpus.
    return {{kDefaultPreset,
             {"blur_box", "blur_gaussian", "blur_motion_diag", "sharpen_basic",
              "sharpen_strong", "sharpen_cross", "enhance_ne", "enhance_e", "enhance_se",
              "edge_laplace4", "edge_laplace8", "edge_outline", "emboss_s"}},
            {"synthetic6",
             {"blur_gaussian", "blur_motion_diag", "sharpen_basic", "sharpen_strong",
              "enhance_ne", "enhance_se"}}};
}

KernelAsset load_bank(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("kernel asset not found: " + path);
    KernelAsset asset;
    std::set<std::string> names;
    std::string line;
    int lineno = 0;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto end = line.find_last_not_of(" \t\r");
            if (end == std::string::npos) continue;
            out = line.substr(0, end + 1);
            return true;
        }
        return false;
    };
    std::string content;
    while (next_content_line(content)) {
        std::istringstream head(content);
        std::string first;
        head >> first;
        if (first == "preset") {
            std::string pname, eq;
            head >> pname >> eq;
            if (pname.empty() || eq != "=")
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": expected 'preset name = kernel...'");
            std::vector<std::string> members;
            std::string m;
            while (head >> m) members.push_back(m);
            asset.presets[pname] = std::move(members);
            continue;
        }
        Kernel kern;
        std::string cat;
        std::istringstream hd(content);
        if (!(hd >> kern.name >> cat))
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'name category'");
        kern.category = kernel_category_from_string(cat);
        if (!names.insert(kern.name).second)
            throw DuplicateName(path + ":" + std::to_string(lineno) + ": duplicate kernel '" +
                                kern.name + "'");
        for (int r = 0; r < 3; ++r) {
            if (!next_content_line(content))
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": unexpected end of file in matrix of '" + kern.name + "'");
            std::istringstream row(content);
            if (!(row >> kern.matrix[r][0] >> kern.matrix[r][1] >> kern.matrix[r][2]))
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": malformed matrix row for '" + kern.name + "'");
        }
        asset.bank.kernels.push_back(std::move(kern));
    }
    for (const auto& [pname, members] : asset.presets)
        for (const auto& m : members)
            if (!asset.bank.find(m))
                throw ParseError(path + ": preset '" + pname + "' references unknown kernel '" +
                                 m + "'");
    return asset;
}

KernelBank select(const KernelBank& bank, const std::vector<std::string>& names) {
    std::set<std::string> wanted;
    for (const auto& n : names) {
        if (!bank.find(n)) throw UnknownKernel("no kernel named '" + n + "'");
        wanted.insert(n);
    }
    KernelBank out;
    for (const auto& k : bank.kernels)
        if (wanted.count(k.name)) out.kernels.push_back(k);
    return out;
}

} // namespace knotclass
