#include "knotclass/config.hpp"

#include "knotclass/errors.hpp"

#include <fstream>
#include <sstream>

namespace knotclass {

std::optional<std::uint64_t> Config::fixed_jitter_seed() const {
    if (jitter_seed_policy == "image_id") return std::nullopt;
    try {
        return std::stoull(jitter_seed_policy);
    } catch (const std::exception&) {
        throw ParseError("jitter_seed must be 'image_id' or an integer, got '" +
                         jitter_seed_policy + "'");
    }
}

void Config::validate() const {
    if (cycles < 1) throw ParseError("config: cycles must be positive");
    if (tau <= 0) throw ParseError("config: tau must be positive");
    if (samples < 1) throw ParseError("config: samples must be positive");
    if (crossing_cap < 1) throw ParseError("config: crossing_cap must be positive");
    if (side < 3) throw ParseError("config: side must be at least 3");
    fixed_jitter_seed();
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("config not found: " + path);
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string key, eq, value;
        if (!(is >> key)) continue;
        if (!(is >> eq >> value) || eq != "=")
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        if (key == "kernels")
            cfg.kernel_asset = value;
        else if (key == "lut")
            cfg.lut_asset = value;
        else if (key == "knots")
            cfg.knot_table = value;
        else if (key == "subset")
            cfg.subset = value;
        else if (key == "cycles")
            cfg.cycles = std::stoi(value);
        else if (key == "tau")
            cfg.tau = std::stod(value);
        else if (key == "samples")
            cfg.samples = std::stoi(value);
        else if (key == "crossing_cap")
            cfg.crossing_cap = std::stoi(value);
        else if (key == "side")
            cfg.side = std::stoi(value);
        else if (key == "jitter_seed")
            cfg.jitter_seed_policy = value;
        else if (key == "scoring") {
            if (value == "negative")
                cfg.scoring = ScoringPolicy::count_as_negative;
            else if (value == "exclude")
                cfg.scoring = ScoringPolicy::exclude;
            else
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": scoring must be 'negative' or 'exclude'");
        } else if (key == "precision_mode") {
            if (value == "types")
                cfg.precision_mode = PrecisionMode::types;
            else if (value == "instances")
                cfg.precision_mode = PrecisionMode::instances;
            else
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": precision_mode must be 'types' or 'instances'");
        } else {
            throw ParseError(path + ":" + std::to_string(lineno) + ": unknown key '" + key +
                             "'");
        }
    }
    cfg.validate();
    return cfg;
}

} // namespace knotclass
