#include "knotclass/errors.hpp"
#include "knotclass/knot.hpp"

#include <fstream>

namespace knotclass {

KnotTable load_knot_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("knot table not found: " + path);
    KnotTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected TAB separator");
        std::string poly = line.substr(0, tab);
        std::string name = line.substr(tab + 1);
        if (name.empty())
            throw ParseError(path + ":" + std::to_string(lineno) + ": empty knot name");
        table.entries[poly] = name;
    }
    return table;
}

std::string knot_name(const HomflyPolynomial& p, const KnotTable& table) {
    auto it = table.entries.find(p.canonical_string());
    return it == table.entries.end() ? kUnknownKnot : it->second;
}

} // namespace knotclass
