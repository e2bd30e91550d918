#include "knotclass/diagram.hpp"

#include <numeric>
#include <sstream>

namespace knotclass {

std::string LinkCode::canonical_key() const {
    // Renumber crossings in order of first visit along the traversal.
    std::vector<int> relabel(signs.size(), -1);
    int next = 0;
    for (const auto& comp : components)
        for (const auto& v : comp)
            if (relabel[v.crossing] < 0) relabel[v.crossing] = next++;
    std::ostringstream os;
    for (const auto& comp : components) {
        os << '(';
        for (const auto& v : comp)
            os << relabel[v.crossing] << (v.over ? 'o' : 'u')
               << (signs[v.crossing] > 0 ? '+' : '-');
        os << ')';
    }
    return os.str();
}

LinkCode braid_closure(const std::vector<int>& word, int strands) {
    // strand[p] = which strand currently occupies position p (0-based).
    std::vector<int> at(strands);
    std::iota(at.begin(), at.end(), 0);
    std::vector<std::vector<Visit>> per_strand(strands);
    LinkCode code;
    for (int letter : word) {
        int i = (letter > 0 ? letter : -letter) - 1; // positions i, i+1
        int cid = int(code.signs.size());
        code.signs.push_back(letter > 0 ? +1 : -1);
        // Positive generator: the strand at position i crosses over.
        bool left_over = letter > 0;
        per_strand[at[i]].push_back({cid, left_over});
        per_strand[at[i + 1]].push_back({cid, !left_over});
        std::swap(at[i], at[i + 1]);
    }
    // Closure: follow the permutation, concatenating strand sequences.
    std::vector<bool> used(strands, false);
    for (int start = 0; start < strands; ++start) {
        if (used[start]) continue;
        std::vector<Visit> comp;
        int s = start;
        do {
            used[s] = true;
            comp.insert(comp.end(), per_strand[s].begin(), per_strand[s].end());
            // Strand s entered at position s; find where it exited.
            int pos = -1;
            for (int p = 0; p < strands; ++p)
                if (at[p] == s) pos = p;
            s = pos;
        } while (s != start);
        code.components.push_back(std::move(comp));
    }
    return code;
}

} // namespace knotclass
