#include "knotclass/errors.hpp"
#include "knotclass/knot.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace knotclass {

namespace {

// delta = (a^-1 - a) / z, the value of an extra split unknot component.
const LaurentPoly& delta() {
    static const LaurentPoly d = [] {
        LaurentPoly p;
        p.set_term(-1, -1, 1);
        p.set_term(1, -1, -1);
        return p;
    }();
    return d;
}

LaurentPoly delta_pow(int n) {
    LaurentPoly r = LaurentPoly::one();
    for (int i = 0; i < n; ++i) r = r * delta();
    return r;
}

// Drop crossings no longer visited and renumber the rest.
void compact(LinkCode& code) {
    std::vector<int> relabel(code.signs.size(), -1);
    std::vector<int> signs;
    for (auto& comp : code.components)
        for (auto& v : comp) {
            if (relabel[v.crossing] < 0) {
                relabel[v.crossing] = int(signs.size());
                signs.push_back(code.signs[v.crossing]);
            }
            v.crossing = relabel[v.crossing];
        }
    code.signs = std::move(signs);
}

// Remove kinks: a crossing whose two visits are cyclically adjacent within
// one component (Reidemeister I; the invariant is unchanged).
void reduce_kinks(LinkCode& code) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& comp : code.components) {
            std::size_t n = comp.size();
            if (n < 2) continue;
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t j = (i + 1) % n;
                if (comp[i].crossing == comp[j].crossing) {
                    if (j > i)
                        comp.erase(comp.begin() + j), comp.erase(comp.begin() + i);
                    else
                        comp.erase(comp.begin() + i), comp.erase(comp.begin() + j);
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    compact(code);
}

// Reidemeister II: two distinct crossings adjacent along both strands, one
// strand passing over at both, the other under at both. The bigon between
// them is empty, so removing both crossings preserves the invariant.
bool reduce_one_r2(LinkCode& code) {
    auto other_visit = [&](int cid, int comp, int idx) {
        for (int c = 0; c < int(code.components.size()); ++c)
            for (int i = 0; i < int(code.components[c].size()); ++i)
                if (code.components[c][i].crossing == cid && !(c == comp && i == idx))
                    return std::pair<int, int>{c, i};
        return std::pair<int, int>{-1, -1};
    };
    for (int c = 0; c < int(code.components.size()); ++c) {
        auto& comp = code.components[c];
        int n = int(comp.size());
        if (n < 2) continue;
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            const Visit& a = comp[i];
            const Visit& b = comp[j];
            if (!a.over || !b.over || a.crossing == b.crossing) continue;
            auto [ca, ia] = other_visit(a.crossing, c, i);
            auto [cb, ib] = other_visit(b.crossing, c, j);
            if (ca != cb || ca < 0) continue;
            int m = int(code.components[ca].size());
            if (ib != (ia + 1) % m && ia != (ib + 1) % m) continue;
            if (code.components[ca][ia].over || code.components[ca][ib].over) continue;
            std::vector<std::pair<int, int>> rm = {{c, i}, {c, j}, {ca, ia}, {ca, ib}};
            std::sort(rm.begin(), rm.end(), std::greater<>());
            for (const auto& [rc, ri] : rm)
                code.components[rc].erase(code.components[rc].begin() + ri);
            compact(code);
            return true;
        }
    }
    return false;
}

// R1 + R2 to a fixed point.
void reduce(LinkCode& code) {
    do {
        reduce_kinks(code);
    } while (reduce_one_r2(code));
}

struct PivotPos {
    int comp1, idx1; // first (deciding) visit along the traversal
    int comp2, idx2; // the other visit
};

// First crossing met as an under-crossing before its over visit, scanning
// components in order. A diagram with no such crossing is descending and
// therefore an unlink.
std::optional<PivotPos> first_bad_crossing(const LinkCode& code) {
    std::unordered_set<int> seen;
    for (int c = 0; c < int(code.components.size()); ++c) {
        const auto& comp = code.components[c];
        for (int i = 0; i < int(comp.size()); ++i) {
            const Visit& v = comp[i];
            if (!seen.insert(v.crossing).second) continue;
            if (v.over) continue;
            PivotPos p{c, i, -1, -1};
            for (int c2 = 0; c2 < int(code.components.size()); ++c2)
                for (int i2 = 0; i2 < int(code.components[c2].size()); ++i2)
                    if (code.components[c2][i2].crossing == v.crossing &&
                        !(c2 == c && i2 == i)) {
                        p.comp2 = c2;
                        p.idx2 = i2;
                    }
            return p;
        }
    }
    return std::nullopt;
}

LinkCode switch_crossing(const LinkCode& code, const PivotPos& p) {
    LinkCode r = code;
    int cid = r.components[p.comp1][p.idx1].crossing;
    r.components[p.comp1][p.idx1].over = !r.components[p.comp1][p.idx1].over;
    r.components[p.comp2][p.idx2].over = !r.components[p.comp2][p.idx2].over;
    r.signs[cid] = -r.signs[cid];
    return r;
}

std::vector<Visit> slice(const std::vector<Visit>& v, int from, int to) {
    // [from, to) with bounds already valid
    return {v.begin() + from, v.begin() + to};
}

// Oriented smoothing: remove both visits and reconnect respecting
// orientation. Same component -> splits in two; different -> merges.
LinkCode smooth_crossing(const LinkCode& code, const PivotPos& p) {
    LinkCode r;
    r.signs = code.signs;
    if (p.comp1 == p.comp2) {
        const auto& v = code.components[p.comp1];
        int i = p.idx1, j = p.idx2;
        if (i > j) std::swap(i, j);
        std::vector<Visit> inner = slice(v, i + 1, j);
        std::vector<Visit> outer = slice(v, j + 1, int(v.size()));
        auto head = slice(v, 0, i);
        outer.insert(outer.end(), head.begin(), head.end());
        for (int c = 0; c < int(code.components.size()); ++c) {
            if (c == p.comp1) {
                r.components.push_back(inner);
                r.components.push_back(outer);
            } else {
                r.components.push_back(code.components[c]);
            }
        }
    } else {
        const auto& v = code.components[p.comp1];
        const auto& w = code.components[p.comp2];
        std::vector<Visit> merged = slice(v, p.idx1 + 1, int(v.size()));
        auto vh = slice(v, 0, p.idx1);
        merged.insert(merged.end(), vh.begin(), vh.end());
        auto wt = slice(w, p.idx2 + 1, int(w.size()));
        merged.insert(merged.end(), wt.begin(), wt.end());
        auto wh = slice(w, 0, p.idx2);
        merged.insert(merged.end(), wh.begin(), wh.end());
        for (int c = 0; c < int(code.components.size()); ++c) {
            if (c == p.comp1)
                r.components.push_back(merged);
            else if (c != p.comp2)
                r.components.push_back(code.components[c]);
        }
    }
    compact(r);
    return r;
}

LaurentPoly eval(LinkCode code, std::unordered_map<std::string, LaurentPoly>& memo) {
    reduce(code);
    std::string key = code.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    LaurentPoly result;
    auto pivot = first_bad_crossing(code);
    if (!pivot) {
        result = delta_pow(int(code.components.size()) - 1);
    } else {
        int cid = code.components[pivot->comp1][pivot->idx1].crossing;
        int sign = code.signs[cid];
        LaurentPoly sw = eval(switch_crossing(code, *pivot), memo);
        LaurentPoly sm = eval(smooth_crossing(code, *pivot), memo);
        if (sign > 0) {
            // P(L+) = a^2 P(L-) + a z P(L0)
            result = sw.shifted(2, 0) + sm.shifted(1, 1);
        } else {
            // P(L-) = a^-2 P(L+) - a^-1 z P(L0)
            result = sw.shifted(-2, 0) - sm.shifted(-1, 1);
        }
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace

HomflyPolynomial homfly(const LinkCode& code, int cap) {
    if (int(code.crossing_count()) > cap)
        throw CrossingCapExceeded("diagram has " + std::to_string(code.crossing_count()) +
                                  " crossings, cap is " + std::to_string(cap));
    std::unordered_map<std::string, LaurentPoly> memo;
    return eval(code, memo);
}

HomflyPolynomial homfly(const Diagram& diag, int cap) { return homfly(diag.code, cap); }

} // namespace knotclass
