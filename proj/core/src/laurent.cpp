#include "knotclass/laurent.hpp"

#include "knotclass/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace knotclass {

LaurentPoly LaurentPoly::monomial(int a_exp, int z_exp, std::int64_t coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[{a_exp, z_exp}] = coeff;
    return p;
}

void LaurentPoly::set_term(int a_exp, int z_exp, std::int64_t coeff) {
    if (coeff == 0)
        terms_.erase({a_exp, z_exp});
    else
        terms_[{a_exp, z_exp}] = coeff;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [exps, c] : o.terms_) {
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [exps, c] : o.terms_) {
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e{ea.first + eb.first, ea.second + eb.second};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::shifted(int a_exp, int z_exp, std::int64_t coeff) const {
    LaurentPoly r;
    if (coeff == 0) return r;
    for (const auto& [e, c] : terms_)
        r.terms_[{e.first + a_exp, e.second + z_exp}] = c * coeff;
    return r;
}

LaurentPoly LaurentPoly::mirror() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{-e.first, e.second}] = c;
    return r;
}

std::string LaurentPoly::canonical_string() const {
    if (terms_.empty()) return "0";
    if (terms_.size() == 1) {
        auto it = terms_.begin();
        if (it->first == Exponents{0, 0} && it->second == 1) return "1";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*a^" << e.first << "*z^" << e.second;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
    LaurentPoly p;
    if (s.empty()) throw ParseError("empty polynomial string");
    if (s == "0") return p;
    if (s == "1") return one();
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        long long coeff;
        int ae, ze;
        if (std::sscanf(term.c_str(), "%lld*a^%d*z^%d", &coeff, &ae, &ze) != 3)
            throw ParseError("bad polynomial term: '" + term + "'");
        auto [it, inserted] = p.terms_.emplace(Exponents{ae, ze}, coeff);
        if (!inserted) throw ParseError("repeated exponents in polynomial: '" + term + "'");
        if (coeff == 0) throw ParseError("zero coefficient in polynomial: '" + term + "'");
        pos = next == std::string::npos ? s.size() : next + 3;
    }
    return p;
}

} // namespace knotclass
