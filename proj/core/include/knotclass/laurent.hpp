#ifndef KNOTCLASS_LAURENT_HPP
#define KNOTCLASS_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace knotclass {

/// Sparse integer Laurent polynomial in two variables (a, z).
/// Terms are keyed by (a_exponent, z_exponent); zero coefficients are
/// never stored. The map ordering doubles as the canonical term order.
class LaurentPoly {
public:
    using Exponents = std::pair<int, int>; // (a_exp, z_exp)

    LaurentPoly() = default;
    static LaurentPoly one() { return monomial(0, 0, 1); }
    static LaurentPoly monomial(int a_exp, int z_exp, std::int64_t coeff);

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    /// Multiply by the monomial c * a^i * z^j.
    LaurentPoly shifted(int a_exp, int z_exp, std::int64_t coeff = 1) const;

    /// Map a -> a^-1 (the mirror-image transform of the invariant).
    LaurentPoly mirror() const;

    /// "c*a^i*z^j" terms joined by " + ", sorted by (a_exp, z_exp);
    /// the constant 1 renders as "1", zero as "0".
    std::string canonical_string() const;

    /// Inverse of canonical_string. Throws ParseError on malformed input.
    static LaurentPoly parse(const std::string& s);

    const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
    void set_term(int a_exp, int z_exp, std::int64_t coeff);

private:
    std::map<Exponents, std::int64_t> terms_;
};

} // namespace knotclass

#endif
