#pragma once

#include "onsager/arith/gaussian.hpp"

#include <map>
#include <string>
#include <string_view>

namespace onsager::arith {

// Sparse Laurent polynomial sum_n c_n t^n over Q(i). Zero coefficients are
// never stored, so structural equality is mathematical equality.
class LaurentPoly {
public:
    using Terms = std::map<int, GR>;

    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(GR(c)) {}  // NOLINT(implicit)
    LaurentPoly(const GR& c);                     // NOLINT(implicit)

    static LaurentPoly monomial(const GR& c, int exponent);
    static LaurentPoly t(int exponent = 1) { return monomial(GR(1), exponent); }
    static LaurentPoly from_terms(Terms terms);

    const Terms& terms() const { return terms_; }
    GR coeff(int exponent) const;
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // Largest |n| with a nonzero coefficient (0 for the zero polynomial).
    int max_abs_exponent() const;
    int min_exponent() const;
    int max_exponent() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const GR& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const GR& c) { return a *= c; }
    friend LaurentPoly operator*(const GR& c, LaurentPoly a) { return a *= c; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // Multiplication by t^n.
    LaurentPoly shifted(int n) const;
    // Division by a monomial c t^n; DivisionByZero if `m` is not a nonzero
    // monomial.
    LaurentPoly divided_by_monomial(const LaurentPoly& m) const;
    LaurentPoly pow(unsigned k) const;

private:
    void add_term(int exponent, const GR& c);

    Terms terms_;
};

// t -> 1/t.
LaurentPoly tau(const LaurentPoly& p);
// t -> 1, i.e. the sum of all coefficients.
GR gamma(const LaurentPoly& p);

// Rendering such as "t^2 + 3*t^-1" or "t^-2 - 1": nonconstant terms by
// decreasing |n| (positive first on ties), constant last.
std::string to_string(const LaurentPoly& p);
// Accepts the rendering grammar plus products, parentheses, monomial
// division and nonnegative powers ("(t + 1/t)^2/4").
LaurentPoly parse_laurent(std::string_view text);

}  // namespace onsager::arith
