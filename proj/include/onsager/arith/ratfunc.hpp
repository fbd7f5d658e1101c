#pragma once

#include "onsager/arith/gaussian.hpp"
#include "onsager/arith/laurent.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace onsager::arith {

// Sparse univariate polynomial in q with nonnegative exponents.
class UniPoly {
public:
    using Terms = std::map<int, GR>;

    UniPoly() = default;
    UniPoly(const GR& c);  // NOLINT(implicit)
    UniPoly(long c) : UniPoly(GR(c)) {}  // NOLINT(implicit)

    static UniPoly monomial(const GR& c, int degree);
    static UniPoly q() { return monomial(GR(1), 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    GR leading() const;
    GR coeff(int d) const;
    GR eval(const GR& at) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const GR& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const GR& c) { return a *= c; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly monic() const;

private:
    void add_term(int d, const GR& c);
    Terms terms_;
};

// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

// Element of Q(i)(q) in canonical form: coprime numerator and denominator,
// denominator monic. Equal functions therefore compare structurally equal.
class RatFunc {
public:
    RatFunc() : den_(GR(1)) {}
    RatFunc(long c) : RatFunc(GR(c)) {}  // NOLINT(implicit)
    RatFunc(const GR& c) : num_(c), den_(GR(1)) {}  // NOLINT(implicit)
    RatFunc(UniPoly num) : num_(std::move(num)), den_(GR(1)) {}  // NOLINT(implicit)
    RatFunc(UniPoly num, UniPoly den);

    static RatFunc q() { return RatFunc(UniPoly::q()); }
    static RatFunc q_inv() { return RatFunc(UniPoly(GR(1)), UniPoly::q()); }
    // Laurent polynomial in q.
    static RatFunc from_laurent(const LaurentPoly& p);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == den_; }

    RatFunc inverse() const;
    RatFunc pow(int k) const;
    // Value at q = a; PoleAtPoint if the reduced denominator vanishes there.
    GR eval(const GR& a) const;
    // Multiplicity of q = a as a zero (positive) or pole (negative).
    int order_at(const GR& a) const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    void normalize();

    UniPoly num_;
    UniPoly den_;
};

// Free-function spelling used throughout the limit engine.
GR ratfunc_eval(const RatFunc& f, const GR& a);

// "(q^2+1)/(2*q)", "q^-2", "q+1". A monomial over a power of q is shown in
// Laurent form; otherwise rational coefficients are cleared for display.
std::string to_string(const RatFunc& f);
std::string to_string(const UniPoly& p);
RatFunc parse_ratfunc(std::string_view text);

}  // namespace onsager::arith
