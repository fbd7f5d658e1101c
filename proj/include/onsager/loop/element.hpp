#pragma once

#include "onsager/arith/laurent.hpp"

#include <json.hpp>
#include <string>

namespace onsager::loop {

using arith::GR;
using arith::LaurentPoly;

// An element of L(gl_2): a 2x2 matrix with Laurent-polynomial entries,
//   ( a  b )
//   ( c  d ).
// Subspace membership is a predicate on values, never a separate type.
struct LoopElement {
    LaurentPoly a, b, c, d;

    static LoopElement zero() { return {}; }
    static LoopElement diag(LaurentPoly a, LaurentPoly d) { return {std::move(a), {}, {}, std::move(d)}; }
    static LoopElement off_diag(LaurentPoly b, LaurentPoly c) { return {{}, std::move(b), std::move(c), {}}; }
    // I (x) p, a central element of L(gl_2).
    static LoopElement scalar(const LaurentPoly& p) { return diag(p, p); }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_diagonal() const { return b.is_zero() && c.is_zero(); }
    LaurentPoly trace() const { return a + d; }
    int max_abs_exponent() const;

    LoopElement operator-() const { return {-a, -b, -c, -d}; }
    LoopElement& operator+=(const LoopElement& o);
    LoopElement& operator-=(const LoopElement& o);
    LoopElement& operator*=(const GR& s);
    // Entrywise multiplication by a Laurent polynomial, i.e. x (x) p.
    LoopElement& operator*=(const LaurentPoly& p);

    friend LoopElement operator+(LoopElement x, const LoopElement& y) { return x += y; }
    friend LoopElement operator-(LoopElement x, const LoopElement& y) { return x -= y; }
    friend LoopElement operator*(LoopElement x, const GR& s) { return x *= s; }
    friend LoopElement operator*(const GR& s, LoopElement x) { return x *= s; }
    friend LoopElement operator*(const LaurentPoly& p, LoopElement x) { return x *= p; }
    friend bool operator==(const LoopElement&, const LoopElement&) = default;
};

// Associative matrix product over F[t, 1/t].
LoopElement matmul(const LoopElement& x, const LoopElement& y);
// Lie bracket xy - yx.
LoopElement bracket(const LoopElement& x, const LoopElement& y);

// (a,b,c,d)(t) -> (d,c,b,a)(1/t). Automorphism.
LoopElement theta(const LoopElement& x);
// (a,b,c,d) -> (d, c t, b/t, a): conjugation by ((0,t),(1,0)). Automorphism.
LoopElement sigma(const LoopElement& x);
// (a,b,c,d)(t) -> (a,c,b,d)(1/t): transpose composed with t -> 1/t. Antiautomorphism.
LoopElement dagger(const LoopElement& x);
// a(1) + d(1). A Lie homomorphism onto the abelian Lie algebra F.
GR epsilon(const LoopElement& x);

enum class Space {
    Lsl2,  // trace zero
    L,     // kernel of epsilon
    O,     // theta-fixed, trace zero
    ACE,   // theta-fixed, kernel of epsilon
};

bool membership(const LoopElement& x, Space space);
std::string to_string(Space space);
Space parse_space(const std::string& name);

// "diag(t^2 - 1, t^-2 - 1)" for diagonal elements, "0" for zero, otherwise
// "[[a, b], [c, d]]".
std::string to_string(const LoopElement& x);
// Two-line block rendering for terminals.
std::string to_block(const LoopElement& x);
// {"a": ..., "b": ..., "c": ..., "d": ...} with LaurentPoly strings.
nlohmann::json to_json(const LoopElement& x);

}  // namespace onsager::loop
