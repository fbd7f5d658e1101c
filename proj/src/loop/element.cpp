#include "onsager/loop/element.hpp"

#include "onsager/errors.hpp"

#include <algorithm>

namespace onsager::loop {

int LoopElement::max_abs_exponent() const {
    return std::max({a.max_abs_exponent(), b.max_abs_exponent(), c.max_abs_exponent(), d.max_abs_exponent()});
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    d -= o.d;
    return *this;
}

LoopElement& LoopElement::operator*=(const GR& s) {
    a *= s;
    b *= s;
    c *= s;
    d *= s;
    return *this;
}

LoopElement& LoopElement::operator*=(const LaurentPoly& p) {
    a = a * p;
    b = b * p;
    c = c * p;
    d = d * p;
    return *this;
}

LoopElement matmul(const LoopElement& x, const LoopElement& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

LoopElement bracket(const LoopElement& x, const LoopElement& y) {
    // Diagonal parts commute, so only cross terms survive.
    return {x.b * y.c - y.b * x.c,
            x.a * y.b + x.b * y.d - y.a * x.b - y.b * x.d,
            x.c * y.a + x.d * y.c - y.c * x.a - y.d * x.c,
            x.c * y.b - y.c * x.b};
}

LoopElement theta(const LoopElement& x) {
    using arith::tau;
    return {tau(x.d), tau(x.c), tau(x.b), tau(x.a)};
}

LoopElement sigma(const LoopElement& x) { return {x.d, x.c.shifted(1), x.b.shifted(-1), x.a}; }

LoopElement dagger(const LoopElement& x) {
    using arith::tau;
    return {tau(x.a), tau(x.c), tau(x.b), tau(x.d)};
}

GR epsilon(const LoopElement& x) { return arith::gamma(x.a) + arith::gamma(x.d); }

bool membership(const LoopElement& x, Space space) {
    switch (space) {
        case Space::Lsl2:
            return x.trace().is_zero();
        case Space::L:
            return epsilon(x).is_zero();
        case Space::O:
            return x.trace().is_zero() && theta(x) == x;
        case Space::ACE:
            return epsilon(x).is_zero() && theta(x) == x;
    }
    return false;
}

std::string to_string(Space space) {
    switch (space) {
        case Space::Lsl2:
            return "Lsl2";
        case Space::L:
            return "L";
        case Space::O:
            return "O";
        case Space::ACE:
            return "ACE";
    }
    return "?";
}

Space parse_space(const std::string& name) {
    if (name == "Lsl2") return Space::Lsl2;
    if (name == "L") return Space::L;
    if (name == "O") return Space::O;
    if (name == "ACE") return Space::ACE;
    throw ParseError("unknown space '" + name + "' (expected Lsl2, L, O or ACE)");
}

std::string to_string(const LoopElement& x) {
    using arith::to_string;
    if (x.is_zero()) return "0";
    if (x.is_diagonal()) return "diag(" + to_string(x.a) + ", " + to_string(x.d) + ")";
    return "[[" + to_string(x.a) + ", " + to_string(x.b) + "], [" + to_string(x.c) + ", " + to_string(x.d) + "]]";
}

std::string to_block(const LoopElement& x) {
    using arith::to_string;
    std::string a = to_string(x.a), b = to_string(x.b), c = to_string(x.c), d = to_string(x.d);
    std::size_t w = std::max(a.size(), c.size());
    a.resize(w, ' ');
    c.resize(w, ' ');
    return "( " + a + "  " + b + " )\n( " + c + "  " + d + " )";
}

nlohmann::json to_json(const LoopElement& x) {
    return {{"a", to_string(x.a)}, {"b", to_string(x.b)}, {"c", to_string(x.c)}, {"d", to_string(x.d)}};
}

}  // namespace onsager::loop
