#include "onsager/arith/laurent.hpp"

#include "onsager/errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <cstdlib>

namespace onsager::arith {

LaurentPoly::LaurentPoly(const GR& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const GR& c, int exponent) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
    LaurentPoly p;
    for (auto& [n, c] : terms) {
        if (!c.is_zero()) p.terms_.emplace(n, std::move(c));
    }
    return p;
}

GR LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? GR() : it->second;
}

int LaurentPoly::max_abs_exponent() const {
    if (terms_.empty()) return 0;
    return std::max(std::abs(terms_.begin()->first), std::abs(terms_.rbegin()->first));
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add_term(int exponent, const GR& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [n, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const GR& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [n, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [n, c] : a.terms_) {
        for (const auto& [m, d] : b.terms_) r.add_term(n + m, c * d);
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(int n) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + n, c);
    return r;
}

LaurentPoly LaurentPoly::divided_by_monomial(const LaurentPoly& m) const {
    if (!m.is_monomial()) throw DivisionByZero("Laurent division by a non-monomial");
    const auto& [e, c] = *m.terms_.begin();
    return shifted(-e) * c.inverse();
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (k != 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k != 0) base = base * base;
    }
    return result;
}

LaurentPoly tau(const LaurentPoly& p) {
    LaurentPoly::Terms out;
    for (const auto& [n, c] : p.terms()) out.emplace(-n, c);
    return LaurentPoly::from_terms(std::move(out));
}

GR gamma(const LaurentPoly& p) {
    GR s;
    for (const auto& [n, c] : p.terms()) s += c;
    return s;
}

std::string to_string(const LaurentPoly& p) {
    return detail::render_terms(p.terms(), 't', detail::TermOrder::OutwardConstantLast, true);
}

namespace {

struct LaurentOps {
    static LaurentPoly constant(const GR& c) { return LaurentPoly(c); }
    static LaurentPoly variable() { return LaurentPoly::t(); }
    static LaurentPoly divide(const LaurentPoly& a, const LaurentPoly& b) {
        if (!b.is_monomial()) throw ParseError("Laurent text may only divide by a monomial");
        return a.divided_by_monomial(b);
    }
    static LaurentPoly power(const LaurentPoly& base, int e) {
        if (e >= 0) return base.pow(static_cast<unsigned>(e));
        if (!base.is_monomial()) throw ParseError("negative power of a non-monomial");
        return LaurentPoly(1).divided_by_monomial(base.pow(static_cast<unsigned>(-e)));
    }
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
    return detail::ExprParser<LaurentPoly, LaurentOps>(text, 't').parse();
}

}  // namespace onsager::arith
