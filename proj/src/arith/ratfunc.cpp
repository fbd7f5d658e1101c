#include "onsager/arith/ratfunc.hpp"

#include "onsager/errors.hpp"
#include "text.hpp"

namespace onsager::arith {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(const GR& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

UniPoly UniPoly::monomial(const GR& c, int degree) {
    UniPoly p;
    if (!c.is_zero()) p.terms_.emplace(degree, c);
    return p;
}

GR UniPoly::leading() const { return terms_.empty() ? GR() : terms_.rbegin()->second; }

GR UniPoly::coeff(int d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? GR() : it->second;
}

GR UniPoly::eval(const GR& at) const {
    // Horner over the sparse support, highest degree first.
    GR acc;
    int prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int k = it->first; k < prev; ++k) acc *= at;
        acc += it->second;
        prev = it->first;
    }
    for (int k = 0; k < prev; ++k) acc *= at;
    return acc;
}

void UniPoly::add_term(int d, const GR& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& [d, c] : r.terms_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

UniPoly& UniPoly::operator*=(const GR& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, v] : terms_) v *= c;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [n, c] : a.terms_) {
        for (const auto& [m, d] : b.terms_) r.add_term(n + m, c * d);
    }
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    UniPoly quot;
    UniPoly rem = a;
    const int db = b.degree();
    const GR lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= db) {
        int shift = rem.degree() - db;
        GR factor = rem.leading() * lead_inv;
        UniPoly step = UniPoly::monomial(factor, shift);
        quot += step;
        rem -= step * b;
    }
    return {std::move(quot), std::move(rem)};
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly(GR(1));
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        UniPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    GR lead = den_.leading();
    if (!lead.is_one()) {
        GR inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::from_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return RatFunc();
    int lo = std::min(0, p.min_exponent());
    UniPoly num;
    for (const auto& [n, c] : p.terms()) num += UniPoly::monomial(c, n - lo);
    return RatFunc(std::move(num), UniPoly::monomial(GR(1), -lo));
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc result(1);
    RatFunc base = *this;
    auto e = static_cast<unsigned>(k);
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e != 0) base *= base;
    }
    return result;
}

GR RatFunc::eval(const GR& a) const {
    GR d = den_.eval(a);
    if (d.is_zero()) throw PoleAtPoint("rational function " + to_string(*this) + " has a pole at q = " + to_string(a));
    return num_.eval(a) / d;
}

int RatFunc::order_at(const GR& a) const {
    if (is_zero()) throw DivisionByZero("order of the zero function is undefined");
    UniPoly root = UniPoly::q() - UniPoly(a);
    auto multiplicity = [&root](UniPoly p) {
        int m = 0;
        for (;;) {
            auto [quot, rem] = divmod(p, root);
            if (!rem.is_zero()) return m;
            p = std::move(quot);
            ++m;
        }
    };
    return multiplicity(num_) - multiplicity(den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

GR ratfunc_eval(const RatFunc& f, const GR& a) { return f.eval(a); }

// ---------------------------------------------------------------- text

namespace {

// Least common multiple of every rational denominator among the coefficients.
mpz_class coefficient_denominator_lcm(const UniPoly& p) {
    mpz_class l = 1;
    for (const auto& [d, c] : p.terms()) {
        mpz_class a = c.re().get_den();
        mpz_class b = c.im().get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_mpz_t());
    }
    return l;
}

bool is_power_of_q(const UniPoly& p) { return p.terms().size() == 1 && p.leading().is_one(); }

std::string wrap_denominator(const std::string& s) {
    return s.find_first_of("+-*^/") == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

std::string to_string(const UniPoly& p) {
    return detail::render_terms(p.terms(), 'q', detail::TermOrder::Descending, false);
}

std::string to_string(const RatFunc& f) {
    if (f.den().degree() == 0 || (is_power_of_q(f.den()) && f.num().terms().size() == 1)) {
        int shift = f.den().degree();
        std::map<int, GR> laurent;
        for (const auto& [d, c] : f.num().terms()) laurent.emplace(d - shift, c);
        return detail::render_terms(laurent, 'q', detail::TermOrder::Descending, false);
    }
    mpz_class l = coefficient_denominator_lcm(f.num());
    mpz_class ld = coefficient_denominator_lcm(f.den());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
    GR scale{Rational(l)};
    UniPoly num = f.num() * scale;
    UniPoly den = f.den() * scale;
    std::string ns = to_string(num);
    if (num.terms().size() > 1) ns = "(" + ns + ")";
    return ns + "/" + wrap_denominator(to_string(den));
}

namespace {

struct RatFuncOps {
    static RatFunc constant(const GR& c) { return RatFunc(c); }
    static RatFunc variable() { return RatFunc::q(); }
    static RatFunc divide(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw ParseError("division by zero in rational function text");
        return a / b;
    }
    static RatFunc power(const RatFunc& base, int e) {
        if (e < 0 && base.is_zero()) throw ParseError("negative power of zero");
        return base.pow(e);
    }
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) {
    return detail::ExprParser<RatFunc, RatFuncOps>(text, 'q').parse();
}

}  // namespace onsager::arith
