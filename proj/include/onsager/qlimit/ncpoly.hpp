#pragma once

#include "onsager/arith/gaussian.hpp"
#include "onsager/arith/ratfunc.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace onsager::qlimit {

using arith::GR;
using arith::RatFunc;

// A generator of the free algebra. xi_weight is the power of xi the symbol
// picks up under the rescaling substitution.
struct Symbol {
    std::string name;
    int xi_weight = 1;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using Word = std::vector<Symbol>;

inline int xi_weight(const Word& w) {
    int s = 0;
    for (const auto& x : w) s += x.xi_weight;
    return s;
}

// Element of the free associative algebra with coefficients in `C`
// (RatFunc for q-level expressions, GR after the q -> 1 limit).
// No normal form: words are compared literally.
template <typename C>
class NCPolyT {
public:
    using Terms = std::map<Word, C>;

    NCPolyT() = default;
    NCPolyT(const C& c) { add(Word{}, c); }  // NOLINT(implicit)
    NCPolyT(long c) : NCPolyT(C(c)) {}  // NOLINT(implicit)
    NCPolyT(const Symbol& s) { add(Word{s}, C(1)); }  // NOLINT(implicit)

    static NCPolyT term(const C& c, Word w) {
        NCPolyT p;
        p.add(std::move(w), c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    C coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? C() : it->second;
    }

    NCPolyT operator-() const {
        NCPolyT r = *this;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }
    NCPolyT& operator+=(const NCPolyT& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    NCPolyT& operator-=(const NCPolyT& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    NCPolyT& operator*=(const C& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend NCPolyT operator+(NCPolyT a, const NCPolyT& b) { return a += b; }
    friend NCPolyT operator-(NCPolyT a, const NCPolyT& b) { return a -= b; }
    friend NCPolyT operator*(NCPolyT a, const C& s) { return a *= s; }
    friend NCPolyT operator*(const C& s, NCPolyT a) { return a *= s; }
    friend NCPolyT operator*(const NCPolyT& a, const NCPolyT& b) {
        NCPolyT r;
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(std::move(w), ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const NCPolyT&, const NCPolyT&) = default;

    void add(Word w, const C& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    Terms terms_;
};

using NCPoly = NCPolyT<RatFunc>;
using NCPolyGR = NCPolyT<GR>;

// [x, y] = xy - yx.
template <typename C>
NCPolyT<C> comm(const NCPolyT<C>& x, const NCPolyT<C>& y) {
    return x * y - y * x;
}

// [x, y]_s = s xy - s^-1 yx; qcomm(x, y) uses s = q.
NCPoly qcomm(const NCPoly& x, const NCPoly& y, const RatFunc& s = RatFunc::q());

// Sum of coefficient-word products by decreasing word length, then
// reverse lexicographic order: "(q^-2)·W1·W0 - W0·W1".
std::string to_string(const NCPoly& p);
std::string to_string(const NCPolyGR& p);

}  // namespace onsager::qlimit
