#include "text.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace onsager::arith::detail {

namespace {

std::string monomial_text(char var, int n) {
    if (n == 0) return "";
    std::string v(1, var);
    if (n == 1) return v;
    return v + "^" + std::to_string(n);
}

bool is_negative_simple(const GR& c) {
    if (is_compound(c)) return false;
    return c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0;
}

// Term text for a coefficient already known to be "positive" (not a simple
// negative) plus the monomial.
std::string term_text(const GR& c, char var, int n) {
    std::string mono = monomial_text(var, n);
    if (mono.empty()) return to_string(c);
    if (c.is_one()) return mono;
    return to_string(c) + "*" + mono;
}

}  // namespace

std::string render_terms(const std::map<int, GR>& terms, char var, TermOrder order, bool spaced) {
    if (terms.empty()) return "0";
    std::vector<std::pair<int, const GR*>> items;
    for (const auto& [n, c] : terms) items.emplace_back(n, &c);
    if (order == TermOrder::Descending) {
        std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    } else {
        std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
            if ((a.first == 0) != (b.first == 0)) return b.first == 0;
            int aa = std::abs(a.first), bb = std::abs(b.first);
            if (aa != bb) return aa > bb;
            return a.first > b.first;
        });
    }
    std::string out;
    bool first = true;
    for (const auto& [n, cp] : items) {
        const GR& c = *cp;
        bool neg = is_negative_simple(c);
        GR mag = neg ? -c : c;
        std::string body = term_text(mag, var, n);
        if (first) {
            out += neg ? "-" + body : body;
            first = false;
        } else if (spaced) {
            out += (neg ? " - " : " + ") + body;
        } else {
            out += (neg ? "-" : "+") + body;
        }
    }
    return out;
}

}  // namespace onsager::arith::detail
