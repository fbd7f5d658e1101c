#include "onsager/qlimit/ncpoly.hpp"

#include <algorithm>
#include <cctype>

namespace onsager::qlimit {

NCPoly qcomm(const NCPoly& x, const NCPoly& y, const RatFunc& s) { return x * y * s - y * x * s.inverse(); }

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = s.starts_with('-') ? 1 : 0;
    return i < s.size() && std::all_of(s.begin() + static_cast<long>(i), s.end(),
                                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

std::string word_text(const Word& w) {
    std::string out;
    for (const auto& s : w) {
        if (!out.empty()) out += "·";
        out += s.name;
    }
    return out;
}

template <typename C>
std::string render(const NCPolyT<C>& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<const Word*, const C*>> order;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) order.emplace_back(&it->first, &it->second);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first->size() > b.first->size(); });
    std::string out;
    for (const auto& [w, c] : order) {
        bool negative = false;
        std::string body;
        std::string cs = to_string(*c);
        if (cs == "1" || cs == "-1") {
            negative = cs == "-1";
            body = w->empty() ? "1" : word_text(*w);
        } else {
            if (is_integer_literal(cs)) {
                negative = cs.starts_with('-');
                if (negative) cs.erase(0, 1);
            } else {
                cs = "(" + cs + ")";
            }
            body = w->empty() ? cs : cs + "·" + word_text(*w);
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

}  // namespace

std::string to_string(const NCPoly& p) { return render(p); }
std::string to_string(const NCPolyGR& p) { return render(p); }

}  // namespace onsager::qlimit
