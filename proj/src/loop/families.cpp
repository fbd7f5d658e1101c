#include "onsager/loop/families.hpp"

#include "onsager/errors.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace onsager::loop {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kTags{{
    {Family::A, "A"},
    {Family::B, "B"},
    {Family::cA, "cA"},
    {Family::cB, "cB"},
    {Family::W, "W"},
    {Family::Gt, "Gt"},
    {Family::cW, "cW"},
    {Family::cG, "cG"},
    {Family::cGt, "cGt"},
}};

LaurentPoly t(int n) { return LaurentPoly::t(n); }

// ((t+1/t)/2)^k (0 1; 1 0) for n = -k <= 0, ((t+1/t)/2)^k (0 t; 1/t 0) for n = k+1 >= 1.
LoopElement w_element(int n) {
    if (n <= 0) return chebyshev_weight(static_cast<unsigned>(-n)) * LoopElement::off_diag(1, 1);
    return chebyshev_weight(static_cast<unsigned>(n - 1)) * LoopElement::off_diag(t(1), t(-1));
}

void require_positive(FamilyName name) {
    if (name.index < 1) {
        throw IndexOutOfRange(to_string(name) + ": index must be >= 1");
    }
}

}  // namespace

std::string_view family_tag(Family f) {
    for (const auto& [tag, text] : kTags) {
        if (tag == f) return text;
    }
    return "?";
}

std::optional<Family> family_from_tag(std::string_view text) {
    for (const auto& [tag, name] : kTags) {
        if (name == text) return tag;
    }
    return std::nullopt;
}

std::optional<int> family_min_index(Family f) {
    switch (f) {
        case Family::Gt:
        case Family::cG:
        case Family::cGt:
            return 1;
        default:
            return std::nullopt;
    }
}

LaurentPoly chebyshev_weight(unsigned k) {
    static const LaurentPoly half_sum = (t(1) + t(-1)) * GR(arith::make_rational(1, 2));
    return half_sum.pow(k);
}

LoopElement center_basis(int k) {
    return LoopElement::scalar((t(k) + t(-k) - LaurentPoly(2)) * GR(arith::make_rational(1, 2)));
}

LoopElement family(FamilyName name) {
    const int k = name.index;
    const GR half(arith::make_rational(1, 2));
    switch (name.tag) {
        case Family::A:
        case Family::cA:
            return LoopElement::off_diag(t(k), t(-k));
        case Family::B: {
            LaurentPoly p = (t(k) - t(-k)) * half;
            return LoopElement::diag(p, -p);
        }
        case Family::cB:
            return LoopElement::diag(t(k) - LaurentPoly(1), t(-k) - LaurentPoly(1));
        case Family::W:
        case Family::cW:
            return w_element(k);
        case Family::Gt:
            require_positive(name);
            return chebyshev_weight(static_cast<unsigned>(k - 1)) *
                   LoopElement::diag(t(-1) - t(1), t(1) - t(-1));
        case Family::cG:
            require_positive(name);
            return chebyshev_weight(static_cast<unsigned>(k - 1)) *
                   LoopElement::diag(t(1) * GR(2) - LaurentPoly(2), t(-1) * GR(2) - LaurentPoly(2));
        case Family::cGt:
            require_positive(name);
            return chebyshev_weight(static_cast<unsigned>(k - 1)) *
                   LoopElement::diag(t(-1) * GR(2) - LaurentPoly(2), t(1) * GR(2) - LaurentPoly(2));
    }
    throw IndexOutOfRange("unknown family");
}

std::string to_string(FamilyName name) {
    return std::string(family_tag(name.tag)) + "[" + std::to_string(name.index) + "]";
}

namespace {

class LiteralLexer {
public:
    explicit LiteralLexer(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ == text_.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError("at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\": expected " +
                         expected);
    }
    long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        long v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc()) fail("integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return neg ? -v : v;
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("family name");
        return std::string(text_.substr(start, pos_ - start));
    }
    FamilyName literal() {
        std::string tag = identifier();
        auto fam = family_from_tag(tag);
        if (!fam) throw ParseError("unknown family '" + tag + "'");
        if (!accept('[')) fail("'['");
        long idx = integer();
        if (!accept(']')) fail("']'");
        return {*fam, static_cast<int>(idx)};
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

FamilyName parse_family_literal(std::string_view text) {
    LiteralLexer lex(text);
    FamilyName name = lex.literal();
    if (!lex.done()) lex.fail("end of literal");
    return name;
}

LoopElement parse_element_expr(std::string_view text) {
    LiteralLexer lex(text);
    LoopElement total;
    bool first = true;
    while (first || !lex.done()) {
        GR sign(1);
        if (lex.accept('-')) {
            sign = GR(-1);
        } else if (!lex.accept('+') && !first) {
            lex.fail("'+' or '-'");
        }
        first = false;
        GR coeff(1);
        if (lex.peek_digit()) {
            long num = lex.integer();
            long den = 1;
            if (lex.accept('/')) den = lex.integer();
            if (!lex.accept('*')) lex.fail("'*'");
            coeff = GR(arith::make_rational(num, den));
        }
        total += family(lex.literal()) * (sign * coeff);
    }
    return total;
}

}  // namespace onsager::loop
