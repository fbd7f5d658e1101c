#pragma once

// Shared text machinery for polynomial-like values in a single variable.

#include "onsager/arith/gaussian.hpp"
#include "onsager/errors.hpp"

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace onsager::arith::detail {

enum class TermOrder { Descending, OutwardConstantLast };

// Renders sum_n c_n v^n. `spaced` selects "a + b" versus "a+b".
std::string render_terms(const std::map<int, GR>& terms, char var, TermOrder order, bool spaced);

// Recursive-descent parser for
//   expr  := ["+"|"-"] term (("+"|"-") term)*
//   term  := unary (("*"|"/") unary)*
//   unary := "-" unary | power
//   power := primary ["^" ["-"] INT]
//   primary := NUMBER | "i" | VAR | "(" expr ")"
// evaluated directly in the value type supplied by `Ops`:
//   V Ops::constant(const GR&), V Ops::variable(), V Ops::divide(V, V),
//   V Ops::power(V, int)
template <class V, class Ops>
class ExprParser {
public:
    ExprParser(std::string_view text, char var) : text_(text), var_(var) {}

    V parse() {
        V v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError("at offset " + std::to_string(pos_) + " in \"" + std::string(text_) +
                         "\": expected " + expected);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // Multiplication dot used in some renderings.
    bool accept_times() {
        skip_ws();
        if (accept('*')) return true;
        static constexpr std::string_view dot = "\xC2\xB7";
        if (text_.substr(pos_, dot.size()) == dot) {
            pos_ += dot.size();
            return true;
        }
        return false;
    }

    V expr() {
        bool negate = false;
        if (accept('+')) {
        } else if (accept('-')) {
            negate = true;
        }
        V acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    V term() {
        V acc = unary();
        for (;;) {
            if (accept_times()) {
                acc = acc * unary();
            } else if (accept('/')) {
                acc = Ops::divide(acc, unary());
            } else {
                return acc;
            }
        }
    }

    V unary() {
        if (accept('-')) return -unary();
        return power();
    }

    V power() {
        V base = primary();
        if (accept('^')) {
            bool neg = accept('-');
            long e = integer();
            base = Ops::power(base, static_cast<int>(neg ? -e : e));
        }
        return base;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    V primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("operand");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Rational r(std::string(text_.substr(start, pos_ - start)));
            return Ops::constant(GR(r));
        }
        if (c == 'i') {
            ++pos_;
            return Ops::constant(GR::i());
        }
        if (c == var_) {
            ++pos_;
            return Ops::variable();
        }
        if (accept('(')) {
            V inner = expr();
            if (!accept(')')) fail("')'");
            return inner;
        }
        fail(std::string("number, 'i', '") + var_ + "' or '('");
    }

    std::string_view text_;
    char var_;
    std::size_t pos_ = 0;
};

}  // namespace onsager::arith::detail
