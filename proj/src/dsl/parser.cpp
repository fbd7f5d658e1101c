#include "onsager/dsl/dsl.hpp"

#include "onsager/errors.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace onsager::dsl {

namespace {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const char ch = src[i];
        if (ch == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        std::size_t j = i;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            t.kind = Token::Kind::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Token::Kind::Int;
        } else if (ch == '>' && i + 1 < src.size() && src[i + 1] == '=') {
            j = i + 2;
            t.kind = Token::Kind::Punct;
        } else if (std::string_view("()[],=;:+-*/").find(ch) != std::string_view::npos) {
            j = i + 1;
            t.kind = Token::Kind::Punct;
        } else {
            throw SyntaxError(line, col, "a token (unexpected character '" + std::string(1, ch) + "')");
        }
        t.text = std::string(src.substr(i, j - i));
        advance(j - i);
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Suite suite() {
        Suite s;
        while (!at_end()) {
            if (peek_ident("family")) {
                s.families.push_back(family_decl());
            } else if (peek_ident("rel")) {
                s.relations.push_back(rel_decl());
            } else {
                fail("'family' or 'rel'");
            }
        }
        return s;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    bool at_end() const { return cur().kind == Token::Kind::End; }
    bool peek(std::string_view p) const { return cur().kind == Token::Kind::Punct && cur().text == p; }
    bool peek_ident(std::string_view w) const { return cur().kind == Token::Kind::Ident && cur().text == w; }
    bool accept(std::string_view p) {
        if (!peek(p)) return false;
        ++pos_;
        return true;
    }
    void expect(std::string_view p) {
        if (!accept(p)) fail("'" + std::string(p) + "'");
    }
    [[noreturn]] void fail(const std::string& expected) const { throw SyntaxError(cur().line, cur().col, expected); }

    std::string ident(const std::string& what) {
        if (cur().kind != Token::Kind::Ident) fail(what);
        return toks_[pos_++].text;
    }
    long integer() {
        if (cur().kind != Token::Kind::Int) fail("integer");
        try {
            return std::stol(toks_[pos_++].text);
        } catch (const std::out_of_range&) {
            throw SyntaxError(toks_[pos_ - 1].line, toks_[pos_ - 1].col, "integer in range");
        }
    }

    FamilyDecl family_decl() {
        ++pos_;  // family
        FamilyDecl d;
        d.name = ident("family name");
        expect(":");
        const std::string dom = ident("'Z', 'N' or 'N+'");
        if (dom == "Z") {
            d.domain = Domain::Z;
        } else if (dom == "N") {
            d.domain = accept("+") ? Domain::NPlus : Domain::N;
        } else {
            --pos_;
            fail("'Z', 'N' or 'N+'");
        }
        expect(";");
        return d;
    }

    RelDecl rel_decl() {
        ++pos_;  // rel
        RelDecl r;
        r.name = ident("relation name");
        if (accept("(")) {
            if (!peek(")")) {
                do {
                    Param p;
                    p.name = ident("parameter name");
                    if (accept(">=")) {
                        const bool neg = accept("-");
                        p.lower = neg ? -integer() : integer();
                    }
                    for (const auto& q : r.params) {
                        if (q.name == p.name) fail("a new parameter name");
                    }
                    r.params.push_back(std::move(p));
                } while (accept(","));
            }
            expect(")");
        }
        params_ = &r.params;
        expect(":");
        r.lhs = expr();
        expect("=");
        r.rhs = expr();
        expect(";");
        params_ = nullptr;
        return r;
    }

    Expr expr() {
        std::vector<Expr> terms;
        std::vector<int> signs;
        int sign = accept("-") ? -1 : 1;
        for (;;) {
            terms.push_back(term());
            signs.push_back(sign);
            if (accept("+")) {
                sign = 1;
            } else if (accept("-")) {
                sign = -1;
            } else {
                break;
            }
        }
        return Expr::sum(std::move(terms), std::move(signs));
    }

    Expr term() {
        if (cur().kind == Token::Kind::Int) {
            const Token start = cur();
            const long num = integer();
            long den = 1;
            if (accept("/")) {
                den = integer();
                if (den == 0) throw SyntaxError(start.line, start.col, "nonzero denominator");
            }
            if (accept("*")) return Expr::scale(arith::make_rational(num, den), atom());
            if (num == 0 && den == 1) return Expr::zero();
            fail("'*'");
        }
        return atom();
    }

    Expr atom() {
        if (accept("[")) {
            Expr x = expr();
            expect(",");
            Expr y = expr();
            expect("]");
            return Expr::bracket(std::move(x), std::move(y));
        }
        if (accept("(")) {
            Expr x = expr();
            expect(")");
            return x;
        }
        if (cur().kind == Token::Kind::Int && cur().text == "0") {
            ++pos_;
            return Expr::zero();
        }
        if (cur().kind == Token::Kind::Ident) {
            const Token name = cur();
            ++pos_;
            expect("(");
            Affine a = affine();
            expect(")");
            used_families_.push_back({name.text, {name.line, name.col}});
            return Expr::gen(name.text, std::move(a));
        }
        fail("generator, '[', '(' or '0'");
    }

    // Parses one aterm into `a` with the given sign.
    void aterm(Affine& a, long sign, std::vector<Token>& seen) {
        auto add_param = [&](const Token& t, long c) {
            seen.push_back(t);
            long& slot = a.coeffs[t.text];
            slot += sign * c;
            if (slot == 0) a.coeffs.erase(t.text);
        };
        if (cur().kind == Token::Kind::Int) {
            const long n = integer();
            if (accept("*")) {
                if (cur().kind == Token::Kind::Int) {
                    a.constant += sign * n * integer();
                    return;
                }
                if (cur().kind != Token::Kind::Ident) fail("parameter after '*'");
                const Token t = toks_[pos_++];
                if (peek("*")) throw NonAffineIndex(where(t) + "product of parameters in index");
                add_param(t, n);
                return;
            }
            a.constant += sign * n;
            return;
        }
        if (cur().kind == Token::Kind::Ident) {
            const Token t = toks_[pos_++];
            if (accept("*")) {
                if (cur().kind == Token::Kind::Ident) {
                    throw NonAffineIndex(where(t) + "product of parameters " + t.text + "*" + cur().text);
                }
                add_param(t, integer());
                return;
            }
            add_param(t, 1);
            return;
        }
        if (peek("(") || peek("[")) throw NonAffineIndex(where(cur()) + "index must be an affine form");
        fail("integer or parameter");
    }

    // Unknown parameters are reported only after the whole index is read, so
    // a non-affine index takes precedence.
    Affine affine() {
        Affine a;
        std::vector<Token> seen;
        long sign = accept("-") ? -1 : 1;
        for (;;) {
            aterm(a, sign, seen);
            if (accept("+")) {
                sign = 1;
            } else if (accept("-")) {
                sign = -1;
            } else {
                break;
            }
        }
        if (peek("*")) throw NonAffineIndex(where(cur()) + "index must be an affine form");
        for (const Token& t : seen) {
            bool known = false;
            if (params_) {
                for (const auto& p : *params_) known = known || p.name == t.text;
            }
            if (!known) throw UnknownParameter(where(t) + "parameter '" + t.text + "' is not declared");
        }
        return a;
    }

    std::string where(const Token& t) const {
        return "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": ";
    }

public:
    // Generator names in order of appearance, with their positions.
    const std::vector<std::pair<std::string, std::pair<int, int>>>& used_families() const { return used_families_; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const std::vector<Param>* params_ = nullptr;
    std::vector<std::pair<std::string, std::pair<int, int>>> used_families_;
};

}  // namespace

Suite parse(std::string_view text) {
    Parser p(text);
    Suite s = p.suite();
    std::set<std::string> declared;
    for (const auto& f : s.families) {
        if (!declared.insert(f.name).second) throw ParseError("family '" + f.name + "' declared twice");
    }
    for (const auto& [name, pos] : p.used_families()) {
        if (!declared.count(name)) {
            throw UnknownFamily("line " + std::to_string(pos.first) + ", column " + std::to_string(pos.second) +
                                ": family '" + name + "' is not declared");
        }
    }
    return s;
}

Suite parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read suite file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

}  // namespace onsager::dsl
