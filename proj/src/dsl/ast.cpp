#include "onsager/dsl/dsl.hpp"

#include "onsager/errors.hpp"

namespace onsager::dsl {

long Affine::eval(const std::map<std::string, long>& env) const {
    long v = constant;
    for (const auto& [name, c] : coeffs) {
        auto it = env.find(name);
        if (it == env.end()) throw UnknownParameter("parameter '" + name + "' is unbound");
        v += c * it->second;
    }
    return v;
}

std::string to_string(const Affine& a) {
    std::string out;
    auto emit = [&](long c, const std::string& name) {
        const long m = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (name.empty()) {
            out += std::to_string(m);
        } else {
            out += (m == 1 ? "" : std::to_string(m) + "*") + name;
        }
    };
    for (const auto& [name, c] : a.coeffs) emit(c, name);
    if (a.constant != 0 || out.empty()) emit(a.constant, "");
    return out;
}

std::string to_string(Domain d) {
    switch (d) {
        case Domain::Z: return "Z";
        case Domain::N: return "N";
        case Domain::NPlus: return "N+";
    }
    return "?";
}

Expr Expr::gen(std::string family, Affine index) {
    Expr e;
    e.kind = Kind::Gen;
    e.family = std::move(family);
    e.index = std::move(index);
    return e;
}

Expr Expr::bracket(Expr x, Expr y) {
    Expr e;
    e.kind = Kind::Bracket;
    e.children.push_back(std::move(x));
    e.children.push_back(std::move(y));
    return e;
}

Expr Expr::scale(Rational r, Expr x) {
    Expr e;
    e.kind = Kind::Scale;
    e.scalar = std::move(r);
    e.children.push_back(std::move(x));
    return e;
}

Expr Expr::sum(std::vector<Expr> xs, std::vector<int> signs) {
    if (xs.empty() || xs.size() != signs.size()) throw ParseError("sum needs one sign per term");
    if (xs.size() == 1 && signs[0] > 0) return std::move(xs[0]);
    Expr e;
    e.kind = Kind::Sum;
    e.children = std::move(xs);
    e.signs = std::move(signs);
    return e;
}

bool operator==(const Expr& x, const Expr& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Expr::Kind::Zero: return true;
        case Expr::Kind::Gen: return x.family == y.family && x.index == y.index;
        case Expr::Kind::Scale: return x.scalar == y.scalar && x.children == y.children;
        case Expr::Kind::Bracket: return x.children == y.children;
        case Expr::Kind::Sum: return x.signs == y.signs && x.children == y.children;
    }
    return false;
}

const FamilyDecl* Suite::find_family(std::string_view name) const {
    for (const auto& f : families) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

namespace {

// Operand of a scalar: anything the grammar reads as an atom.
std::string render_atom(const Expr& e) {
    if (e.kind == Expr::Kind::Sum || e.kind == Expr::Kind::Scale) return "(" + render(e) + ")";
    return render(e);
}

}  // namespace

std::string render(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Zero: return "0";
        case Expr::Kind::Gen: return e.family + "(" + to_string(e.index) + ")";
        case Expr::Kind::Bracket: return "[" + render(e.children[0]) + ", " + render(e.children[1]) + "]";
        case Expr::Kind::Scale:
            if (sgn(e.scalar) < 0) throw ParseError("negative scalar has no literal form");
            return e.scalar.get_str() + "*" + render_atom(e.children[0]);
        case Expr::Kind::Sum: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                const Expr& c = e.children[i];
                const std::string body = c.kind == Expr::Kind::Sum ? "(" + render(c) + ")" : render(c);
                if (i == 0) {
                    out += (e.signs[i] < 0 ? "-" : "") + body;
                } else {
                    out += (e.signs[i] < 0 ? " - " : " + ") + body;
                }
            }
            return out;
        }
    }
    return "";
}

std::string render(const RelDecl& r) {
    std::string out = "rel " + r.name;
    if (!r.params.empty()) {
        out += "(";
        for (std::size_t i = 0; i < r.params.size(); ++i) {
            if (i) out += ", ";
            out += r.params[i].name;
            if (r.params[i].lower != 0) out += ">=" + std::to_string(r.params[i].lower);
        }
        out += ")";
    }
    return out + ": " + render(r.lhs) + " = " + render(r.rhs) + ";";
}

std::string render(const Suite& s) {
    std::string out;
    for (const auto& f : s.families) out += "family " + f.name + " : " + to_string(f.domain) + ";\n";
    for (const auto& r : s.relations) out += render(r) + "\n";
    return out;
}

}  // namespace onsager::dsl
