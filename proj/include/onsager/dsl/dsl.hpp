#pragma once

#include "onsager/arith/gaussian.hpp"
#include "onsager/loop/element.hpp"
#include "onsager/loop/families.hpp"
#include "onsager/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace onsager::dsl {

using arith::Rational;

// Integer-affine index: constant + sum coeff * param.
struct Affine {
    long constant = 0;
    std::map<std::string, long> coeffs;  // zero coefficients never stored

    long eval(const std::map<std::string, long>& env) const;
    friend bool operator==(const Affine&, const Affine&) = default;
};

std::string to_string(const Affine& a);

struct Expr {
    enum class Kind { Zero, Gen, Bracket, Scale, Sum };

    Kind kind = Kind::Zero;
    std::string family;          // Gen
    Affine index;                // Gen
    Rational scalar;             // Scale
    std::vector<Expr> children;  // Bracket (2), Scale (1), Sum (n)
    std::vector<int> signs;      // Sum: +1 / -1 per child

    static Expr zero() { return {}; }
    static Expr gen(std::string family, Affine index);
    static Expr bracket(Expr x, Expr y);
    static Expr scale(Rational r, Expr x);
    static Expr sum(std::vector<Expr> xs, std::vector<int> signs);

    friend bool operator==(const Expr& x, const Expr& y);
};

enum class Domain { Z, N, NPlus };
std::string to_string(Domain d);

struct FamilyDecl {
    std::string name;
    Domain domain = Domain::Z;
    friend bool operator==(const FamilyDecl&, const FamilyDecl&) = default;
};

struct Param {
    std::string name;
    long lower = 0;
    friend bool operator==(const Param&, const Param&) = default;
};

struct RelDecl {
    std::string name;
    std::vector<Param> params;
    Expr lhs;
    Expr rhs;
    friend bool operator==(const RelDecl&, const RelDecl&) = default;
};

struct Suite {
    std::vector<FamilyDecl> families;
    std::vector<RelDecl> relations;

    const FamilyDecl* find_family(std::string_view name) const;
    friend bool operator==(const Suite&, const Suite&) = default;
};

// Grammar:
//   suite      := (familyDecl | relDecl)*
//   familyDecl := "family" NAME ":" ("Z" | "N" | "N+") ";"
//   relDecl    := "rel" NAME ["(" [param ("," param)*] ")"] ":" expr "=" expr ";"
//   param      := NAME [">=" ["-"] INT]
//   expr       := ["-"] term (("+" | "-") term)*
//   term       := [RATIONAL "*"] atom
//   atom       := NAME "(" affine ")" | "[" expr "," expr "]" | "0" | "(" expr ")"
//   affine     := ["-"] aterm (("+" | "-") aterm)*,  aterm := INT | NAME | INT "*" NAME | NAME "*" INT
// "#" starts a comment. Errors: SyntaxError, NonAffineIndex, UnknownParameter,
// UnknownFamily (checked once the whole text is read).
Suite parse(std::string_view text);
Suite parse_file(const std::string& path);

// Text that parses back to an equal Suite.
std::string render(const Expr& e);
std::string render(const RelDecl& r);
std::string render(const Suite& s);

// Maps DSL family names onto element families. Names missing from the map
// are looked up as family tags ("W", "cG", ...).
using Bindings = std::map<std::string, loop::Family>;

// Evaluates `e` with parameters bound by `env`. IndexOutOfRange when an
// index leaves the declared domain or the family's own range.
loop::LoopElement evaluate(const Expr& e, const Suite& suite, const Bindings& bindings,
                           const std::map<std::string, long>& env);

struct Instance {
    enum class Status { Pass, Fail, Skipped };
    std::string relation;
    std::map<std::string, long> params;
    Status status = Status::Pass;
    std::string detail;  // residual on failure, reason when skipped
};

std::string to_string(Instance::Status s);

struct SuiteReport {
    std::vector<Instance> instances;

    bool ok() const;
    std::size_t count(Instance::Status s) const;
    // [{relation, params, status[, detail]}]
    nlohmann::json to_json() const;
    // Evaluated instances as checks; skipped ones are left out.
    std::vector<CheckResult> checks(const Suite& suite) const;
};

// Every relation at every parameter tuple with each parameter running from
// its lower bound to kmax.
SuiteReport instantiate_and_check(const Suite& suite, const Bindings& bindings, int kmax);

}  // namespace onsager::dsl
