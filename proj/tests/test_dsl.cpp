#include "doctest.h"
#include "generators.hpp"

#include "onsager/dsl/dsl.hpp"
#include "onsager/errors.hpp"
#include "onsager/loop/families.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace onsager;
using namespace onsager::dsl;

namespace {

std::string suite_path(const std::string& name) { return std::string(ONSAGER_SUITE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Affine aff(long c, std::map<std::string, long> coeffs = {}) { return {c, std::move(coeffs)}; }

std::vector<std::string> shipped_suites() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(ONSAGER_SUITE_DIR)) {
        if (e.path().extension() == ".lrel") out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Affine random_affine(testing::Gen& g) {
    Affine a;
    a.constant = g.integer(-3, 3);
    for (const char* p : {"k", "l"}) {
        const long c = g.integer(-2, 2);
        if (c != 0) a.coeffs[p] = c;
    }
    return a;
}

Expr random_expr(testing::Gen& g, int depth) {
    const int pick = depth == 0 ? g.integer(0, 1) : g.integer(0, 4);
    switch (pick) {
        case 0: return Expr::zero();
        case 1: return Expr::gen(g.coin() ? "W" : "Gt", random_affine(g));
        case 2: return Expr::bracket(random_expr(g, depth - 1), random_expr(g, depth - 1));
        case 3: {
            Rational r(g.integer(0, 9), g.integer(1, 4));
            r.canonicalize();
            return Expr::scale(r, random_expr(g, depth - 1));
        }
        default: {
            const int n = g.integer(1, 3);
            std::vector<Expr> xs;
            std::vector<int> signs;
            for (int i = 0; i < n; ++i) {
                xs.push_back(random_expr(g, depth - 1));
                signs.push_back(g.coin() ? 1 : -1);
            }
            if (n == 1) signs[0] = -1;
            return Expr::sum(std::move(xs), std::move(signs));
        }
    }
}

}  // namespace

TEST_CASE("com1 with Gt declared parses to two families and one relation") {
    const Suite s = parse("family W : Z; family Gt : N+; rel com1(k,l): [W(-k), W(l+1)] = Gt(k+l+1);");
    REQUIRE(s.families.size() == 2);
    CHECK(s.families[1] == FamilyDecl{"Gt", Domain::NPlus});
    REQUIRE(s.relations.size() == 1);
    const RelDecl& r = s.relations[0];
    CHECK(r.name == "com1");
    CHECK(r.params == std::vector<Param>{{"k", 0}, {"l", 0}});
    CHECK(r.lhs == Expr::bracket(Expr::gen("W", aff(0, {{"k", -1}})), Expr::gen("W", aff(1, {{"l", 1}}))));
    CHECK(r.rhs == Expr::gen("Gt", aff(1, {{"k", 1}, {"l", 1}})));
}

TEST_CASE("com1 without the Gt declaration is rejected") {
    CHECK_THROWS_AS(parse("family W : Z; rel com1(k,l): [W(-k), W(l+1)] = Gt(k+l+1);"), UnknownFamily);
}

TEST_CASE("quadratic index is rejected before anything else") {
    CHECK_THROWS_AS(parse("rel bad: [W(k*k)] = 0;"), NonAffineIndex);
    CHECK_THROWS_AS(parse("family W : Z; rel bad(k): W(2*k*k) = 0;"), NonAffineIndex);
    CHECK_THROWS_AS(parse("family W : Z; rel bad(k): W([W(0), W(1)]) = 0;"), NonAffineIndex);
}

TEST_CASE("nested brackets in the Dolan/Grady relation") {
    const Suite s = parse("family W : Z; rel dg1: [W(0),[W(0),[W(0),W(1)]]] = 4*[W(0),W(1)];");
    const Expr w0 = Expr::gen("W", aff(0)), w1 = Expr::gen("W", aff(1));
    CHECK(s.relations[0].lhs == Expr::bracket(w0, Expr::bracket(w0, Expr::bracket(w0, w1))));
    CHECK(s.relations[0].rhs == Expr::scale(Rational(4), Expr::bracket(w0, w1)));
    const auto rep = instantiate_and_check(s, {}, 0);
    REQUIRE(rep.instances.size() == 1);
    CHECK(rep.instances[0].status == Instance::Status::Pass);
}

TEST_CASE("diagnostics") {
    SUBCASE("syntax error carries line and column") {
        try {
            parse("family W : Z;\nrel r: W(0) = = 0;");
            FAIL("no throw");
        } catch (const SyntaxError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 15);
        }
    }
    SUBCASE("bad domain") { CHECK_THROWS_AS(parse("family W : Q;"), SyntaxError); }
    SUBCASE("unknown parameter") { CHECK_THROWS_AS(parse("family W : Z; rel r(k): W(l) = 0;"), UnknownParameter); }
    SUBCASE("unknown character") { CHECK_THROWS_AS(parse("family W : Z; rel r: W(0) = W(0) % 2;"), SyntaxError); }
    SUBCASE("comments are ignored") { CHECK(parse("# nothing\nfamily W : Z; # trailing\n").families.size() == 1); }
    SUBCASE("missing file") { CHECK_THROWS_AS(parse_file("/nonexistent/x.lrel"), ParseError); }
}

TEST_CASE("rendering round-trips random ASTs") {
    testing::Gen g(41);
    for (int trial = 0; trial < 300; ++trial) {
        Suite s;
        s.families = {{"W", Domain::Z}, {"Gt", Domain::NPlus}};
        RelDecl r;
        r.name = "r" + std::to_string(trial);
        r.params = {{"k", g.integer(-2, 2)}, {"l", 0}};
        r.lhs = random_expr(g, 3);
        r.rhs = random_expr(g, 3);
        s.relations.push_back(r);
        const std::string text = render(s);
        CAPTURE(text);
        CHECK(parse(text) == s);
    }
}

TEST_CASE("shipped suites round-trip and pass at kmax 8") {
    const auto files = shipped_suites();
    REQUIRE(files.size() >= 7);
    for (const auto& f : files) {
        CAPTURE(f);
        const Suite s = parse_file(f);
        CHECK(parse(render(s)) == s);
        const SuiteReport rep = instantiate_and_check(s, {}, 8);
        CHECK(rep.ok());
        CHECK(rep.count(Instance::Status::Pass) > 0);
    }
}

TEST_CASE("instance counts follow the parameter ranges") {
    const Suite s = parse_file(suite_path("ace_g_presentation.lrel"));
    const SuiteReport rep = instantiate_and_check(s, {}, 4);
    // 4 closed relations, two with k in [1,4], one with (k,l) in [0,4]^2.
    CHECK(rep.instances.size() == 4 + 4 + 4 + 25);
    CHECK(rep.count(Instance::Status::Skipped) == 0);
    const Suite ab = parse_file(suite_path("onsager_ab_table.lrel"));
    CHECK(instantiate_and_check(ab, {}, 2).instances.size() == 3 * 11 * 11);
}

TEST_CASE("out-of-domain instances are skipped, not failed") {
    const Suite s = parse("family Gt : N+; family W : Z; rel r(k): [Gt(k), W(0)] = [Gt(k), W(0)];");
    const SuiteReport rep = instantiate_and_check(s, {}, 3);
    REQUIRE(rep.instances.size() == 4);
    CHECK(rep.instances[0].status == Instance::Status::Skipped);
    CHECK(rep.count(Instance::Status::Pass) == 3);
    CHECK(rep.ok());
    CHECK(rep.checks(s).size() == 3);
    const auto j = rep.to_json();
    CHECK(j[0]["status"] == "skipped");
    CHECK(j[1]["params"]["k"] == 1);
    CHECK(j[1]["relation"] == "r");
}

TEST_CASE("bindings redirect families") {
    // X bound to cA turns the table relation into one for the extension.
    const Suite s = parse("family X : Z; family Y : Z; rel r(k, l): [X(k), X(l)] = 2*Y(k-l);");
    CHECK_THROWS_AS(instantiate_and_check(s, {}, 2), UnknownFamily);
    const Bindings onsager = {{"X", loop::Family::A}, {"Y", loop::Family::B}};
    CHECK(instantiate_and_check(s, onsager, 3).ok());
    const Bindings wrong = {{"X", loop::Family::A}, {"Y", loop::Family::A}};
    CHECK_FALSE(instantiate_and_check(s, wrong, 3).ok());
}

TEST_CASE("evaluation is linear") {
    const Suite s = parse_file(suite_path("ace_presentation.lrel"));
    testing::Gen g(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::map<std::string, long> env = {{"k", g.integer(0, 5)}, {"l", g.integer(0, 5)}};
        const auto& r1 = s.relations[g.integer(0, static_cast<int>(s.relations.size()) - 1)];
        const auto& r2 = s.relations[g.integer(0, static_cast<int>(s.relations.size()) - 1)];
        const Rational c(g.integer(0, 7), g.integer(1, 3));
        const Expr combo = Expr::sum({r1.lhs, Expr::scale(c, r2.rhs)}, {1, -1});
        const auto lhs = evaluate(combo, s, {}, env);
        const auto rhs = evaluate(r1.lhs, s, {}, env) - arith::GR(c) * evaluate(r2.rhs, s, {}, env);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("perturbed coefficient in com2 is flagged") {
    std::string text = slurp(suite_path("onsager_w_table.lrel"));
    const std::string from = "= 4*W(-k-l-1)";
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    text.replace(at, from.size(), "= 5*W(-k-l-1)");
    const SuiteReport rep = instantiate_and_check(parse(text), {}, 3);
    CHECK_FALSE(rep.ok());
    for (const auto& i : rep.instances) {
        CAPTURE(i.relation);
        CHECK((i.status == Instance::Status::Fail) == (i.relation == "com2"));
    }
    CHECK(rep.count(Instance::Status::Fail) == 16);
}
