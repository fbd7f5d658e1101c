#include "doctest.h"
#include "generators.hpp"

#include "onsager/errors.hpp"
#include "onsager/loop/families.hpp"
#include "onsager/loop/tables.hpp"

using namespace onsager;
using namespace onsager::loop;
using arith::parse_laurent;

namespace {

LaurentPoly lp(const char* s) { return parse_laurent(s); }

LoopElement random_element(testing::Gen& g) {
    return {g.laurent(), g.laurent(), g.laurent(), g.laurent()};
}

void require_all(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) {
        INFO(r.check_id << " " << r.parameters.dump() << " " << r.witness);
        CHECK(r.passed);
    }
}

}  // namespace

TEST_CASE("bracket examples") {
    CHECK(bracket(family(Family::A, 1), family(Family::A, 0)) == family(Family::B, 1) * GR(2));
    CHECK(bracket(family(Family::A, 1), family(Family::A, 0)) == LoopElement::diag(lp("t - t^-1"), lp("t^-1 - t")));
    CHECK(bracket(family(Family::A, 0), family(Family::A, 0)).is_zero());
    CHECK(bracket(family(Family::cA, 1), family(Family::cA, 0)) ==
          family(Family::cB, 1) - family(Family::cB, -1));
    CHECK(bracket(family(Family::cA, 1), family(Family::cA, 0)) ==
          LoopElement::diag(lp("t - t^-1"), lp("t^-1 - t")));
}

TEST_CASE("family examples") {
    CHECK(family(Family::B, 0).is_zero());
    CHECK(family(Family::cB, 2) == LoopElement::diag(lp("t^2 - 1"), lp("t^-2 - 1")));
    CHECK(family(Family::cG, 1) == LoopElement::diag(lp("2*t - 2"), lp("2*t^-1 - 2")));
    CHECK(family(Family::W, 0) == family(Family::A, 0));
    CHECK(family(Family::W, 1) == family(Family::A, 1));
    CHECK_THROWS_AS(family(Family::Gt, 0), IndexOutOfRange);
    CHECK_THROWS_AS(family(Family::cG, -1), IndexOutOfRange);
    CHECK_THROWS_AS(family(Family::cGt, 0), IndexOutOfRange);
    CHECK_NOTHROW(family(Family::W, -7));
    // W_{-2} = ((t+1/t)/2)^2 (0 1; 1 0): entries (t^2 + 2 + t^-2)/4.
    CHECK(family(Family::W, -2).b == lp("1/4*t^2 + 1/2 + 1/4*t^-2"));
    CHECK(family(Family::Gt, 2) == LoopElement::diag(lp("1/2*t^-2 - 1/2*t^2"), lp("1/2*t^2 - 1/2*t^-2")));
}

TEST_CASE("map examples") {
    CHECK(sigma(family(Family::A, 3)) == family(Family::A, -2));
    CHECK(theta(family(Family::W, -2)) == family(Family::W, -2));
    CHECK(dagger(family(Family::Gt, 2)) == -family(Family::Gt, 2));
    CHECK(sigma(family(Family::cW, -3)) == family(Family::cW, 4));
}

TEST_CASE("epsilon and membership examples") {
    CHECK(epsilon(LoopElement::scalar(LaurentPoly::t(5))) == GR(2));
    CHECK(epsilon(family(Family::A, -2)).is_zero());
    CHECK(epsilon(family(Family::cB, 3)).is_zero());
    CHECK(membership(family(Family::cA, 2), Space::ACE));
    CHECK_FALSE(membership(LoopElement::scalar(1), Space::ACE));
    CHECK(membership(family(Family::B, 3), Space::O));
    CHECK_FALSE(membership(family(Family::cB, 3), Space::O));
    CHECK(membership(family(Family::cB, 3), Space::L));
    CHECK_FALSE(membership(LoopElement::diag(lp("t"), 0), Space::Lsl2));
}

TEST_CASE("rendering") {
    CHECK(to_string(family(Family::cB, 2)) == "diag(t^2 - 1, t^-2 - 1)");
    CHECK(to_string(LoopElement::zero()) == "0");
    CHECK(to_string(family(Family::A, 1)) == "[[0, t], [t^-1, 0]]");
    auto j = to_json(family(Family::cB, 2));
    CHECK(j["a"] == "t^2 - 1");
    CHECK(j["b"] == "0");
    CHECK(to_string(FamilyName{Family::cB, -3}) == "cB[-3]");
    CHECK(parse_family_literal("Gt[2]") == FamilyName{Family::Gt, 2});
    CHECK(parse_element_expr("1/2*cGt[1] - 1/2*cG[1]") == family(Family::Gt, 1));
    CHECK(parse_element_expr("-A[0]") == -family(Family::A, 0));
    CHECK_THROWS_AS(parse_family_literal("X[1]"), ParseError);
    CHECK_THROWS_AS(parse_family_literal("A[1"), ParseError);
    CHECK(parse_space("ACE") == Space::ACE);
}

TEST_CASE("maps are commuting involutions on random elements") {
    testing::Gen g(11);
    for (int i = 0; i < 60; ++i) {
        LoopElement x = random_element(g);
        CHECK(theta(theta(x)) == x);
        CHECK(sigma(sigma(x)) == x);
        CHECK(dagger(dagger(x)) == x);
        CHECK(theta(sigma(x)) == sigma(theta(x)));
        CHECK(theta(dagger(x)) == dagger(theta(x)));
        CHECK(sigma(dagger(x)) == dagger(sigma(x)));
        CHECK(epsilon(theta(x)) == epsilon(x));
        CHECK(epsilon(sigma(x)) == epsilon(x));
        CHECK(epsilon(dagger(x)) == epsilon(x));
    }
}

TEST_CASE("homomorphism contracts on random elements") {
    testing::Gen g(12);
    for (int i = 0; i < 60; ++i) {
        LoopElement x = random_element(g), y = random_element(g);
        LoopElement xy = bracket(x, y);
        CHECK(theta(xy) == bracket(theta(x), theta(y)));
        CHECK(sigma(xy) == bracket(sigma(x), sigma(y)));
        CHECK(dagger(xy) == bracket(dagger(y), dagger(x)));
        CHECK(epsilon(xy).is_zero());
        CHECK(bracket(y, x) == -xy);
    }
}

TEST_CASE("jacobi identity on random elements") {
    testing::Gen g(13);
    for (int i = 0; i < 30; ++i) {
        LoopElement x = random_element(g), y = random_element(g), z = random_element(g);
        CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
    }
}

TEST_CASE("bracket tables") {
    require_all(onsager_ab_table(8));
    require_all(onsager_w_table(8));
    require_all(ace_ab_table(8));
    require_all(ace_w_table(8));
    require_all(dolan_grady_checks());
}

TEST_CASE("symmetry, cross-family and central checks") {
    require_all(symmetry_action_checks(10));
    require_all(cross_family_checks(10));
    require_all(involution_checks(10));
    require_all(central_witness_checks(8));
    CHECK(center_basis(3) * GR(2) == family(Family::cB, 3) + family(Family::cB, -3));
}

TEST_CASE("zero_check reports a witness") {
    CheckResult r = zero_check("x", "A_1 = 0", {}, family(Family::A, 1));
    CHECK_FALSE(r.passed);
    CHECK(r.witness == "[[0, t], [t^-1, 0]]");
    auto j = to_json(r);
    CHECK(j["status"] == "fail");
    CHECK(j["paper_ref"] == "A_1 = 0");
    CHECK(j["witness"] == r.witness);
}
