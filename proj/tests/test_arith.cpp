#include "doctest.h"

#include "generators.hpp"
#include "onsager/arith/gaussian.hpp"
#include "onsager/arith/laurent.hpp"
#include "onsager/arith/ratfunc.hpp"
#include "onsager/errors.hpp"

using namespace onsager;
using namespace onsager::arith;

namespace {

RatFunc rf(const char* s) { return parse_ratfunc(s); }
LaurentPoly lp(const char* s) { return parse_laurent(s); }

}  // namespace

TEST_CASE("gaussian rationals multiply and divide exactly") {
    GR a{make_rational(1, 2), make_rational(3)};
    GR b{make_rational(-2), make_rational(1, 3)};
    GR p = a * b;
    CHECK(p == GR(make_rational(-2), make_rational(-35, 6)));
    CHECK(p / b == a);
    CHECK(GR::i() * GR::i() == GR(-1));
    CHECK_THROWS_AS(GR().inverse(), DivisionByZero);
}

TEST_CASE("gaussian rendering") {
    CHECK(to_string(GR(make_rational(-1, 2))) == "-1/2");
    CHECK(to_string(GR::i()) == "i");
    CHECK(to_string(GR(0) - GR::i() * GR(2)) == "-2*i");
    CHECK(to_string(GR(make_rational(1), make_rational(-2))) == "(1-2*i)");
}

TEST_CASE("field axioms on random gaussian rationals") {
    testing::Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        GR a = g.gaussian(), b = g.gaussian(), c = g.gaussian();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == GR(1));
    }
}

TEST_CASE("ratfunc_eval examples") {
    // (q^2-1)/(q-1) normalizes to q+1 before evaluation.
    RatFunc f = rf("(q^2-1)/(q-1)");
    CHECK(f == rf("q+1"));
    CHECK(ratfunc_eval(f, GR(1)) == GR(2));
    CHECK(ratfunc_eval(rf("2*q^2/(q^2+1)"), GR(1)) == GR(1));
    CHECK_THROWS_AS(ratfunc_eval(rf("(q-1)/(q^2-2*q+1)"), GR(1)), PoleAtPoint);
}

TEST_CASE("ratfunc order at a point") {
    CHECK(rf("(q-1)^3/(q+1)").order_at(GR(1)) == 3);
    CHECK(rf("q/(q-1)^2").order_at(GR(1)) == -2);
    CHECK(rf("q^2+1").order_at(GR::i()) == 1);
    CHECK(rf("q+7").order_at(GR(1)) == 0);
}

TEST_CASE("ratfunc field axioms and canonical form") {
    testing::Gen g(23);
    for (int trial = 0; trial < 60; ++trial) {
        RatFunc a = g.ratfunc(), b = g.ratfunc(), c = g.ratfunc();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatFunc());
        if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
    }
    // a/b == (a*s)/(b*s) for any nonzero s: identical stored form.
    for (int trial = 0; trial < 60; ++trial) {
        UniPoly num = g.unipoly(3);
        UniPoly den;
        while (den.is_zero()) den = g.unipoly(2);
        UniPoly s;
        while (s.is_zero()) s = g.unipoly(2);
        RatFunc x(num, den), y(num * s, den * s);
        CHECK(x == y);
        CHECK(x.den().leading().is_one());
        CHECK(gcd(x.num(), x.den()).degree() <= 0);
    }
}

TEST_CASE("ratfunc text round trip") {
    CHECK(to_string(rf("(q^2+1)/(2*q)")) == "(q^2+1)/(2*q)");
    CHECK(to_string(RatFunc::q_inv().pow(2)) == "q^-2");
    CHECK(to_string(rf("q + 1")) == "q+1");
    CHECK(to_string(RatFunc()) == "0");
    testing::Gen g(5);
    for (int trial = 0; trial < 80; ++trial) {
        RatFunc f = g.ratfunc();
        CHECK(parse_ratfunc(to_string(f)) == f);
    }
}

TEST_CASE("tau examples and properties") {
    CHECK(tau(lp("t^2 + 3*t^-1")) == lp("t^-2 + 3*t"));
    CHECK(tau(LaurentPoly(1)) == LaurentPoly(1));
    CHECK(tau(lp("t + t^-1")) == lp("t + t^-1"));
    testing::Gen g(7);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly p = g.laurent(), r = g.laurent();
        CHECK(tau(tau(p)) == p);
        CHECK(tau(p * r) == tau(p) * tau(r));
        CHECK(gamma(tau(p)) == gamma(p));
        CHECK(gamma(p * r) == gamma(p) * gamma(r));
    }
}

TEST_CASE("gamma examples") {
    CHECK(gamma(lp("t^2 - 1")) == GR(0));
    CHECK(gamma(lp("t^3 + t^-3 - 2")) == GR(0));
    CHECK(gamma(lp("5*t^-4")) == GR(5));
}

TEST_CASE("laurent rendering") {
    CHECK(to_string(lp("t^2 + 3/t")) == "t^2 + 3*t^-1");
    CHECK(to_string(lp("t^-2 - 1")) == "t^-2 - 1");
    CHECK(to_string(lp("t^2 - 1")) == "t^2 - 1");
    CHECK(to_string(lp("((t + t^-1)/2)^2")) == "1/4*t^2 + 1/4*t^-2 + 1/2");
    CHECK(to_string(lp("i*t - (1+2*i)")) == "i*t + (-1-2*i)");
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK_THROWS_AS(lp("1/(t+1)"), ParseError);
    CHECK_THROWS_AS(lp("t^"), ParseError);
    testing::Gen g(9);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly p = g.laurent(5, 6);
        CHECK(parse_laurent(to_string(p)) == p);
    }
}
