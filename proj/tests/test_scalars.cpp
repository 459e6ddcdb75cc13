#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckec/scalars.hpp"
#include "testutil.hpp"

using namespace heckec;
using namespace heckec::testutil;

TEST_CASE("eighth root of unity identities") {
    CycScalar z = CycScalar::zetaPow(1);
    CHECK(CycScalar::zetaPow(1) * CycScalar::zetaPow(3) == CycScalar(-1));
    CHECK(CycScalar::sqrtMinus1() * CycScalar::sqrtMinus1() == CycScalar(-1));
    CHECK(CycScalar::sqrt2() * CycScalar::sqrt2() == CycScalar(2));
    CHECK(CycScalar::sqrtMinus2() * CycScalar::sqrtMinus2() == CycScalar(-2));
    // i * sqrt2 = sqrt(-2)
    CHECK(CycScalar::sqrtMinus1() * CycScalar::sqrt2() == CycScalar::sqrtMinus2());
    CHECK(z * z == CycScalar::sqrtMinus1());
}

TEST_CASE("inverse") {
    CycScalar half = CycScalar(Rational(1, 2));
    CHECK(CycScalar::sqrt2().inverse() == CycScalar::sqrt2() * half);
    CHECK_THROWS_AS(CycScalar().inverse(), DivisionByZeroError);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        CycScalar a = randomNonzeroCyc(rng);
        CHECK(a.inverse() * a == CycScalar(1));
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        CycScalar a = randomCyc(rng), b = randomCyc(rng), c = randomCyc(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
    for (int i = 0; i < 1000; ++i) {
        ParamPoly a = randomParamPoly(rng), b = randomParamPoly(rng),
                  c = randomParamPoly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("parameter polynomial basics") {
    ParamPoly u = ParamPoly::u(), v = ParamPoly::v(), t = ParamPoly::t();
    CHECK((u + v) * u == u * u + u * v);
    CHECK((u - u).isZero());

    ParamPoly p = ParamPoly(CycScalar::sqrt2()) * v;
    CHECK(p.specialize({}, {}, CycScalar(0)).isZero());

    ParamPoly q = t - u;
    CHECK(q.specialize(CycScalar(0), CycScalar(1), {}) == ParamPoly(-1));

    // partial specialization leaves the other variables alone
    ParamPoly r = t * u + v;
    CHECK(r.specialize(CycScalar(2), {}, {}) == ParamPoly(2) * u + v);
}

TEST_CASE("printing") {
    CHECK(CycScalar().str() == "0");
    CHECK(CycScalar(1).str() == "1");
    CHECK((CycScalar(1) + CycScalar::zetaPow(2)).str() == "1 + z8^2");
    CHECK((-CycScalar::sqrt2()).str() == "-z8 + z8^3");
    CHECK(CycScalar(Rational(-3, 2)).str() == "-3/2");
    CHECK(ParamPoly::u().str() == "u");
    // canonical order: degree, then lex on (t,u,v) exponents
    CHECK((ParamPoly::u() * ParamPoly::u() + ParamPoly::u() * ParamPoly::v()).str() ==
          "u*v + u^2");
    CHECK((ParamPoly(-1) * ParamPoly::u()).str() == "-u");
    CHECK(ParamPoly().str() == "0");
}
