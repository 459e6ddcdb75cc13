#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckec/verify.hpp"

using namespace heckec;

TEST_CASE("coverage is complete") {
    std::vector<std::string> missing;
    CHECK(coverageComplete(&missing));
    CHECK(missing.empty());
    CHECK(suiteNames().size() == 11);
    CHECK_THROWS_AS(suiteCoverage("nope"), ArgumentError);
}

TEST_CASE("suites pass at small rank") {
    for (const std::string& name :
         {"relations", "conj", "jacobi", "cocycle", "center"}) {
        SuiteReport r = runSuite(name, {Family::B, 2}, 0);
        INFO(r.text());
        CHECK(r.ok());
        CHECK(r.checks > 0);
    }
}

TEST_CASE("reports are deterministic") {
    SuiteReport a = runSuite("cocycle", {Family::A, 3}, 7);
    SuiteReport b = runSuite("cocycle", {Family::A, 3}, 7);
    CHECK(a.checks == b.checks);
    CHECK(a.jsonStr() == b.jsonStr());
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(runSuite("nope", {Family::A, 2}, 0), ArgumentError);
    CHECK_THROWS_AS(runSuite("relations", {Family::D, 2}, 0), ArgumentError);
    CHECK_NOTHROW(runSuite("jacobi", {Family::D, 2}, 0, 1, true));
    // the PBW witness needs both parameters generic, so it runs at (B, 2) only
    CHECK_THROWS_AS(runSuite("faithful", {Family::A, 2}, 0), ArgumentError);
    CHECK_THROWS_AS(runSuite("faithful", {Family::B, 3}, 0), ArgumentError);
}

TEST_CASE("faithfulness probe at type B, n=2") {
    SuiteReport a = runSuite("faithful", {Family::B, 2}, 1);
    INFO(a.text());
    CHECK(a.ok());
}
