#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckec/cdaha.hpp"
#include "testutil.hpp"

using namespace heckec;
using namespace heckec::testutil;

namespace {

CdahaElem randomCdahaMono(const CdahaAlgebra& alg, std::mt19937_64& rng) {
    const WeylGroup& g = WeylGroup::get(alg.type(), true);
    std::uniform_int_distribution<int> ed(0, 1);
    ExpVec x(alg.rank()), y(alg.rank());
    for (int i = 0; i < alg.rank(); ++i) {
        x.e[i] = uint8_t(ed(rng));
        y.e[i] = uint8_t(ed(rng));
    }
    CoverElem cov{int(rng() & 1), randomElement(g, rng)};
    // cdaha coefficients never involve the parameter t
    return alg.monomial({x, cov, y}, randomParamPoly(rng, 1, false));
}

DahaElem randomDahaMono(const DahaAlgebra& alg, std::mt19937_64& rng) {
    const WeylGroup& g = WeylGroup::get(alg.type(), true);
    std::uniform_int_distribution<int> ed(0, 1);
    ExpVec x(alg.rank()), y(alg.rank());
    for (int i = 0; i < alg.rank(); ++i) {
        x.e[i] = uint8_t(ed(rng));
        y.e[i] = uint8_t(ed(rng));
    }
    return alg.monomial({x, randomElement(g, rng), y}, randomParamPoly(rng, 1));
}

}  // namespace

TEST_CASE("covering relations") {
    const CdahaAlgebra& alg = CdahaAlgebra::get({Family::A, 3});
    CdahaElem z = alg.zElem();

    // z is central of order 2
    CHECK(alg.mul(z, z) == alg.one());
    CHECK(alg.mul(z, alg.xtGen(1)) == alg.mul(alg.xtGen(1), z));
    CHECK(alg.mul(z, alg.ttGen(2)) == alg.mul(alg.ttGen(2), z));

    // xt_2 xt_1 = z xt_1 xt_2
    CHECK(alg.mul(alg.xtGen(2), alg.xtGen(1)) ==
          alg.mul(z, alg.mul(alg.xtGen(1), alg.xtGen(2))));
    // yt's commute
    CHECK(alg.mul(alg.ytGen(2), alg.ytGen(1)) ==
          alg.mul(alg.ytGen(1), alg.ytGen(2)));
    // tt_1 xt_3 = z xt_3 tt_1
    CHECK(alg.mul(alg.ttGen(1), alg.xtGen(3)) ==
          alg.mul(z, alg.mul(alg.xtGen(3), alg.ttGen(1))));
    // tt_1 xt_2 = z xt_1 tt_1
    CHECK(alg.mul(alg.ttGen(1), alg.xtGen(2)) ==
          alg.mul(z, alg.mul(alg.xtGen(1), alg.ttGen(1))));
    // tt_1 yt_2 = yt_1 tt_1 and tt_1 yt_3 = yt_3 tt_1
    CHECK(alg.mul(alg.ttGen(1), alg.ytGen(2)) ==
          alg.mul(alg.ytGen(1), alg.ttGen(1)));
    CHECK(alg.mul(alg.ttGen(1), alg.ytGen(3)) ==
          alg.mul(alg.ytGen(3), alg.ttGen(1)));
}

TEST_CASE("type-specific covering tt_n rules") {
    SUBCASE("type D") {
        const CdahaAlgebra& alg = CdahaAlgebra::get({Family::D, 4});
        int n = 4;
        CdahaElem z = alg.zElem();
        CHECK(alg.mul(alg.ttGen(n), alg.xtGen(1)) ==
              alg.mul(z, alg.mul(alg.xtGen(1), alg.ttGen(n))));
        CHECK(alg.mul(alg.ttGen(n), alg.xtGen(n)) ==
              -alg.mul(alg.xtGen(n - 1), alg.ttGen(n)));
        CHECK(alg.mul(alg.ttGen(n), alg.ytGen(n)) ==
              -alg.mul(alg.ytGen(n - 1), alg.ttGen(n)));
        CHECK(alg.mul(alg.ttGen(n), alg.ytGen(1)) ==
              alg.mul(alg.ytGen(1), alg.ttGen(n)));
    }
    SUBCASE("type B") {
        const CdahaAlgebra& alg = CdahaAlgebra::get({Family::B, 2});
        CdahaElem z = alg.zElem();
        CHECK(alg.mul(alg.ttGen(2), alg.xtGen(1)) ==
              alg.mul(z, alg.mul(alg.xtGen(1), alg.ttGen(2))));
        CHECK(alg.mul(alg.ttGen(2), alg.xtGen(2)) ==
              -alg.mul(alg.xtGen(2), alg.ttGen(2)));
        CHECK(alg.mul(alg.ttGen(2), alg.ytGen(2)) ==
              -alg.mul(alg.ytGen(2), alg.ttGen(2)));
    }
}

TEST_CASE("covering bracket example") {
    const CdahaAlgebra& alg = CdahaAlgebra::get({Family::A, 2});
    // yt_2 xt_1 = xt_1 yt_2 + u z {1,2}
    CdahaElem lhs = alg.mul(alg.ytGen(2), alg.xtGen(1));
    CoverElem g = coverLift({Family::A, 2}, OddKind::TIJ, 1, 2);
    g.zexp ^= 1;
    CdahaElem expect = alg.mul(alg.xtGen(1), alg.ytGen(2)) +
                       alg.coverElem(g) * ParamPoly::u();
    CHECK(lhs == expect);
}

TEST_CASE("covering brackets against the engine") {
    for (WeylType t : {WeylType{Family::A, 3}, WeylType{Family::B, 2},
                       WeylType{Family::D, 3}}) {
        const CdahaAlgebra& alg = CdahaAlgebra::get(t, true);
        for (int i = 1; i <= t.n; ++i)
            for (int j = 1; j <= t.n; ++j)
                CHECK(alg.mul(alg.ytGen(i), alg.xtGen(j)) -
                          alg.mul(alg.xtGen(j), alg.ytGen(i)) ==
                      alg.bracketYtXt(i, j));
    }
}

TEST_CASE("rational Cherednik relations") {
    const DahaAlgebra& alg = DahaAlgebra::get({Family::A, 2});
    // y_2 x_1 = x_1 y_2 + u s12
    DahaElem expect = alg.zero();
    expect.add({ExpVec::unit(2, 1), SignedPerm::identity(2), ExpVec::unit(2, 2)},
               ParamPoly(1));
    expect.add({ExpVec(2), transposition(2, 1, 2), ExpVec(2)}, ParamPoly::u());
    CHECK(alg.mul(alg.yGen(2), alg.xGen(1)) == expect);

    // y_1 x_1 = x_1 y_1 + t - u s12
    DahaElem expect2 = alg.zero();
    expect2.add({ExpVec::unit(2, 1), SignedPerm::identity(2), ExpVec::unit(2, 1)},
                ParamPoly(1));
    expect2.add({ExpVec(2), SignedPerm::identity(2), ExpVec(2)}, ParamPoly::t());
    expect2.add({ExpVec(2), transposition(2, 1, 2), ExpVec(2)}, -ParamPoly::u());
    CHECK(alg.mul(alg.yGen(1), alg.xGen(1)) == expect2);

    // s12 x_1 = x_2 s12
    DahaElem expect3 = alg.zero();
    expect3.add({ExpVec::unit(2, 2), transposition(2, 1, 2), ExpVec(2)}, ParamPoly(1));
    CHECK(alg.mul(alg.weylElem(transposition(2, 1, 2)), alg.xGen(1)) == expect3);
}

TEST_CASE("associativity fuzz for covering and Cherednik engines") {
    std::mt19937_64 rng(61);
    for (WeylType t : {WeylType{Family::A, 2}, WeylType{Family::B, 2},
                       WeylType{Family::D, 2}}) {
        const CdahaAlgebra& calg = CdahaAlgebra::get(t, true);
        const DahaAlgebra& dalg = DahaAlgebra::get(t, true);
        std::vector<CdahaElem> cgens;
        std::vector<DahaElem> dgens;
        for (int i = 1; i <= t.n; ++i) {
            cgens.push_back(calg.xtGen(i));
            cgens.push_back(calg.ytGen(i));
            dgens.push_back(dalg.xGen(i));
            dgens.push_back(dalg.yGen(i));
        }
        for (int k = 1; k <= numGenerators(t); ++k) {
            cgens.push_back(calg.ttGen(k));
            dgens.push_back(dalg.weylElem(simpleReflection(t, k)));
        }
        cgens.push_back(calg.zElem());
        for (auto& a : cgens)
            for (auto& b : cgens)
                for (auto& c : cgens)
                    CHECK(calg.mul(calg.mul(a, b), c) == calg.mul(a, calg.mul(b, c)));
        for (auto& a : dgens)
            for (auto& b : dgens)
                for (auto& c : dgens)
                    CHECK(dalg.mul(dalg.mul(a, b), c) == dalg.mul(a, dalg.mul(b, c)));
        for (int it = 0; it < 40; ++it) {
            CdahaElem a = randomCdahaMono(calg, rng), b = randomCdahaMono(calg, rng),
                      c = randomCdahaMono(calg, rng);
            CHECK(calg.mul(calg.mul(a, b), c) == calg.mul(a, calg.mul(b, c)));
            DahaElem x = randomDahaMono(dalg, rng), y = randomDahaMono(dalg, rng),
                     z = randomDahaMono(dalg, rng);
            CHECK(dalg.mul(dalg.mul(x, y), z) == dalg.mul(x, dalg.mul(y, z)));
        }
    }
}

TEST_CASE("quotient maps on generators") {
    const CdahaAlgebra& alg = CdahaAlgebra::get({Family::A, 2});
    const DahaAlgebra& dalg = DahaAlgebra::get({Family::A, 2});
    const SdahaAlgebra& salg = SdahaAlgebra::get({Family::A, 2});

    CdahaElem zx = alg.mul(alg.zElem(), alg.xtGen(1));
    CHECK(upsilonPlus(zx) == dalg.xGen(1));
    CHECK(upsilonMinus(zx) == -salg.xiGen(1));
    CHECK(upsilonPlus(alg.ttGen(1)) ==
          dalg.weylElem(simpleReflection({Family::A, 2}, 1)));
    CHECK(upsilonMinus(alg.ttGen(1)) == salg.tGen(1));
}

TEST_CASE("quotient maps are multiplicative") {
    std::mt19937_64 rng(67);
    for (WeylType t : {WeylType{Family::A, 3}, WeylType{Family::B, 2},
                       WeylType{Family::D, 3}}) {
        const CdahaAlgebra& alg = CdahaAlgebra::get(t, true);
        const DahaAlgebra& dalg = DahaAlgebra::get(t, true);
        const SdahaAlgebra& salg = SdahaAlgebra::get(t, true);
        for (int it = 0; it < 40; ++it) {
            CdahaElem a = randomCdahaMono(alg, rng), b = randomCdahaMono(alg, rng);
            CdahaElem ab = alg.mul(a, b);
            // Upsilon+ lands in daha with t = 0
            DahaElem plus = dalg.mul(upsilonPlus(a), upsilonPlus(b))
                                .specializeT(CycScalar(0));
            CHECK(upsilonPlus(ab) == plus);
            CHECK(upsilonMinus(ab) == salg.mul(upsilonMinus(a), upsilonMinus(b)));
        }
    }
}

TEST_CASE("type B diagonal bracket maps onto the sdaha bracket") {
    const CdahaAlgebra& alg = CdahaAlgebra::get({Family::B, 2});
    const SdahaAlgebra& salg = SdahaAlgebra::get({Family::B, 2});
    CHECK(upsilonMinus(alg.bracketYtXt(1, 1)) == salg.bracketYXi(1, 1));
    CHECK(upsilonMinus(alg.bracketYtXt(2, 1)) == salg.bracketYXi(2, 1));
    const DahaAlgebra& dalg = DahaAlgebra::get({Family::B, 2});
    CHECK(upsilonPlus(alg.bracketYtXt(1, 1)) ==
          dalg.bracketYX(1, 1).specializeT(CycScalar(0)));
}

TEST_CASE("commutative square on group elements") {
    for (WeylType t : {WeylType{Family::B, 2}, WeylType{Family::A, 3}}) {
        const CdahaAlgebra& alg = CdahaAlgebra::get(t);
        const DahaAlgebra& dalg = DahaAlgebra::get(t);
        const SdahaAlgebra& salg = SdahaAlgebra::get(t);
        const WeylGroup& g = WeylGroup::get(t);
        const SpinContext& ctx = SpinContext::get(t);
        for (const SignedPerm& w : g.elements())
            for (const SignedPerm& w2 : g.elements()) {
                CoverElem a{0, w}, b{0, w2};
                CdahaElem prod = alg.mul(alg.coverElem(a), alg.coverElem(b));
                CHECK(prod == alg.coverElem(ctx.coverMul(a, b)));
                CHECK(upsilonPlus(prod) ==
                      dalg.mul(dalg.weylElem(w), dalg.weylElem(w2)));
                CHECK(upsilonMinus(prod) ==
                      salg.mul(salg.fromSpin(SpinElem::basis(t, w, ParamPoly(1))),
                               salg.fromSpin(SpinElem::basis(t, w2, ParamPoly(1)))));
            }
    }
}

TEST_CASE("printing") {
    const CdahaAlgebra& alg = CdahaAlgebra::get({Family::A, 2});
    CdahaElem p = alg.mul(alg.xtGen(2), alg.xtGen(1));
    CHECK(p.str() == "xt1*xt2*z");  // canonical piece order: xt, z, wt, yt
    const DahaAlgebra& dalg = DahaAlgebra::get({Family::A, 2});
    CHECK(dalg.mul(dalg.yGen(1), dalg.xGen(1)).str() ==
          "t - u*w[2,1] + x1*y1");
}
