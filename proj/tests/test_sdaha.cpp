#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckec/sdaha.hpp"
#include "testutil.hpp"

using namespace heckec;
using namespace heckec::testutil;

namespace {

SdahaElem comm(const SdahaElem& a, const SdahaElem& b) { return a * b - b * a; }

SdahaElem randomSdahaMono(const SdahaAlgebra& alg, std::mt19937_64& rng, int maxExp = 1) {
    const WeylGroup& g = WeylGroup::get(alg.type(), true);
    std::uniform_int_distribution<int> ed(0, maxExp);
    ExpVec xi(alg.rank()), y(alg.rank());
    for (int i = 0; i < alg.rank(); ++i) {
        xi.e[i] = uint8_t(ed(rng));
        y.e[i] = uint8_t(ed(rng));
    }
    return alg.monomial({xi, randomElement(g, rng), y}, randomParamPoly(rng, 1));
}

}  // namespace

TEST_CASE("skew-polynomial and t-xi relations") {
    const SdahaAlgebra& alg = SdahaAlgebra::get({Family::A, 3});
    // xi_1 xi_2 stays put, xi_2 xi_1 flips sign
    SdahaElem x12 = alg.mul(alg.xiGen(1), alg.xiGen(2));
    CHECK(alg.mul(alg.xiGen(2), alg.xiGen(1)) == -x12);
    // xi_i^2 is not truncated
    SdahaElem sq = alg.mul(alg.xiGen(1), alg.xiGen(1));
    CHECK(!sq.isZero());

    // t_1 xi_1 = -xi_2 t_1
    CHECK(alg.mul(alg.tGen(1), alg.xiGen(1)) ==
          -alg.mul(alg.xiGen(2), alg.tGen(1)));
    // t_1 xi_3 = -xi_3 t_1
    CHECK(alg.mul(alg.tGen(1), alg.xiGen(3)) ==
          -alg.mul(alg.xiGen(3), alg.tGen(1)));
    // t_1 y_1 = y_2 t_1 and t_1 y_3 = y_3 t_1
    CHECK(alg.mul(alg.tGen(1), alg.yGen(1)) == alg.mul(alg.yGen(2), alg.tGen(1)));
    CHECK(alg.mul(alg.tGen(1), alg.yGen(3)) == alg.mul(alg.yGen(3), alg.tGen(1)));
}

TEST_CASE("type-specific t_n rules") {
    SUBCASE("type B") {
        const SdahaAlgebra& alg = SdahaAlgebra::get({Family::B, 2});
        CHECK(alg.mul(alg.tGen(2), alg.xiGen(2)) ==
              -alg.mul(alg.xiGen(2), alg.tGen(2)));
        CHECK(alg.mul(alg.tGen(2), alg.xiGen(1)) ==
              -alg.mul(alg.xiGen(1), alg.tGen(2)));
        CHECK(alg.mul(alg.tGen(2), alg.yGen(2)) ==
              -alg.mul(alg.yGen(2), alg.tGen(2)));
        CHECK(alg.mul(alg.tGen(2), alg.yGen(1)) ==
              alg.mul(alg.yGen(1), alg.tGen(2)));
    }
    SUBCASE("type D") {
        const SdahaAlgebra& alg = SdahaAlgebra::get({Family::D, 4});
        int n = 4;
        CHECK(alg.mul(alg.tGen(n), alg.xiGen(n)) ==
              -alg.mul(alg.xiGen(n - 1), alg.tGen(n)));
        CHECK(alg.mul(alg.tGen(n), alg.yGen(n)) ==
              -alg.mul(alg.yGen(n - 1), alg.tGen(n)));
        CHECK(alg.mul(alg.tGen(n), alg.xiGen(1)) ==
              -alg.mul(alg.xiGen(1), alg.tGen(n)));
        CHECK(alg.mul(alg.tGen(n), alg.yGen(1)) ==
              alg.mul(alg.yGen(1), alg.tGen(n)));
    }
}

TEST_CASE("defining brackets against the engine") {
    for (WeylType t : {WeylType{Family::A, 3}, WeylType{Family::B, 2},
                       WeylType{Family::B, 3}, WeylType{Family::D, 3}}) {
        const SdahaAlgebra& alg = SdahaAlgebra::get(t, true);
        for (int i = 1; i <= t.n; ++i)
            for (int j = 1; j <= t.n; ++j)
                CHECK(comm(alg.yGen(i), alg.xiGen(j)) == alg.bracketYXi(i, j));
    }
}

TEST_CASE("spec bracket examples") {
    const SdahaAlgebra& alg = SdahaAlgebra::get({Family::A, 2});
    ParamPoly u = ParamPoly::u();
    // y_1 xi_1 = xi_1 y_1 + u t_1
    SdahaElem expect = alg.zero();
    expect.add({ExpVec::unit(2, 1), SignedPerm::identity(2), ExpVec::unit(2, 1)},
               ParamPoly(1));
    expect.add({ExpVec(2), transposition(2, 1, 2), ExpVec(2)}, u);
    CHECK(alg.mul(alg.yGen(1), alg.xiGen(1)) == expect);

    // [y_2, xi_1] = -u [1,2] = -u t_1
    SdahaElem br = alg.bracketYXi(2, 1);
    SdahaElem expect2 = alg.zero();
    expect2.add({ExpVec(2), transposition(2, 1, 2), ExpVec(2)}, -u);
    CHECK(br == expect2);
}

TEST_CASE("associativity fuzz") {
    std::mt19937_64 rng(43);
    for (WeylType t : {WeylType{Family::A, 2}, WeylType{Family::B, 2},
                       WeylType{Family::D, 2}}) {
        const SdahaAlgebra& alg = SdahaAlgebra::get(t, true);
        std::vector<SdahaElem> gens;
        for (int i = 1; i <= t.n; ++i) {
            gens.push_back(alg.xiGen(i));
            gens.push_back(alg.yGen(i));
        }
        for (int k = 1; k <= numGenerators(t); ++k) gens.push_back(alg.tGen(k));
        for (auto& a : gens)
            for (auto& b : gens)
                for (auto& c : gens)
                    CHECK(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
        for (int it = 0; it < 50; ++it) {
            SdahaElem a = randomSdahaMono(alg, rng);
            SdahaElem b = randomSdahaMono(alg, rng);
            SdahaElem c = randomSdahaMono(alg, rng);
            CHECK(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
        }
    }
}

TEST_CASE("rank-4 associativity spot check") {
    std::mt19937_64 rng(97);
    for (WeylType t : {WeylType{Family::B, 4}, WeylType{Family::D, 4}}) {
        const SdahaAlgebra& alg = SdahaAlgebra::get(t);
        for (int it = 0; it < 20; ++it) {
            SdahaElem a = randomSdahaMono(alg, rng);
            SdahaElem b = randomSdahaMono(alg, rng);
            SdahaElem c = randomSdahaMono(alg, rng);
            CHECK(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
        }
    }
}

TEST_CASE("closed-form commutators") {
    SUBCASE("type A single variable") {
        const SdahaAlgebra& alg = SdahaAlgebra::get({Family::A, 2});
        VarPoly f = VarPoly::var(2, 2);  // y_2
        SdahaElem got = alg.commPolyXiClosed(f, 1);
        SdahaElem expect = alg.zero();
        expect.add({ExpVec(2), transposition(2, 1, 2), ExpVec(2)}, -ParamPoly::u());
        CHECK(got == expect);  // [y_2, xi_1] = -u t_1
    }
    SUBCASE("symmetric polynomial gives zero (type A)") {
        const SdahaAlgebra& alg = SdahaAlgebra::get({Family::A, 3});
        VarPoly e1 = VarPoly::var(3, 1) + VarPoly::var(3, 2) + VarPoly::var(3, 3);
        CHECK(alg.commPolyXiClosed(e1, 1).isZero());
        CHECK(comm(alg.fromYPoly(e1), alg.xiGen(1)).isZero());
    }
    SUBCASE("type B power example") {
        const SdahaAlgebra& alg = SdahaAlgebra::get({Family::B, 2});
        VarPoly f = VarPoly::var(2, 1) * VarPoly::var(2, 1);  // y_1^2
        SdahaElem got = alg.commPolyXiClosed(f, 1);
        CHECK(got == comm(alg.fromYPoly(f), alg.xiGen(1)));
        // tau-term vanishes for an even power, bars survive
        VarPoly y1 = VarPoly::var(2, 1), y2 = VarPoly::var(2, 2);
        ParamPoly u = ParamPoly::u();
        SdahaElem expect(alg.type());
        {
            // -u (y1 + y2) [2,1] + u (y1 - y2) [2,1]-bar, renormalized
            SdahaElem a = alg.fromSpin(oddReflection({Family::B, 2}, OddKind::TIJ, 2, 1));
            SdahaElem b =
                alg.fromSpin(oddReflection({Family::B, 2}, OddKind::TBAR_IJ, 2, 1));
            expect = alg.mul(alg.fromYPoly(y1 + y2), a) * (-u) +
                     alg.mul(alg.fromYPoly(y1 - y2), b) * u;
        }
        CHECK(got == expect);
    }
    SUBCASE("random agreement with the engine") {
        std::mt19937_64 rng(47);
        for (WeylType t : {WeylType{Family::A, 3}, WeylType{Family::B, 2},
                           WeylType{Family::D, 3}}) {
            const SdahaAlgebra& alg = SdahaAlgebra::get(t, true);
            std::uniform_int_distribution<int> ed(0, 2);
            for (int it = 0; it < 25; ++it) {
                ExpVec e(t.n);
                for (int i = 0; i < t.n; ++i) e.e[i] = uint8_t(ed(rng));
                VarPoly f = VarPoly::monomial(t.n, e, randomParamPoly(rng, 1));
                int i = 1 + int(rng() % t.n);
                CHECK(alg.commPolyXiClosed(f, i) ==
                      comm(alg.fromYPoly(f), alg.xiGen(i)));
            }
        }
    }
}

TEST_CASE("xi squares and the even center") {
    for (WeylType t : {WeylType{Family::A, 3}, WeylType{Family::B, 2}}) {
        const SdahaAlgebra& alg = SdahaAlgebra::get(t);
        // [xi_i^2, xi_j] = 0
        for (int i = 1; i <= t.n; ++i) {
            SdahaElem sq = alg.mul(alg.xiGen(i), alg.xiGen(i));
            for (int j = 1; j <= t.n; ++j)
                CHECK(comm(sq, alg.xiGen(j)).isZero());
        }
        // p_1(xi^2) commutes with every generator
        SdahaElem p1 = alg.zero();
        for (int i = 1; i <= t.n; ++i)
            p1 = p1 + alg.mul(alg.xiGen(i), alg.xiGen(i));
        std::vector<SdahaElem> gens;
        for (int i = 1; i <= t.n; ++i) {
            gens.push_back(alg.xiGen(i));
            gens.push_back(alg.yGen(i));
        }
        for (int k = 1; k <= numGenerators(t); ++k) gens.push_back(alg.tGen(k));
        for (auto& g : gens) CHECK(comm(p1, g).isZero());
    }
}

TEST_CASE("big isomorphism on generators") {
    WeylType a2{Family::A, 2};
    const DahcaAlgebra& dal = DahcaAlgebra::get(a2);
    const SdahaAlgebra& sal = SdahaAlgebra::get(a2);

    // phi(x_1) = sqrt(-2) (c_1 (x) xi_1)
    TensorSdahaElem img = phiBig(dal.xGen(1));
    TensorSdahaElem expect(a2);
    expect.add(1, {ExpVec::unit(2, 1), SignedPerm::identity(2), ExpVec(2)},
               ParamPoly(CycScalar::sqrtMinus2()));
    CHECK(img == expect);

    // psi(1 (x) xi_1) = (1/sqrt(-2)) c_1 x_1 = -(1/sqrt(-2)) x_1 c_1
    DahcaElem got = psiBig(tensorSdahaFromSdaha(sal.xiGen(1)));
    DahcaElem expect2 = dal.zero();
    expect2.add({ExpVec::unit(2, 1), 1, SignedPerm::identity(2), ExpVec(2)},
                -ParamPoly(CycScalar::sqrtMinus2().inverse()));
    CHECK(got == expect2);

    // phi(y_i) = 1 (x) y_i, phi(c_i) = c_i (x) 1
    CHECK(phiBig(dal.yGen(2)) == tensorSdahaFromSdaha(sal.yGen(2)));
    CHECK(phiBig(dal.cGen(1)) == tensorSdahaFromClifford(a2, 1, ParamPoly(1)));
}

TEST_CASE("big isomorphism round trips and multiplicativity") {
    std::mt19937_64 rng(53);
    for (WeylType t : {WeylType{Family::A, 2}, WeylType{Family::B, 2},
                       WeylType{Family::D, 3}}) {
        const DahcaAlgebra& dal = DahcaAlgebra::get(t, true);
        const SdahaAlgebra& sal = SdahaAlgebra::get(t, true);
        const WeylGroup& g = WeylGroup::get(t, true);
        std::uniform_int_distribution<unsigned> mask(0, (1u << t.n) - 1);
        std::uniform_int_distribution<int> ed(0, 1);
        auto randomDahca = [&] {
            ExpVec x(t.n), y(t.n);
            for (int i = 0; i < t.n; ++i) {
                x.e[i] = uint8_t(ed(rng));
                y.e[i] = uint8_t(ed(rng));
            }
            return dal.monomial({x, mask(rng), randomElement(g, rng), y},
                                randomParamPoly(rng, 1));
        };
        for (int it = 0; it < 30; ++it) {
            DahcaElem a = randomDahca(), b = randomDahca();
            CHECK(psiBig(phiBig(a)) == a);
            CHECK(phiBig(dal.mul(a, b)) == phiBig(a) * phiBig(b));
        }
        for (int it = 0; it < 30; ++it) {
            TensorSdahaElem x =
                tensorSdahaFromClifford(t, mask(rng), ParamPoly(1)) *
                tensorSdahaFromSdaha(randomSdahaMono(sal, rng));
            TensorSdahaElem y =
                tensorSdahaFromClifford(t, mask(rng), ParamPoly(1)) *
                tensorSdahaFromSdaha(randomSdahaMono(sal, rng));
            CHECK(phiBig(psiBig(x)) == x);
            CHECK(psiBig(x * y) == psiBig(x) * psiBig(y));
        }
    }
}

TEST_CASE("native product agrees with transport through Psi/Phi") {
    std::mt19937_64 rng(59);
    for (WeylType t : {WeylType{Family::A, 3}, WeylType{Family::B, 2},
                       WeylType{Family::D, 3}}) {
        const SdahaAlgebra& sal = SdahaAlgebra::get(t, true);
        const DahcaAlgebra& dal = DahcaAlgebra::get(t, true);
        for (int it = 0; it < 30; ++it) {
            SdahaElem a = randomSdahaMono(sal, rng), b = randomSdahaMono(sal, rng);
            DahcaElem pa = psiBig(tensorSdahaFromSdaha(a));
            DahcaElem pb = psiBig(tensorSdahaFromSdaha(b));
            CHECK(phiBig(dal.mul(pa, pb)) == tensorSdahaFromSdaha(sal.mul(a, b)));
        }
    }
}
