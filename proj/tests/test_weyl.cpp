#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "heckec/weyl.hpp"
#include "testutil.hpp"

using namespace heckec;

namespace {

// Independent oracle: enumerate words by length then lexicographically and
// record the first word reaching each element.
std::map<uint64_t, std::vector<int>> bruteForceCanonicalWords(const WeylType& t,
                                                              bool smallD = false) {
    const WeylGroup& g = WeylGroup::get(t, smallD);
    std::map<uint64_t, std::vector<int>> best;
    std::vector<std::pair<SignedPerm, std::vector<int>>> layer{
        {SignedPerm::identity(t.n), {}}};
    best[SignedPerm::identity(t.n).key()] = {};
    while (best.size() < g.size()) {
        std::vector<std::pair<SignedPerm, std::vector<int>>> next;
        for (auto& [w, word] : layer) {
            for (int k = 1; k <= g.numGens(); ++k) {
                SignedPerm w2 = w.compose(g.simple(k));
                std::vector<int> word2 = word;
                word2.push_back(k);
                if (best.emplace(w2.key(), word2).second) next.emplace_back(w2, word2);
            }
        }
        layer = std::move(next);
    }
    return best;
}

}  // namespace

TEST_CASE("signed permutation basics") {
    SignedPerm s12 = transposition(3, 1, 2);
    CHECK(s12.compose(s12).isIdentity());
    CHECK(s12.act(1) == std::pair<int, int>{2, 1});

    SignedPerm tau1 = signFlip(2, 1);
    CHECK(tau1.compose(tau1).isIdentity());
    CHECK(tau1.act(1) == std::pair<int, int>{1, -1});

    SignedPerm sb12 = barTransposition(2, 1, 2);
    CHECK(sb12.act(2) == std::pair<int, int>{1, -1});
    CHECK(sb12.compose(sb12).isIdentity());

    CHECK(s12.str() == "[2,1,3]");
    CHECK(sb12.str() == "[-2,-1]");
    CHECK_THROWS_AS(s12.compose(tau1), ArgumentError);
}

TEST_CASE("sbar product convention in type D") {
    // sbar_12 = s_{2n} s_{1,n-1} s_n s_{1,n-1} s_{2n} at n = 4
    int n = 4;
    WeylType d{Family::D, n};
    SignedPerm chain = transposition(n, 2, n)
                           .compose(transposition(n, 1, n - 1))
                           .compose(simpleReflection(d, n))
                           .compose(transposition(n, 1, n - 1))
                           .compose(transposition(n, 2, n));
    CHECK(chain == barTransposition(n, 1, 2));
}

TEST_CASE("reflection constructors") {
    WeylType b3{Family::B, 3};
    CHECK(reflection(b3, ReflectionKind::TAU_I, 3) == simpleReflection(b3, 3));
    WeylType d4{Family::D, 4};
    CHECK(reflection(d4, ReflectionKind::SBAR_IJ, 3, 4) == simpleReflection(d4, 4));
    WeylType a3{Family::A, 3};
    CHECK(reflection(a3, ReflectionKind::SIJ, 1, 2) == simpleReflection(a3, 1));
    CHECK_THROWS_AS(reflection(a3, ReflectionKind::TAU_I, 1), ArgumentError);
    CHECK_THROWS_AS(reflection(a3, ReflectionKind::SBAR_IJ, 1, 2), ArgumentError);
    CHECK_THROWS_AS(reflection(d4, ReflectionKind::TAU_I, 1), ArgumentError);
}

TEST_CASE("Coxeter relations hold for all families at small rank") {
    for (WeylType t : {WeylType{Family::A, 3}, WeylType{Family::A, 4},
                       WeylType{Family::B, 2}, WeylType{Family::B, 3},
                       WeylType{Family::B, 4}, WeylType{Family::D, 4}}) {
        int m = numGenerators(t);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                SignedPerm prod = SignedPerm::identity(t.n);
                SignedPerm si = simpleReflection(t, i), sj = simpleReflection(t, j);
                for (int k = 0; k < coxeterM(t, i, j); ++k)
                    prod = prod.compose(si).compose(sj);
                CHECK(prod.isIdentity());
            }
    }
}

TEST_CASE("type validation") {
    CHECK_THROWS_AS(validateType({Family::D, 3}), ArgumentError);
    CHECK_NOTHROW(validateType({Family::D, 3}, true));
    CHECK_THROWS_AS(validateType({Family::B, 1}), ArgumentError);
    CHECK_THROWS_AS(validateType({Family::A, 9}), ArgumentError);
    CHECK_NOTHROW(validateType({Family::A, 1}));
}

TEST_CASE("membership") {
    WeylType d4{Family::D, 4};
    const WeylGroup& g = WeylGroup::get(d4);
    CHECK(g.size() == 192);
    CHECK(!memberOf(d4, signFlip(4, 1)));
    CHECK(memberOf(d4, barTransposition(4, 1, 3)));
    CHECK_THROWS_AS(g.length(signFlip(4, 1)), ArgumentError);

    CHECK(WeylGroup::get({Family::B, 3}).size() == 48);
    CHECK(WeylGroup::get({Family::A, 4}).size() == 24);
    CHECK(WeylGroup::get({Family::D, 2}, true).size() == 4);
}

TEST_CASE("canonical reduced words against brute-force enumeration") {
    for (WeylType t : {WeylType{Family::B, 2}, WeylType{Family::A, 3},
                       WeylType{Family::D, 4}}) {
        const WeylGroup& g = WeylGroup::get(t);
        auto oracle = bruteForceCanonicalWords(t);
        for (const SignedPerm& w : g.elements()) {
            CHECK(g.reducedWord(w) == oracle.at(w.key()));
        }
    }
}

TEST_CASE("reduced word examples") {
    WeylType b2{Family::B, 2};
    const WeylGroup& g = WeylGroup::get(b2);
    CHECK(g.reducedWord(SignedPerm::identity(2)).empty());
    CHECK(g.reducedWord(signFlip(2, 1)) == std::vector<int>{1, 2, 1});

    WeylType a3{Family::A, 3};
    const WeylGroup& s3 = WeylGroup::get(a3);
    CHECK(s3.reducedWord(transposition(3, 1, 3)) == std::vector<int>{1, 2, 1});
}

TEST_CASE("reduced word round trips and length symmetry") {
    for (WeylType t : {WeylType{Family::B, 3}, WeylType{Family::A, 4}}) {
        const WeylGroup& g = WeylGroup::get(t);
        for (const SignedPerm& w : g.elements()) {
            auto word = g.reducedWord(w);
            CHECK(g.wordToElement(word) == w);
            CHECK(int(word.size()) == g.length(w));
            CHECK(g.length(w) == g.length(w.inverse()));
            CHECK(w.detSign() == (g.length(w) % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("monomial action") {
    SignedPerm sb12 = barTransposition(3, 1, 2);
    ExpVec a(3);
    a.e[0] = 2;
    a.e[1] = 1;  // x1^2 x2
    auto [sgn, img] = sb12.actExp(a);
    CHECK(sgn == -1);  // (-x2)^2 * (-x1)^1
    CHECK(img.e[0] == 1);
    CHECK(img.e[1] == 2);
}
