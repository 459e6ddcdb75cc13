#pragma once

#include <random>

#include "heckec/scalars.hpp"
#include "heckec/weyl.hpp"

namespace heckec::testutil {

inline Rational randomRational(std::mt19937_64& rng, int maxAbs = 9) {
    std::uniform_int_distribution<int> num(-maxAbs, maxAbs);
    std::uniform_int_distribution<int> den(1, maxAbs);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline CycScalar randomCyc(std::mt19937_64& rng) {
    CycScalar c(randomRational(rng));
    for (int k = 1; k < 4; ++k)
        c += CycScalar::zetaPow(k) * CycScalar(randomRational(rng));
    return c;
}

inline CycScalar randomNonzeroCyc(std::mt19937_64& rng) {
    for (;;) {
        CycScalar c = randomCyc(rng);
        if (!c.isZero()) return c;
    }
}

inline ParamPoly randomParamPoly(std::mt19937_64& rng, uint32_t maxDeg = 2,
                                 bool allowT = true) {
    std::uniform_int_distribution<uint32_t> d(0, maxDeg);
    ParamPoly p;
    for (int t = 0; t < 3; ++t)
        p += ParamPoly::mono({allowT ? d(rng) : 0, d(rng), d(rng)}, randomCyc(rng));
    return p;
}

inline const SignedPerm& randomElement(const WeylGroup& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<size_t> d(0, g.size() - 1);
    return g.elements()[d(rng)];
}

}  // namespace heckec::testutil
