#include "heckec/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "heckec/cdaha.hpp"
#include "heckec/dahca.hpp"
#include "heckec/dunkl.hpp"
#include "heckec/sdaha.hpp"
#include "heckec/spin.hpp"

namespace heckec {

std::string SuiteReport::text() const {
    std::ostringstream os;
    os << "suite=" << suite << " family=" << familyName(type.family) << " n=" << type.n
       << " seed=" << seed << " checks=" << checks << " failures=" << failures.size()
       << (ok() ? " [ok]" : " [FAIL]") << "\n";
    for (const auto& f : failures) {
        os << "  FAIL " << f.what;
        if (!f.inputs.empty()) os << " | inputs: " << f.inputs;
        os << "\n    expected: " << f.expected << "\n    got:      " << f.got << "\n";
    }
    return os.str();
}

std::string SuiteReport::jsonStr() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["family"] = familyName(type.family);
    j["n"] = type.n;
    j["seed"] = seed;
    j["checks"] = checks;
    j["ok"] = ok();
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures) {
        j["failures"].push_back({{"what", f.what},
                                 {"inputs", f.inputs},
                                 {"expected", f.expected},
                                 {"got", f.got}});
    }
    return j.dump(2);
}

namespace {

struct Ctx {
    SuiteReport& r;
    std::mt19937_64 rng;
    int budget;
    bool smallD;

    template <typename T>
    void eq(const T& got, const T& expect, const std::string& what,
            const std::string& inputs = "") {
        ++r.checks;
        if (!(got == expect))
            r.failures.push_back({what, inputs, expect.str(), got.str()});
    }
    void truth(bool ok, const std::string& what, const std::string& inputs = "") {
        ++r.checks;
        if (!ok) r.failures.push_back({what, inputs, "true", "false"});
    }
    int scaled(int base) const { return base * budget; }
};

Rational smallRational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

// Random coefficient in Q(z8)[u,v] (no t: only daha carries t).
ParamPoly randCoeffUV(std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> d(0, 1);
    ParamPoly p = ParamPoly::mono({0, d(rng), d(rng)},
                                  CycScalar(smallRational(rng)) +
                                      CycScalar::zetaPow(2) * CycScalar(smallRational(rng)));
    if (p.isZero()) p = ParamPoly(1);
    return p;
}

// Exponent vector with prescribed total degree.
ExpVec randExp(std::mt19937_64& rng, int n, int total) {
    ExpVec e(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < total; ++k) e.e[pick(rng)] += 1;
    return e;
}

const SignedPerm& randElem(const WeylGroup& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<size_t> d(0, g.size() - 1);
    return g.elements()[d(rng)];
}

// ---------------------------------------------------------------- relations

void checkSpinRelations(const WeylType& t, Ctx& c) {
    int m = numGenerators(t);
    auto ti = [&](int i) { return SpinElem::gen(t, i); };
    SpinElem one = SpinElem::one(t);
    for (int i = 1; i <= m; ++i)
        c.eq(ti(i) * ti(i), one, "spin algebra: t_i^2 = 1", "i=" + std::to_string(i));
    int nA = (t.family == Family::A) ? m : m - 1;
    for (int i = 1; i <= nA; ++i)
        for (int j = 1; j <= nA; ++j) {
            std::string ij = "i=" + std::to_string(i) + " j=" + std::to_string(j);
            if (i + 1 == j || j + 1 == i) {
                c.eq(ti(i) * ti(j) * ti(i), ti(j) * ti(i) * ti(j),
                     "spin algebra: braid", ij);
            } else if (i != j) {
                c.eq((ti(i) * ti(j)) * (ti(i) * ti(j)), -one,
                     "spin algebra: (t_i t_j)^2 = -1", ij);
            }
        }
    int n = t.n;
    if (t.family == Family::B) {
        for (int i = 1; i <= n - 2; ++i)
            c.eq((ti(i) * ti(n)) * (ti(i) * ti(n)), -one,
                 "spin algebra: (t_i t_n)^2 = -1", "i=" + std::to_string(i));
        SpinElem p = ti(n - 1) * ti(n);
        c.eq(p * p * p * p, -one, "spin algebra: (t_{n-1} t_n)^4 = -1");
    }
    if (t.family == Family::D) {
        for (int i = 1; i <= n - 1; ++i) {
            if (i == n - 2) {
                c.eq(ti(i) * ti(n) * ti(i), ti(n) * ti(i) * ti(n),
                     "spin algebra: braid t_{n-2} t_n");
            } else {
                c.eq((ti(i) * ti(n)) * (ti(i) * ti(n)), -one,
                     "spin algebra: (t_i t_n)^2 = -1", "i=" + std::to_string(i));
            }
        }
    }
}

void checkDoubleCoverRelations(const WeylType& t, Ctx& c) {
    const SpinContext& ctx = SpinContext::get(t, true);
    int m = numGenerators(t);
    CoverElem id = CoverElem::identity(t.n);
    CoverElem z{1, SignedPerm::identity(t.n)};
    auto tt = [&](int i) { return ctx.coverGen(i); };
    auto mul = [&](const CoverElem& a, const CoverElem& b) { return ctx.coverMul(a, b); };
    c.truth(mul(z, z) == id, "double cover: z^2 = 1");
    for (int i = 1; i <= m; ++i)
        c.truth(mul(tt(i), tt(i)) == id, "double cover: tt_i^2 = 1",
                "i=" + std::to_string(i));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            int mij = coxeterM(t, i, j);
            std::string ij = "i=" + std::to_string(i) + " j=" + std::to_string(j);
            if (mij == 3) {
                c.truth(mul(mul(tt(i), tt(j)), tt(i)) == mul(mul(tt(j), tt(i)), tt(j)),
                        "double cover: braid", ij);
            } else if (mij == 2) {
                c.truth(mul(tt(i), tt(j)) == mul(z, mul(tt(j), tt(i))),
                        "double cover: tt_i tt_j = z tt_j tt_i", ij);
            } else if (mij == 4) {
                CoverElem ab = mul(tt(i), tt(j)), ba = mul(tt(j), tt(i));
                c.truth(mul(ab, ab) == mul(z, mul(ba, ba)),
                        "double cover: (tt_{n-1} tt_n)^2 = z (tt_n tt_{n-1})^2", ij);
            }
        }
}

void checkDahcaRelations(const WeylType& t, Ctx& c) {
    const DahcaAlgebra& alg = DahcaAlgebra::get(t, true);
    int n = t.n;
    auto comm = [&](const DahcaElem& a, const DahcaElem& b) {
        return alg.mul(a, b) - alg.mul(b, a);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::string ij = "i=" + std::to_string(i) + " j=" + std::to_string(j);
            c.truth(comm(alg.xGen(i), alg.xGen(j)).isZero(), "dahca: x_i x_j = x_j x_i", ij);
            c.truth(comm(alg.yGen(i), alg.yGen(j)).isZero(), "dahca: y_i y_j = y_j y_i", ij);
            c.truth(comm(alg.yGen(i), alg.cGen(j)).isZero(), "dahca: y_i c_j = c_j y_i", ij);
            if (i == j) {
                c.eq(alg.mul(alg.xGen(i), alg.cGen(i)), -alg.mul(alg.cGen(i), alg.xGen(i)),
                     "dahca: x_i c_i = -c_i x_i", ij);
                c.eq(alg.mul(alg.cGen(i), alg.cGen(i)), alg.one(), "clifford: c_i^2 = 1", ij);
            } else {
                c.truth(comm(alg.xGen(i), alg.cGen(j)).isZero(), "dahca: x_i c_j = c_j x_i", ij);
                c.eq(alg.mul(alg.cGen(i), alg.cGen(j)), -alg.mul(alg.cGen(j), alg.cGen(i)),
                     "clifford: c_i c_j = -c_j c_i", ij);
            }
            c.eq(comm(alg.yGen(j), alg.xGen(i)), alg.bracketYX(j, i),
                 "dahca: [y_j, x_i] defining bracket", ij);
        }
    for (int k = 1; k <= numGenerators(t); ++k) {
        SignedPerm s = simpleReflection(t, k);
        DahcaElem ws = alg.weylElem(s);
        for (int i = 1; i <= n; ++i) {
            auto [j, sgn] = s.act(i);
            std::string ki = "k=" + std::to_string(k) + " i=" + std::to_string(i);
            c.eq(alg.mul(alg.mul(ws, alg.xGen(i)), ws), alg.xGen(j) * ParamPoly(sgn),
                 "dahca: w x w^-1 = w(x)", ki);
            c.eq(alg.mul(alg.mul(ws, alg.yGen(i)), ws), alg.yGen(j) * ParamPoly(sgn),
                 "dahca: w y w^-1 = w(y)", ki);
            c.eq(alg.mul(alg.mul(ws, alg.cGen(i)), ws), alg.cGen(j) * ParamPoly(sgn),
                 "dahca: w c w^-1 = w(c)", ki);
        }
    }
    // The relations quantify over all w in W; sample composite elements too.
    const WeylGroup& g = WeylGroup::get(t, true);
    for (int it = 0; it < c.scaled(20); ++it) {
        const SignedPerm& w = randElem(g, c.rng);
        DahcaElem we = alg.weylElem(w);
        DahcaElem winv = alg.weylElem(w.inverse());
        for (int i = 1; i <= n; ++i) {
            auto [j, sgn] = w.act(i);
            std::string wi = "w=" + w.str() + " i=" + std::to_string(i);
            c.eq(alg.mul(alg.mul(we, alg.xGen(i)), winv),
                 alg.xGen(j) * ParamPoly(sgn), "dahca: w x w^-1 = w(x), composite w", wi);
            c.eq(alg.mul(alg.mul(we, alg.yGen(i)), winv),
                 alg.yGen(j) * ParamPoly(sgn), "dahca: w y w^-1 = w(y), composite w", wi);
            c.eq(alg.mul(alg.mul(we, alg.cGen(i)), winv),
                 alg.cGen(j) * ParamPoly(sgn), "dahca: w c w^-1 = w(c), composite w", wi);
        }
    }
}

void checkSdahaRelations(const WeylType& t, Ctx& c) {
    const SdahaAlgebra& alg = SdahaAlgebra::get(t, true);
    int n = t.n;
    auto comm = [&](const SdahaElem& a, const SdahaElem& b) {
        return alg.mul(a, b) - alg.mul(b, a);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::string ij = "i=" + std::to_string(i) + " j=" + std::to_string(j);
            c.truth(comm(alg.yGen(i), alg.yGen(j)).isZero(), "sdaha: y_i y_j = y_j y_i", ij);
            if (i != j)
                c.eq(alg.mul(alg.xiGen(i), alg.xiGen(j)),
                     -alg.mul(alg.xiGen(j), alg.xiGen(i)),
                     "sdaha: xi_i xi_j = -xi_j xi_i", ij);
            c.eq(comm(alg.yGen(i), alg.xiGen(j)), alg.bracketYXi(i, j),
                 "sdaha: [y_i, xi_j] defining bracket", ij);
        }
    int nA = (t.family == Family::A) ? numGenerators(t) : numGenerators(t) - 1;
    for (int i = 1; i <= nA; ++i) {
        std::string is = "i=" + std::to_string(i);
        c.eq(alg.mul(alg.tGen(i), alg.yGen(i)), alg.mul(alg.yGen(i + 1), alg.tGen(i)),
             "sdaha: t_i y_i = y_{i+1} t_i", is);
        c.eq(alg.mul(alg.tGen(i), alg.xiGen(i)), -alg.mul(alg.xiGen(i + 1), alg.tGen(i)),
             "sdaha: t_i xi_i = -xi_{i+1} t_i", is);
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            std::string ij = is + " j=" + std::to_string(j);
            c.truth(comm(alg.tGen(i), alg.yGen(j)).isZero(), "sdaha: t_i y_j = y_j t_i", ij);
            c.eq(alg.mul(alg.tGen(i), alg.xiGen(j)), -alg.mul(alg.xiGen(j), alg.tGen(i)),
                 "sdaha: t_i xi_j = -xi_j t_i", ij);
        }
    }
    if (t.family == Family::D) {
        c.eq(alg.mul(alg.tGen(n), alg.yGen(n)), -alg.mul(alg.yGen(n - 1), alg.tGen(n)),
             "sdaha D: t_n y_n = -y_{n-1} t_n");
        c.eq(alg.mul(alg.tGen(n), alg.xiGen(n)), -alg.mul(alg.xiGen(n - 1), alg.tGen(n)),
             "sdaha D: t_n xi_n = -xi_{n-1} t_n");
        for (int j = 1; j <= n - 2; ++j) {
            std::string js = "j=" + std::to_string(j);
            c.truth(comm(alg.tGen(n), alg.yGen(j)).isZero(), "sdaha D: t_n y_j = y_j t_n", js);
            c.eq(alg.mul(alg.tGen(n), alg.xiGen(j)), -alg.mul(alg.xiGen(j), alg.tGen(n)),
                 "sdaha D: t_n xi_j = -xi_j t_n", js);
        }
    }
    if (t.family == Family::B) {
        c.eq(alg.mul(alg.tGen(n), alg.yGen(n)), -alg.mul(alg.yGen(n), alg.tGen(n)),
             "sdaha B: t_n y_n = -y_n t_n");
        c.eq(alg.mul(alg.tGen(n), alg.xiGen(n)), -alg.mul(alg.xiGen(n), alg.tGen(n)),
             "sdaha B: t_n xi_n = -xi_n t_n");
        for (int j = 1; j <= n - 1; ++j) {
            std::string js = "j=" + std::to_string(j);
            c.truth(comm(alg.tGen(n), alg.yGen(j)).isZero(), "sdaha B: t_n y_j = y_j t_n", js);
            c.eq(alg.mul(alg.tGen(n), alg.xiGen(j)), -alg.mul(alg.xiGen(j), alg.tGen(n)),
                 "sdaha B: t_n xi_j = -xi_j t_n", js);
        }
    }
}

void checkCdahaRelations(const WeylType& t, Ctx& c) {
    const CdahaAlgebra& alg = CdahaAlgebra::get(t, true);
    int n = t.n;
    CdahaElem z = alg.zElem();
    auto comm = [&](const CdahaElem& a, const CdahaElem& b) {
        return alg.mul(a, b) - alg.mul(b, a);
    };
    c.eq(alg.mul(z, z), alg.one(), "cdaha: z^2 = 1");
    for (int i = 1; i <= n; ++i) {
        c.truth(comm(z, alg.xtGen(i)).isZero(), "cdaha: z central vs xt", "i=" + std::to_string(i));
        c.truth(comm(z, alg.ytGen(i)).isZero(), "cdaha: z central vs yt", "i=" + std::to_string(i));
    }
    for (int k = 1; k <= numGenerators(t); ++k)
        c.truth(comm(z, alg.ttGen(k)).isZero(), "cdaha: z central vs tt", "k=" + std::to_string(k));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::string ij = "i=" + std::to_string(i) + " j=" + std::to_string(j);
            if (i != j)
                c.eq(alg.mul(alg.xtGen(i), alg.xtGen(j)),
                     alg.mul(z, alg.mul(alg.xtGen(j), alg.xtGen(i))),
                     "cdaha: xt_i xt_j = z xt_j xt_i", ij);
            c.truth(comm(alg.ytGen(i), alg.ytGen(j)).isZero(),
                    "cdaha: yt_i yt_j = yt_j yt_i", ij);
            c.eq(comm(alg.ytGen(i), alg.xtGen(j)), alg.bracketYtXt(i, j),
                 "cdaha: [yt_i, xt_j] defining bracket", ij);
        }
    int nA = (t.family == Family::A) ? numGenerators(t) : numGenerators(t) - 1;
    for (int i = 1; i <= nA; ++i) {
        std::string is = "i=" + std::to_string(i);
        c.eq(alg.mul(alg.ttGen(i), alg.xtGen(i + 1)),
             alg.mul(z, alg.mul(alg.xtGen(i), alg.ttGen(i))),
             "cdaha: tt_i xt_{i+1} = z xt_i tt_i", is);
        c.eq(alg.mul(alg.ttGen(i), alg.ytGen(i + 1)),
             alg.mul(alg.ytGen(i), alg.ttGen(i)),
             "cdaha: tt_i yt_{i+1} = yt_i tt_i", is);
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            std::string ij = is + " j=" + std::to_string(j);
            c.eq(alg.mul(alg.ttGen(i), alg.xtGen(j)),
                 alg.mul(z, alg.mul(alg.xtGen(j), alg.ttGen(i))),
                 "cdaha: tt_i xt_j = z xt_j tt_i", ij);
            c.truth(comm(alg.ttGen(i), alg.ytGen(j)).isZero(),
                    "cdaha: tt_i yt_j = yt_j tt_i", ij);
        }
    }
    if (t.family == Family::D) {
        c.eq(alg.mul(alg.ttGen(n), alg.xtGen(n)),
             -alg.mul(alg.xtGen(n - 1), alg.ttGen(n)),
             "cdaha D: tt_n xt_n = -xt_{n-1} tt_n");
        c.eq(alg.mul(alg.ttGen(n), alg.ytGen(n)),
             -alg.mul(alg.ytGen(n - 1), alg.ttGen(n)),
             "cdaha D: tt_n yt_n = -yt_{n-1} tt_n");
        for (int j = 1; j <= n - 2; ++j) {
            std::string js = "j=" + std::to_string(j);
            c.eq(alg.mul(alg.ttGen(n), alg.xtGen(j)),
                 alg.mul(z, alg.mul(alg.xtGen(j), alg.ttGen(n))),
                 "cdaha D: tt_n xt_j = z xt_j tt_n", js);
            c.truth(comm(alg.ttGen(n), alg.ytGen(j)).isZero(),
                    "cdaha D: tt_n yt_j = yt_j tt_n", js);
        }
    }
    if (t.family == Family::B) {
        c.eq(alg.mul(alg.ttGen(n), alg.xtGen(n)), -alg.mul(alg.xtGen(n), alg.ttGen(n)),
             "cdaha B: tt_n xt_n = -xt_n tt_n");
        c.eq(alg.mul(alg.ttGen(n), alg.ytGen(n)), -alg.mul(alg.ytGen(n), alg.ttGen(n)),
             "cdaha B: tt_n yt_n = -yt_n tt_n");
        for (int j = 1; j <= n - 1; ++j) {
            std::string js = "j=" + std::to_string(j);
            c.eq(alg.mul(alg.ttGen(n), alg.xtGen(j)),
                 alg.mul(z, alg.mul(alg.xtGen(j), alg.ttGen(n))),
                 "cdaha B: tt_n xt_j = z xt_j tt_n", js);
            c.truth(comm(alg.ttGen(n), alg.ytGen(j)).isZero(),
                    "cdaha B: tt_n yt_j = yt_j tt_n", js);
        }
    }
}

void checkDahaRelations(const WeylType& t, Ctx& c) {
    const DahaAlgebra& alg = DahaAlgebra::get(t, true);
    int n = t.n;
    auto comm = [&](const DahaElem& a, const DahaElem& b) {
        return alg.mul(a, b) - alg.mul(b, a);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::string ij = "i=" + std::to_string(i) + " j=" + std::to_string(j);
            c.truth(comm(alg.xGen(i), alg.xGen(j)).isZero(), "daha: x_i x_j = x_j x_i", ij);
            c.truth(comm(alg.yGen(i), alg.yGen(j)).isZero(), "daha: y_i y_j = y_j y_i", ij);
            c.eq(comm(alg.yGen(j), alg.xGen(i)), alg.bracketYX(j, i),
                 "daha: [y_j, x_i] defining bracket", ij);
        }
    for (int k = 1; k <= numGenerators(t); ++k) {
        SignedPerm s = simpleReflection(t, k);
        DahaElem ws = alg.weylElem(s);
        for (int i = 1; i <= n; ++i) {
            auto [j, sgn] = s.act(i);
            std::string ki = "k=" + std::to_string(k) + " i=" + std::to_string(i);
            c.eq(alg.mul(alg.mul(ws, alg.xGen(i)), ws), alg.xGen(j) * ParamPoly(sgn),
                 "daha: sigma x = x^sigma sigma", ki);
            c.eq(alg.mul(alg.mul(ws, alg.yGen(i)), ws), alg.yGen(j) * ParamPoly(sgn),
                 "daha: sigma y = y^sigma sigma", ki);
        }
    }
}

void suiteRelations(const WeylType& t, Ctx& c) {
    checkSpinRelations(t, c);
    checkDoubleCoverRelations(t, c);
    checkDahcaRelations(t, c);
    checkSdahaRelations(t, c);
    checkCdahaRelations(t, c);
    checkDahaRelations(t, c);
}

// ---------------------------------------------------------------- assoc

void suiteAssoc(const WeylType& t, Ctx& c) {
    const WeylGroup& g = WeylGroup::get(t, true);
    int n = t.n;
    std::uniform_int_distribution<int> dtot(0, 3);
    std::uniform_int_distribution<unsigned> dmask(0, (1u << n) - 1);

    {
        const DahcaAlgebra& alg = DahcaAlgebra::get(t, true);
        std::vector<DahcaElem> gens;
        for (int i = 1; i <= n; ++i) {
            gens.push_back(alg.xGen(i));
            gens.push_back(alg.yGen(i));
            gens.push_back(alg.cGen(i));
        }
        for (int k = 1; k <= numGenerators(t); ++k)
            gens.push_back(alg.weylElem(simpleReflection(t, k)));
        for (auto& a : gens)
            for (auto& b : gens)
                for (auto& d : gens)
                    c.truth(alg.mul(alg.mul(a, b), d) == alg.mul(a, alg.mul(b, d)),
                            "dahca assoc on generators");
        auto rnd = [&] {
            int total = dtot(c.rng);
            int dx = std::uniform_int_distribution<int>(0, total)(c.rng);
            return alg.monomial({randExp(c.rng, n, dx), dmask(c.rng), randElem(g, c.rng),
                                 randExp(c.rng, n, total - dx)},
                                randCoeffUV(c.rng));
        };
        for (int it = 0; it < c.scaled(300); ++it) {
            DahcaElem a = rnd(), b = rnd(), d = rnd();
            c.truth(alg.mul(alg.mul(a, b), d) == alg.mul(a, alg.mul(b, d)),
                    "dahca assoc on random monomials",
                    a.str() + " ; " + b.str() + " ; " + d.str());
        }
    }
    {
        const SdahaAlgebra& alg = SdahaAlgebra::get(t, true);
        std::vector<SdahaElem> gens;
        for (int i = 1; i <= n; ++i) {
            gens.push_back(alg.xiGen(i));
            gens.push_back(alg.yGen(i));
        }
        for (int k = 1; k <= numGenerators(t); ++k) gens.push_back(alg.tGen(k));
        for (auto& a : gens)
            for (auto& b : gens)
                for (auto& d : gens)
                    c.truth(alg.mul(alg.mul(a, b), d) == alg.mul(a, alg.mul(b, d)),
                            "sdaha assoc on generators");
        auto rnd = [&] {
            int total = dtot(c.rng);
            int dx = std::uniform_int_distribution<int>(0, total)(c.rng);
            return alg.monomial({randExp(c.rng, n, dx), randElem(g, c.rng),
                                 randExp(c.rng, n, total - dx)},
                                randCoeffUV(c.rng));
        };
        for (int it = 0; it < c.scaled(300); ++it) {
            SdahaElem a = rnd(), b = rnd(), d = rnd();
            c.truth(alg.mul(alg.mul(a, b), d) == alg.mul(a, alg.mul(b, d)),
                    "sdaha assoc on random monomials",
                    a.str() + " ; " + b.str() + " ; " + d.str());
        }
    }
    {
        const CdahaAlgebra& alg = CdahaAlgebra::get(t, true);
        std::vector<CdahaElem> gens;
        for (int i = 1; i <= n; ++i) {
            gens.push_back(alg.xtGen(i));
            gens.push_back(alg.ytGen(i));
        }
        for (int k = 1; k <= numGenerators(t); ++k) gens.push_back(alg.ttGen(k));
        gens.push_back(alg.zElem());
        for (auto& a : gens)
            for (auto& b : gens)
                for (auto& d : gens)
                    c.truth(alg.mul(alg.mul(a, b), d) == alg.mul(a, alg.mul(b, d)),
                            "cdaha assoc on generators");
        auto rnd = [&] {
            int total = dtot(c.rng);
            int dx = std::uniform_int_distribution<int>(0, total)(c.rng);
            CoverElem cov{int(c.rng() & 1), randElem(g, c.rng)};
            return alg.monomial({randExp(c.rng, n, dx), cov,
                                 randExp(c.rng, n, total - dx)},
                                randCoeffUV(c.rng));
        };
        for (int it = 0; it < c.scaled(300); ++it) {
            CdahaElem a = rnd(), b = rnd(), d = rnd();
            c.truth(alg.mul(alg.mul(a, b), d) == alg.mul(a, alg.mul(b, d)),
                    "cdaha assoc on random monomials",
                    a.str() + " ; " + b.str() + " ; " + d.str());
        }
    }
    {
        const DahaAlgebra& alg = DahaAlgebra::get(t, true);
        std::vector<DahaElem> gens;
        for (int i = 1; i <= n; ++i) {
            gens.push_back(alg.xGen(i));
            gens.push_back(alg.yGen(i));
        }
        for (int k = 1; k <= numGenerators(t); ++k)
            gens.push_back(alg.weylElem(simpleReflection(t, k)));
        for (auto& a : gens)
            for (auto& b : gens)
                for (auto& d : gens)
                    c.truth(alg.mul(alg.mul(a, b), d) == alg.mul(a, alg.mul(b, d)),
                            "daha assoc on generators");
        auto rnd = [&] {
            int total = dtot(c.rng);
            int dx = std::uniform_int_distribution<int>(0, total)(c.rng);
            return alg.monomial({randExp(c.rng, n, dx), randElem(g, c.rng),
                                 randExp(c.rng, n, total - dx)},
                                randCoeffUV(c.rng));
        };
        for (int it = 0; it < c.scaled(300); ++it) {
            DahaElem a = rnd(), b = rnd(), d = rnd();
            c.truth(alg.mul(alg.mul(a, b), d) == alg.mul(a, alg.mul(b, d)),
                    "daha assoc on random monomials",
                    a.str() + " ; " + b.str() + " ; " + d.str());
        }
    }
}

// ---------------------------------------------------------------- conj / jacobi

void suiteConj(const WeylType& t, Ctx& c) {
    const DahcaAlgebra& alg = DahcaAlgebra::get(t, true);
    auto comm = [&](const DahcaElem& a, const DahcaElem& b) {
        return alg.mul(a, b) - alg.mul(b, a);
    };
    std::vector<std::pair<std::string, DahcaElem>> conjugators;
    for (int l = 1; l <= t.n; ++l)
        conjugators.emplace_back("c" + std::to_string(l), alg.cGen(l));
    for (int k = 1; k <= numGenerators(t); ++k)
        conjugators.emplace_back("s" + std::to_string(k),
                                 alg.weylElem(simpleReflection(t, k)));
    for (int j = 1; j <= t.n; ++j)
        for (int i = 1; i <= t.n; ++i) {
            DahcaElem br = alg.bracketYX(j, i);
            for (auto& [name, gelem] : conjugators) {
                DahcaElem lhs = alg.mul(alg.mul(gelem, br), gelem);
                DahcaElem yj = alg.mul(alg.mul(gelem, alg.yGen(j)), gelem);
                DahcaElem xi = alg.mul(alg.mul(gelem, alg.xGen(i)), gelem);
                c.eq(lhs, comm(yj, xi), "conjugation invariance of [y_j, x_i]",
                     "g=" + name + " j=" + std::to_string(j) + " i=" + std::to_string(i));
            }
        }
}

void suiteJacobi(const WeylType& t, Ctx& c) {
    const DahcaAlgebra& alg = DahcaAlgebra::get(t, true);
    auto comm = [&](const DahcaElem& a, const DahcaElem& b) {
        return alg.mul(a, b) - alg.mul(b, a);
    };
    std::vector<std::pair<std::string, DahcaElem>> gens;
    for (int i = 1; i <= t.n; ++i) {
        gens.emplace_back("x" + std::to_string(i), alg.xGen(i));
        gens.emplace_back("y" + std::to_string(i), alg.yGen(i));
    }
    for (auto& [na, a] : gens)
        for (auto& [nb, b] : gens)
            for (auto& [nd, d] : gens) {
                DahcaElem j = comm(a, comm(b, d)) + comm(b, comm(d, a)) +
                              comm(d, comm(a, b));
                c.truth(j.isZero(), "Jacobi identity", na + "," + nb + "," + nd);
            }
}

// ---------------------------------------------------------------- cocycle

void suiteCocycle(const WeylType& t, Ctx& c) {
    const SpinContext& ctx = SpinContext::get(t, true);
    const WeylGroup& g = ctx.group();

    auto transport = [&](const SignedPerm& w, const SignedPerm& w2) {
        CliffordElem lhs = ctx.gamma(w) * weylActClifford(w, ctx.gamma(w2));
        CliffordElem rhs = ctx.gamma(w.compose(w2)) * CycScalar(ctx.cocycle(w, w2));
        c.truth(lhs == rhs, "gamma transport: gamma_w w(gamma_w') = a(w,w') gamma_ww'",
                w.str() + " ; " + w2.str());
    };
    auto identity2 = [&](const SignedPerm& w, const SignedPerm& w2, const SignedPerm& w3) {
        c.truth(ctx.cocycle(w, w2) * ctx.cocycle(w.compose(w2), w3) ==
                    ctx.cocycle(w2, w3) * ctx.cocycle(w, w2.compose(w3)),
                "2-cocycle identity", w.str() + " ; " + w2.str() + " ; " + w3.str());
    };

    if (g.size() <= 16) {
        for (const SignedPerm& w : g.elements())
            for (const SignedPerm& w2 : g.elements()) {
                transport(w, w2);
                for (const SignedPerm& w3 : g.elements()) identity2(w, w2, w3);
            }
    } else {
        for (int it = 0; it < c.scaled(200); ++it)
            transport(randElem(g, c.rng), randElem(g, c.rng));
        for (int it = 0; it < c.scaled(200); ++it)
            identity2(randElem(g, c.rng), randElem(g, c.rng), randElem(g, c.rng));
    }
    // alpha(w, w) = 1 would be false in general; but T_w^2 = +-1 must hold:
    for (int it = 0; it < c.scaled(50); ++it) {
        const SignedPerm& w = randElem(g, c.rng);
        int a = ctx.cocycle(w, w);
        c.truth(a == 1 || a == -1, "cocycle takes values +-1", w.str());
    }
}

// ---------------------------------------------------------------- iso

void suiteIso(const WeylType& t, Ctx& c) {
    const WeylGroup& g = WeylGroup::get(t, true);
    int n = t.n;
    std::uniform_int_distribution<unsigned> dmask(0, (1u << n) - 1);

    // Generator images of the finite isomorphism.
    CycScalar i = CycScalar::sqrtMinus1();
    for (int k = 1; k <= numGenerators(t); ++k) {
        KElem sk = KElem::weylElem(t, simpleReflection(t, k));
        TensorElem expect(t);
        CliffordElem bk = beta(t, k);
        for (auto& [mask, bc] : bk.terms())
            expect.add({mask, simpleReflection(t, k)}, ParamPoly(-(bc * i)));
        c.eq(phiFinite(sk), expect, "Phi(s_k) = -sqrt(-1) beta_k t_k",
             "k=" + std::to_string(k));
    }
    // Images of the twisted transpositions.
    CycScalar ms2 = -CycScalar::sqrtMinus2();
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j) {
            if (j == k) continue;
            KElem a = (KElem::cliffordGen(t, k) - KElem::cliffordGen(t, j)) *
                      KElem::weylElem(t, transposition(n, j, k));
            c.eq(phiFinite(a),
                 tensorFromSpin(oddReflection(t, OddKind::TIJ, k, j) * ParamPoly(ms2)),
                 "(c_k - c_i) s_{ik} -> -sqrt(-2) [k,i]",
                 "k=" + std::to_string(k) + " i=" + std::to_string(j));
            if (t.family != Family::A) {
                KElem b = (KElem::cliffordGen(t, k) + KElem::cliffordGen(t, j)) *
                          KElem::weylElem(t, barTransposition(n, j, k));
                c.eq(phiFinite(b),
                     tensorFromSpin(oddReflection(t, OddKind::TBAR_IJ, k, j) *
                                    ParamPoly(ms2)),
                     "(c_k + c_i) sbar_{ik} -> -sqrt(-2) [k,i]-bar",
                     "k=" + std::to_string(k) + " i=" + std::to_string(j));
            }
        }
    if (t.family == Family::B) {
        for (int j = 1; j <= n; ++j) {
            KElem a = KElem::cliffordGen(t, j) * KElem::weylElem(t, signFlip(n, j));
            c.eq(phiFinite(a),
                 tensorFromSpin(oddReflection(t, OddKind::TBAR_I, j) * ParamPoly(-i)),
                 "c_i tau_i -> -sqrt(-1) [i]-bar", "i=" + std::to_string(j));
        }
    }

    // Finite iso: multiplicativity + round trips.
    auto randomK = [&] {
        return KElem::monomial(t, dmask(c.rng), randElem(g, c.rng), randCoeffUV(c.rng));
    };
    auto randomT = [&] {
        return TensorElem::monomial(t, dmask(c.rng), randElem(g, c.rng),
                                    randCoeffUV(c.rng));
    };
    for (int it = 0; it < c.scaled(300); ++it) {
        KElem a = randomK(), b = randomK();
        c.truth(phiFinite(a * b) == phiFinite(a) * phiFinite(b),
                "Phi multiplicative on K", a.str() + " ; " + b.str());
        TensorElem x = randomT(), y = randomT();
        c.truth(psiFinite(x * y) == psiFinite(x) * psiFinite(y),
                "Psi multiplicative on the tensor algebra", x.str() + " ; " + y.str());
    }
    for (int it = 0; it < c.scaled(200); ++it) {
        KElem a = randomK();
        c.truth(psiFinite(phiFinite(a)) == a, "Psi o Phi = id", a.str());
        TensorElem x = randomT();
        c.truth(phiFinite(psiFinite(x)) == x, "Phi o Psi = id", x.str());
    }

    // Big iso: generator images, multiplicativity, round trips.
    const DahcaAlgebra& dal = DahcaAlgebra::get(t, true);
    const SdahaAlgebra& sal = SdahaAlgebra::get(t, true);
    for (int k = 1; k <= n; ++k) {
        TensorSdahaElem expect(t);
        expect.add(1u << (k - 1), {ExpVec::unit(n, k), SignedPerm::identity(n), ExpVec(n)},
                   ParamPoly(CycScalar::sqrtMinus2()));
        c.eq(phiBig(dal.xGen(k)), expect, "Phi(x_i) = sqrt(-2) c_i xi_i",
             "i=" + std::to_string(k));
        c.eq(phiBig(dal.yGen(k)), tensorSdahaFromSdaha(sal.yGen(k)), "Phi(y_i) = y_i",
             "i=" + std::to_string(k));
        c.eq(phiBig(dal.cGen(k)), tensorSdahaFromClifford(t, 1u << (k - 1), ParamPoly(1)),
             "Phi(c_i) = c_i", "i=" + std::to_string(k));
    }
    std::uniform_int_distribution<int> dtot(0, 2);
    auto randomDahca = [&] {
        int total = dtot(c.rng);
        int dx = std::uniform_int_distribution<int>(0, total)(c.rng);
        return dal.monomial({randExp(c.rng, n, dx), dmask(c.rng), randElem(g, c.rng),
                             randExp(c.rng, n, total - dx)},
                            randCoeffUV(c.rng));
    };
    auto randomTS = [&] {
        int total = dtot(c.rng);
        int dx = std::uniform_int_distribution<int>(0, total)(c.rng);
        return tensorSdahaFromClifford(t, dmask(c.rng), randCoeffUV(c.rng)) *
               tensorSdahaFromSdaha(sal.monomial({randExp(c.rng, n, dx),
                                                  randElem(g, c.rng),
                                                  randExp(c.rng, n, total - dx)},
                                                 ParamPoly(1)));
    };
    for (int it = 0; it < c.scaled(300); ++it) {
        DahcaElem a = randomDahca(), b = randomDahca();
        c.truth(phiBig(dal.mul(a, b)) == phiBig(a) * phiBig(b),
                "Phi multiplicative on hc_W", a.str() + " ; " + b.str());
    }
    for (int it = 0; it < c.scaled(200); ++it) {
        DahcaElem a = randomDahca();
        c.truth(psiBig(phiBig(a)) == a, "Psi o Phi = id on hc_W", a.str());
        TensorSdahaElem x = randomTS();
        c.truth(phiBig(psiBig(x)) == x, "Phi o Psi = id on the tensor algebra",
                x.str());
        TensorSdahaElem y = randomTS();
        c.truth(psiBig(x * y) == psiBig(x) * psiBig(y),
                "Psi multiplicative on the tensor algebra", x.str() + " ; " + y.str());
    }
    // Native sdaha product vs transport through Psi/Phi.
    auto randomSd = [&] {
        int total = dtot(c.rng);
        int dx = std::uniform_int_distribution<int>(0, total)(c.rng);
        return sal.monomial({randExp(c.rng, n, dx), randElem(g, c.rng),
                             randExp(c.rng, n, total - dx)},
                            randCoeffUV(c.rng));
    };
    for (int it = 0; it < c.scaled(100); ++it) {
        SdahaElem a = randomSd(), b = randomSd();
        DahcaElem pa = psiBig(tensorSdahaFromSdaha(a));
        DahcaElem pb = psiBig(tensorSdahaFromSdaha(b));
        c.truth(phiBig(dal.mul(pa, pb)) == tensorSdahaFromSdaha(sal.mul(a, b)),
                "native sdaha product matches Psi/Phi transport",
                a.str() + " ; " + b.str());
    }
}

// ---------------------------------------------------------------- center

VarPoly elementarySymmetric(int n, int k, bool squares) {
    // e_k of (v_1, ..., v_n) or of (v_1^2, ..., v_n^2).
    std::vector<VarPoly> e(size_t(k) + 1, VarPoly(n));
    e[0] = VarPoly::one(n);
    for (int i = 1; i <= n; ++i) {
        VarPoly vi = VarPoly::var(n, i);
        if (squares) vi = vi * vi;
        for (int j = std::min(i, k); j >= 1; --j) e[j] = e[j] + e[j - 1] * vi;
    }
    return e[k];
}

VarPoly powerSumSquares(int n, int k) {
    VarPoly p(n);
    for (int i = 1; i <= n; ++i) {
        VarPoly vi = VarPoly::var(n, i);
        VarPoly term = VarPoly::one(n);
        for (int j = 0; j < 2 * k; ++j) term = term * vi;
        p = p + term;
    }
    return p;
}

void suiteCenter(const WeylType& t, Ctx& c) {
    int n = t.n;
    bool squares = t.family != Family::A;  // C[y]^W needs even powers for B/D
    {
        const DahcaAlgebra& alg = DahcaAlgebra::get(t, true);
        std::vector<std::pair<std::string, DahcaElem>> gens;
        for (int i = 1; i <= n; ++i) {
            gens.emplace_back("x" + std::to_string(i), alg.xGen(i));
            gens.emplace_back("y" + std::to_string(i), alg.yGen(i));
            gens.emplace_back("c" + std::to_string(i), alg.cGen(i));
        }
        for (int k = 1; k <= numGenerators(t); ++k)
            gens.emplace_back("s" + std::to_string(k),
                              alg.weylElem(simpleReflection(t, k)));
        std::vector<std::pair<std::string, DahcaElem>> centrals;
        for (int k = 1; k <= std::min(3, n); ++k)
            centrals.emplace_back("e_" + std::to_string(k) + "(y)",
                                  alg.fromYPoly(elementarySymmetric(n, k, squares)));
        for (int k = 1; k <= 3; ++k)
            centrals.emplace_back("p_" + std::to_string(k) + "(x^2)",
                                  alg.fromXPoly(powerSumSquares(n, k)));
        for (auto& [zn, z] : centrals)
            for (auto& [gn, ge] : gens)
                c.truth((alg.mul(z, ge) - alg.mul(ge, z)).isZero(),
                        "dahca even center: " + zn + " commutes", "gen=" + gn);
    }
    {
        const SdahaAlgebra& alg = SdahaAlgebra::get(t, true);
        std::vector<std::pair<std::string, SdahaElem>> gens;
        for (int i = 1; i <= n; ++i) {
            gens.emplace_back("xi" + std::to_string(i), alg.xiGen(i));
            gens.emplace_back("y" + std::to_string(i), alg.yGen(i));
        }
        for (int k = 1; k <= numGenerators(t); ++k)
            gens.emplace_back("t" + std::to_string(k), alg.tGen(k));
        std::vector<std::pair<std::string, SdahaElem>> centrals;
        for (int k = 1; k <= std::min(3, n); ++k)
            centrals.emplace_back("e_" + std::to_string(k) + "(y)",
                                  alg.fromYPoly(elementarySymmetric(n, k, squares)));
        for (int k = 1; k <= 3; ++k) {
            SdahaElem p = alg.zero();
            for (int i = 1; i <= n; ++i) {
                ExpVec e(n);
                e.e[i - 1] = uint8_t(2 * k);
                p = p + alg.monomial({e, SignedPerm::identity(n), ExpVec(n)},
                                     ParamPoly(1));
            }
            centrals.emplace_back("p_" + std::to_string(k) + "(xi^2)", p);
        }
        for (auto& [zn, z] : centrals)
            for (auto& [gn, ge] : gens)
                c.truth((alg.mul(z, ge) - alg.mul(ge, z)).isZero(),
                        "sdaha even center: " + zn + " commutes", "gen=" + gn);
    }
}

// ---------------------------------------------------------------- dunkl

void suiteDunkl(const WeylType& t, Ctx& c) {
    const WeylGroup& g = WeylGroup::get(t, true);
    int n = t.n;
    std::uniform_int_distribution<unsigned> dmask(0, (1u << n) - 1);
    std::uniform_int_distribution<int> dtot(0, 2), dmod(0, 3);

    {
        const DahcaAlgebra& alg = DahcaAlgebra::get(t, true);
        auto rnd = [&] {
            int total = dtot(c.rng);
            int dx = std::uniform_int_distribution<int>(0, total)(c.rng);
            return alg.monomial({randExp(c.rng, n, dx), dmask(c.rng), randElem(g, c.rng),
                                 randExp(c.rng, n, total - dx)},
                                randCoeffUV(c.rng));
        };
        for (auto kind : {DunklModule::Kind::DAHCA_X_MODULE,
                          DunklModule::Kind::DAHCA_Y_MODULE}) {
            DunklModule mod(kind, t, true);
            const char* what = kind == DunklModule::Kind::DAHCA_X_MODULE
                                   ? "dahca x-module axiom act(ab,m)=act(a,act(b,m))"
                                   : "dahca y-module axiom act(ab,m)=act(a,act(b,m))";
            for (int it = 0; it < c.scaled(200); ++it) {
                DahcaElem a = rnd(), b = rnd();
                PolyModElem m = PolyModElem::basis(n, randExp(c.rng, n, dmod(c.rng)),
                                                   dmask(c.rng), ParamPoly(1));
                c.truth(mod.act(alg.mul(a, b), m) == mod.act(a, mod.act(b, m)), what,
                        a.str() + " ; " + b.str());
            }
        }
    }
    {
        const SdahaAlgebra& alg = SdahaAlgebra::get(t, true);
        DunklModule mod(DunklModule::Kind::SDAHA_Y_MODULE, t, true);
        auto rnd = [&] {
            int total = dtot(c.rng);
            int dx = std::uniform_int_distribution<int>(0, total)(c.rng);
            return alg.monomial({randExp(c.rng, n, dx), randElem(g, c.rng),
                                 randExp(c.rng, n, total - dx)},
                                randCoeffUV(c.rng));
        };
        for (int it = 0; it < c.scaled(200); ++it) {
            SdahaElem a = rnd(), b = rnd();
            PolyModElem m = PolyModElem::basis(n, randExp(c.rng, n, dmod(c.rng)),
                                               dmask(c.rng), ParamPoly(1));
            c.truth(mod.act(alg.mul(a, b), m) == mod.act(a, mod.act(b, m)),
                    "sdaha module axiom act(ab,m)=act(a,act(b,m))",
                    a.str() + " ; " + b.str());
        }
    }
}

// ---------------------------------------------------------------- quotient

void suiteQuotient(const WeylType& t, Ctx& c) {
    const CdahaAlgebra& alg = CdahaAlgebra::get(t, true);
    const DahaAlgebra& dalg = DahaAlgebra::get(t, true);
    const SdahaAlgebra& salg = SdahaAlgebra::get(t, true);
    const WeylGroup& g = WeylGroup::get(t, true);
    const SpinContext& ctx = SpinContext::get(t, true);
    int n = t.n;

    // Images of the distinguished preimages under both quotients.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i != j) {
                CoverElem lift = coverLift(t, OddKind::TIJ, i, j);
                c.truth(upsilonPlusGroup(lift) == transposition(n, i, j),
                        "Upsilon+({i,j}) = (i,j)",
                        "i=" + std::to_string(i) + " j=" + std::to_string(j));
                c.eq(upsilonMinusGroup(t, lift), oddReflection(t, OddKind::TIJ, i, j),
                     "Upsilon-({i,j}) = [i,j]",
                     "i=" + std::to_string(i) + " j=" + std::to_string(j));
                if (t.family != Family::A) {
                    CoverElem liftB = coverLift(t, OddKind::TBAR_IJ, i, j);
                    c.truth(upsilonPlusGroup(liftB) == barTransposition(n, i, j),
                            "Upsilon+({i,j}-bar) = (i,j)-bar",
                            "i=" + std::to_string(i) + " j=" + std::to_string(j));
                    c.eq(upsilonMinusGroup(t, liftB),
                         oddReflection(t, OddKind::TBAR_IJ, i, j),
                         "Upsilon-({i,j}-bar) = [i,j]-bar",
                         "i=" + std::to_string(i) + " j=" + std::to_string(j));
                }
            } else if (t.family == Family::B) {
                CoverElem lift = coverLift(t, OddKind::TBAR_I, i);
                c.truth(upsilonPlusGroup(lift) == signFlip(n, i),
                        "Upsilon+({i}) = tau_i", "i=" + std::to_string(i));
                c.eq(upsilonMinusGroup(t, lift), oddReflection(t, OddKind::TBAR_I, i),
                     "Upsilon-({i}) = [i]-bar", "i=" + std::to_string(i));
            }
        }

    // Multiplicativity on random pairs; Upsilon+ lands in t = 0.
    std::uniform_int_distribution<int> dtot(0, 2);
    auto rnd = [&] {
        int total = dtot(c.rng);
        int dx = std::uniform_int_distribution<int>(0, total)(c.rng);
        CoverElem cov{int(c.rng() & 1), randElem(g, c.rng)};
        return alg.monomial({randExp(c.rng, n, dx), cov, randExp(c.rng, n, total - dx)},
                            randCoeffUV(c.rng));
    };
    for (int it = 0; it < c.scaled(300); ++it) {
        CdahaElem a = rnd(), b = rnd();
        CdahaElem ab = alg.mul(a, b);
        DahaElem plus =
            dalg.mul(upsilonPlus(a), upsilonPlus(b)).specializeT(CycScalar(0));
        c.truth(upsilonPlus(ab) == plus, "Upsilon+ multiplicative into daha^{t=0}",
                a.str() + " ; " + b.str());
        c.truth(upsilonMinus(ab) == salg.mul(upsilonMinus(a), upsilonMinus(b)),
                "Upsilon- multiplicative into sdaha", a.str() + " ; " + b.str());
    }

    // The commutative square restricted to the group algebra CW~.
    size_t cap = g.size() <= 24 ? g.size() : 24;
    for (size_t ia = 0; ia < cap; ++ia)
        for (size_t ib = 0; ib < cap; ++ib) {
            CoverElem a{0, g.elements()[ia]}, b{0, g.elements()[ib]};
            CdahaElem prod = alg.mul(alg.coverElem(a), alg.coverElem(b));
            c.truth(prod == alg.coverElem(ctx.coverMul(a, b)),
                    "cover product stays in CW~");
            c.truth(upsilonPlus(prod) ==
                        dalg.mul(dalg.weylElem(a.w), dalg.weylElem(b.w)),
                    "square: Upsilon+ restricted to CW~");
            c.truth(upsilonMinus(prod) ==
                        salg.mul(salg.fromSpin(SpinElem::basis(t, a.w, ParamPoly(1))),
                                 salg.fromSpin(SpinElem::basis(t, b.w, ParamPoly(1)))),
                    "square: Upsilon- restricted to CW~");
        }

    // PBW spanning smoke: products of <= 4 generators reduce to normal form.
    std::vector<CdahaElem> gens;
    for (int i = 1; i <= n; ++i) {
        gens.push_back(alg.xtGen(i));
        gens.push_back(alg.ytGen(i));
    }
    for (int k = 1; k <= numGenerators(t); ++k) gens.push_back(alg.ttGen(k));
    gens.push_back(alg.zElem());
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    for (int it = 0; it < c.scaled(100); ++it) {
        CdahaElem p = alg.one();
        for (int r = 0; r < 4; ++r) p = alg.mul(p, gens[pick(c.rng)]);
        ++c.r.checks;  // reaching normal form without error is the check
    }
}

// ---------------------------------------------------------------- closedform

void suiteClosedForm(const WeylType& t, Ctx& c) {
    const DahcaAlgebra& alg = DahcaAlgebra::get(t, true);
    const SdahaAlgebra& salg = SdahaAlgebra::get(t, true);
    int n = t.n;
    auto comm = [&](const DahcaElem& a, const DahcaElem& b) {
        return alg.mul(a, b) - alg.mul(b, a);
    };
    auto scomm = [&](const SdahaElem& a, const SdahaElem& b) {
        return salg.mul(a, b) - salg.mul(b, a);
    };

    // Pure-power closed forms, l <= 4, all index pairs.
    for (int l = 1; l <= 4; ++l)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                ExpVec e(n);
                e.e[j - 1] = uint8_t(l);
                VarPoly f = VarPoly::monomial(n, e, ParamPoly(1));
                std::string tag = "l=" + std::to_string(l) + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j);
                c.eq(alg.commYPolyClosed(f, i), comm(alg.yGen(i), alg.fromXPoly(f)),
                     "[y_i, x_j^l] closed form vs engine", tag);
                c.eq(alg.commPolyXClosed(f, i), comm(alg.fromYPoly(f), alg.xGen(i)),
                     "[y_j^l, x_i] closed form vs engine", tag);
                c.eq(salg.commPolyXiClosed(f, i),
                     scomm(salg.fromYPoly(f), salg.xiGen(i)),
                     "[y_j^l, xi_i] closed form vs engine", tag);
            }

    // Random polynomials of degree <= 4.
    std::uniform_int_distribution<int> dtot(0, 4), dterms(1, 3), di(1, n);
    auto randPoly = [&] {
        VarPoly f(n);
        int terms = dterms(c.rng);
        for (int k = 0; k < terms; ++k)
            f = f + VarPoly::monomial(n, randExp(c.rng, n, dtot(c.rng)),
                                      randCoeffUV(c.rng));
        return f;
    };
    for (int it = 0; it < c.scaled(100); ++it) {
        VarPoly f = randPoly();
        int i = di(c.rng);
        c.truth(alg.commYPolyClosed(f, i) == comm(alg.yGen(i), alg.fromXPoly(f)),
                "[y_i, f] closed form vs engine", "f=" + f.str("x"));
        c.truth(alg.commPolyXClosed(f, i) == comm(alg.fromYPoly(f), alg.xGen(i)),
                "[f, x_i] closed form vs engine", "f=" + f.str("y"));
        c.truth(salg.commPolyXiClosed(f, i) == scomm(salg.fromYPoly(f), salg.xiGen(i)),
                "[f, xi_i] closed form vs engine", "f=" + f.str("y"));
    }
}

// ---------------------------------------------------------------- faithful

// Arithmetic mod p = 2^61 - 1 for the exact full-rank certificate.
constexpr uint64_t kPrime = 2305843009213693951ULL;

uint64_t mulmod(uint64_t a, uint64_t b) {
    return uint64_t((__uint128_t(a) * b) % kPrime);
}

uint64_t powmod(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t ratMod(const Rational& q) {
    Int num = q.get_num(), den = q.get_den();
    Int p(static_cast<unsigned long>(kPrime));
    Int nm = num % p;
    if (nm < 0) nm += p;
    Int dm = den % p;
    if (dm == 0) throw InternalError("denominator divisible by the certificate prime");
    uint64_t nv = mpz_get_ui(nm.get_mpz_t());
    uint64_t dv = mpz_get_ui(dm.get_mpz_t());
    return mulmod(nv, powmod(dv, kPrime - 2));
}

size_t rankMod(std::vector<std::vector<uint64_t>>& rows) {
    size_t rank = 0;
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t piv = row;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[row], rows[piv]);
        uint64_t inv = powmod(rows[row][col], kPrime - 2);
        for (size_t r2 = row + 1; r2 < rows.size(); ++r2) {
            if (rows[r2][col] == 0) continue;
            uint64_t f = mulmod(rows[r2][col], inv);
            for (size_t cc = col; cc < cols; ++cc) {
                uint64_t sub = mulmod(f, rows[row][cc]);
                rows[r2][cc] = (rows[r2][cc] >= sub) ? rows[r2][cc] - sub
                                                     : rows[r2][cc] + kPrime - sub;
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

void suiteFaithful(const WeylType& t, Ctx& c) {
    // The witness runs at type B, n = 2, jointly on both truncated Dunkl
    // modules. On a single induced module the statement is false for every
    // family: positive-degree elements of the even center (x_1^2+x_2^2, whose
    // centrality the 'center' suite verifies) kill the cyclic vector, hence
    // the whole module.
    // Acting on C[x] (x) C_2 and C[y] (x) C_2 simultaneously removes that
    // obstruction; type B at generic (u,v) then has full rank, while A at
    // n = 2 is degenerate even jointly (x-degree-2 elements killed on the
    // y-side times the central y_1+y_2 killed on the x-side).
    if (t.n != 2 || t.family != Family::B)
        throw ArgumentError(
            "the faithfulness probe is defined at type B, n = 2 "
            "(generic parameters u, v)");
    const DahcaAlgebra& alg = DahcaAlgebra::get(t, true);
    const WeylGroup& g = WeylGroup::get(t, true);
    int n = 2;

    // All PBW monomials of total degree <= 3.
    std::vector<DahcaElem> monos;
    for (int dx = 0; dx <= 3; ++dx)
        for (int ax = 0; ax <= dx; ++ax)
            for (unsigned eps = 0; eps < 4; ++eps) {
                int rest = 3 - dx - __builtin_popcount(eps);
                if (rest < 0) continue;
                for (int dy = 0; dy <= rest; ++dy)
                    for (int ay = 0; ay <= dy; ++ay)
                        for (const SignedPerm& w : g.elements()) {
                            ExpVec x(n), y(n);
                            x.e[0] = uint8_t(ax);
                            x.e[1] = uint8_t(dx - ax);
                            y.e[0] = uint8_t(ay);
                            y.e[1] = uint8_t(dy - ay);
                            monos.push_back(alg.monomial({x, eps, w, y}, ParamPoly(1)));
                        }
            }

    // Generic rational parameter point u = 3/7, v = 5/11.
    CycScalar uval{Rational(3, 7)}, vval{Rational(5, 11)};
    DunklModule modY(DunklModule::Kind::DAHCA_Y_MODULE, t, true);
    DunklModule modX(DunklModule::Kind::DAHCA_X_MODULE, t, true);

    size_t lastRank = 0;
    for (int attempt = 0, probes = 6; attempt < 3; ++attempt, probes += 4) {
        // Sparse random probe vectors of degree <= 5.
        std::vector<PolyModElem> probeVecs;
        std::uniform_int_distribution<int> dd(0, 5), dmask(0, 3), dc(1, 5);
        for (int p = 0; p < probes; ++p) {
            PolyModElem v(n);
            for (int term = 0; term < 12; ++term)
                v.add(randExp(c.rng, n, dd(c.rng)), unsigned(dmask(c.rng)),
                      ParamPoly(Rational(dc(c.rng), 1 + (term % 3))));
            probeVecs.push_back(v);
        }

        // Column dictionary: (module side, probe, monomial, mask, cyc coord).
        std::map<std::tuple<int, int, uint64_t, unsigned, int>, size_t> colIndex;
        std::vector<std::vector<std::pair<size_t, uint64_t>>> sparse(monos.size());
        for (size_t mi = 0; mi < monos.size(); ++mi)
            for (size_t p = 0; p < probeVecs.size(); ++p)
                for (int side = 0; side < 2; ++side) {
                    PolyModElem img = side ? modX.act(monos[mi], probeVecs[p])
                                           : modY.act(monos[mi], probeVecs[p]);
                    for (auto& [key, coeff] : img.terms()) {
                        CycScalar val = coeff.specialize({}, uval, vval).constant();
                        for (int coord = 0; coord < 4; ++coord) {
                            if (val.coord(coord) == 0) continue;
                            auto ck = std::make_tuple(side, int(p), key.first.key(),
                                                      key.second, coord);
                            auto [it, ins] = colIndex.emplace(ck, colIndex.size());
                            sparse[mi].emplace_back(it->second,
                                                    ratMod(val.coord(coord)));
                        }
                    }
                }

        std::vector<std::vector<uint64_t>> rows(
            monos.size(), std::vector<uint64_t>(colIndex.size(), 0));
        for (size_t mi = 0; mi < monos.size(); ++mi)
            for (auto& [col, val] : sparse[mi])
                rows[mi][col] = (rows[mi][col] + val) % kPrime;

        size_t rank = rankMod(rows);
        lastRank = rank;
        ++c.r.checks;
        // Full rank mod p certifies full rank over Q: a nonzero maximal minor
        // mod p lifts to a nonzero rational minor.
        if (rank == monos.size()) return;
    }
    c.r.failures.push_back(
        {"PBW monomials of degree <= 3 act linearly independently on the "
         "pair of truncated Dunkl modules",
         "type B, n=2, u=3/7, v=5/11",
         std::to_string(monos.size()) + " (full rank)", std::to_string(lastRank)});
}

// ---------------------------------------------------------------- registry

struct SuiteDef {
    const char* name;
    void (*fn)(const WeylType&, Ctx&);
    std::vector<std::string> covers;
};

const std::vector<SuiteDef>& registry() {
    static const std::vector<SuiteDef> defs = {
        {"relations", suiteRelations,
         {"double-cover-relations", "spin-algebra-relations", "clifford-relations", "dahca-defining-relations",
          "sdaha-defining-relations", "cover-defining-relations",
          "daha-defining-relations"}},
        {"assoc", suiteAssoc, {"pbw-dahca", "pbw-sdaha", "pbw-cdaha", "pbw-daha"}},
        {"conj", suiteConj, {"conj-inv-c", "conj-inv-w"}},
        {"jacobi", suiteJacobi, {"jacobi"}},
        {"cocycle", suiteCocycle, {"cocycle-identity", "gamma-transport"}},
        {"iso", suiteIso,
         {"finite-iso", "transposition-images", "double-affine-iso", "native-vs-transport"}},
        {"center", suiteCenter, {"center-dahca", "center-sdaha"}},
        {"dunkl", suiteDunkl, {"dunkl-dahca-x", "dunkl-dahca-y", "dunkl-sdaha"}},
        {"quotient", suiteQuotient,
         {"cover-quotient-images", "quotient-multiplicativity", "commutative-square"}},
        {"closedform", suiteClosedForm,
         {"comm-closed-power", "comm-closed-poly", "sdaha-comm-closed",
          "odd-reflections"}},
        {"faithful", suiteFaithful, {"pbw-faithfulness"}},
    };
    return defs;
}

}  // namespace

std::vector<std::string> suiteNames() {
    std::vector<std::string> names;
    for (const auto& d : registry()) names.push_back(d.name);
    return names;
}

std::vector<std::string> suiteCoverage(const std::string& name) {
    for (const auto& d : registry())
        if (name == d.name) return d.covers;
    throw ArgumentError("unknown suite: " + name);
}

const std::vector<std::string>& requiredCoverageTags() {
    static const std::vector<std::string> tags = {
        "double-cover-relations", "spin-algebra-relations", "clifford-relations",
        "dahca-defining-relations", "sdaha-defining-relations",
        "cover-defining-relations", "daha-defining-relations",
        "pbw-dahca", "pbw-sdaha", "pbw-cdaha", "pbw-daha",
        "conj-inv-c", "conj-inv-w", "jacobi",
        "cocycle-identity", "gamma-transport",
        "finite-iso", "transposition-images", "double-affine-iso", "native-vs-transport",
        "center-dahca", "center-sdaha",
        "dunkl-dahca-x", "dunkl-dahca-y", "dunkl-sdaha",
        "cover-quotient-images", "quotient-multiplicativity", "commutative-square",
        "comm-closed-power", "comm-closed-poly", "sdaha-comm-closed",
        "odd-reflections", "pbw-faithfulness",
    };
    return tags;
}

bool coverageComplete(std::vector<std::string>* missing) {
    std::vector<std::string> covered;
    for (const auto& d : registry())
        covered.insert(covered.end(), d.covers.begin(), d.covers.end());
    bool ok = true;
    for (const auto& tag : requiredCoverageTags()) {
        if (std::find(covered.begin(), covered.end(), tag) == covered.end()) {
            ok = false;
            if (missing) missing->push_back(tag);
        }
    }
    return ok;
}

SuiteReport runSuite(const std::string& name, const WeylType& t, uint64_t seed,
                     int budget, bool allowSmallD) {
    validateType(t, allowSmallD);
    if (budget < 1) throw ArgumentError("budget must be >= 1");
    for (const auto& d : registry()) {
        if (name != d.name) continue;
        SuiteReport report;
        report.suite = name;
        report.type = t;
        report.seed = seed;
        Ctx ctx{report, std::mt19937_64(seed), budget, allowSmallD};
        d.fn(t, ctx);
        return report;
    }
    throw ArgumentError("unknown suite: " + name);
}

}  // namespace heckec
