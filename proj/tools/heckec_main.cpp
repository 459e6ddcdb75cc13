#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "heckec/expr.hpp"
#include "heckec/io.hpp"
#include "heckec/verify.hpp"

using namespace heckec;

namespace {

struct CommonOpts {
    std::string family = "A";
    int n = 2;
    bool json = false;
    bool allowSmallD = false;
    int maxDegree = 64;
};

void addCommon(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--type", o.family, "Weyl family: A, B or D")
        ->check(CLI::IsMember({"A", "B", "D"}));
    cmd->add_option("--n", o.n, "rank parameter (type A means W = S_n)")
        ->check(CLI::Range(1, kMaxRank));
    cmd->add_flag("--json", o.json, "emit JSON instead of text");
    cmd->add_flag("--allow-small-d", o.allowSmallD,
                  "permit the non-irreducible D_2/D_3 groups");
    cmd->add_option("--max-degree", o.maxDegree,
                    "total-degree guard for products (default 64)")
        ->check(CLI::Range(1, 200));
}

WeylType typeOf(const CommonOpts& o) {
    Family f = o.family == "A" ? Family::A : o.family == "B" ? Family::B : Family::D;
    WeylType t{f, o.n};
    validateType(t, o.allowSmallD);
    return t;
}

void applyCaps(const WeylType& t, const CommonOpts& o) {
    DahcaAlgebra::get(t, o.allowSmallD).setDegreeCap(o.maxDegree);
    SdahaAlgebra::get(t, o.allowSmallD).setDegreeCap(o.maxDegree);
    CdahaAlgebra::get(t, o.allowSmallD).setDegreeCap(o.maxDegree);
    DahaAlgebra::get(t, o.allowSmallD).setDegreeCap(o.maxDegree);
}

template <typename Elem>
void emit(const Elem& e, bool json) {
    if (json) {
        std::cout << toJson(e).dump(2) << "\n";
    } else {
        std::cout << e.str() << "\n";
    }
}

int runNf(const CommonOpts& o, const std::string& algebra, const std::string& expr) {
    WeylType t = typeOf(o);
    applyCaps(t, o);
    if (algebra == "dahca") {
        emit(evalDahca(expr, t, o.allowSmallD), o.json);
    } else if (algebra == "sdaha") {
        emit(evalSdaha(expr, t, o.allowSmallD), o.json);
    } else if (algebra == "cdaha") {
        emit(evalCdaha(expr, t, o.allowSmallD), o.json);
    } else {
        emit(evalDaha(expr, t, o.allowSmallD), o.json);
    }
    return 0;
}

int runComm(const CommonOpts& o, const std::string& algebra, const std::string& e1,
            const std::string& e2) {
    WeylType t = typeOf(o);
    applyCaps(t, o);
    if (algebra == "dahca") {
        DahcaElem a = evalDahca(e1, t, o.allowSmallD), b = evalDahca(e2, t, o.allowSmallD);
        emit(a * b - b * a, o.json);
    } else if (algebra == "sdaha") {
        SdahaElem a = evalSdaha(e1, t, o.allowSmallD), b = evalSdaha(e2, t, o.allowSmallD);
        emit(a * b - b * a, o.json);
    } else if (algebra == "cdaha") {
        CdahaElem a = evalCdaha(e1, t, o.allowSmallD), b = evalCdaha(e2, t, o.allowSmallD);
        emit(a * b - b * a, o.json);
    } else {
        DahaElem a = evalDaha(e1, t, o.allowSmallD), b = evalDaha(e2, t, o.allowSmallD);
        emit(a * b - b * a, o.json);
    }
    return 0;
}

int runDunkl(const CommonOpts& o, const std::string& algebra, const std::string& vars,
             const std::string& fSrc, const std::string& mSrc,
             const std::string& apply) {
    WeylType t = typeOf(o);
    applyCaps(t, o);
    bool xVars = vars == "x";
    DunklModule::Kind kind;
    if (algebra == "sdaha") {
        if (xVars)
            throw ArgumentError("the sdaha Dunkl module uses the y variables");
        kind = DunklModule::Kind::SDAHA_Y_MODULE;
    } else {
        kind = xVars ? DunklModule::Kind::DAHCA_X_MODULE
                     : DunklModule::Kind::DAHCA_Y_MODULE;
    }
    DunklModule mod(kind, t, o.allowSmallD);

    VarPoly f = evalVarPoly(fSrc, t.n, xVars);
    CliffordElem mCl = evalClifford(mSrc, t.n);
    PolyModElem m(t.n);
    for (auto& [e, c] : f.terms())
        for (auto& [mask, k] : mCl.terms()) m.add(e, mask, c * ParamPoly(k));

    PolyModElem out(t.n);
    if (algebra == "sdaha") {
        out = mod.act(evalSdaha(apply, t, o.allowSmallD), m);
    } else {
        out = mod.act(evalDahca(apply, t, o.allowSmallD), m);
    }
    if (o.json) {
        std::cout << toJson(out, vars).dump(2) << "\n";
    } else {
        std::cout << out.str(vars) << "\n";
    }
    return 0;
}

int runMap(const CommonOpts& o, const std::string& which, const std::string& expr) {
    WeylType t = typeOf(o);
    applyCaps(t, o);
    if (which == "phi") {
        emit(phiBig(evalDahca(expr, t, o.allowSmallD)), o.json);
    } else if (which == "psi") {
        emit(psiBig(evalTensorSdaha(expr, t, o.allowSmallD)), o.json);
    } else if (which == "upsilon+") {
        emit(upsilonPlus(evalCdaha(expr, t, o.allowSmallD)), o.json);
    } else {
        emit(upsilonMinus(evalCdaha(expr, t, o.allowSmallD)), o.json);
    }
    return 0;
}

int runVerify(const CommonOpts& o, const std::string& suite, uint64_t seed, int budget) {
    // Verification is the sanctioned testing context for the non-irreducible
    // D_2/D_3 groups, so the suites admit them without the flag.
    CommonOpts opts = o;
    opts.allowSmallD = true;
    const CommonOpts& oo = opts;
    WeylType t = typeOf(oo);
    applyCaps(t, oo);
    std::vector<std::string> names;
    if (suite == "all") {
        for (const std::string& name : suiteNames()) {
            if (name == "faithful" && !(t.family == Family::B && t.n == 2)) continue;
            names.push_back(name);
        }
    } else {
        names.push_back(suite);
    }
    bool anyFail = false;
    nlohmann::json out = nlohmann::json::array();
    for (const std::string& name : names) {
        SuiteReport r = runSuite(name, t, seed, budget, oo.allowSmallD);
        anyFail |= !r.ok();
        if (oo.json) {
            out.push_back(nlohmann::json::parse(r.jsonStr()));
        } else {
            std::cout << r.text();
        }
    }
    if (oo.json) std::cout << out.dump(2) << "\n";
    return anyFail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic kernel for rational double affine "
                 "Hecke-Clifford, spin and covering Hecke algebras"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string algebra = "dahca", expr, expr2;
    std::string vars = "y", fSrc = "1", mSrc = "1", apply = "1";
    std::string which = "phi", suite = "all";
    uint64_t seed = 0;
    int budget = 1;

    CLI::App* nf = app.add_subcommand("nf", "PBW normal form of an expression");
    addCommon(nf, opts);
    nf->add_option("--algebra", algebra, "dahca, sdaha, cdaha or daha")
        ->check(CLI::IsMember({"dahca", "sdaha", "cdaha", "daha"}));
    nf->add_option("expr", expr, "expression")->required();

    CLI::App* comm = app.add_subcommand("comm", "normal form of a commutator");
    addCommon(comm, opts);
    comm->add_option("--algebra", algebra, "dahca, sdaha, cdaha or daha")
        ->check(CLI::IsMember({"dahca", "sdaha", "cdaha", "daha"}));
    comm->add_option("e1", expr, "left factor")->required();
    comm->add_option("e2", expr2, "right factor")->required();

    CLI::App* dunkl = app.add_subcommand("dunkl", "apply an element to f (x) m "
                                                  "in a Dunkl polynomial module");
    addCommon(dunkl, opts);
    dunkl->add_option("--algebra", algebra, "dahca or sdaha")
        ->check(CLI::IsMember({"dahca", "sdaha"}));
    dunkl->add_option("--vars", vars, "polynomial variable family: x or y")
        ->check(CLI::IsMember({"x", "y"}));
    dunkl->add_option("--f", fSrc, "polynomial factor");
    dunkl->add_option("--m", mSrc, "Clifford module factor");
    dunkl->add_option("--apply", apply, "algebra element to act with")->required();

    CLI::App* mapCmd = app.add_subcommand("map", "apply Phi/Psi or Upsilon+-");
    addCommon(mapCmd, opts);
    mapCmd->add_option("--which", which, "phi, psi, upsilon+ or upsilon-")
        ->check(CLI::IsMember({"phi", "psi", "upsilon+", "upsilon-"}));
    mapCmd->add_option("expr", expr, "expression (dahca for phi, tensor for psi, "
                                     "cdaha for upsilon)")
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    addCommon(verify, opts);
    verify->add_option("--suite", suite,
                       "suite name or 'all' (see --list-suites)");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--budget", budget, "random-case multiplier (>= 1)")
        ->check(CLI::Range(1, 1000));
    bool listSuites = false;
    verify->add_flag("--list-suites", listSuites, "print suite names and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (nf->parsed()) return runNf(opts, algebra, expr);
        if (comm->parsed()) return runComm(opts, algebra, expr, expr2);
        if (dunkl->parsed()) return runDunkl(opts, algebra, vars, fSrc, mSrc, apply);
        if (mapCmd->parsed()) return runMap(opts, which, expr);
        if (verify->parsed()) {
            if (listSuites) {
                for (const std::string& name : suiteNames()) std::cout << name << "\n";
                return 0;
            }
            return runVerify(opts, suite, seed, budget);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
