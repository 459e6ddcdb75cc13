// Acceptance gate: runs every criterion at its stated scale and tolerance
// (all arithmetic is exact, so every tolerance is exact equality) and prints
// one PASS/FAIL line per criterion. Exit status 0 iff all criteria pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "heckec/verify.hpp"

using namespace heckec;

namespace {

struct Invocation {
    std::string suite;
    WeylType type;
    bool smallD = false;
};

struct Criterion {
    int id;
    std::string label;
    double budgetSeconds;
    std::vector<Invocation> runs;
};

bool runCriterion(const Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    size_t checks = 0;
    std::vector<SuiteReport> failed;
    for (const Invocation& inv : c.runs) {
        SuiteReport r = runSuite(inv.suite, inv.type, /*seed=*/0, /*budget=*/1,
                                 inv.smallD);
        checks += r.checks;
        if (!r.ok()) failed.push_back(r);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    bool timeOk = secs < c.budgetSeconds;
    bool pass = failed.empty() && timeOk;
    std::printf("[%s] criterion %d: %s (%zu checks, %.1f s / budget %.0f s)\n",
                pass ? "PASS" : "FAIL", c.id, c.label.c_str(), checks, secs,
                c.budgetSeconds);
    for (const SuiteReport& r : failed) std::printf("%s", r.text().c_str());
    if (!timeOk) std::printf("  exceeded the runtime budget\n");
    return pass;
}

}  // namespace

int main() {
    std::vector<std::string> missing;
    if (!coverageComplete(&missing)) {
        std::printf("[FAIL] suite coverage incomplete:");
        for (const auto& tag : missing) std::printf(" %s", tag.c_str());
        std::printf("\n");
        return 1;
    }

    const WeylType A2{Family::A, 2}, A3{Family::A, 3}, A4{Family::A, 4};
    const WeylType B2{Family::B, 2}, B3{Family::B, 3}, B4{Family::B, 4};
    const WeylType D2{Family::D, 2}, D3{Family::D, 3}, D4{Family::D, 4};

    std::vector<Criterion> criteria = {
        {1,
         "defining relations of CW^-, W~, hc_W, shc_W, cover and Cherednik algebras "
         "(A/B at n=2,3,4; D at n=4)",
         30.0,
         {{"relations", A2}, {"relations", A3}, {"relations", A4},
          {"relations", B2}, {"relations", B3}, {"relations", B4},
          {"relations", D4}}},
        {2,
         "PBW associativity: generator triples and >=300 random monomial triples "
         "per algebra per family, n<=3",
         120.0,
         {{"assoc", A2}, {"assoc", A3},
          {"assoc", B2}, {"assoc", B3},
          {"assoc", D2, true}, {"assoc", D3, true}}},
        {3,
         "conjugation invariance and Jacobi identities, all index choices, n<=3",
         60.0,
         {{"conj", A2}, {"conj", A3}, {"conj", B2}, {"conj", B3},
          {"conj", D2, true}, {"conj", D3, true},
          {"jacobi", A2}, {"jacobi", A3}, {"jacobi", B2}, {"jacobi", B3},
          {"jacobi", D2, true}, {"jacobi", D3, true}}},
        {4,
         "closed-form commutators vs the engine: powers l<=4 and >=100 random "
         "polynomials per closed-form family, n<=3",
         120.0,
         {{"closedform", A2}, {"closedform", A3},
          {"closedform", B2}, {"closedform", B3},
          {"closedform", D2, true}, {"closedform", D3, true}}},
        {5,
         "finite and double-affine isomorphisms: multiplicative on >=300 pairs, "
         "exact inverses, displayed images verbatim",
         60.0,
         {{"iso", A3}, {"iso", B3}, {"iso", D4}}},
        {6,
         "quotients Upsilon+-: multiplicative on >=300 pairs, generator images, "
         "Upsilon+ lands in daha at t=0",
         60.0,
         {{"quotient", A3}, {"quotient", B3}, {"quotient", D4}}},
        {7,
         "Dunkl module axiom act(ab,m)=act(a,act(b,m)) on >=200 cases per "
         "operator family, n<=3",
         120.0,
         {{"dunkl", A2}, {"dunkl", A3}, {"dunkl", B2}, {"dunkl", B3},
          {"dunkl", D2, true}, {"dunkl", D3, true}}},
        {8,
         "even center: e_k(y), p_k(x^2), p_k(xi^2) for k<=3 commute with every "
         "generator, n<=3",
         60.0,
         {{"center", A2}, {"center", A3}, {"center", B2}, {"center", B3},
          {"center", D2, true}, {"center", D3, true}}},
        {9,
         "PBW faithfulness witness at n=2: degree<=3 monomials act independently "
         "on the pair of truncated Dunkl modules (exact rank certificate)",
         60.0,
         {{"faithful", B2}}},
    };

    bool allPass = true;
    for (const Criterion& c : criteria) allPass &= runCriterion(c);
    std::printf("%s\n", allPass ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: FAILURES PRESENT");
    return allPass ? 0 : 1;
}
