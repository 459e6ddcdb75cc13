#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heckec/common.hpp"

namespace heckec {

enum class Family : uint8_t { A, B, D };

std::string familyName(Family f);

/// A classical Weyl group label. For family A the rank parameter n means
/// W = S_n acting on n letters (n-1 Coxeter generators); B_n needs n >= 2,
/// D_n needs n >= 4 (n in {2,3} only behind the allowSmallD flag).
struct WeylType {
    Family family;
    int n;
    friend bool operator==(const WeylType&, const WeylType&) = default;
    std::string str() const { return familyName(family) + std::to_string(n); }
};

void validateType(const WeylType& t, bool allowSmallD = false);

/// Exponent vector of a monomial in up to kMaxRank variables.
struct ExpVec {
    uint8_t n = 0;
    std::array<uint8_t, kMaxRank> e{};

    explicit ExpVec(int rank = 0) : n(uint8_t(rank)) {}
    static ExpVec unit(int rank, int i) {
        ExpVec r(rank);
        r.e[i - 1] = 1;
        return r;
    }
    int total() const {
        int s = 0;
        for (int i = 0; i < n; ++i) s += e[i];
        return s;
    }
    bool isZero() const { return total() == 0; }
    uint64_t key() const {
        uint64_t k = 0;
        for (int i = n - 1; i >= 0; --i) k = (k << 8) | e[i];
        return k;
    }
    ExpVec plus(const ExpVec& o) const {
        ExpVec r = *this;
        for (int i = 0; i < n; ++i) r.e[i] = uint8_t(r.e[i] + o.e[i]);
        return r;
    }
    friend bool operator==(const ExpVec&, const ExpVec&) = default;
    // Canonical order: total degree, then lexicographic.
    friend bool operator<(const ExpVec& a, const ExpVec& b) {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        for (int i = 0; i < a.n; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

/// Element of W_{B_n} as a signed permutation: w(e_i) = sign_i * e_{perm_i}.
/// Types A and D are the predicate-restricted subsets (all signs +, resp.
/// evenly many -).
class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(int n) : n_(uint8_t(n)) {
        for (int i = 0; i < n; ++i) {
            perm_[i] = int8_t(i + 1);
            sign_[i] = 1;
        }
    }
    static SignedPerm identity(int n) { return SignedPerm(n); }

    int rank() const { return n_; }
    bool isIdentity() const;

    /// w(e_i) = sigma * e_j; returns (j, sigma). 1-based.
    std::pair<int, int> act(int i) const;

    /// (this o other)(e_i) = this(other(e_i)).
    SignedPerm compose(const SignedPerm& o) const;
    SignedPerm inverse() const;

    /// Image of a monomial exponent vector: returns (sign, permuted exponents),
    /// where sign = prod_i sign_i^{alpha_i}.
    std::pair<int, ExpVec> actExp(const ExpVec& a) const;

    /// det of the matrix of w; equals (-1)^{Coxeter length}.
    int detSign() const;

    uint64_t key() const;
    friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
        return a.key() == b.key();
    }
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
        return a.key() < b.key();
    }

    /// Window notation, e.g. [2,-1,3].
    std::string str() const;

    void setImage(int i, int j, int sgn) {
        perm_[i - 1] = int8_t(j);
        sign_[i - 1] = int8_t(sgn);
    }

private:
    uint8_t n_ = 0;
    std::array<int8_t, kMaxRank> perm_{};
    std::array<int8_t, kMaxRank> sign_{};
};

SignedPerm transposition(int n, int i, int j);     // s_ij
SignedPerm barTransposition(int n, int i, int j);  // sbar_ij (swap + two sign flips)
SignedPerm signFlip(int n, int i);                 // tau_i

enum class ReflectionKind { SIJ, SBAR_IJ, TAU_I, SIMPLE };

int numGenerators(const WeylType& t);
SignedPerm simpleReflection(const WeylType& t, int k);
/// Reflection constructors; kind availability depends on the family
/// (sbar: B/D, tau: B only). For SIMPLE, i is the generator index.
SignedPerm reflection(const WeylType& t, ReflectionKind kind, int i, int j = 0);

bool memberOf(const WeylType& t, const SignedPerm& w);

/// Coxeter matrix entry m_{ij} of the type's diagram (1-based generators).
int coxeterM(const WeylType& t, int i, int j);

/// Cached group data for one (family, n): BFS distances from the identity
/// and canonical (lexicographically least) reduced words. Built once,
/// read-only afterwards.
class WeylGroup {
public:
    static const WeylGroup& get(const WeylType& t, bool allowSmallD = false);

    const WeylType& type() const { return type_; }
    int rank() const { return type_.n; }
    int numGens() const { return int(gens_.size()); }
    const SignedPerm& simple(int k) const;
    size_t size() const { return elements_.size(); }
    /// All elements in BFS (length-graded) discovery order; deterministic.
    const std::vector<SignedPerm>& elements() const { return elements_; }

    bool contains(const SignedPerm& w) const;
    int length(const SignedPerm& w) const;
    std::vector<int> reducedWord(const SignedPerm& w) const;
    SignedPerm wordToElement(const std::vector<int>& word) const;

private:
    explicit WeylGroup(const WeylType& t);
    WeylType type_;
    std::vector<SignedPerm> gens_;
    std::unordered_map<uint64_t, uint16_t> dist_;
    std::vector<SignedPerm> elements_;
};

}  // namespace heckec
