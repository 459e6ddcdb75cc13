#pragma once

#include <map>
#include <string>

#include "heckec/scalars.hpp"
#include "heckec/weyl.hpp"

namespace heckec {

/// Sign and mask of a product of two canonical Clifford monomials c^a * c^b
/// under c_i^2 = 1, c_i c_j = -c_j c_i. Resulting mask is a XOR b.
int cliffordMulSign(unsigned a, unsigned b);

std::string cliffordMaskStr(unsigned mask);  // "c1c3", "" for mask 0

/// Element of the Clifford algebra C_n, a sparse map from monomial bitmasks
/// (ascending-index canonical order) to Q(z8) scalars.
class CliffordElem {
public:
    explicit CliffordElem(int n = 0) : n_(n) {}
    static CliffordElem one(int n) { return monomial(n, 0, CycScalar(1)); }
    static CliffordElem gen(int n, int i);
    static CliffordElem monomial(int n, unsigned mask, const CycScalar& c);

    int rank() const { return n_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<unsigned, CycScalar>& terms() const { return terms_; }
    void add(unsigned mask, const CycScalar& c);

    CliffordElem operator-() const;
    CliffordElem operator+(const CliffordElem& o) const;
    CliffordElem operator-(const CliffordElem& o) const;
    CliffordElem operator*(const CliffordElem& o) const;
    CliffordElem operator*(const CycScalar& c) const;

    friend bool operator==(const CliffordElem& a, const CliffordElem& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int n_;
    std::map<unsigned, CycScalar> terms_;
};

/// W acting on C_n as algebra automorphisms, c_i -> sign * c_j per w(e_i).
CliffordElem weylActClifford(const SignedPerm& w, const CliffordElem& a);

/// Image of a single Clifford monomial under the W-action: w(c^mask) = sign * c^mask'.
std::pair<int, unsigned> weylActMask(const SignedPerm& w, unsigned mask);

/// Normalized simple-root elements: beta_i = (c_i - c_{i+1})/sqrt2 for i < n;
/// beta_n = c_n (type B), beta_n = (c_{n-1} + c_n)/sqrt2 (type D).
CliffordElem beta(const WeylType& t, int i);

/// Monomial index c^eps * w of the semidirect product K = C_n x| CW.
struct KMono {
    unsigned eps;
    SignedPerm w;
    friend bool operator==(const KMono&, const KMono&) = default;
    friend bool operator<(const KMono& a, const KMono& b) {
        int pa = __builtin_popcount(a.eps), pb = __builtin_popcount(b.eps);
        if (pa != pb) return pa < pb;
        if (a.eps != b.eps) return a.eps < b.eps;
        return a.w.key() < b.w.key();
    }
};

/// Element of K = C_n x| CW with ParamPoly coefficients. The product resolves
/// w c w^-1 = w(c) and all Clifford signs.
class KElem {
public:
    explicit KElem(const WeylType& t) : type_(t) {}
    static KElem one(const WeylType& t);
    static KElem cliffordGen(const WeylType& t, int i);
    static KElem weylElem(const WeylType& t, const SignedPerm& w);
    static KElem monomial(const WeylType& t, unsigned eps, const SignedPerm& w,
                          const ParamPoly& c);

    const WeylType& type() const { return type_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<KMono, ParamPoly>& terms() const { return terms_; }
    void add(const KMono& m, const ParamPoly& c);

    KElem operator-() const;
    KElem operator+(const KElem& o) const;
    KElem operator-(const KElem& o) const;
    KElem operator*(const KElem& o) const;
    KElem operator*(const ParamPoly& c) const;

    friend bool operator==(const KElem& a, const KElem& b) {
        return a.type_ == b.type_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    void checkCompat(const KElem& o) const;
    WeylType type_;
    std::map<KMono, ParamPoly> terms_;
};

}  // namespace heckec
