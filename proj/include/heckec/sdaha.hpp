#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

#include "heckec/dahca.hpp"
#include "heckec/poly.hpp"
#include "heckec/spin.hpp"
#include "heckec/weyl.hpp"

namespace heckec {

/// PBW monomial xi^alpha T_w y^gamma of the rational spin DaHa. The xi factors
/// are kept in ascending index order; xi_i xi_j = -xi_j xi_i for i != j, so a
/// reordering only toggles the sign. Monomial parity is |alpha| + l(w) mod 2.
struct SdahaMono {
    ExpVec xi;
    SignedPerm w;
    ExpVec y;

    int totalDeg() const { return xi.total() + y.total(); }
    int parity() const { return ((xi.total() + (w.detSign() < 0 ? 1 : 0)) & 1); }
    friend bool operator==(const SdahaMono&, const SdahaMono&) = default;
    friend bool operator<(const SdahaMono& a, const SdahaMono& b) {
        int da = a.totalDeg(), db = b.totalDeg();
        if (da != db) return da < db;
        if (a.xi != b.xi) return a.xi < b.xi;
        if (!(a.w == b.w)) return a.w < b.w;
        return a.y < b.y;
    }
};

class SdahaElem {
public:
    explicit SdahaElem(const WeylType& t = {Family::A, 1}) : type_(t) {}

    const WeylType& type() const { return type_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<SdahaMono, ParamPoly>& terms() const { return terms_; }
    void add(const SdahaMono& m, const ParamPoly& c);
    int maxDegree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.totalDeg());
        return d;
    }

    SdahaElem operator-() const;
    SdahaElem operator+(const SdahaElem& o) const;
    SdahaElem operator-(const SdahaElem& o) const;
    SdahaElem operator*(const SdahaElem& o) const;
    SdahaElem operator*(const ParamPoly& c) const;

    friend bool operator==(const SdahaElem& a, const SdahaElem& b) {
        return a.type_ == b.type_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    WeylType type_;
    std::map<SdahaMono, ParamPoly> terms_;
};

/// Element of C_n (x) sDaHa with the Koszul product; monomials
/// c^eps (x) xi^alpha T_w y^gamma. Target of the big isomorphism Phi.
class TensorSdahaElem {
public:
    explicit TensorSdahaElem(const WeylType& t = {Family::A, 1}) : type_(t) {}
    static TensorSdahaElem one(const WeylType& t);

    const WeylType& type() const { return type_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<std::pair<unsigned, SdahaMono>, ParamPoly>& terms() const {
        return terms_;
    }
    void add(unsigned eps, const SdahaMono& m, const ParamPoly& c);

    TensorSdahaElem operator-() const;
    TensorSdahaElem operator+(const TensorSdahaElem& o) const;
    TensorSdahaElem operator-(const TensorSdahaElem& o) const;
    TensorSdahaElem operator*(const TensorSdahaElem& o) const;
    TensorSdahaElem operator*(const ParamPoly& c) const;

    friend bool operator==(const TensorSdahaElem& a, const TensorSdahaElem& b) {
        return a.type_ == b.type_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    WeylType type_;
    std::map<std::pair<unsigned, SdahaMono>, ParamPoly> terms_;
};

/// The native straightening engine for the spin DaHa. Multiplication moves
/// T_w past xi-monomials one simple generator at a time with the relation
/// t_g xi_k = -xi_{p_g(k)} t_g (p_g the unsigned permutation of s_g), and
/// straightens y-vs-xi through the defining brackets.
class SdahaAlgebra {
public:
    static const SdahaAlgebra& get(const WeylType& t, bool allowSmallD = false);

    const WeylType& type() const { return type_; }
    int rank() const { return type_.n; }
    void setDegreeCap(int cap) const { degreeCap_ = cap; }

    SdahaElem zero() const { return SdahaElem(type_); }
    SdahaElem one() const;
    SdahaElem scalar(const ParamPoly& c) const;
    SdahaElem xiGen(int i) const;
    SdahaElem yGen(int i) const;
    SdahaElem tGen(int i) const;  // T_{s_i}
    SdahaElem monomial(const SdahaMono& m, const ParamPoly& c) const;
    SdahaElem fromSpin(const SpinElem& s) const;
    SdahaElem fromYPoly(const VarPoly& f) const;

    /// Defining bracket [y_i, xi_j] (an element of CW^- with u,v coefficients).
    SdahaElem bracketYXi(int i, int j) const;

    SdahaElem mul(const SdahaElem& a, const SdahaElem& b) const;

    /// Closed-form [f, xi_i] for f in C[y] via divided differences; oracle path.
    SdahaElem commPolyXiClosed(const VarPoly& f, int i) const;

    /// T_w xi^a = sign * xi^{a'} T_w.
    std::pair<int, ExpVec> moveTwPastXi(const SignedPerm& w, const ExpVec& a) const;

private:
    explicit SdahaAlgebra(const WeylType& t, bool allowSmallD);
    const SdahaElem& straightenYXi(int i, const ExpVec& a) const;
    SdahaElem leftMulY(int i, const SdahaElem& e) const;

    WeylType type_;
    const WeylGroup& group_;
    const SpinContext& spin_;
    mutable std::atomic<int> degreeCap_{64};
    mutable std::mutex mu_;
    struct KeyHash {
        size_t operator()(const std::pair<int, uint64_t>& p) const {
            size_t h = std::hash<int>{}(p.first);
            hashCombine(h, std::hash<uint64_t>{}(p.second));
            return h;
        }
    };
    mutable std::unordered_map<std::pair<int, uint64_t>, SdahaElem, KeyHash> memo_;
};

/// The double affine superalgebra isomorphism hc_W -> C_n (x) shc_W: y_i -> y_i,
/// x_i -> sqrt(-2) c_i xi_i, s_i -> -sqrt(-1) beta_i t_i, c_i -> c_i.
TensorSdahaElem phiBig(const DahcaElem& a);
/// Inverse: xi_i -> (1/sqrt(-2)) c_i x_i, t_i -> sqrt(-1) beta_i s_i.
DahcaElem psiBig(const TensorSdahaElem& a);

/// Embeddings into the tensor algebra.
TensorSdahaElem tensorSdahaFromSdaha(const SdahaElem& s);
TensorSdahaElem tensorSdahaFromClifford(const WeylType& t, unsigned eps,
                                        const ParamPoly& c);

}  // namespace heckec
