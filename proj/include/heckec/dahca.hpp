#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

#include "heckec/clifford.hpp"
#include "heckec/poly.hpp"
#include "heckec/scalars.hpp"
#include "heckec/spin.hpp"
#include "heckec/weyl.hpp"

namespace heckec {

/// PBW monomial x^alpha c^eps w y^gamma of the rational double affine
/// Hecke-Clifford algebra.
struct DahcaMono {
    ExpVec x;
    unsigned eps = 0;
    SignedPerm w;
    ExpVec y;

    int totalDeg() const { return x.total() + __builtin_popcount(eps) + y.total(); }
    friend bool operator==(const DahcaMono&, const DahcaMono&) = default;
    friend bool operator<(const DahcaMono& a, const DahcaMono& b) {
        int da = a.totalDeg(), db = b.totalDeg();
        if (da != db) return da < db;
        if (a.x != b.x) return a.x < b.x;
        if (a.eps != b.eps) return a.eps < b.eps;
        if (!(a.w == b.w)) return a.w < b.w;
        return a.y < b.y;
    }
};

class DahcaAlgebra;

/// Element of hc_W in PBW normal form: sparse map monomial -> ParamPoly,
/// no zero coefficients. Immutable value semantics.
class DahcaElem {
public:
    explicit DahcaElem(const WeylType& t = {Family::A, 1}) : type_(t) {}

    const WeylType& type() const { return type_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<DahcaMono, ParamPoly>& terms() const { return terms_; }
    void add(const DahcaMono& m, const ParamPoly& c);
    int maxDegree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.totalDeg());
        return d;
    }

    DahcaElem operator-() const;
    DahcaElem operator+(const DahcaElem& o) const;
    DahcaElem operator-(const DahcaElem& o) const;
    DahcaElem operator*(const DahcaElem& o) const;  // PBW straightening
    DahcaElem operator*(const ParamPoly& c) const;

    friend bool operator==(const DahcaElem& a, const DahcaElem& b) {
        return a.type_ == b.type_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    WeylType type_;
    std::map<DahcaMono, ParamPoly> terms_;
};

/// Per-(family, n) instance holding the straightening memo. Elements are
/// immutable; the memo is append-only behind a mutex.
class DahcaAlgebra {
public:
    static const DahcaAlgebra& get(const WeylType& t, bool allowSmallD = false);

    const WeylType& type() const { return type_; }
    int rank() const { return type_.n; }

    void setDegreeCap(int cap) const { degreeCap_ = cap; }
    int degreeCap() const { return degreeCap_; }

    DahcaElem zero() const { return DahcaElem(type_); }
    DahcaElem one() const;
    DahcaElem scalar(const ParamPoly& c) const;
    DahcaElem xGen(int i) const;
    DahcaElem yGen(int i) const;
    DahcaElem cGen(int i) const;
    DahcaElem weylElem(const SignedPerm& w) const;
    DahcaElem monomial(const DahcaMono& m, const ParamPoly& c) const;

    /// The defining bracket [y_j, x_i] as a normal-form element.
    DahcaElem bracketYX(int j, int i) const;

    DahcaElem mul(const DahcaElem& a, const DahcaElem& b) const;

    /// Closed-form commutator [y_i, f] for f in C[x] via divided differences;
    /// independent of the straightening path, used as a cross-check oracle.
    DahcaElem commYPolyClosed(const VarPoly& f, int i) const;
    /// Closed-form commutator [f, x_i] for f in C[y].
    DahcaElem commPolyXClosed(const VarPoly& f, int i) const;

    /// Embed a pure polynomial in the x's (resp. y's) as an element.
    DahcaElem fromXPoly(const VarPoly& f) const;
    DahcaElem fromYPoly(const VarPoly& f) const;

private:
    explicit DahcaAlgebra(const WeylType& t, bool allowSmallD);
    // Normal form of y_i * x^a (memoized).
    const DahcaElem& straightenYx(int i, const ExpVec& a) const;
    DahcaElem leftMulY(int i, const DahcaElem& e) const;

    WeylType type_;
    const WeylGroup& group_;
    mutable std::atomic<int> degreeCap_{64};
    mutable std::mutex mu_;
    struct KeyHash {
        size_t operator()(const std::pair<int, uint64_t>& p) const {
            size_t h = std::hash<int>{}(p.first);
            hashCombine(h, std::hash<uint64_t>{}(p.second));
            return h;
        }
    };
    mutable std::unordered_map<std::pair<int, uint64_t>, DahcaElem, KeyHash> memo_;

    friend class DahcaElem;
};

}  // namespace heckec
