#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

#include "heckec/sdaha.hpp"
#include "heckec/spin.hpp"
#include "heckec/weyl.hpp"

namespace heckec {

/// PBW monomial xt^alpha * g * yt^gamma of the covering DaHa, with
/// g = z^zexp * wtilde in the double cover. xt factors are kept ascending;
/// xt_i xt_j = z xt_j xt_i, so reordering injects z into g.
struct CdahaMono {
    ExpVec x;
    CoverElem g;
    ExpVec y;

    int totalDeg() const { return x.total() + y.total(); }
    friend bool operator==(const CdahaMono&, const CdahaMono&) = default;
    friend bool operator<(const CdahaMono& a, const CdahaMono& b) {
        int da = a.totalDeg(), db = b.totalDeg();
        if (da != db) return da < db;
        if (a.x != b.x) return a.x < b.x;
        if (a.g.zexp != b.g.zexp) return a.g.zexp < b.g.zexp;
        if (!(a.g.w == b.g.w)) return a.g.w < b.g.w;
        return a.y < b.y;
    }
};

class CdahaElem {
public:
    explicit CdahaElem(const WeylType& t = {Family::A, 1}) : type_(t) {}

    const WeylType& type() const { return type_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<CdahaMono, ParamPoly>& terms() const { return terms_; }
    void add(const CdahaMono& m, const ParamPoly& c);
    int maxDegree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.totalDeg());
        return d;
    }

    CdahaElem operator-() const;
    CdahaElem operator+(const CdahaElem& o) const;
    CdahaElem operator-(const CdahaElem& o) const;
    CdahaElem operator*(const CdahaElem& o) const;
    CdahaElem operator*(const ParamPoly& c) const;

    friend bool operator==(const CdahaElem& a, const CdahaElem& b) {
        return a.type_ == b.type_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    WeylType type_;
    std::map<CdahaMono, ParamPoly> terms_;
};

/// PBW monomial of the rational Cherednik algebra: x^alpha w y^gamma.
struct DahaMono {
    ExpVec x;
    SignedPerm w;
    ExpVec y;

    int totalDeg() const { return x.total() + y.total(); }
    friend bool operator==(const DahaMono&, const DahaMono&) = default;
    friend bool operator<(const DahaMono& a, const DahaMono& b) {
        int da = a.totalDeg(), db = b.totalDeg();
        if (da != db) return da < db;
        if (a.x != b.x) return a.x < b.x;
        if (!(a.w == b.w)) return a.w < b.w;
        return a.y < b.y;
    }
};

class DahaElem {
public:
    explicit DahaElem(const WeylType& t = {Family::A, 1}) : type_(t) {}

    const WeylType& type() const { return type_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<DahaMono, ParamPoly>& terms() const { return terms_; }
    void add(const DahaMono& m, const ParamPoly& c);
    int maxDegree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.totalDeg());
        return d;
    }

    DahaElem operator-() const;
    DahaElem operator+(const DahaElem& o) const;
    DahaElem operator-(const DahaElem& o) const;
    DahaElem operator*(const DahaElem& o) const;
    DahaElem operator*(const ParamPoly& c) const;

    /// Specialize the parameter t (e.g. to 0 for the Upsilon+ target).
    DahaElem specializeT(const CycScalar& tv) const;

    friend bool operator==(const DahaElem& a, const DahaElem& b) {
        return a.type_ == b.type_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    WeylType type_;
    std::map<DahaMono, ParamPoly> terms_;
};

class CdahaAlgebra {
public:
    static const CdahaAlgebra& get(const WeylType& t, bool allowSmallD = false);

    const WeylType& type() const { return type_; }
    int rank() const { return type_.n; }
    void setDegreeCap(int cap) const { degreeCap_ = cap; }

    CdahaElem zero() const { return CdahaElem(type_); }
    CdahaElem one() const;
    CdahaElem scalar(const ParamPoly& c) const;
    CdahaElem xtGen(int i) const;
    CdahaElem ytGen(int i) const;
    CdahaElem ttGen(int i) const;
    CdahaElem zElem() const;
    CdahaElem coverElem(const CoverElem& g) const;
    CdahaElem monomial(const CdahaMono& m, const ParamPoly& c) const;

    /// Defining bracket [yt_i, xt_j].
    CdahaElem bracketYtXt(int i, int j) const;

    CdahaElem mul(const CdahaElem& a, const CdahaElem& b) const;

    /// g xt^a = sign * z^zinc * xt^{a'} g.
    struct MoveResult {
        int sign;
        int zinc;
        ExpVec exp;
    };
    MoveResult moveGPastXt(const CoverElem& g, const ExpVec& a) const;

private:
    explicit CdahaAlgebra(const WeylType& t, bool allowSmallD);
    const CdahaElem& straightenYtXt(int i, const ExpVec& a) const;
    CdahaElem leftMulYt(int i, const CdahaElem& e) const;

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
    mutable std::unordered_map<std::pair<int, uint64_t>, CdahaElem, KeyHash> memo_;
};

class DahaAlgebra {
public:
    static const DahaAlgebra& get(const WeylType& t, bool allowSmallD = false);

    const WeylType& type() const { return type_; }
    int rank() const { return type_.n; }
    void setDegreeCap(int cap) const { degreeCap_ = cap; }

    DahaElem zero() const { return DahaElem(type_); }
    DahaElem one() const;
    DahaElem scalar(const ParamPoly& c) const;
    DahaElem xGen(int i) const;
    DahaElem yGen(int i) const;
    DahaElem weylElem(const SignedPerm& w) const;
    DahaElem monomial(const DahaMono& m, const ParamPoly& c) const;

    /// Defining bracket [y_j, x_i]; the diagonal carries the parameter t.
    DahaElem bracketYX(int j, int i) const;

    DahaElem mul(const DahaElem& a, const DahaElem& b) const;

private:
    explicit DahaAlgebra(const WeylType& t, bool allowSmallD);
    const DahaElem& straightenYx(int i, const ExpVec& a) const;
    DahaElem leftMulY(int i, const DahaElem& e) const;

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
    mutable std::unordered_map<std::pair<int, uint64_t>, DahaElem, KeyHash> memo_;
};

/// Quotient by <z - 1>: tt_i -> s_i, xt_i -> x_i, yt_i -> y_i. The image lies
/// in the t = 0 rational Cherednik algebra.
DahaElem upsilonPlus(const CdahaElem& a);
/// Quotient by <z + 1>: tt_i -> t_i, xt_i -> xi_i, yt_i -> y_i.
SdahaElem upsilonMinus(const CdahaElem& a);

}  // namespace heckec
