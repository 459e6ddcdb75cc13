#pragma once

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "heckec/clifford.hpp"
#include "heckec/scalars.hpp"
#include "heckec/weyl.hpp"

namespace heckec {

/// Element of the double cover W~: z^zexp * (canonical lift of w).
/// Group law resolved through the 2-cocycle of SpinContext.
struct CoverElem {
    int zexp = 0;  // 0 or 1
    SignedPerm w;

    static CoverElem identity(int n) { return {0, SignedPerm::identity(n)}; }
    friend bool operator==(const CoverElem&, const CoverElem&) = default;
    std::string str() const {
        return (zexp ? std::string("z^1 * wtilde") : std::string("wtilde")) + w.str();
    }
};

/// Per-(family, n) spin data: the Clifford-transport elements gamma_w with
/// Psi(T_w) = gamma_w * w, and the 2-cocycle alpha(w,w') in {+1,-1} defined by
/// gamma_w * w(gamma_w') = alpha(w,w') * gamma_{w w'}.
/// Caches are append-only behind a mutex; values are immutable once computed.
class SpinContext {
public:
    static const SpinContext& get(const WeylType& t, bool allowSmallD = false);

    const WeylType& type() const { return type_; }
    const WeylGroup& group() const { return group_; }

    CliffordElem gamma(const SignedPerm& w) const;
    CliffordElem gammaInv(const SignedPerm& w) const;
    int cocycle(const SignedPerm& w, const SignedPerm& w2) const;

    CoverElem coverMul(const CoverElem& a, const CoverElem& b) const;
    CoverElem coverGen(int i) const { return {0, group_.simple(i)}; }

private:
    explicit SpinContext(const WeylType& t, bool allowSmallD);
    struct GammaPair {
        CliffordElem g, gi;
    };
    const GammaPair& gammaPair(const SignedPerm& w) const;

    WeylType type_;
    const WeylGroup& group_;
    mutable std::mutex mu_;
    mutable std::unordered_map<uint64_t, GammaPair> gammas_;
    struct PairHash {
        size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
            size_t h = std::hash<uint64_t>{}(p.first);
            hashCombine(h, std::hash<uint64_t>{}(p.second));
            return h;
        }
    };
    mutable std::unordered_map<std::pair<uint64_t, uint64_t>, int, PairHash> cocycles_;
};

/// Element of the spin Weyl group algebra CW^-, sparse in the basis
/// T_w = t_{i_1}...t_{i_l} along the canonical reduced word of w.
class SpinElem {
public:
    explicit SpinElem(const WeylType& t) : type_(t) {}
    static SpinElem one(const WeylType& t);
    static SpinElem gen(const WeylType& t, int i);  // t_i
    static SpinElem basis(const WeylType& t, const SignedPerm& w,
                          const ParamPoly& c);

    const WeylType& type() const { return type_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<SignedPerm, ParamPoly>& terms() const { return terms_; }
    void add(const SignedPerm& w, const ParamPoly& c);

    SpinElem operator-() const;
    SpinElem operator+(const SpinElem& o) const;
    SpinElem operator-(const SpinElem& o) const;
    SpinElem operator*(const SpinElem& o) const;  // via the cocycle
    SpinElem operator*(const ParamPoly& c) const;

    friend bool operator==(const SpinElem& a, const SpinElem& b) {
        return a.type_ == b.type_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    WeylType type_;
    std::map<SignedPerm, ParamPoly> terms_;
};

/// Element of the super tensor product C_n (x) CW^-, monomials c^eps (x) T_w.
/// Multiplication uses the Koszul rule with |c^eps| = |eps|, |T_w| = l(w) mod 2.
class TensorElem {
public:
    explicit TensorElem(const WeylType& t) : type_(t) {}
    static TensorElem one(const WeylType& t);
    static TensorElem monomial(const WeylType& t, unsigned eps,
                               const SignedPerm& w, const ParamPoly& c);

    const WeylType& type() const { return type_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<KMono, ParamPoly>& terms() const { return terms_; }
    void add(const KMono& m, const ParamPoly& c);

    TensorElem operator-() const;
    TensorElem operator+(const TensorElem& o) const;
    TensorElem operator-(const TensorElem& o) const;
    TensorElem operator*(const TensorElem& o) const;
    TensorElem operator*(const ParamPoly& c) const;

    friend bool operator==(const TensorElem& a, const TensorElem& b) {
        return a.type_ == b.type_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    WeylType type_;
    std::map<KMono, ParamPoly> terms_;
};

/// Odd "reflections" of CW^-: [i,j], [i,j]-bar, [i]-bar, each equal to +-T_w.
enum class OddKind { TIJ, TBAR_IJ, TBAR_I };
SpinElem oddReflection(const WeylType& t, OddKind kind, int i, int j = 0);

/// The distinguished preimages {i,j}, {i,j}-bar, {i} in W~.
CoverElem coverLift(const WeylType& t, OddKind kind, int i, int j = 0);

/// Quotient maps on the group level: z -> +1 (to CW) resp. z -> -1 (to CW^-).
SignedPerm upsilonPlusGroup(const CoverElem& g);
SpinElem upsilonMinusGroup(const WeylType& t, const CoverElem& g);

/// Embeddings into the tensor algebra: s -> 1 (x) s and a -> a (x) 1.
TensorElem tensorFromSpin(const SpinElem& s);
TensorElem tensorFromClifford(const WeylType& t, const CliffordElem& a);

/// The finite superalgebra isomorphisms: Phi extends the identity on C_n and
/// sends s_i -> -sqrt(-1) beta_i t_i; Psi is the inverse, t_i -> sqrt(-1) beta_i s_i.
TensorElem phiFinite(const KElem& a);
KElem psiFinite(const TensorElem& a);

}  // namespace heckec
