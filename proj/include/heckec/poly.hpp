#pragma once

#include <map>
#include <string>

#include "heckec/scalars.hpp"
#include "heckec/weyl.hpp"

namespace heckec {

/// Polynomial in n commuting variables over ParamPoly. Whether the variables
/// are the x's or the y's is contextual; substitution by any signed
/// permutation (including sbar/tau, regardless of family) is a ring map.
class VarPoly {
public:
    explicit VarPoly(int n = 0) : n_(n) {}
    static VarPoly one(int n) { return monomial(n, ExpVec(n), ParamPoly(1)); }
    static VarPoly var(int n, int i) {
        return monomial(n, ExpVec::unit(n, i), ParamPoly(1));
    }
    static VarPoly monomial(int n, const ExpVec& e, const ParamPoly& c);

    int rank() const { return n_; }
    bool isZero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.total(); }
    const std::map<ExpVec, ParamPoly>& terms() const { return terms_; }
    void add(const ExpVec& e, const ParamPoly& c);

    VarPoly operator-() const;
    VarPoly operator+(const VarPoly& o) const;
    VarPoly operator-(const VarPoly& o) const;
    VarPoly operator*(const VarPoly& o) const;
    VarPoly operator*(const ParamPoly& c) const;

    /// f^w: substitute each variable by its signed image under w.
    VarPoly subst(const SignedPerm& w) const;

    /// Exact quotient (this) / (v_i - v_k); throws InternalError when the
    /// numerator is not divisible (a bug signal, never valid-input behavior).
    VarPoly divExactMinus(int i, int k) const;
    /// Exact quotient (this) / (v_i + v_k).
    VarPoly divExactPlus(int i, int k) const;
    /// Exact quotient (this) / (2 v_i).
    VarPoly divExactTau(int i) const;

    friend bool operator==(const VarPoly& a, const VarPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str(const std::string& varName) const;

private:
    VarPoly divExactLinear(int i, int k, bool plus) const;
    int n_;
    std::map<ExpVec, ParamPoly> terms_;
};

/// Canonical piece printer shared by the element types: "x1^2*x3" etc.
std::string monoStr(const std::string& varName, const ExpVec& e);

/// Join a coefficient and a monomial body into one printed term, and append
/// it to out with " + " / " - " separators.
void appendTerm(std::string& out, const ParamPoly& coeff, const std::string& mono);

}  // namespace heckec
