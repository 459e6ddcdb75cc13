#pragma once

#include <map>
#include <string>

#include "heckec/dahca.hpp"
#include "heckec/poly.hpp"
#include "heckec/sdaha.hpp"

namespace heckec {

enum class DDiffKind { MINUS, PLUS, TAU };

/// Divided differences: (f - f^{s_ki})/(v_i - v_k), (f - f^{sbar_ki})/(v_i + v_k),
/// (f - f^{tau_i})/(2 v_i). Always an exact polynomial on any input.
VarPoly ddiff(const VarPoly& f, int i, int k, DDiffKind kind);

enum class VarKind { X, Y };

/// Element of an induced polynomial module C[x] (x) M or C[y] (x) M with
/// M = C_n (basis c^eps); sparse map (monomial, Clifford basis mask) -> coeff.
class PolyModElem {
public:
    PolyModElem() = default;
    explicit PolyModElem(int n) : n_(n) {}
    static PolyModElem basis(int n, const ExpVec& e, unsigned mask,
                             const ParamPoly& c);

    int rank() const { return n_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<std::pair<ExpVec, unsigned>, ParamPoly>& terms() const {
        return terms_;
    }
    void add(const ExpVec& e, unsigned mask, const ParamPoly& c);

    PolyModElem operator-() const;
    PolyModElem operator+(const PolyModElem& o) const;
    PolyModElem operator-(const PolyModElem& o) const;
    PolyModElem operator*(const ParamPoly& c) const;

    friend bool operator==(const PolyModElem& a, const PolyModElem& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Per-term form "coeff*x1^2 (x) c1c2" (variable name per module kind).
    std::string str(const std::string& varName) const;

private:
    int n_ = 0;
    std::map<std::pair<ExpVec, unsigned>, ParamPoly> terms_;
};

/// The Dunkl realization of one algebra on one induced module:
///   dahca on C[x] (x) C_n  (y_i act as Dunkl operators),
///   dahca on C[y] (x) C_n  (x_i act as Dunkl operators),
///   sdaha on C[y] (x) C_n  (xi_i act as Dunkl operators, CW^- via Psi).
class DunklModule {
public:
    enum class Kind { DAHCA_X_MODULE, DAHCA_Y_MODULE, SDAHA_Y_MODULE };

    DunklModule(Kind kind, const WeylType& t, bool allowSmallD = false);

    Kind kind() const { return kind_; }
    const WeylType& type() const { return type_; }
    int rank() const { return type_.n; }
    /// Variable family of the polynomial factor.
    VarKind vars() const {
        return kind_ == Kind::DAHCA_X_MODULE ? VarKind::X : VarKind::Y;
    }

    PolyModElem zero() const { return PolyModElem(type_.n); }
    PolyModElem one() const {
        return PolyModElem::basis(type_.n, ExpVec(type_.n), 0, ParamPoly(1));
    }

    /// Action of a full algebra element (normal-form monomials applied
    /// factor by factor, rightmost factor first).
    PolyModElem act(const DahcaElem& a, const PolyModElem& m) const;
    PolyModElem act(const SdahaElem& a, const PolyModElem& m) const;

    // Generator-level actions.
    PolyModElem mulVar(int i, const PolyModElem& m) const;
    PolyModElem actCliffordGen(int i, const PolyModElem& m) const;
    PolyModElem actWeyl(const SignedPerm& w, const PolyModElem& m) const;
    PolyModElem actSpinT(int g, const PolyModElem& m) const;
    PolyModElem dunklY(int i, const PolyModElem& m) const;   // dahca, x-module
    PolyModElem dunklX(int i, const PolyModElem& m) const;   // dahca, y-module
    PolyModElem dunklXi(int i, const PolyModElem& m) const;  // sdaha, y-module

private:
    VarPoly polyOf(const ExpVec& e, const ParamPoly& c) const;
    PolyModElem applySpinElem(const SpinElem& s, const PolyModElem& m) const;
    PolyModElem applyCliffordLeft(const CliffordElem& a, const PolyModElem& m) const;

    Kind kind_;
    WeylType type_;
};

}  // namespace heckec
