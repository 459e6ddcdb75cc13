#include "heckec/poly.hpp"

namespace heckec {

VarPoly VarPoly::monomial(int n, const ExpVec& e, const ParamPoly& c) {
    VarPoly r(n);
    r.add(e, c);
    return r;
}

void VarPoly::add(const ExpVec& e, const ParamPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

VarPoly VarPoly::operator-() const {
    VarPoly r(n_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

VarPoly VarPoly::operator+(const VarPoly& o) const {
    if (n_ != o.n_) throw ArgumentError("rank mismatch in polynomial sum");
    VarPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add(e, c);
    return r;
}

VarPoly VarPoly::operator-(const VarPoly& o) const { return *this + (-o); }

VarPoly VarPoly::operator*(const VarPoly& o) const {
    if (n_ != o.n_) throw ArgumentError("rank mismatch in polynomial product");
    VarPoly r(n_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add(e1.plus(e2), c1 * c2);
    return r;
}

VarPoly VarPoly::operator*(const ParamPoly& c) const {
    VarPoly r(n_);
    for (auto& [e, k] : terms_) r.add(e, k * c);
    return r;
}

VarPoly VarPoly::subst(const SignedPerm& w) const {
    VarPoly r(n_);
    for (auto& [e, c] : terms_) {
        auto [sgn, img] = w.actExp(e);
        r.add(img, sgn < 0 ? -c : c);
    }
    return r;
}

VarPoly VarPoly::divExactLinear(int i, int k, bool plus) const {
    // Peel the top v_i-degree slice each round:
    //   P = Q_top * v_i^d + lower  =>  quotient gains Q_top * v_i^{d-1}.
    VarPoly rem = *this;
    VarPoly quot(n_);
    while (!rem.isZero()) {
        int dmax = 0;
        for (auto& [e, c] : rem.terms_) dmax = std::max(dmax, int(e.e[i - 1]));
        if (dmax == 0) throw InternalError("polynomial quotient is not exact");
        VarPoly slice(n_);
        for (auto& [e, c] : rem.terms_) {
            if (e.e[i - 1] != dmax) continue;
            ExpVec q = e;
            q.e[i - 1] -= 1;
            slice.add(q, c);
        }
        quot = quot + slice;
        // rem -= slice * (v_i +- v_k)
        for (auto& [e, c] : slice.terms_) {
            ExpVec ei = e;
            ei.e[i - 1] += 1;
            rem.add(ei, -c);
            ExpVec ek = e;
            ek.e[k - 1] += 1;
            rem.add(ek, plus ? -c : c);
        }
    }
    return quot;
}

VarPoly VarPoly::divExactMinus(int i, int k) const { return divExactLinear(i, k, false); }
VarPoly VarPoly::divExactPlus(int i, int k) const { return divExactLinear(i, k, true); }

VarPoly VarPoly::divExactTau(int i) const {
    VarPoly r(n_);
    ParamPoly half = ParamPoly(CycScalar(Rational(1, 2)));
    for (auto& [e, c] : terms_) {
        if (e.e[i - 1] == 0) throw InternalError("polynomial quotient is not exact");
        ExpVec q = e;
        q.e[i - 1] -= 1;
        r.add(q, c * half);
    }
    return r;
}

std::string monoStr(const std::string& varName, const ExpVec& e) {
    std::string s;
    for (int i = 0; i < e.n; ++i) {
        if (!e.e[i]) continue;
        if (!s.empty()) s += "*";
        s += varName + std::to_string(i + 1);
        if (e.e[i] > 1) s += "^" + std::to_string(int(e.e[i]));
    }
    return s;
}

void appendTerm(std::string& out, const ParamPoly& coeff, const std::string& mono) {
    std::string cs = coeff.str();
    std::string term;
    if (mono.empty()) {
        term = cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
        term = mono;
    } else if (cs == "-1") {
        term = "-" + mono;
    } else if (cs.find(" + ") != std::string::npos ||
               cs.find(" - ") != std::string::npos) {
        term = "(" + cs + ")*" + mono;
    } else {
        term = cs + "*" + mono;
    }
    if (out.empty()) {
        out = term;
    } else if (term[0] == '-') {
        out += " - " + term.substr(1);
    } else {
        out += " + " + term;
    }
}

std::string VarPoly::str(const std::string& varName) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [e, c] : terms_) appendTerm(out, c, monoStr(varName, e));
    return out;
}

}  // namespace heckec
