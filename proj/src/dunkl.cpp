#include "heckec/dunkl.hpp"

namespace heckec {

VarPoly ddiff(const VarPoly& f, int i, int k, DDiffKind kind) {
    int n = f.rank();
    if (i < 1 || i > n) throw ArgumentError("index out of range in ddiff");
    switch (kind) {
        case DDiffKind::MINUS: {
            if (k < 1 || k > n || k == i) throw ArgumentError("bad ddiff pair");
            return (f - f.subst(transposition(n, k, i))).divExactMinus(i, k);
        }
        case DDiffKind::PLUS: {
            if (k < 1 || k > n || k == i) throw ArgumentError("bad ddiff pair");
            return (f - f.subst(barTransposition(n, k, i))).divExactPlus(i, k);
        }
        case DDiffKind::TAU:
            return (f - f.subst(signFlip(n, i))).divExactTau(i);
    }
    throw ArgumentError("bad ddiff kind");
}

PolyModElem PolyModElem::basis(int n, const ExpVec& e, unsigned mask,
                               const ParamPoly& c) {
    PolyModElem r(n);
    r.add(e, mask, c);
    return r;
}

void PolyModElem::add(const ExpVec& e, unsigned mask, const ParamPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(e, mask), c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

PolyModElem PolyModElem::operator-() const {
    PolyModElem r(n_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

PolyModElem PolyModElem::operator+(const PolyModElem& o) const {
    if (n_ != o.n_) throw ArgumentError("rank mismatch in module sum");
    PolyModElem r = *this;
    for (auto& [m, c] : o.terms_) r.add(m.first, m.second, c);
    return r;
}

PolyModElem PolyModElem::operator-(const PolyModElem& o) const {
    return *this + (-o);
}

PolyModElem PolyModElem::operator*(const ParamPoly& c) const {
    PolyModElem r(n_);
    for (auto& [m, k] : terms_) r.add(m.first, m.second, k * c);
    return r;
}

std::string PolyModElem::str(const std::string& varName) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        std::string f = monoStr(varName, m.first);
        if (f.empty()) f = "1";
        std::string basisStr = cliffordMaskStr(m.second);
        if (basisStr.empty()) basisStr = "1";
        appendTerm(out, c, f + " (x) " + basisStr);
    }
    return out;
}

DunklModule::DunklModule(Kind kind, const WeylType& t, bool allowSmallD)
    : kind_(kind), type_(t) {
    validateType(t, allowSmallD);
}

VarPoly DunklModule::polyOf(const ExpVec& e, const ParamPoly& c) const {
    return VarPoly::monomial(type_.n, e, c);
}

PolyModElem DunklModule::mulVar(int i, const PolyModElem& m) const {
    if (i < 1 || i > type_.n) throw ArgumentError("index out of range");
    PolyModElem r(type_.n);
    for (auto& [key, c] : m.terms()) {
        ExpVec e = key.first;
        e.e[i - 1] += 1;
        r.add(e, key.second, c);
    }
    return r;
}

PolyModElem DunklModule::actCliffordGen(int i, const PolyModElem& m) const {
    if (i < 1 || i > type_.n) throw ArgumentError("index out of range");
    PolyModElem r(type_.n);
    for (auto& [key, c] : m.terms()) {
        // c_i.(f (x) m) = f|_{x_i -> -x_i} (x) c_i m on the x-module;
        // c's commute with the y's, so no twist on a y-module.
        int sgn = 1;
        if (kind_ == Kind::DAHCA_X_MODULE && (key.first.e[i - 1] & 1)) sgn = -1;
        sgn *= cliffordMulSign(1u << (i - 1), key.second);
        r.add(key.first, (1u << (i - 1)) ^ key.second, sgn < 0 ? -c : c);
    }
    return r;
}

PolyModElem DunklModule::actWeyl(const SignedPerm& w, const PolyModElem& m) const {
    PolyModElem r(type_.n);
    for (auto& [key, c] : m.terms()) {
        auto [sgn1, e2] = w.actExp(key.first);
        auto [sgn2, mask2] = weylActMask(w, key.second);
        int sgn = sgn1 * sgn2;
        r.add(e2, mask2, sgn < 0 ? -c : c);
    }
    return r;
}

PolyModElem DunklModule::applyCliffordLeft(const CliffordElem& a,
                                           const PolyModElem& m) const {
    PolyModElem r(type_.n);
    for (auto& [amask, ac] : a.terms())
        for (auto& [key, c] : m.terms()) {
            int sgn = cliffordMulSign(amask, key.second);
            ParamPoly cc = c * ac;
            r.add(key.first, amask ^ key.second, sgn < 0 ? -cc : cc);
        }
    return r;
}

PolyModElem DunklModule::actSpinT(int g, const PolyModElem& m) const {
    if (kind_ != Kind::SDAHA_Y_MODULE)
        throw ArgumentError("t generators act on the sdaha module only");
    // t_g acts as s_g (x) t_g with t_g v = Psi(t_g) v = i beta_g s_g(v).
    const WeylGroup& grp = WeylGroup::get(type_, true);
    SignedPerm s = grp.simple(g);
    PolyModElem moved(type_.n);
    for (auto& [key, c] : m.terms()) {
        auto [sgn1, e2] = s.actExp(key.first);
        auto [sgn2, mask2] = weylActMask(s, key.second);
        int sgn = sgn1 * sgn2;
        moved.add(e2, mask2, sgn < 0 ? -c : c);
    }
    CliffordElem pre = beta(type_, g) * CycScalar::sqrtMinus1();
    return applyCliffordLeft(pre, moved);
}

PolyModElem DunklModule::applySpinElem(const SpinElem& s, const PolyModElem& m) const {
    // Psi(T_w) = gamma_w w acting on V = C_n.
    const SpinContext& ctx = SpinContext::get(type_, true);
    PolyModElem r(type_.n);
    for (auto& [w, c] : s.terms()) {
        PolyModElem moved(type_.n);
        for (auto& [key, mc] : m.terms()) {
            auto [sgn1, e2] = w.actExp(key.first);
            auto [sgn2, mask2] = weylActMask(w, key.second);
            int sgn = sgn1 * sgn2;
            ParamPoly cc = mc * c;
            moved.add(e2, mask2, sgn < 0 ? -cc : cc);
        }
        CliffordElem ga = ctx.gamma(w);
        r = r + applyCliffordLeft(ga, moved);
    }
    return r;
}

PolyModElem DunklModule::dunklY(int i, const PolyModElem& m) const {
    if (kind_ != Kind::DAHCA_X_MODULE)
        throw ArgumentError("the Dunkl form of y_i needs the x-module");
    int n = type_.n;
    ParamPoly u = ParamPoly::u();
    PolyModElem out(n);
    for (auto& [key, c] : m.terms()) {
        VarPoly f = polyOf(key.first, c);
        PolyModElem base = PolyModElem::basis(n, ExpVec(n), key.second, ParamPoly(1));
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            VarPoly ddm = ddiff(f, i, k, DDiffKind::MINUS);
            VarPoly ddp = ddiff(f, i, k, DDiffKind::PLUS);
            SignedPerm ski = transposition(n, k, i);
            PolyModElem sm = actWeyl(ski, base);
            PolyModElem csm = applyCliffordLeft(
                CliffordElem::gen(n, k) * CliffordElem::gen(n, i), sm);
            // -u (ddm (x) s_ki m + ddp (x) c_k c_i s_ki m)
            for (auto& [e, cc] : ddm.terms())
                for (auto& [mk, mc] : sm.terms())
                    out.add(e.plus(mk.first), mk.second, -(cc * mc * u));
            for (auto& [e, cc] : ddp.terms())
                for (auto& [mk, mc] : csm.terms())
                    out.add(e.plus(mk.first), mk.second, -(cc * mc * u));
            if (type_.family != Family::A) {
                SignedPerm sbki = barTransposition(n, k, i);
                PolyModElem bm = actWeyl(sbki, base);
                PolyModElem cbm = applyCliffordLeft(
                    CliffordElem::gen(n, k) * CliffordElem::gen(n, i), bm);
                // -u (ddp (x) sbar_ki m - ddm (x) c_k c_i sbar_ki m)
                for (auto& [e, cc] : ddp.terms())
                    for (auto& [mk, mc] : bm.terms())
                        out.add(e.plus(mk.first), mk.second, -(cc * mc * u));
                for (auto& [e, cc] : ddm.terms())
                    for (auto& [mk, mc] : cbm.terms())
                        out.add(e.plus(mk.first), mk.second, cc * mc * u);
            }
        }
        if (type_.family == Family::B) {
            VarPoly ddt = ddiff(f, i, 0, DDiffKind::TAU);
            PolyModElem tm = actWeyl(signFlip(n, i), base);
            ParamPoly sqrt2v = ParamPoly::v() * CycScalar::sqrt2();
            for (auto& [e, cc] : ddt.terms())
                for (auto& [mk, mc] : tm.terms())
                    out.add(e.plus(mk.first), mk.second, -(cc * mc * sqrt2v));
        }
    }
    return out;
}

PolyModElem DunklModule::dunklX(int i, const PolyModElem& m) const {
    if (kind_ != Kind::DAHCA_Y_MODULE)
        throw ArgumentError("the Dunkl form of x_i needs the y-module");
    int n = type_.n;
    ParamPoly u = ParamPoly::u();
    PolyModElem out(n);
    for (auto& [key, c] : m.terms()) {
        VarPoly f = polyOf(key.first, c);
        PolyModElem base = PolyModElem::basis(n, ExpVec(n), key.second, ParamPoly(1));
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            VarPoly ddm = ddiff(f, i, k, DDiffKind::MINUS);
            SignedPerm ski = transposition(n, k, i);
            PolyModElem sm = actWeyl(ski, base);
            PolyModElem opm =
                sm + applyCliffordLeft(CliffordElem::gen(n, k) * CliffordElem::gen(n, i),
                                       sm);
            // u ddm (x) (1 + c_k c_i) s_ki m
            for (auto& [e, cc] : ddm.terms())
                for (auto& [mk, mc] : opm.terms())
                    out.add(e.plus(mk.first), mk.second, cc * mc * u);
            if (type_.family != Family::A) {
                VarPoly ddp = ddiff(f, i, k, DDiffKind::PLUS);
                SignedPerm sbki = barTransposition(n, k, i);
                PolyModElem bm = actWeyl(sbki, base);
                PolyModElem opb =
                    bm - applyCliffordLeft(
                             CliffordElem::gen(n, k) * CliffordElem::gen(n, i), bm);
                // u ddp (x) (1 - c_k c_i) sbar_ki m
                for (auto& [e, cc] : ddp.terms())
                    for (auto& [mk, mc] : opb.terms())
                        out.add(e.plus(mk.first), mk.second, cc * mc * u);
            }
        }
        if (type_.family == Family::B) {
            VarPoly ddt = ddiff(f, i, 0, DDiffKind::TAU);
            PolyModElem tm = actWeyl(signFlip(n, i), base);
            ParamPoly sqrt2v = ParamPoly::v() * CycScalar::sqrt2();
            // + sqrt2 v ddt (x) tau_i m
            for (auto& [e, cc] : ddt.terms())
                for (auto& [mk, mc] : tm.terms())
                    out.add(e.plus(mk.first), mk.second, cc * mc * sqrt2v);
        }
    }
    return out;
}

PolyModElem DunklModule::dunklXi(int i, const PolyModElem& m) const {
    if (kind_ != Kind::SDAHA_Y_MODULE)
        throw ArgumentError("the Dunkl form of xi_i needs the sdaha module");
    int n = type_.n;
    ParamPoly u = ParamPoly::u();
    PolyModElem out(n);
    for (auto& [key, c] : m.terms()) {
        VarPoly f = polyOf(key.first, c);
        PolyModElem base = PolyModElem::basis(n, ExpVec(n), key.second, ParamPoly(1));
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            VarPoly ddm = ddiff(f, i, k, DDiffKind::MINUS);
            PolyModElem rm = applySpinElem(oddReflection(type_, OddKind::TIJ, k, i), base);
            // u ddm (x) [k,i] v
            for (auto& [e, cc] : ddm.terms())
                for (auto& [mk, mc] : rm.terms())
                    out.add(e.plus(mk.first), mk.second, cc * mc * u);
            if (type_.family != Family::A) {
                VarPoly ddp = ddiff(f, i, k, DDiffKind::PLUS);
                PolyModElem bm =
                    applySpinElem(oddReflection(type_, OddKind::TBAR_IJ, k, i), base);
                // -u ddp (x) [k,i]-bar v
                for (auto& [e, cc] : ddp.terms())
                    for (auto& [mk, mc] : bm.terms())
                        out.add(e.plus(mk.first), mk.second, -(cc * mc * u));
            }
        }
        if (type_.family == Family::B) {
            VarPoly ddt = ddiff(f, i, 0, DDiffKind::TAU);
            PolyModElem tm =
                applySpinElem(oddReflection(type_, OddKind::TBAR_I, i), base);
            // - v ddt (x) [i]-bar v
            for (auto& [e, cc] : ddt.terms())
                for (auto& [mk, mc] : tm.terms())
                    out.add(e.plus(mk.first), mk.second, -(cc * mc * ParamPoly::v()));
        }
    }
    return out;
}

PolyModElem DunklModule::act(const DahcaElem& a, const PolyModElem& m) const {
    if (kind_ == Kind::SDAHA_Y_MODULE)
        throw ArgumentError("dahca elements do not act on the sdaha module");
    if (!(a.type() == type_)) throw ArgumentError("algebra tag mismatch");
    int n = type_.n;
    PolyModElem out(n);
    for (auto& [mono, c] : a.terms()) {
        PolyModElem cur = m;
        // rightmost factors act first: y^gamma, then w, then c^eps, then x^alpha
        for (int i = n; i >= 1; --i)
            for (int rep = 0; rep < mono.y.e[i - 1]; ++rep)
                cur = (kind_ == Kind::DAHCA_X_MODULE) ? dunklY(i, cur) : mulVar(i, cur);
        if (!mono.w.isIdentity()) cur = actWeyl(mono.w, cur);
        for (int i = n; i >= 1; --i)
            if (mono.eps & (1u << (i - 1))) cur = actCliffordGen(i, cur);
        for (int i = n; i >= 1; --i)
            for (int rep = 0; rep < mono.x.e[i - 1]; ++rep)
                cur = (kind_ == Kind::DAHCA_X_MODULE) ? mulVar(i, cur) : dunklX(i, cur);
        out = out + cur * c;
    }
    return out;
}

PolyModElem DunklModule::act(const SdahaElem& a, const PolyModElem& m) const {
    if (kind_ != Kind::SDAHA_Y_MODULE)
        throw ArgumentError("sdaha elements act on the sdaha module only");
    if (!(a.type() == type_)) throw ArgumentError("algebra tag mismatch");
    int n = type_.n;
    const WeylGroup& grp = WeylGroup::get(type_, true);
    PolyModElem out(n);
    for (auto& [mono, c] : a.terms()) {
        PolyModElem cur = m;
        for (int i = n; i >= 1; --i)
            for (int rep = 0; rep < mono.y.e[i - 1]; ++rep) cur = mulVar(i, cur);
        std::vector<int> word = grp.reducedWord(mono.w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = actSpinT(*it, cur);
        for (int i = n; i >= 1; --i)
            for (int rep = 0; rep < mono.xi.e[i - 1]; ++rep) cur = dunklXi(i, cur);
        out = out + cur * c;
    }
    return out;
}

}  // namespace heckec
