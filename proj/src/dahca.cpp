#include "heckec/dahca.hpp"

#include <memory>

namespace heckec {

namespace {

// Parity of sum_{k in mask} e_k: the sign of moving c^mask past x^e.
int cliffPastXSign(unsigned mask, const ExpVec& e) {
    int acc = 0;
    for (unsigned rest = mask; rest;) {
        unsigned k = unsigned(__builtin_ctz(rest));
        rest &= rest - 1;
        acc += e.e[k];
    }
    return (acc & 1) ? -1 : 1;
}

// c_a * c_b written in canonical ascending order: sign for a != b.
int pairSign(int a, int b) {
    return cliffordMulSign(1u << (a - 1), 1u << (b - 1));
}

unsigned pairMask(int a, int b) { return (1u << (a - 1)) | (1u << (b - 1)); }

}  // namespace

void DahcaElem::add(const DahcaMono& m, const ParamPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

DahcaElem DahcaElem::operator-() const {
    DahcaElem r(type_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

DahcaElem DahcaElem::operator+(const DahcaElem& o) const {
    if (!(type_ == o.type_)) throw ArgumentError("algebra tag mismatch");
    DahcaElem r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

DahcaElem DahcaElem::operator-(const DahcaElem& o) const { return *this + (-o); }

DahcaElem DahcaElem::operator*(const DahcaElem& o) const {
    return DahcaAlgebra::get(type_, true).mul(*this, o);
}

DahcaElem DahcaElem::operator*(const ParamPoly& c) const {
    DahcaElem r(type_);
    for (auto& [m, k] : terms_) r.add(m, k * c);
    return r;
}

std::string DahcaElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        std::string mono = monoStr("x", m.x);
        auto join = [&mono](const std::string& piece) {
            if (piece.empty()) return;
            if (!mono.empty()) mono += "*";
            mono += piece;
        };
        join(cliffordMaskStr(m.eps));
        if (!m.w.isIdentity()) join("w" + m.w.str());
        join(monoStr("y", m.y));
        appendTerm(out, c, mono);
    }
    return out;
}

DahcaAlgebra::DahcaAlgebra(const WeylType& t, bool allowSmallD)
    : type_(t), group_(WeylGroup::get(t, allowSmallD)) {}

const DahcaAlgebra& DahcaAlgebra::get(const WeylType& t, bool allowSmallD) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<DahcaAlgebra>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(int(t.family), t.n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<DahcaAlgebra>(new DahcaAlgebra(t, allowSmallD)))
                 .first;
    return *it->second;
}

DahcaElem DahcaAlgebra::one() const { return scalar(ParamPoly(1)); }

DahcaElem DahcaAlgebra::scalar(const ParamPoly& c) const {
    DahcaElem r(type_);
    r.add({ExpVec(type_.n), 0, SignedPerm::identity(type_.n), ExpVec(type_.n)}, c);
    return r;
}

DahcaElem DahcaAlgebra::xGen(int i) const {
    if (i < 1 || i > type_.n) throw ArgumentError("x index out of range");
    DahcaElem r(type_);
    r.add({ExpVec::unit(type_.n, i), 0, SignedPerm::identity(type_.n), ExpVec(type_.n)},
          ParamPoly(1));
    return r;
}

DahcaElem DahcaAlgebra::yGen(int i) const {
    if (i < 1 || i > type_.n) throw ArgumentError("y index out of range");
    DahcaElem r(type_);
    r.add({ExpVec(type_.n), 0, SignedPerm::identity(type_.n), ExpVec::unit(type_.n, i)},
          ParamPoly(1));
    return r;
}

DahcaElem DahcaAlgebra::cGen(int i) const {
    if (i < 1 || i > type_.n) throw ArgumentError("c index out of range");
    DahcaElem r(type_);
    r.add({ExpVec(type_.n), 1u << (i - 1), SignedPerm::identity(type_.n), ExpVec(type_.n)},
          ParamPoly(1));
    return r;
}

DahcaElem DahcaAlgebra::weylElem(const SignedPerm& w) const {
    if (!memberOf(type_, w)) throw ArgumentError("element is not in " + type_.str());
    DahcaElem r(type_);
    r.add({ExpVec(type_.n), 0, w, ExpVec(type_.n)}, ParamPoly(1));
    return r;
}

DahcaElem DahcaAlgebra::monomial(const DahcaMono& m, const ParamPoly& c) const {
    DahcaElem r(type_);
    r.add(m, c);
    return r;
}

DahcaElem DahcaAlgebra::fromXPoly(const VarPoly& f) const {
    if (f.rank() != type_.n) throw ArgumentError("rank mismatch");
    DahcaElem r(type_);
    for (auto& [e, c] : f.terms())
        r.add({e, 0, SignedPerm::identity(type_.n), ExpVec(type_.n)}, c);
    return r;
}

DahcaElem DahcaAlgebra::fromYPoly(const VarPoly& f) const {
    if (f.rank() != type_.n) throw ArgumentError("rank mismatch");
    DahcaElem r(type_);
    for (auto& [e, c] : f.terms())
        r.add({ExpVec(type_.n), 0, SignedPerm::identity(type_.n), e}, c);
    return r;
}

DahcaElem DahcaAlgebra::bracketYX(int j, int i) const {
    int n = type_.n;
    if (i < 1 || i > n || j < 1 || j > n) throw ArgumentError("index out of range");
    ParamPoly u = ParamPoly::u();
    DahcaElem out(type_);
    ExpVec z(n);
    auto addKTerm = [&](unsigned mask, const SignedPerm& w, const ParamPoly& c) {
        out.add({z, mask, w, z}, c);
    };

    if (type_.family == Family::A) {
        if (j != i) {
            // [y_j, x_i] = u (1 + c_j c_i) s_{ji}
            SignedPerm s = transposition(n, i, j);
            addKTerm(0, s, u);
            addKTerm(pairMask(j, i), s, u * CycScalar(pairSign(j, i)));
        } else {
            // [y_i, x_i] = -u sum_{k != i} (1 + c_k c_i) s_{ki}
            for (int k = 1; k <= n; ++k) {
                if (k == i) continue;
                SignedPerm s = transposition(n, k, i);
                addKTerm(0, s, -u);
                addKTerm(pairMask(k, i), s, -(u * CycScalar(pairSign(k, i))));
            }
        }
        return out;
    }

    // Types D and B share the u-part; B adds the -sqrt2 v tau_i term.
    if (j != i) {
        // u ((1 + c_j c_i) s_{ij} - (1 - c_j c_i) sbar_{ij})
        SignedPerm s = transposition(n, i, j);
        SignedPerm sb = barTransposition(n, i, j);
        addKTerm(0, s, u);
        addKTerm(pairMask(j, i), s, u * CycScalar(pairSign(j, i)));
        addKTerm(0, sb, -u);
        addKTerm(pairMask(j, i), sb, u * CycScalar(pairSign(j, i)));
    } else {
        // -u sum_{k != i} ((1 + c_k c_i) s_{ki} + (1 - c_k c_i) sbar_{ki})  [- sqrt2 v tau_i]
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            SignedPerm s = transposition(n, k, i);
            SignedPerm sb = barTransposition(n, k, i);
            addKTerm(0, s, -u);
            addKTerm(pairMask(k, i), s, -(u * CycScalar(pairSign(k, i))));
            addKTerm(0, sb, -u);
            addKTerm(pairMask(k, i), sb, u * CycScalar(pairSign(k, i)));
        }
        if (type_.family == Family::B) {
            ParamPoly sqrt2v = ParamPoly::v() * CycScalar::sqrt2();
            addKTerm(0, signFlip(n, i), -sqrt2v);
        }
    }
    return out;
}

const DahcaElem& DahcaAlgebra::straightenYx(int i, const ExpVec& a) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find({i, a.key()});
        if (it != memo_.end()) return it->second;
    }

    DahcaElem result(type_);
    int n = type_.n;
    if (a.isZero()) {
        result.add({ExpVec(n), 0, SignedPerm::identity(n), ExpVec::unit(n, i)},
                   ParamPoly(1));
    } else {
        int j = 0;
        while (a.e[j] == 0) ++j;
        ExpVec rest = a;
        rest.e[j] -= 1;
        // y_i x^a = x_j (y_i x^rest) + [y_i, x_j] x^rest
        const DahcaElem& sub = straightenYx(i, rest);
        for (auto& [m, c] : sub.terms()) {
            DahcaMono m2 = m;
            m2.x.e[j] += 1;
            result.add(m2, c);
        }
        DahcaElem br = bracketYX(i, j + 1);
        for (auto& [m, c] : br.terms()) {
            auto [sgnA, b2] = m.w.actExp(rest);
            int sgnB = cliffPastXSign(m.eps, b2);
            int sgn = sgnA * sgnB;
            result.add({b2, m.eps, m.w, ExpVec(n)}, sgn < 0 ? -c : c);
        }
    }
    // unordered_map references are node-stable, so handing out a reference to
    // the memo entry is safe under later insertions.
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(std::make_pair(i, a.key()), std::move(result)).first->second;
}

DahcaElem DahcaAlgebra::leftMulY(int i, const DahcaElem& e) const {
    DahcaElem out(type_);
    for (auto& [m, c] : e.terms()) {
        const DahcaElem& s = straightenYx(i, m.x);
        for (auto& [sm, sc] : s.terms()) {
            // (x^p c^q r y^s) * (c^d v y^h):
            //   r c^d = sgn1 c^{d'} r;  c^q c^{d'} = sgn2 c^{qd};
            //   y^s v = sgn3 v y^{s'};  compose r v; add exponents.
            auto [sgn1, d2] = weylActMask(sm.w, m.eps);
            int sgn2 = cliffordMulSign(sm.eps, d2);
            auto [sgn3, s2] = m.w.inverse().actExp(sm.y);
            DahcaMono m2{sm.x, sm.eps ^ d2, sm.w.compose(m.w), s2.plus(m.y)};
            int sgn = sgn1 * sgn2 * sgn3;
            ParamPoly cc = sc * c;
            out.add(m2, sgn < 0 ? -cc : cc);
        }
    }
    return out;
}

DahcaElem DahcaAlgebra::mul(const DahcaElem& a, const DahcaElem& b) const {
    if (!(a.type() == type_) || !(b.type() == type_))
        throw ArgumentError("algebra tag mismatch in product");
    if (a.isZero() || b.isZero()) return zero();
    if (a.maxDegree() + b.maxDegree() > degreeCap_.load())
        throw DegreeCapError("product exceeds the total-degree cap of " +
                             std::to_string(degreeCap_.load()));
    int n = type_.n;
    DahcaElem out(type_);
    // y^gamma * x^alpha straightenings shared across term pairs of this call.
    std::map<std::pair<uint64_t, uint64_t>, DahcaElem> eCache;
    for (auto& [ma, ca] : a.terms()) {
        for (auto& [mb, cb] : b.terms()) {
            // E = y^gamma_a * x^alpha_b, straightened.
            auto eKey = std::make_pair(ma.y.key(), mb.x.key());
            auto eIt = eCache.find(eKey);
            if (eIt == eCache.end()) {
                DahcaElem start(type_);
                start.add({mb.x, 0, SignedPerm::identity(n), ExpVec(n)}, ParamPoly(1));
                for (int vi = n; vi >= 1; --vi)
                    for (int rep = 0; rep < ma.y.e[vi - 1]; ++rep)
                        start = leftMulY(vi, start);
                eIt = eCache.emplace(eKey, std::move(start)).first;
            }
            const DahcaElem& e = eIt->second;

            SignedPerm w2inv = mb.w.inverse();
            for (auto& [me, ce] : e.terms()) {
                // x^a c^eps w (x^p c^q v y^s) c^eps' w' y^g'
                auto [sgn1, p2] = ma.w.actExp(me.x);
                int sgn2 = cliffPastXSign(ma.eps, p2);
                auto [sgn3, q2] = weylActMask(ma.w, me.eps);
                int sgn4 = cliffordMulSign(ma.eps, q2);
                unsigned mask1 = ma.eps ^ q2;
                SignedPerm wv = ma.w.compose(me.w);
                auto [sgn5, e2] = weylActMask(wv, mb.eps);
                int sgn6 = cliffordMulSign(mask1, e2);
                auto [sgn7, s2] = w2inv.actExp(me.y);
                DahcaMono m2{ma.x.plus(p2), mask1 ^ e2, wv.compose(mb.w),
                             s2.plus(mb.y)};
                int sgn = sgn1 * sgn2 * sgn3 * sgn4 * sgn5 * sgn6 * sgn7;
                ParamPoly cc = ca * cb * ce;
                out.add(m2, sgn < 0 ? -cc : cc);
            }
        }
    }
    return out;
}

DahcaElem DahcaAlgebra::commYPolyClosed(const VarPoly& f, int i) const {
    int n = type_.n;
    if (f.rank() != n) throw ArgumentError("rank mismatch");
    if (i < 1 || i > n) throw ArgumentError("index out of range");
    ParamPoly u = ParamPoly::u();
    DahcaElem out(type_);
    ExpVec z(n);
    auto addXPolyTerm = [&](const VarPoly& p, unsigned mask, const SignedPerm& w) {
        for (auto& [e, c] : p.terms()) out.add({e, mask, w, z}, c);
    };
    for (int k = 1; k <= n; ++k) {
        if (k == i) continue;
        SignedPerm s = transposition(n, k, i);
        VarPoly ddm = (f - f.subst(s)).divExactMinus(i, k);
        SignedPerm sb = barTransposition(n, k, i);
        VarPoly ddp = (f - f.subst(sb)).divExactPlus(i, k);
        // -u (ddm + ddp c_k c_i) s_{ki}
        addXPolyTerm(ddm * (-u), 0, s);
        addXPolyTerm(ddp * (-(u * CycScalar(pairSign(k, i)))), pairMask(k, i), s);
        if (type_.family != Family::A) {
            // -u (ddp - ddm c_k c_i) sbar_{ki}
            addXPolyTerm(ddp * (-u), 0, sb);
            addXPolyTerm(ddm * (u * CycScalar(pairSign(k, i))), pairMask(k, i), sb);
        }
    }
    if (type_.family == Family::B) {
        VarPoly ddt = (f - f.subst(signFlip(n, i))).divExactTau(i);
        ParamPoly sqrt2v = ParamPoly::v() * CycScalar::sqrt2();
        addXPolyTerm(ddt * (-sqrt2v), 0, signFlip(n, i));
    }
    return out;
}

DahcaElem DahcaAlgebra::commPolyXClosed(const VarPoly& f, int i) const {
    int n = type_.n;
    if (f.rank() != n) throw ArgumentError("rank mismatch");
    if (i < 1 || i > n) throw ArgumentError("index out of range");
    ParamPoly u = ParamPoly::u();
    DahcaElem out(type_);
    ExpVec z(n);
    auto addYPolyTerm = [&](const VarPoly& p, unsigned mask, const SignedPerm& w) {
        SignedPerm winv = w.inverse();
        for (auto& [e, c] : p.terms()) {
            auto [sgn, e2] = winv.actExp(e);
            out.add({z, mask, w, e2}, sgn < 0 ? -c : c);
        }
    };
    for (int k = 1; k <= n; ++k) {
        if (k == i) continue;
        SignedPerm s = transposition(n, k, i);
        VarPoly ddm = (f - f.subst(s)).divExactMinus(i, k);
        // -u ddm (1 + c_k c_i) s_{ki}
        addYPolyTerm(ddm * (-u), 0, s);
        addYPolyTerm(ddm * (-(u * CycScalar(pairSign(k, i)))), pairMask(k, i), s);
        if (type_.family != Family::A) {
            SignedPerm sb = barTransposition(n, k, i);
            VarPoly ddp = (f - f.subst(sb)).divExactPlus(i, k);
            // -u ddp (1 - c_k c_i) sbar_{ki}
            addYPolyTerm(ddp * (-u), 0, sb);
            addYPolyTerm(ddp * (u * CycScalar(pairSign(k, i))), pairMask(k, i), sb);
        }
    }
    if (type_.family == Family::B) {
        VarPoly ddt = (f - f.subst(signFlip(n, i))).divExactTau(i);
        ParamPoly sqrt2v = ParamPoly::v() * CycScalar::sqrt2();
        addYPolyTerm(ddt * (-sqrt2v), 0, signFlip(n, i));
    }
    return out;
}

}  // namespace heckec
