#include "heckec/sdaha.hpp"

#include <memory>

namespace heckec {

namespace {

// xi^a * xi^b = sign * xi^{a+b}: each xi_l factor of b moves left past the
// xi_k factors of a with k > l.
int mergeXiSign(const ExpVec& a, const ExpVec& b) {
    int acc = 0;
    for (int l = 0; l < b.n; ++l) {
        if (!b.e[l]) continue;
        int above = 0;
        for (int k = l + 1; k < a.n; ++k) above += a.e[k];
        acc += b.e[l] * above;
    }
    return (acc & 1) ? -1 : 1;
}

}  // namespace

void SdahaElem::add(const SdahaMono& m, const ParamPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

SdahaElem SdahaElem::operator-() const {
    SdahaElem r(type_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SdahaElem SdahaElem::operator+(const SdahaElem& o) const {
    if (!(type_ == o.type_)) throw ArgumentError("algebra tag mismatch");
    SdahaElem r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

SdahaElem SdahaElem::operator-(const SdahaElem& o) const { return *this + (-o); }

SdahaElem SdahaElem::operator*(const SdahaElem& o) const {
    return SdahaAlgebra::get(type_, true).mul(*this, o);
}

SdahaElem SdahaElem::operator*(const ParamPoly& c) const {
    SdahaElem r(type_);
    for (auto& [m, k] : terms_) r.add(m, k * c);
    return r;
}

std::string SdahaElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        std::string mono = monoStr("xi", m.xi);
        auto join = [&mono](const std::string& piece) {
            if (piece.empty()) return;
            if (!mono.empty()) mono += "*";
            mono += piece;
        };
        if (!m.w.isIdentity()) join("t" + m.w.str());
        join(monoStr("y", m.y));
        appendTerm(out, c, mono);
    }
    return out;
}

SdahaAlgebra::SdahaAlgebra(const WeylType& t, bool allowSmallD)
    : type_(t),
      group_(WeylGroup::get(t, allowSmallD)),
      spin_(SpinContext::get(t, allowSmallD)) {}

const SdahaAlgebra& SdahaAlgebra::get(const WeylType& t, bool allowSmallD) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<SdahaAlgebra>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(int(t.family), t.n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<SdahaAlgebra>(new SdahaAlgebra(t, allowSmallD)))
                 .first;
    return *it->second;
}

SdahaElem SdahaAlgebra::one() const { return scalar(ParamPoly(1)); }

SdahaElem SdahaAlgebra::scalar(const ParamPoly& c) const {
    SdahaElem r(type_);
    r.add({ExpVec(type_.n), SignedPerm::identity(type_.n), ExpVec(type_.n)}, c);
    return r;
}

SdahaElem SdahaAlgebra::xiGen(int i) const {
    if (i < 1 || i > type_.n) throw ArgumentError("xi index out of range");
    SdahaElem r(type_);
    r.add({ExpVec::unit(type_.n, i), SignedPerm::identity(type_.n), ExpVec(type_.n)},
          ParamPoly(1));
    return r;
}

SdahaElem SdahaAlgebra::yGen(int i) const {
    if (i < 1 || i > type_.n) throw ArgumentError("y index out of range");
    SdahaElem r(type_);
    r.add({ExpVec(type_.n), SignedPerm::identity(type_.n), ExpVec::unit(type_.n, i)},
          ParamPoly(1));
    return r;
}

SdahaElem SdahaAlgebra::tGen(int i) const {
    SdahaElem r(type_);
    r.add({ExpVec(type_.n), group_.simple(i), ExpVec(type_.n)}, ParamPoly(1));
    return r;
}

SdahaElem SdahaAlgebra::monomial(const SdahaMono& m, const ParamPoly& c) const {
    SdahaElem r(type_);
    r.add(m, c);
    return r;
}

SdahaElem SdahaAlgebra::fromSpin(const SpinElem& s) const {
    if (!(s.type() == type_)) throw ArgumentError("algebra tag mismatch");
    SdahaElem r(type_);
    for (auto& [w, c] : s.terms())
        r.add({ExpVec(type_.n), w, ExpVec(type_.n)}, c);
    return r;
}

SdahaElem SdahaAlgebra::fromYPoly(const VarPoly& f) const {
    if (f.rank() != type_.n) throw ArgumentError("rank mismatch");
    SdahaElem r(type_);
    for (auto& [e, c] : f.terms())
        r.add({ExpVec(type_.n), SignedPerm::identity(type_.n), e}, c);
    return r;
}

SdahaElem SdahaAlgebra::bracketYXi(int i, int j) const {
    int n = type_.n;
    if (i < 1 || i > n || j < 1 || j > n) throw ArgumentError("index out of range");
    ParamPoly u = ParamPoly::u();
    SpinElem acc(type_);
    if (i != j) {
        // [y_i, xi_j] = -u [j,i]  (+ u [j,i]-bar for D/B)
        acc = oddReflection(type_, OddKind::TIJ, j, i) * (-u);
        if (type_.family != Family::A)
            acc = acc + oddReflection(type_, OddKind::TBAR_IJ, j, i) * u;
    } else {
        // [y_i, xi_i] = u sum_{k != i} [i,k]  (+ bars for D/B, + v [i]-bar for B)
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            acc = acc + oddReflection(type_, OddKind::TIJ, i, k) * u;
            if (type_.family != Family::A)
                acc = acc + oddReflection(type_, OddKind::TBAR_IJ, i, k) * u;
        }
        if (type_.family == Family::B)
            acc = acc + oddReflection(type_, OddKind::TBAR_I, i) * ParamPoly::v();
    }
    return fromSpin(acc);
}

std::pair<int, ExpVec> SdahaAlgebra::moveTwPastXi(const SignedPerm& w,
                                                  const ExpVec& a) const {
    // Push xi^a through T_w = t_{i1}...t_{il} letter by letter from the right.
    // Each letter g: t_g xi_k = -xi_{p_g(k)} t_g with p_g the unsigned
    // permutation; an adjacent block swap adds (-1)^{a_x a_{x+1}}.
    std::vector<int> word = group_.reducedWord(w);
    ExpVec cur = a;
    int total = cur.total();
    int acc = 0;
    int n = type_.n;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int g = *it;
        acc += total;  // the uniform minus sign, one per xi factor
        int swapLo = -1;
        if (g <= n - 1) {
            swapLo = g - 1;  // swap positions g-1, g (0-based)
        } else if (type_.family == Family::D) {
            swapLo = n - 2;  // t_n swaps n-1, n
        }                    // type B t_n: identity permutation
        if (swapLo >= 0) {
            acc += cur.e[swapLo] * cur.e[swapLo + 1];
            std::swap(cur.e[swapLo], cur.e[swapLo + 1]);
        }
    }
    return {(acc & 1) ? -1 : 1, cur};
}

const SdahaElem& SdahaAlgebra::straightenYXi(int i, const ExpVec& a) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find({i, a.key()});
        if (it != memo_.end()) return it->second;
    }

    SdahaElem result(type_);
    int n = type_.n;
    if (a.isZero()) {
        result.add({ExpVec(n), SignedPerm::identity(n), ExpVec::unit(n, i)},
                   ParamPoly(1));
    } else {
        int j = 0;
        while (a.e[j] == 0) ++j;
        ExpVec rest = a;
        rest.e[j] -= 1;
        // y_i xi^a = xi_j (y_i xi^rest) + [y_i, xi_j] xi^rest
        const SdahaElem& sub = straightenYXi(i, rest);
        for (auto& [m, c] : sub.terms()) {
            int below = 0;
            for (int k = 0; k < j; ++k) below += m.xi.e[k];
            SdahaMono m2 = m;
            m2.xi.e[j] += 1;
            result.add(m2, (below & 1) ? -c : c);
        }
        SdahaElem br = bracketYXi(i, j + 1);
        for (auto& [m, c] : br.terms()) {
            auto [sgn, moved] = moveTwPastXi(m.w, rest);
            result.add({moved, m.w, ExpVec(n)}, sgn < 0 ? -c : c);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(std::make_pair(i, a.key()), std::move(result)).first->second;
}

SdahaElem SdahaAlgebra::leftMulY(int i, const SdahaElem& e) const {
    SdahaElem out(type_);
    for (auto& [m, c] : e.terms()) {
        const SdahaElem& s = straightenYXi(i, m.xi);
        SignedPerm vinv = m.w.inverse();
        for (auto& [sm, sc] : s.terms()) {
            // (xi^p T_u y^s) * (T_v y^h)
            auto [sgn1, s2] = vinv.actExp(sm.y);
            int sgn2 = spin_.cocycle(sm.w, m.w);
            SdahaMono m2{sm.xi, sm.w.compose(m.w), s2.plus(m.y)};
            int sgn = sgn1 * sgn2;
            ParamPoly cc = sc * c;
            out.add(m2, sgn < 0 ? -cc : cc);
        }
    }
    return out;
}

SdahaElem SdahaAlgebra::mul(const SdahaElem& a, const SdahaElem& b) const {
    if (!(a.type() == type_) || !(b.type() == type_))
        throw ArgumentError("algebra tag mismatch in product");
    if (a.isZero() || b.isZero()) return zero();
    if (a.maxDegree() + b.maxDegree() > degreeCap_.load())
        throw DegreeCapError("product exceeds the total-degree cap of " +
                             std::to_string(degreeCap_.load()));
    int n = type_.n;
    SdahaElem out(type_);
    std::map<std::pair<uint64_t, uint64_t>, SdahaElem> eCache;
    for (auto& [ma, ca] : a.terms()) {
        for (auto& [mb, cb] : b.terms()) {
            auto eKey = std::make_pair(ma.y.key(), mb.xi.key());
            auto eIt = eCache.find(eKey);
            if (eIt == eCache.end()) {
                SdahaElem start(type_);
                start.add({mb.xi, SignedPerm::identity(n), ExpVec(n)}, ParamPoly(1));
                for (int vi = n; vi >= 1; --vi)
                    for (int rep = 0; rep < ma.y.e[vi - 1]; ++rep)
                        start = leftMulY(vi, start);
                eIt = eCache.emplace(eKey, std::move(start)).first;
            }
            SignedPerm w2inv = mb.w.inverse();
            for (auto& [me, ce] : eIt->second.terms()) {
                // xi^alpha T_w (xi^p T_v y^s) T_w' y^g'
                auto [sgn1, p2] = moveTwPastXi(ma.w, me.xi);
                int sgn2 = mergeXiSign(ma.xi, p2);
                int sgn3 = spin_.cocycle(ma.w, me.w);
                SignedPerm wv = ma.w.compose(me.w);
                auto [sgn4, s2] = w2inv.actExp(me.y);
                int sgn5 = spin_.cocycle(wv, mb.w);
                SdahaMono m2{ma.xi.plus(p2), wv.compose(mb.w), s2.plus(mb.y)};
                int sgn = sgn1 * sgn2 * sgn3 * sgn4 * sgn5;
                ParamPoly cc = ca * cb * ce;
                out.add(m2, sgn < 0 ? -cc : cc);
            }
        }
    }
    return out;
}

SdahaElem SdahaAlgebra::commPolyXiClosed(const VarPoly& f, int i) const {
    int n = type_.n;
    if (f.rank() != n) throw ArgumentError("rank mismatch");
    if (i < 1 || i > n) throw ArgumentError("index out of range");
    ParamPoly u = ParamPoly::u();
    SdahaElem out(type_);
    auto addPolySpin = [&](const VarPoly& p, const SpinElem& s, const ParamPoly& coef) {
        // p(y) * s: normal order is T_v y^{v^-1(beta)}.
        for (auto& [v, cs] : s.terms()) {
            SignedPerm vinv = v.inverse();
            for (auto& [e, c] : p.terms()) {
                auto [sgn, e2] = vinv.actExp(e);
                ParamPoly cc = c * cs * coef;
                out.add({ExpVec(n), v, e2}, sgn < 0 ? -cc : cc);
            }
        }
    };
    for (int k = 1; k <= n; ++k) {
        if (k == i) continue;
        VarPoly ddm = (f - f.subst(transposition(n, k, i))).divExactMinus(i, k);
        addPolySpin(ddm, oddReflection(type_, OddKind::TIJ, k, i), -u);
        if (type_.family != Family::A) {
            VarPoly ddp = (f - f.subst(barTransposition(n, k, i))).divExactPlus(i, k);
            addPolySpin(ddp, oddReflection(type_, OddKind::TBAR_IJ, k, i), u);
        }
    }
    if (type_.family == Family::B) {
        VarPoly ddt = (f - f.subst(signFlip(n, i))).divExactTau(i);
        addPolySpin(ddt, oddReflection(type_, OddKind::TBAR_I, i), ParamPoly::v());
    }
    return out;
}

TensorSdahaElem TensorSdahaElem::one(const WeylType& t) {
    TensorSdahaElem r(t);
    r.add(0, {ExpVec(t.n), SignedPerm::identity(t.n), ExpVec(t.n)}, ParamPoly(1));
    return r;
}

void TensorSdahaElem::add(unsigned eps, const SdahaMono& m, const ParamPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(eps, m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

TensorSdahaElem TensorSdahaElem::operator-() const {
    TensorSdahaElem r(type_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TensorSdahaElem TensorSdahaElem::operator+(const TensorSdahaElem& o) const {
    if (!(type_ == o.type_)) throw ArgumentError("algebra tag mismatch");
    TensorSdahaElem r = *this;
    for (auto& [m, c] : o.terms_) r.add(m.first, m.second, c);
    return r;
}

TensorSdahaElem TensorSdahaElem::operator-(const TensorSdahaElem& o) const {
    return *this + (-o);
}

TensorSdahaElem TensorSdahaElem::operator*(const TensorSdahaElem& o) const {
    if (!(type_ == o.type_)) throw ArgumentError("algebra tag mismatch");
    const SdahaAlgebra& alg = SdahaAlgebra::get(type_, true);
    TensorSdahaElem r(type_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            // (a (x) b)(a' (x) b') = (-1)^{|b||a'|} (a a' (x) b b')
            int sign = 1;
            if (m1.second.parity() && (__builtin_popcount(m2.first) & 1)) sign = -1;
            sign *= cliffordMulSign(m1.first, m2.first);
            SdahaElem prod = alg.mul(alg.monomial(m1.second, ParamPoly(1)),
                                     alg.monomial(m2.second, ParamPoly(1)));
            ParamPoly cc = c1 * c2;
            if (sign < 0) cc = -cc;
            for (auto& [m, c] : prod.terms()) r.add(m1.first ^ m2.first, m, cc * c);
        }
    return r;
}

TensorSdahaElem TensorSdahaElem::operator*(const ParamPoly& c) const {
    TensorSdahaElem r(type_);
    for (auto& [m, k] : terms_) r.add(m.first, m.second, k * c);
    return r;
}

std::string TensorSdahaElem::str() const {
    if (terms_.empty()) return "0";
    const SdahaAlgebra& alg = SdahaAlgebra::get(type_, true);
    std::string out;
    for (auto& [m, c] : terms_) {
        std::string lhs = cliffordMaskStr(m.first);
        if (lhs.empty()) lhs = "1";
        SdahaElem unit = alg.monomial(m.second, ParamPoly(1));
        std::string mono = lhs + " (x) " + unit.str();
        appendTerm(out, c, mono);
    }
    return out;
}

TensorSdahaElem tensorSdahaFromSdaha(const SdahaElem& s) {
    TensorSdahaElem r(s.type());
    for (auto& [m, c] : s.terms()) r.add(0, m, c);
    return r;
}

TensorSdahaElem tensorSdahaFromClifford(const WeylType& t, unsigned eps,
                                        const ParamPoly& c) {
    TensorSdahaElem r(t);
    r.add(eps, {ExpVec(t.n), SignedPerm::identity(t.n), ExpVec(t.n)}, c);
    return r;
}

TensorSdahaElem phiBig(const DahcaElem& a) {
    const WeylType& t = a.type();
    int n = t.n;
    const SpinContext& ctx = SpinContext::get(t, true);
    const SdahaAlgebra& alg = SdahaAlgebra::get(t, true);
    CycScalar sm2 = CycScalar::sqrtMinus2();
    TensorSdahaElem out(t);
    for (auto& [m, c] : a.terms()) {
        // Phi(x^alpha c^eps w y^gamma) as a product of generator images.
        TensorSdahaElem acc = TensorSdahaElem::one(t);
        for (int i = 1; i <= n; ++i)
            for (int rep = 0; rep < m.x.e[i - 1]; ++rep) {
                // Phi(x_i) = sqrt(-2) * (c_i (x) xi_i)
                TensorSdahaElem xi(t);
                xi.add(1u << (i - 1),
                       {ExpVec::unit(n, i), SignedPerm::identity(n), ExpVec(n)},
                       ParamPoly(sm2));
                acc = acc * xi;
            }
        if (m.eps) acc = acc * tensorSdahaFromClifford(t, m.eps, ParamPoly(1));
        {
            // Phi(w) = gamma_w^{-1} (x) T_w, as in the finite isomorphism.
            TensorSdahaElem img(t);
            CliffordElem gi = ctx.gammaInv(m.w);
            for (auto& [mask, k] : gi.terms())
                img.add(mask, {ExpVec(n), m.w, ExpVec(n)}, ParamPoly(k));
            acc = acc * img;
        }
        if (!m.y.isZero()) {
            SdahaElem ypart = alg.monomial({ExpVec(n), SignedPerm::identity(n), m.y},
                                           ParamPoly(1));
            acc = acc * tensorSdahaFromSdaha(ypart);
        }
        out = out + acc * c;
    }
    return out;
}

DahcaElem psiBig(const TensorSdahaElem& a) {
    const WeylType& t = a.type();
    int n = t.n;
    const SpinContext& ctx = SpinContext::get(t, true);
    const DahcaAlgebra& alg = DahcaAlgebra::get(t, true);
    CycScalar invSm2 = CycScalar::sqrtMinus2().inverse();
    DahcaElem out = alg.zero();
    for (auto& [key, c] : a.terms()) {
        const auto& [eps, m] = key;
        DahcaElem acc = alg.one();
        if (eps)
            acc = alg.mul(acc, alg.monomial({ExpVec(n), eps, SignedPerm::identity(n),
                                             ExpVec(n)},
                                            ParamPoly(1)));
        for (int i = 1; i <= n; ++i)
            for (int rep = 0; rep < m.xi.e[i - 1]; ++rep) {
                // Psi(xi_i) = (1/sqrt(-2)) c_i x_i
                DahcaElem ci = alg.cGen(i);
                DahcaElem img = alg.mul(ci, alg.xGen(i)) * ParamPoly(invSm2);
                acc = alg.mul(acc, img);
            }
        {
            // Psi(T_w) = gamma_w w
            DahcaElem img = alg.zero();
            CliffordElem ga = ctx.gamma(m.w);
            for (auto& [mask, k] : ga.terms())
                img.add({ExpVec(n), mask, m.w, ExpVec(n)}, ParamPoly(k));
            acc = alg.mul(acc, img);
        }
        if (!m.y.isZero())
            acc = alg.mul(acc, alg.monomial({ExpVec(n), 0, SignedPerm::identity(n), m.y},
                                            ParamPoly(1)));
        out = out + acc * c;
    }
    return out;
}

}  // namespace heckec
