#include "heckec/cdaha.hpp"

#include <memory>

namespace heckec {

void CdahaElem::add(const CdahaMono& m, const ParamPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

CdahaElem CdahaElem::operator-() const {
    CdahaElem r(type_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

CdahaElem CdahaElem::operator+(const CdahaElem& o) const {
    if (!(type_ == o.type_)) throw ArgumentError("algebra tag mismatch");
    CdahaElem r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

CdahaElem CdahaElem::operator-(const CdahaElem& o) const { return *this + (-o); }

CdahaElem CdahaElem::operator*(const CdahaElem& o) const {
    return CdahaAlgebra::get(type_, true).mul(*this, o);
}

CdahaElem CdahaElem::operator*(const ParamPoly& c) const {
    CdahaElem r(type_);
    for (auto& [m, k] : terms_) r.add(m, k * c);
    return r;
}

std::string CdahaElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        std::string mono = monoStr("xt", m.x);
        auto join = [&mono](const std::string& piece) {
            if (piece.empty()) return;
            if (!mono.empty()) mono += "*";
            mono += piece;
        };
        if (m.g.zexp) join("z");
        if (!m.g.w.isIdentity()) join("wt" + m.g.w.str());
        join(monoStr("yt", m.y));
        appendTerm(out, c, mono);
    }
    return out;
}

void DahaElem::add(const DahaMono& m, const ParamPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

DahaElem DahaElem::operator-() const {
    DahaElem r(type_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

DahaElem DahaElem::operator+(const DahaElem& o) const {
    if (!(type_ == o.type_)) throw ArgumentError("algebra tag mismatch");
    DahaElem r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

DahaElem DahaElem::operator-(const DahaElem& o) const { return *this + (-o); }

DahaElem DahaElem::operator*(const DahaElem& o) const {
    return DahaAlgebra::get(type_, true).mul(*this, o);
}

DahaElem DahaElem::operator*(const ParamPoly& c) const {
    DahaElem r(type_);
    for (auto& [m, k] : terms_) r.add(m, k * c);
    return r;
}

DahaElem DahaElem::specializeT(const CycScalar& tv) const {
    DahaElem r(type_);
    for (auto& [m, c] : terms_) r.add(m, c.specialize(tv, {}, {}));
    return r;
}

std::string DahaElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        std::string mono = monoStr("x", m.x);
        auto join = [&mono](const std::string& piece) {
            if (piece.empty()) return;
            if (!mono.empty()) mono += "*";
            mono += piece;
        };
        if (!m.w.isIdentity()) join("w" + m.w.str());
        join(monoStr("y", m.y));
        appendTerm(out, c, mono);
    }
    return out;
}

CdahaAlgebra::CdahaAlgebra(const WeylType& t, bool allowSmallD)
    : type_(t),
      group_(WeylGroup::get(t, allowSmallD)),
      spin_(SpinContext::get(t, allowSmallD)) {}

const CdahaAlgebra& CdahaAlgebra::get(const WeylType& t, bool allowSmallD) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<CdahaAlgebra>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(int(t.family), t.n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<CdahaAlgebra>(new CdahaAlgebra(t, allowSmallD)))
                 .first;
    return *it->second;
}

CdahaElem CdahaAlgebra::one() const { return scalar(ParamPoly(1)); }

CdahaElem CdahaAlgebra::scalar(const ParamPoly& c) const {
    CdahaElem r(type_);
    r.add({ExpVec(type_.n), CoverElem::identity(type_.n), ExpVec(type_.n)}, c);
    return r;
}

CdahaElem CdahaAlgebra::xtGen(int i) const {
    if (i < 1 || i > type_.n) throw ArgumentError("xt index out of range");
    CdahaElem r(type_);
    r.add({ExpVec::unit(type_.n, i), CoverElem::identity(type_.n), ExpVec(type_.n)},
          ParamPoly(1));
    return r;
}

CdahaElem CdahaAlgebra::ytGen(int i) const {
    if (i < 1 || i > type_.n) throw ArgumentError("yt index out of range");
    CdahaElem r(type_);
    r.add({ExpVec(type_.n), CoverElem::identity(type_.n), ExpVec::unit(type_.n, i)},
          ParamPoly(1));
    return r;
}

CdahaElem CdahaAlgebra::ttGen(int i) const {
    return coverElem({0, group_.simple(i)});
}

CdahaElem CdahaAlgebra::zElem() const {
    return coverElem({1, SignedPerm::identity(type_.n)});
}

CdahaElem CdahaAlgebra::coverElem(const CoverElem& g) const {
    if (!memberOf(type_, g.w)) throw ArgumentError("element is not in " + type_.str());
    CdahaElem r(type_);
    r.add({ExpVec(type_.n), g, ExpVec(type_.n)}, ParamPoly(1));
    return r;
}

CdahaElem CdahaAlgebra::monomial(const CdahaMono& m, const ParamPoly& c) const {
    CdahaElem r(type_);
    r.add(m, c);
    return r;
}

CdahaElem CdahaAlgebra::bracketYtXt(int i, int j) const {
    int n = type_.n;
    if (i < 1 || i > n || j < 1 || j > n) throw ArgumentError("index out of range");
    ParamPoly u = ParamPoly::u();
    CdahaElem out(type_);
    ExpVec zv(n);
    auto addCover = [&](CoverElem g, int extraZ, const ParamPoly& c) {
        g.zexp ^= (extraZ & 1);
        out.add({zv, g, zv}, c);
    };
    if (i != j) {
        // [yt_i, xt_j] = u z {j,i}  (- u z {j,i}-bar for D/B)
        addCover(coverLift(type_, OddKind::TIJ, j, i), 1, u);
        if (type_.family != Family::A)
            addCover(coverLift(type_, OddKind::TBAR_IJ, j, i), 1, -u);
    } else {
        // [yt_i, xt_i] = -u z sum_{k != i} {i,k}  (+ bars; - v z {i} for B)
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            addCover(coverLift(type_, OddKind::TIJ, i, k), 1, -u);
            if (type_.family != Family::A)
                addCover(coverLift(type_, OddKind::TBAR_IJ, i, k), 1, -u);
        }
        if (type_.family == Family::B)
            addCover(coverLift(type_, OddKind::TBAR_I, i), 1, -ParamPoly::v());
    }
    return out;
}

CdahaAlgebra::MoveResult CdahaAlgebra::moveGPastXt(const CoverElem& g,
                                                   const ExpVec& a) const {
    // Push xt^a through the canonical word of g.w letter by letter from the
    // right; z is central so g.zexp plays no role. Per letter:
    //   A-type letter: xt_k -> z xt_{s(k)} for every k, plus the reorder z.
    //   D t_n: xt_{n-1} <-> xt_n with sign -1, others pick up z.
    //   B t_n: xt_n -> -xt_n, others pick up z.
    std::vector<int> word = group_.reducedWord(g.w);
    ExpVec cur = a;
    int n = type_.n;
    int total = cur.total();
    int zcount = 0;
    int signExp = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int gidx = *it;
        if (gidx <= n - 1) {
            zcount += total;
            zcount += cur.e[gidx - 1] * cur.e[gidx];
            std::swap(cur.e[gidx - 1], cur.e[gidx]);
        } else if (type_.family == Family::D) {
            zcount += total - cur.e[n - 2] - cur.e[n - 1];
            signExp += cur.e[n - 2] + cur.e[n - 1];
            zcount += cur.e[n - 2] * cur.e[n - 1];
            std::swap(cur.e[n - 2], cur.e[n - 1]);
        } else {
            zcount += total - cur.e[n - 1];
            signExp += cur.e[n - 1];
        }
    }
    return {(signExp & 1) ? -1 : 1, zcount & 1, cur};
}

const CdahaElem& CdahaAlgebra::straightenYtXt(int i, const ExpVec& a) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find({i, a.key()});
        if (it != memo_.end()) return it->second;
    }

    CdahaElem result(type_);
    int n = type_.n;
    if (a.isZero()) {
        result.add({ExpVec(n), CoverElem::identity(n), ExpVec::unit(n, i)},
                   ParamPoly(1));
    } else {
        int j = 0;
        while (a.e[j] == 0) ++j;
        ExpVec rest = a;
        rest.e[j] -= 1;
        // yt_i xt^a = xt_j (yt_i xt^rest) + [yt_i, xt_j] xt^rest
        const CdahaElem& sub = straightenYtXt(i, rest);
        for (auto& [m, c] : sub.terms()) {
            int below = 0;
            for (int k = 0; k < j; ++k) below += m.x.e[k];
            CdahaMono m2 = m;
            m2.x.e[j] += 1;
            m2.g.zexp ^= (below & 1);  // xt_j moves into place through z's
            result.add(m2, c);
        }
        CdahaElem br = bracketYtXt(i, j + 1);
        for (auto& [m, c] : br.terms()) {
            MoveResult mv = moveGPastXt(m.g, rest);
            CoverElem g2 = m.g;
            g2.zexp ^= mv.zinc;
            result.add({mv.exp, g2, ExpVec(n)}, mv.sign < 0 ? -c : c);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(std::make_pair(i, a.key()), std::move(result)).first->second;
}

CdahaElem CdahaAlgebra::leftMulYt(int i, const CdahaElem& e) const {
    CdahaElem out(type_);
    for (auto& [m, c] : e.terms()) {
        const CdahaElem& s = straightenYtXt(i, m.x);
        SignedPerm vinv = m.g.w.inverse();
        for (auto& [sm, sc] : s.terms()) {
            // (xt^p g_u yt^s) * (g yt^h)
            auto [sgn1, s2] = vinv.actExp(sm.y);
            CoverElem gNew = spin_.coverMul(sm.g, m.g);
            CdahaMono m2{sm.x, gNew, s2.plus(m.y)};
            ParamPoly cc = sc * c;
            out.add(m2, sgn1 < 0 ? -cc : cc);
        }
    }
    return out;
}

CdahaElem CdahaAlgebra::mul(const CdahaElem& a, const CdahaElem& b) const {
    if (!(a.type() == type_) || !(b.type() == type_))
        throw ArgumentError("algebra tag mismatch in product");
    if (a.isZero() || b.isZero()) return zero();
    if (a.maxDegree() + b.maxDegree() > degreeCap_.load())
        throw DegreeCapError("product exceeds the total-degree cap of " +
                             std::to_string(degreeCap_.load()));
    int n = type_.n;
    CdahaElem out(type_);
    std::map<std::pair<uint64_t, uint64_t>, CdahaElem> eCache;
    for (auto& [ma, ca] : a.terms()) {
        for (auto& [mb, cb] : b.terms()) {
            auto eKey = std::make_pair(ma.y.key(), mb.x.key());
            auto eIt = eCache.find(eKey);
            if (eIt == eCache.end()) {
                CdahaElem start(type_);
                start.add({mb.x, CoverElem::identity(n), ExpVec(n)}, ParamPoly(1));
                for (int vi = n; vi >= 1; --vi)
                    for (int rep = 0; rep < ma.y.e[vi - 1]; ++rep)
                        start = leftMulYt(vi, start);
                eIt = eCache.emplace(eKey, std::move(start)).first;
            }
            SignedPerm w2inv = mb.g.w.inverse();
            for (auto& [me, ce] : eIt->second.terms()) {
                // xt^alpha g (xt^p g_v yt^s) g' yt^g'
                MoveResult mv = moveGPastXt(ma.g, me.x);
                // xt^alpha * xt^{p'}: each factor of p' passes the alpha
                // factors with larger index, one z per pass.
                int zmerge = 0;
                for (int l = 0; l < n; ++l) {
                    if (!mv.exp.e[l]) continue;
                    int above = 0;
                    for (int k = l + 1; k < n; ++k) above += ma.x.e[k];
                    zmerge += mv.exp.e[l] * above;
                }
                auto [sgn2, s2] = w2inv.actExp(me.y);
                CoverElem g2 = spin_.coverMul(spin_.coverMul(ma.g, me.g), mb.g);
                g2.zexp ^= mv.zinc ^ (zmerge & 1);
                CdahaMono m2{ma.x.plus(mv.exp), g2, s2.plus(mb.y)};
                int sgn = mv.sign * sgn2;
                ParamPoly cc = ca * cb * ce;
                out.add(m2, sgn < 0 ? -cc : cc);
            }
        }
    }
    return out;
}

DahaAlgebra::DahaAlgebra(const WeylType& t, bool allowSmallD)
    : type_(t), group_(WeylGroup::get(t, allowSmallD)) {}

const DahaAlgebra& DahaAlgebra::get(const WeylType& t, bool allowSmallD) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<DahaAlgebra>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(int(t.family), t.n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<DahaAlgebra>(new DahaAlgebra(t, allowSmallD)))
                 .first;
    return *it->second;
}

DahaElem DahaAlgebra::one() const { return scalar(ParamPoly(1)); }

DahaElem DahaAlgebra::scalar(const ParamPoly& c) const {
    DahaElem r(type_);
    r.add({ExpVec(type_.n), SignedPerm::identity(type_.n), ExpVec(type_.n)}, c);
    return r;
}

DahaElem DahaAlgebra::xGen(int i) const {
    if (i < 1 || i > type_.n) throw ArgumentError("x index out of range");
    DahaElem r(type_);
    r.add({ExpVec::unit(type_.n, i), SignedPerm::identity(type_.n), ExpVec(type_.n)},
          ParamPoly(1));
    return r;
}

DahaElem DahaAlgebra::yGen(int i) const {
    if (i < 1 || i > type_.n) throw ArgumentError("y index out of range");
    DahaElem r(type_);
    r.add({ExpVec(type_.n), SignedPerm::identity(type_.n), ExpVec::unit(type_.n, i)},
          ParamPoly(1));
    return r;
}

DahaElem DahaAlgebra::weylElem(const SignedPerm& w) const {
    if (!memberOf(type_, w)) throw ArgumentError("element is not in " + type_.str());
    DahaElem r(type_);
    r.add({ExpVec(type_.n), w, ExpVec(type_.n)}, ParamPoly(1));
    return r;
}

DahaElem DahaAlgebra::monomial(const DahaMono& m, const ParamPoly& c) const {
    DahaElem r(type_);
    r.add(m, c);
    return r;
}

DahaElem DahaAlgebra::bracketYX(int j, int i) const {
    int n = type_.n;
    if (i < 1 || i > n || j < 1 || j > n) throw ArgumentError("index out of range");
    ParamPoly u = ParamPoly::u();
    DahaElem out(type_);
    ExpVec z(n);
    auto addW = [&](const SignedPerm& w, const ParamPoly& c) { out.add({z, w, z}, c); };
    if (j != i) {
        addW(transposition(n, i, j), u);
        if (type_.family != Family::A) addW(barTransposition(n, i, j), -u);
    } else {
        out.add({z, SignedPerm::identity(n), z}, ParamPoly::t());
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            addW(transposition(n, k, i), -u);
            if (type_.family != Family::A) addW(barTransposition(n, k, i), -u);
        }
        if (type_.family == Family::B) addW(signFlip(n, i), -ParamPoly::v());
    }
    return out;
}

const DahaElem& DahaAlgebra::straightenYx(int i, const ExpVec& a) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find({i, a.key()});
        if (it != memo_.end()) return it->second;
    }

    DahaElem result(type_);
    int n = type_.n;
    if (a.isZero()) {
        result.add({ExpVec(n), SignedPerm::identity(n), ExpVec::unit(n, i)},
                   ParamPoly(1));
    } else {
        int j = 0;
        while (a.e[j] == 0) ++j;
        ExpVec rest = a;
        rest.e[j] -= 1;
        const DahaElem& sub = straightenYx(i, rest);
        for (auto& [m, c] : sub.terms()) {
            DahaMono m2 = m;
            m2.x.e[j] += 1;
            result.add(m2, c);
        }
        DahaElem br = bracketYX(i, j + 1);
        for (auto& [m, c] : br.terms()) {
            auto [sgn, b2] = m.w.actExp(rest);
            result.add({b2, m.w, ExpVec(n)}, sgn < 0 ? -c : c);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(std::make_pair(i, a.key()), std::move(result)).first->second;
}

DahaElem DahaAlgebra::leftMulY(int i, const DahaElem& e) const {
    DahaElem out(type_);
    for (auto& [m, c] : e.terms()) {
        const DahaElem& s = straightenYx(i, m.x);
        SignedPerm vinv = m.w.inverse();
        for (auto& [sm, sc] : s.terms()) {
            auto [sgn, s2] = vinv.actExp(sm.y);
            DahaMono m2{sm.x, sm.w.compose(m.w), s2.plus(m.y)};
            ParamPoly cc = sc * c;
            out.add(m2, sgn < 0 ? -cc : cc);
        }
    }
    return out;
}

DahaElem DahaAlgebra::mul(const DahaElem& a, const DahaElem& b) const {
    if (!(a.type() == type_) || !(b.type() == type_))
        throw ArgumentError("algebra tag mismatch in product");
    if (a.isZero() || b.isZero()) return zero();
    if (a.maxDegree() + b.maxDegree() > degreeCap_.load())
        throw DegreeCapError("product exceeds the total-degree cap of " +
                             std::to_string(degreeCap_.load()));
    int n = type_.n;
    DahaElem out(type_);
    std::map<std::pair<uint64_t, uint64_t>, DahaElem> eCache;
    for (auto& [ma, ca] : a.terms()) {
        for (auto& [mb, cb] : b.terms()) {
            auto eKey = std::make_pair(ma.y.key(), mb.x.key());
            auto eIt = eCache.find(eKey);
            if (eIt == eCache.end()) {
                DahaElem start(type_);
                start.add({mb.x, SignedPerm::identity(n), ExpVec(n)}, ParamPoly(1));
                for (int vi = n; vi >= 1; --vi)
                    for (int rep = 0; rep < ma.y.e[vi - 1]; ++rep)
                        start = leftMulY(vi, start);
                eIt = eCache.emplace(eKey, std::move(start)).first;
            }
            SignedPerm w2inv = mb.w.inverse();
            for (auto& [me, ce] : eIt->second.terms()) {
                auto [sgn1, p2] = ma.w.actExp(me.x);
                auto [sgn2, s2] = w2inv.actExp(me.y);
                DahaMono m2{ma.x.plus(p2), ma.w.compose(me.w).compose(mb.w),
                            s2.plus(mb.y)};
                int sgn = sgn1 * sgn2;
                ParamPoly cc = ca * cb * ce;
                out.add(m2, sgn < 0 ? -cc : cc);
            }
        }
    }
    return out;
}

DahaElem upsilonPlus(const CdahaElem& a) {
    const DahaAlgebra& alg = DahaAlgebra::get(a.type(), true);
    DahaElem r = alg.zero();
    for (auto& [m, c] : a.terms()) r.add({m.x, m.g.w, m.y}, c);
    return r;
}

SdahaElem upsilonMinus(const CdahaElem& a) {
    SdahaElem r(a.type());
    for (auto& [m, c] : a.terms())
        r.add({m.x, m.g.w, m.y}, m.g.zexp ? -c : c);
    return r;
}

}  // namespace heckec
