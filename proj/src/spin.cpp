#include "heckec/spin.hpp"

#include <memory>

namespace heckec {

SpinContext::SpinContext(const WeylType& t, bool allowSmallD)
    : type_(t), group_(WeylGroup::get(t, allowSmallD)) {}

const SpinContext& SpinContext::get(const WeylType& t, bool allowSmallD) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<SpinContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(int(t.family), t.n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<SpinContext>(new SpinContext(t, allowSmallD))).first;
    return *it->second;
}

const SpinContext::GammaPair& SpinContext::gammaPair(const SignedPerm& w) const {
    // Caller must hold mu_.
    auto it = gammas_.find(w.key());
    if (it != gammas_.end()) return it->second;

    // Psi(T_w) = (i b_{i1} s_{i1}) ... (i b_{il} s_{il}) = gamma_w * w with
    // gamma_w = i^l * u_1 ... u_l, u_k = (s_{i1}...s_{i(k-1)})(beta_{ik}).
    // Each u_k squares to 1, so gamma_w^-1 = (-i)^l * u_l ... u_1.
    std::vector<int> word = group_.reducedWord(w);
    int n = type_.n;
    std::vector<CliffordElem> factors;
    SignedPerm prefix = SignedPerm::identity(n);
    for (int g : word) {
        factors.push_back(weylActClifford(prefix, beta(type_, g)));
        prefix = prefix.compose(group_.simple(g));
    }
    if (!(prefix == w)) throw InternalError("reduced word does not reproduce w");

    CycScalar iPow(1), iNegPow(1);
    CycScalar i = CycScalar::sqrtMinus1();
    CliffordElem g = CliffordElem::one(n), gi = CliffordElem::one(n);
    for (size_t k = 0; k < factors.size(); ++k) {
        g = g * factors[k];
        gi = gi * factors[factors.size() - 1 - k];
        iPow *= i;
        iNegPow *= -i;
    }
    GammaPair pair{g * iPow, gi * iNegPow};
    return gammas_.emplace(w.key(), std::move(pair)).first->second;
}

CliffordElem SpinContext::gamma(const SignedPerm& w) const {
    std::lock_guard<std::mutex> lock(mu_);
    return gammaPair(w).g;
}

CliffordElem SpinContext::gammaInv(const SignedPerm& w) const {
    std::lock_guard<std::mutex> lock(mu_);
    return gammaPair(w).gi;
}

int SpinContext::cocycle(const SignedPerm& w, const SignedPerm& w2) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cocycles_.find({w.key(), w2.key()});
    if (it != cocycles_.end()) return it->second;

    CliffordElem lhs = gammaPair(w).g * weylActClifford(w, gammaPair(w2).g);
    const CliffordElem& target = gammaPair(w.compose(w2)).g;
    int val;
    if (lhs == target) {
        val = 1;
    } else if (lhs == -target) {
        val = -1;
    } else {
        throw InternalError("cocycle transport is not +-gamma_{ww'}");
    }
    cocycles_.emplace(std::make_pair(w.key(), w2.key()), val);
    return val;
}

CoverElem SpinContext::coverMul(const CoverElem& a, const CoverElem& b) const {
    int z = (a.zexp + b.zexp) & 1;
    if (cocycle(a.w, b.w) < 0) z ^= 1;
    return {z, a.w.compose(b.w)};
}

SpinElem SpinElem::one(const WeylType& t) {
    return basis(t, SignedPerm::identity(t.n), ParamPoly(1));
}

SpinElem SpinElem::gen(const WeylType& t, int i) {
    const WeylGroup& g = WeylGroup::get(t, true);
    return basis(t, g.simple(i), ParamPoly(1));
}

SpinElem SpinElem::basis(const WeylType& t, const SignedPerm& w, const ParamPoly& c) {
    SpinElem r(t);
    r.add(w, c);
    return r;
}

void SpinElem::add(const SignedPerm& w, const ParamPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

SpinElem SpinElem::operator-() const {
    SpinElem r(type_);
    for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

SpinElem SpinElem::operator+(const SpinElem& o) const {
    if (!(type_ == o.type_)) throw ArgumentError("algebra tag mismatch in CW^-");
    SpinElem r = *this;
    for (auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

SpinElem SpinElem::operator-(const SpinElem& o) const { return *this + (-o); }

SpinElem SpinElem::operator*(const SpinElem& o) const {
    if (!(type_ == o.type_)) throw ArgumentError("algebra tag mismatch in CW^-");
    const SpinContext& ctx = SpinContext::get(type_, true);
    SpinElem r(type_);
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) {
            int s = ctx.cocycle(w1, w2);
            ParamPoly c = c1 * c2;
            r.add(w1.compose(w2), s < 0 ? -c : c);
        }
    return r;
}

SpinElem SpinElem::operator*(const ParamPoly& c) const {
    SpinElem r(type_);
    for (auto& [w, k] : terms_) r.add(w, k * c);
    return r;
}

std::string SpinElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [w, c] : terms_) {
        std::string mono = w.isIdentity() ? "" : "t" + w.str();
        std::string cs = c.str();
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
    return out;
}

TensorElem TensorElem::one(const WeylType& t) {
    return monomial(t, 0, SignedPerm::identity(t.n), ParamPoly(1));
}

TensorElem TensorElem::monomial(const WeylType& t, unsigned eps,
                                const SignedPerm& w, const ParamPoly& c) {
    TensorElem r(t);
    r.add({eps, w}, c);
    return r;
}

void TensorElem::add(const KMono& m, const ParamPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

TensorElem TensorElem::operator-() const {
    TensorElem r(type_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
    if (!(type_ == o.type_)) throw ArgumentError("algebra tag mismatch in tensor");
    TensorElem r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

TensorElem TensorElem::operator-(const TensorElem& o) const { return *this + (-o); }

TensorElem TensorElem::operator*(const TensorElem& o) const {
    if (!(type_ == o.type_)) throw ArgumentError("algebra tag mismatch in tensor");
    const SpinContext& ctx = SpinContext::get(type_, true);
    TensorElem r(type_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            // (a (x) b)(a' (x) b') = (-1)^{|b||a'|} (a a' (x) b b')
            int sign = 1;
            if (m1.w.detSign() < 0 && (__builtin_popcount(m2.eps) & 1)) sign = -1;
            sign *= cliffordMulSign(m1.eps, m2.eps);
            sign *= ctx.cocycle(m1.w, m2.w);
            ParamPoly c = c1 * c2;
            r.add({m1.eps ^ m2.eps, m1.w.compose(m2.w)}, sign < 0 ? -c : c);
        }
    return r;
}

TensorElem TensorElem::operator*(const ParamPoly& c) const {
    TensorElem r(type_);
    for (auto& [m, k] : terms_) r.add(m, k * c);
    return r;
}

std::string TensorElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        std::string lhs = cliffordMaskStr(m.eps);
        if (lhs.empty()) lhs = "1";
        std::string rhs = m.w.isIdentity() ? "1" : "t" + m.w.str();
        std::string mono = lhs + " (x) " + rhs;
        std::string cs = c.str();
        std::string term;
        if (cs == "1") {
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
    return out;
}

namespace {

// Letter sequence and scalar sign/z-power of an odd reflection or its lift.
struct OddWord {
    std::vector<int> letters;
    int parityExp;  // sign (-1)^parityExp in CW^-, z^parityExp in W~
};

OddWord oddWord(const WeylType& t, OddKind kind, int i, int j) {
    int n = t.n;
    OddWord out;
    auto up = [&](int a, int b) {  // t_a t_{a+1} ... t_b (empty if a > b)
        for (int k = a; k <= b; ++k) out.letters.push_back(k);
    };
    auto down = [&](int a, int b) {  // t_a t_{a-1} ... t_b (empty if a < b)
        for (int k = a; k >= b; --k) out.letters.push_back(k);
    };
    switch (kind) {
        case OddKind::TIJ: {
            if (i == j || i < 1 || j < 1 || i > n || j > n)
                throw ArgumentError("bad odd reflection indices");
            // [j,i] = -[i,j] handled by caller; here i < j.
            down(j - 1, i + 1);
            up(i, j - 1);
            out.parityExp = j - i - 1;
            return out;
        }
        case OddKind::TBAR_IJ: {
            if (t.family == Family::A)
                throw ArgumentError("[i,j]-bar not available in type A");
            if (i == j || i < 1 || j < 1 || i > n || j > n)
                throw ArgumentError("bad odd reflection indices");
            up(j, n - 1);
            up(i, n - 2);
            if (t.family == Family::D) {
                out.letters.push_back(n);
                out.parityExp = j - i - 1;
            } else {
                out.letters.push_back(n);
                out.letters.push_back(n - 1);
                out.letters.push_back(n);
                out.parityExp = j - i;
            }
            down(n - 2, i);
            down(n - 1, j);
            return out;
        }
        case OddKind::TBAR_I: {
            if (t.family != Family::B)
                throw ArgumentError("[i]-bar only available in type B");
            if (i < 1 || i > n) throw ArgumentError("bad odd reflection index");
            up(i, n);
            down(n - 1, i);
            out.parityExp = n - i;
            return out;
        }
    }
    throw ArgumentError("bad odd reflection kind");
}

}  // namespace

SpinElem oddReflection(const WeylType& t, OddKind kind, int i, int j) {
    int extra = 0;
    if (kind == OddKind::TIJ && i > j) {
        std::swap(i, j);
        extra = 1;  // [j,i] = -[i,j]
    }
    if (kind == OddKind::TBAR_IJ && i > j) std::swap(i, j);  // symmetric
    OddWord word = oddWord(t, kind, i, j);
    const SpinContext& ctx = SpinContext::get(t, true);
    int sign = ((word.parityExp + extra) & 1) ? -1 : 1;
    SignedPerm w = SignedPerm::identity(t.n);
    for (int g : word.letters) {
        sign *= ctx.cocycle(w, ctx.group().simple(g));
        w = w.compose(ctx.group().simple(g));
    }
    return SpinElem::basis(t, w, ParamPoly(sign));
}

CoverElem coverLift(const WeylType& t, OddKind kind, int i, int j) {
    int extra = 0;
    if (kind == OddKind::TIJ && i > j) {
        std::swap(i, j);
        extra = 1;  // {j,i} = z {i,j}
    }
    if (kind == OddKind::TBAR_IJ && i > j) std::swap(i, j);
    OddWord word = oddWord(t, kind, i, j);
    const SpinContext& ctx = SpinContext::get(t, true);
    CoverElem g{(word.parityExp + extra) & 1, SignedPerm::identity(t.n)};
    for (int letter : word.letters) g = ctx.coverMul(g, ctx.coverGen(letter));
    return g;
}

SignedPerm upsilonPlusGroup(const CoverElem& g) { return g.w; }

SpinElem upsilonMinusGroup(const WeylType& t, const CoverElem& g) {
    return SpinElem::basis(t, g.w, ParamPoly(g.zexp ? -1 : 1));
}

TensorElem tensorFromSpin(const SpinElem& s) {
    TensorElem r(s.type());
    for (auto& [w, c] : s.terms()) r.add({0, w}, c);
    return r;
}

TensorElem tensorFromClifford(const WeylType& t, const CliffordElem& a) {
    if (a.rank() != t.n) throw ArgumentError("rank mismatch in tensor embedding");
    TensorElem r(t);
    for (auto& [mask, c] : a.terms()) r.add({mask, SignedPerm::identity(t.n)}, ParamPoly(c));
    return r;
}

TensorElem phiFinite(const KElem& a) {
    const SpinContext& ctx = SpinContext::get(a.type(), true);
    TensorElem r(a.type());
    for (auto& [m, c] : a.terms()) {
        // Phi(c^eps w) = (c^eps gamma_w^-1) (x) T_w
        CliffordElem pre =
            CliffordElem::monomial(a.type().n, m.eps, CycScalar(1)) * ctx.gammaInv(m.w);
        for (auto& [mask, k] : pre.terms()) r.add({mask, m.w}, c * k);
    }
    return r;
}

KElem psiFinite(const TensorElem& a) {
    const SpinContext& ctx = SpinContext::get(a.type(), true);
    KElem r(a.type());
    for (auto& [m, c] : a.terms()) {
        // Psi(c^eps (x) T_w) = c^eps gamma_w w
        CliffordElem pre =
            CliffordElem::monomial(a.type().n, m.eps, CycScalar(1)) * ctx.gamma(m.w);
        for (auto& [mask, k] : pre.terms()) r.add({mask, m.w}, c * k);
    }
    return r;
}

}  // namespace heckec
