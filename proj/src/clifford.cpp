#include "heckec/clifford.hpp"

namespace heckec {

int cliffordMulSign(unsigned a, unsigned b) {
    // Insert the factors of c^b (ascending) into c^a; each pass over a higher
    // index flips the sign, equal indices cancel via c_i^2 = 1.
    int sign = 1;
    unsigned acc = a;
    for (unsigned rest = b; rest;) {
        unsigned j = unsigned(__builtin_ctz(rest));
        rest &= rest - 1;
        if (__builtin_popcount(acc >> (j + 1)) & 1) sign = -sign;
        acc ^= 1u << j;
    }
    return sign;
}

std::string cliffordMaskStr(unsigned mask) {
    std::string s;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) s += "c" + std::to_string(i + 1);
    return s;
}

CliffordElem CliffordElem::gen(int n, int i) {
    if (i < 1 || i > n) throw ArgumentError("Clifford generator index out of range");
    return monomial(n, 1u << (i - 1), CycScalar(1));
}

CliffordElem CliffordElem::monomial(int n, unsigned mask, const CycScalar& c) {
    CliffordElem r(n);
    r.add(mask, c);
    return r;
}

void CliffordElem::add(unsigned mask, const CycScalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

CliffordElem CliffordElem::operator-() const {
    CliffordElem r(n_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

CliffordElem CliffordElem::operator+(const CliffordElem& o) const {
    if (n_ != o.n_) throw ArgumentError("rank mismatch in Clifford sum");
    CliffordElem r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

CliffordElem CliffordElem::operator-(const CliffordElem& o) const {
    return *this + (-o);
}

CliffordElem CliffordElem::operator*(const CliffordElem& o) const {
    if (n_ != o.n_) throw ArgumentError("rank mismatch in Clifford product");
    CliffordElem r(n_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            int s = cliffordMulSign(m1, m2);
            r.add(m1 ^ m2, s < 0 ? -(c1 * c2) : c1 * c2);
        }
    return r;
}

CliffordElem CliffordElem::operator*(const CycScalar& c) const {
    CliffordElem r(n_);
    for (auto& [m, k] : terms_) r.add(m, k * c);
    return r;
}

std::string CliffordElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        std::string cs = c.str();
        std::string mono = cliffordMaskStr(m);
        std::string term;
        if (mono.empty()) {
            term = cs;
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

std::pair<int, unsigned> weylActMask(const SignedPerm& w, unsigned mask) {
    // Map each factor c_i (ascending) to sign*c_j, multiplying masks.
    unsigned acc = 0;
    int sgn = 1;
    for (unsigned rest = mask; rest;) {
        unsigned i = unsigned(__builtin_ctz(rest));
        rest &= rest - 1;
        auto [j, s] = w.act(int(i) + 1);
        if (s < 0) sgn = -sgn;
        sgn *= cliffordMulSign(acc, 1u << (j - 1));
        acc ^= 1u << (j - 1);
    }
    return {sgn, acc};
}

CliffordElem weylActClifford(const SignedPerm& w, const CliffordElem& a) {
    if (w.rank() != a.rank()) throw ArgumentError("rank mismatch in Weyl action");
    CliffordElem r(a.rank());
    for (auto& [mask, c] : a.terms()) {
        auto [sgn, acc] = weylActMask(w, mask);
        r.add(acc, sgn < 0 ? -c : c);
    }
    return r;
}

CliffordElem beta(const WeylType& t, int i) {
    int m = numGenerators(t);
    if (i < 1 || i > m) throw ArgumentError("beta index out of range");
    CycScalar invSqrt2 = CycScalar::sqrt2().inverse();
    if (i <= t.n - 1) {
        return (CliffordElem::gen(t.n, i) - CliffordElem::gen(t.n, i + 1)) * invSqrt2;
    }
    if (t.family == Family::B) return CliffordElem::gen(t.n, t.n);
    return (CliffordElem::gen(t.n, t.n - 1) + CliffordElem::gen(t.n, t.n)) * invSqrt2;
}

KElem KElem::one(const WeylType& t) {
    return monomial(t, 0, SignedPerm::identity(t.n), ParamPoly(1));
}

KElem KElem::cliffordGen(const WeylType& t, int i) {
    if (i < 1 || i > t.n) throw ArgumentError("Clifford generator index out of range");
    return monomial(t, 1u << (i - 1), SignedPerm::identity(t.n), ParamPoly(1));
}

KElem KElem::weylElem(const WeylType& t, const SignedPerm& w) {
    if (!memberOf(t, w)) throw ArgumentError("element is not in " + t.str());
    return monomial(t, 0, w, ParamPoly(1));
}

KElem KElem::monomial(const WeylType& t, unsigned eps, const SignedPerm& w,
                      const ParamPoly& c) {
    KElem r(t);
    r.add({eps, w}, c);
    return r;
}

void KElem::add(const KMono& m, const ParamPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

void KElem::checkCompat(const KElem& o) const {
    if (!(type_ == o.type_)) throw ArgumentError("algebra tag mismatch in K");
}

KElem KElem::operator-() const {
    KElem r(type_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

KElem KElem::operator+(const KElem& o) const {
    checkCompat(o);
    KElem r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

KElem KElem::operator-(const KElem& o) const { return *this + (-o); }

KElem KElem::operator*(const KElem& o) const {
    checkCompat(o);
    KElem r(type_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            // (c^e w)(c^e' w') = c^e * w(c^e') * (w w')
            CliffordElem moved = weylActClifford(
                m1.w, CliffordElem::monomial(type_.n, m2.eps, CycScalar(1)));
            SignedPerm wProd = m1.w.compose(m2.w);
            for (auto& [mask, cc] : moved.terms()) {
                int s = cliffordMulSign(m1.eps, mask);
                CycScalar k = s < 0 ? -cc : cc;
                r.add({m1.eps ^ mask, wProd}, (c1 * c2) * k);
            }
        }
    return r;
}

KElem KElem::operator*(const ParamPoly& c) const {
    KElem r(type_);
    for (auto& [m, k] : terms_) r.add(m, k * c);
    return r;
}

std::string KElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        std::string mono = cliffordMaskStr(m.eps);
        if (!m.w.isIdentity()) {
            if (!mono.empty()) mono += "*";
            mono += "s" + m.w.str();
        }
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

}  // namespace heckec
