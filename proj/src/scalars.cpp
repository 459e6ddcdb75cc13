#include "heckec/scalars.hpp"

#include <sstream>

namespace heckec {

std::string ratStr(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

CycScalar CycScalar::zetaPow(int k) {
    k = ((k % 8) + 8) % 8;
    CycScalar r;
    r.a_[k % 4] = (k < 4) ? 1 : -1;  // z8^(j+4) = -z8^j
    return r;
}

bool CycScalar::isZero() const {
    return a_[0] == 0 && a_[1] == 0 && a_[2] == 0 && a_[3] == 0;
}

CycScalar CycScalar::operator-() const {
    CycScalar r;
    for (int i = 0; i < 4; ++i) r.a_[i] = -a_[i];
    return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    for (int i = 0; i < 4; ++i) a_[i] += o.a_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    for (int i = 0; i < 4; ++i) a_[i] -= o.a_[i];
    return *this;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
    CycScalar r;
    for (int i = 0; i < 4; ++i) {
        if (a_[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (o.a_[j] == 0) continue;
            Rational p = a_[i] * o.a_[j];
            int k = i + j;
            if (k >= 4) {
                r.a_[k - 4] -= p;
            } else {
                r.a_[k] += p;
            }
        }
    }
    return r;
}

CycScalar CycScalar::galois(int m) const {
    CycScalar r;
    for (int i = 0; i < 4; ++i) {
        if (a_[i] == 0) continue;
        int k = (i * m) % 8;
        if (k < 0) k += 8;
        if (k >= 4) {
            r.a_[k - 4] -= a_[i];
        } else {
            r.a_[k] += a_[i];
        }
    }
    return r;
}

CycScalar CycScalar::inverse() const {
    if (isZero()) throw DivisionByZeroError("inverse of zero in Q(z8)");
    // inv(a) = sigma3(a)*sigma5(a)*sigma7(a) / N(a), with N(a) rational.
    CycScalar num = galois(3) * galois(5) * galois(7);
    CycScalar norm = *this * num;
    if (!norm.isRational() || norm.a_[0] == 0)
        throw InternalError("cyclotomic norm is not a nonzero rational");
    Rational inv = 1 / norm.a_[0];
    CycScalar r;
    for (int i = 0; i < 4; ++i) r.a_[i] = num.a_[i] * inv;
    return r;
}

std::string CycScalar::str() const {
    if (isZero()) return "0";
    static const char* pow[4] = {"", "z8", "z8^2", "z8^3"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (a_[i] == 0) continue;
        Rational c = a_[i];
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = neg ? Rational(-c) : c;
        if (i == 0) {
            out += ratStr(mag);
        } else if (mag == 1) {
            out += pow[i];
        } else {
            out += ratStr(mag) + "*" + pow[i];
        }
    }
    return out;
}

ParamPoly ParamPoly::mono(ParamExp e, CycScalar c) {
    ParamPoly p;
    if (!c.isZero()) p.terms_.emplace(e, std::move(c));
    return p;
}

uint64_t ParamPoly::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total();
}

CycScalar ParamPoly::constant() const {
    auto it = terms_.find(ParamExp{});
    return it == terms_.end() ? CycScalar() : it->second;
}

void ParamPoly::addTerm(const ParamExp& e, const CycScalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_)
            r.addTerm({e1.et + e2.et, e1.eu + e2.eu, e1.ev + e2.ev}, c1 * c2);
    return r;
}

ParamPoly ParamPoly::operator*(const CycScalar& c) const {
    ParamPoly r;
    if (c.isZero()) return r;
    for (auto& [e, k] : terms_) r.addTerm(e, k * c);
    return r;
}

ParamPoly ParamPoly::specialize(const std::optional<CycScalar>& tv,
                                const std::optional<CycScalar>& uv,
                                const std::optional<CycScalar>& vv) const {
    auto power = [](const CycScalar& base, uint32_t e) {
        CycScalar r(1);
        for (uint32_t i = 0; i < e; ++i) r *= base;
        return r;
    };
    ParamPoly r;
    for (auto& [e, c] : terms_) {
        CycScalar k = c;
        ParamExp rest = e;
        if (tv) { k *= power(*tv, e.et); rest.et = 0; }
        if (uv) { k *= power(*uv, e.eu); rest.eu = 0; }
        if (vv) { k *= power(*vv, e.ev); rest.ev = 0; }
        r.addTerm(rest, k);
    }
    return r;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [e, c] : terms_) {
        std::string mono;
        auto app = [&](const char* name, uint32_t p) {
            if (p == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (p > 1) mono += "^" + std::to_string(p);
        };
        app("t", e.et);
        app("u", e.eu);
        app("v", e.ev);

        std::string cs = c.str();
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

}  // namespace heckec
