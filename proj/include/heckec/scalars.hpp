#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "heckec/common.hpp"

namespace heckec {

using Int = mpz_class;
using Rational = mpq_class;

std::string ratStr(const Rational& r);

/// Element of Q(z8), z8 a primitive 8th root of unity (z8^4 = -1),
/// stored as a0 + a1*z8 + a2*z8^2 + a3*z8^3 with rational coordinates.
///
/// Root conventions used throughout the kernel:
///   sqrt(-1) = z8^2,  sqrt(2) = z8 - z8^3,  sqrt(-2) = z8 + z8^3,
/// which are consistent: sqrt(-1)*sqrt(2) = sqrt(-2).
class CycScalar {
public:
    CycScalar() = default;
    CycScalar(long v) { a_[0] = v; }
    CycScalar(const Rational& r) { a_[0] = r; }
    CycScalar(Rational&& r) { a_[0] = std::move(r); }

    static CycScalar zetaPow(int k);  // z8^k, any integer k
    static CycScalar sqrtMinus1() { return zetaPow(2); }
    static CycScalar sqrt2() { return zetaPow(1) - zetaPow(3); }
    static CycScalar sqrtMinus2() { return zetaPow(1) + zetaPow(3); }

    const Rational& coord(int i) const { return a_[i]; }
    bool isZero() const;
    bool isRational() const { return a_[1] == 0 && a_[2] == 0 && a_[3] == 0; }

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar operator+(const CycScalar& o) const { CycScalar r = *this; return r += o; }
    CycScalar operator-(const CycScalar& o) const { CycScalar r = *this; return r -= o; }
    CycScalar operator*(const CycScalar& o) const;
    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    CycScalar inverse() const;

    /// Galois map z8 -> z8^m for odd m.
    CycScalar galois(int m) const;

    bool operator==(const CycScalar& o) const { return a_ == o.a_; }
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::array<Rational, 4> a_{};  // value-initialized to 0
};

inline CycScalar operator*(long s, const CycScalar& c) { return CycScalar(s) * c; }

/// Exponent triple of a monomial t^et * u^eu * v^ev.
struct ParamExp {
    uint32_t et = 0, eu = 0, ev = 0;
    uint64_t total() const { return uint64_t(et) + eu + ev; }
    friend bool operator==(const ParamExp&, const ParamExp&) = default;
    // Canonical term order: total degree, then lexicographic on (et,eu,ev).
    friend bool operator<(const ParamExp& a, const ParamExp& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        if (a.et != b.et) return a.et < b.et;
        if (a.eu != b.eu) return a.eu < b.eu;
        return a.ev < b.ev;
    }
};

/// Sparse polynomial in the parameters t,u,v over Q(z8). No zero terms stored.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(long v) { if (v != 0) terms_.emplace(ParamExp{}, CycScalar(v)); }
    ParamPoly(const CycScalar& c) { if (!c.isZero()) terms_.emplace(ParamExp{}, c); }
    ParamPoly(const Rational& r) : ParamPoly(CycScalar(r)) {}

    static ParamPoly mono(ParamExp e, CycScalar c);
    static ParamPoly t() { return mono({1, 0, 0}, CycScalar(1)); }
    static ParamPoly u() { return mono({0, 1, 0}, CycScalar(1)); }
    static ParamPoly v() { return mono({0, 0, 1}, CycScalar(1)); }

    bool isZero() const { return terms_.empty(); }
    const std::map<ParamExp, CycScalar>& terms() const { return terms_; }
    uint64_t degree() const;  // 0 for the zero polynomial

    /// Coefficient of the constant monomial (t^0 u^0 v^0).
    CycScalar constant() const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly operator+(const ParamPoly& o) const { ParamPoly r = *this; return r += o; }
    ParamPoly operator-(const ParamPoly& o) const { ParamPoly r = *this; return r -= o; }
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    ParamPoly operator*(const CycScalar& c) const;

    /// Substitute concrete values for any subset of t,u,v.
    ParamPoly specialize(const std::optional<CycScalar>& tv,
                         const std::optional<CycScalar>& uv,
                         const std::optional<CycScalar>& vv) const;

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    void addTerm(const ParamExp& e, const CycScalar& c);
    std::map<ParamExp, CycScalar> terms_;
};

}  // namespace heckec
