#pragma once

#include <memory>
#include <string>
#include <vector>

#include "heckec/cdaha.hpp"
#include "heckec/clifford.hpp"
#include "heckec/dahca.hpp"
#include "heckec/poly.hpp"
#include "heckec/sdaha.hpp"

namespace heckec {

/// Which expression language a string is parsed against. Token sets:
///   DAHCA:  x<i> y<i> c<i> c1c2... s<k> w[...] u v
///   SDAHA:  xi<i> y<i> t<k> t[...] u v
///   CDAHA:  xt<i> yt<i> tt<k> z wt[...] u v
///   DAHA:   x<i> y<i> s<k> w[...] t u v
///   TENSOR_SDAHA: DAHCA's c-tokens plus SDAHA's tokens ("(x)" multiplies)
///   XPOLY/YPOLY: pure polynomials in x<i> / y<i>
///   CLIFFORD: c<i>, c1c2..., scalars
/// Scalars (integers, rationals p/q, z8 powers) are always available; v is
/// only legal for family B, t only in DAHA.
enum class ExprLang { DAHCA, SDAHA, CDAHA, DAHA, TENSOR_SDAHA, XPOLY, YPOLY, CLIFFORD };

namespace ast {

enum class Kind {
    NUM,        // rational literal
    ZETA,       // z8
    PARAM,      // index 0=t, 1=u, 2=v
    GEN,        // named generator with index (x, y, c, xi, s, t, xt, yt, tt)
    CLIFFMONO,  // c1c3... run
    WINDOW,     // w[...], t[...], wt[...]
    COVER_Z,    // z
    ADD, SUB, MUL, NEG, POW,
};

enum class GenName { X, Y, C, XI, S, T, XT, YT, TT };
enum class WindowName { W, TW, WT };

struct Node {
    Kind kind;
    size_t pos = 0;            // byte offset for diagnostics
    Rational num;              // NUM
    int param = 0;             // PARAM
    GenName gen{};             // GEN
    int index = 0;             // GEN index / POW exponent
    unsigned mask = 0;         // CLIFFMONO
    WindowName window{};       // WINDOW
    std::vector<int> windowEntries;
    std::unique_ptr<Node> lhs, rhs;
};

}  // namespace ast

/// Parses src to an AST; throws ParseError with a byte offset on bad input.
std::unique_ptr<ast::Node> parseExpr(const std::string& src, ExprLang lang);

/// Evaluation against a concrete algebra instance. Index-range and
/// family-restriction violations raise ParseError with the token offset.
DahcaElem evalDahca(const std::string& src, const WeylType& t, bool allowSmallD = false);
SdahaElem evalSdaha(const std::string& src, const WeylType& t, bool allowSmallD = false);
CdahaElem evalCdaha(const std::string& src, const WeylType& t, bool allowSmallD = false);
DahaElem evalDaha(const std::string& src, const WeylType& t, bool allowSmallD = false);
TensorSdahaElem evalTensorSdaha(const std::string& src, const WeylType& t,
                                bool allowSmallD = false);
VarPoly evalVarPoly(const std::string& src, int n, bool xVars);
CliffordElem evalClifford(const std::string& src, int n);

}  // namespace heckec
