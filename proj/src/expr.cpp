#include "heckec/expr.hpp"

#include <cctype>
#include <cstring>
#include <functional>

namespace heckec {

namespace {

using ast::GenName;
using ast::Kind;
using ast::Node;
using ast::WindowName;

struct Token {
    enum Type {
        NUM, ZETA, PARAM, GEN, CLIFFMONO, WINDOW, COVER_Z,
        PLUS, MINUS, STAR, CARET, LPAREN, RPAREN, END
    };
    Token() = default;
    Token(Type t, size_t p, int par = 0) : type(t), pos(p), param(par) {}
    Type type = END;
    size_t pos = 0;
    Rational num;
    int param = 0;
    GenName gen{};
    int index = 0;
    unsigned mask = 0;
    WindowName window{};
    std::vector<int> windowEntries;
};

struct Lexer {
    const std::string& src;
    size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    void skipWs() {
        while (pos < src.size() && std::isspace(uint8_t(src[pos]))) ++pos;
    }

    bool startsWith(const char* s) const {
        return src.compare(pos, std::strlen(s), s) == 0;
    }

    long lexInt() {
        size_t start = pos;
        while (pos < src.size() && std::isdigit(uint8_t(src[pos]))) ++pos;
        return std::stol(src.substr(start, pos - start));
    }

    std::vector<int> lexWindow() {
        // caller consumed the '['
        std::vector<int> out;
        for (;;) {
            skipWs();
            int sgn = 1;
            if (pos < src.size() && src[pos] == '-') {
                sgn = -1;
                ++pos;
            }
            if (pos >= src.size() || !std::isdigit(uint8_t(src[pos])))
                throw ParseError("expected index in window", pos);
            out.push_back(sgn * int(lexInt()));
            skipWs();
            if (pos < src.size() && src[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < src.size() && src[pos] == ']') {
                ++pos;
                return out;
            }
            throw ParseError("expected ',' or ']' in window", pos);
        }
    }

    Token next() {
        skipWs();
        size_t at = pos;
        if (pos >= src.size()) return {Token::END, at};
        char ch = src[pos];
        switch (ch) {
            case '+': ++pos; return {Token::PLUS, at};
            case '-': ++pos; return {Token::MINUS, at};
            case '*': ++pos; return {Token::STAR, at};
            case '^': ++pos; return {Token::CARET, at};
            case ')': ++pos; return {Token::RPAREN, at};
            case '(': {
                // "(x)" is the tensor separator; it multiplies.
                if (startsWith("(x)")) {
                    pos += 3;
                    return {Token::STAR, at};
                }
                ++pos;
                return {Token::LPAREN, at};
            }
            default: break;
        }
        if (std::isdigit(uint8_t(ch))) {
            long numer = lexInt();
            if (pos < src.size() && src[pos] == '/') {
                size_t save = pos;
                ++pos;
                if (pos < src.size() && std::isdigit(uint8_t(src[pos]))) {
                    long denom = lexInt();
                    if (denom == 0) throw ParseError("zero denominator", save);
                    Token t{Token::NUM, at};
                    t.num = Rational(numer, denom);
                    t.num.canonicalize();
                    return t;
                }
                pos = save;
            }
            Token t{Token::NUM, at};
            t.num = Rational(numer);
            return t;
        }
        if (!std::isalpha(uint8_t(ch)))
            throw ParseError("unexpected character '" + std::string(1, ch) + "'", at);

        size_t idStart = pos;
        while (pos < src.size() && std::isalpha(uint8_t(src[pos]))) ++pos;
        std::string word = src.substr(idStart, pos - idStart);

        auto windowTok = [&](WindowName wn) {
            ++pos;  // '['
            Token t{Token::WINDOW, at};
            t.window = wn;
            t.windowEntries = lexWindow();
            return t;
        };
        auto genTok = [&](GenName g) {
            if (pos >= src.size() || !std::isdigit(uint8_t(src[pos])))
                throw ParseError("expected index after '" + word + "'", pos);
            Token t{Token::GEN, at};
            t.gen = g;
            t.index = int(lexInt());
            return t;
        };

        bool bracket = pos < src.size() && src[pos] == '[';
        bool digit = pos < src.size() && std::isdigit(uint8_t(src[pos]));

        if (word == "z" && digit && src[pos] == '8') {
            ++pos;
            return {Token::ZETA, at};
        }
        if (word == "z") return {Token::COVER_Z, at};
        if (word == "u") return Token(Token::PARAM, at, 1);
        if (word == "v") return Token(Token::PARAM, at, 2);
        if (word == "t" || word == "tparam") {
            if (word == "t" && bracket) return windowTok(WindowName::TW);
            if (word == "t" && digit) return genTok(GenName::T);
            return Token(Token::PARAM, at, 0);
        }
        if (word == "w" && bracket) return windowTok(WindowName::W);
        if (word == "wt" && bracket) return windowTok(WindowName::WT);
        if (word == "x" && digit) return genTok(GenName::X);
        if (word == "y" && digit) return genTok(GenName::Y);
        if (word == "xi" && digit) return genTok(GenName::XI);
        if (word == "s" && digit) return genTok(GenName::S);
        if (word == "xt" && digit) return genTok(GenName::XT);
        if (word == "yt" && digit) return genTok(GenName::YT);
        if (word == "tt" && digit) return genTok(GenName::TT);
        if (word == "c" && digit) {
            // Clifford generator; a run like c1c3 lexes as one monomial.
            unsigned mask = 0;
            for (;;) {
                long idx = lexInt();
                if (idx < 1 || idx > kMaxRank)
                    throw ParseError("Clifford index out of range", at);
                unsigned bit = 1u << (idx - 1);
                if (mask & bit) throw ParseError("repeated Clifford factor", at);
                mask |= bit;
                if (pos + 1 < src.size() && src[pos] == 'c' &&
                    std::isdigit(uint8_t(src[pos + 1]))) {
                    ++pos;
                    continue;
                }
                break;
            }
            if (__builtin_popcount(mask) == 1) {
                Token t{Token::GEN, at};
                t.gen = GenName::C;
                t.index = int(__builtin_ctz(mask)) + 1;
                return t;
            }
            Token t{Token::CLIFFMONO, at};
            t.mask = mask;
            return t;
        }
        throw ParseError("unknown token '" + word + "'", at);
    }
};

struct Parser {
    Lexer lex;
    Token cur;

    explicit Parser(const std::string& src) : lex(src) { cur = lex.next(); }

    void advance() { cur = lex.next(); }

    std::unique_ptr<Node> mk(Kind k, size_t pos) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->pos = pos;
        return n;
    }

    std::unique_ptr<Node> parse() {
        auto e = expr();
        if (cur.type != Token::END)
            throw ParseError("unexpected trailing input", cur.pos);
        return e;
    }

    std::unique_ptr<Node> expr() {
        auto lhs = term();
        for (;;) {
            if (cur.type == Token::PLUS || cur.type == Token::MINUS) {
                Kind k = cur.type == Token::PLUS ? Kind::ADD : Kind::SUB;
                size_t p = cur.pos;
                advance();
                auto node = mk(k, p);
                node->lhs = std::move(lhs);
                node->rhs = term();
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    std::unique_ptr<Node> term() {
        auto lhs = factor();
        while (cur.type == Token::STAR) {
            size_t p = cur.pos;
            advance();
            auto node = mk(Kind::MUL, p);
            node->lhs = std::move(lhs);
            node->rhs = factor();
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<Node> factor() {
        if (cur.type == Token::MINUS) {
            size_t p = cur.pos;
            advance();
            auto node = mk(Kind::NEG, p);
            node->lhs = factor();
            return node;
        }
        auto base = primary();
        if (cur.type == Token::CARET) {
            size_t p = cur.pos;
            advance();
            if (cur.type != Token::NUM || cur.num.get_den() != 1 || cur.num < 0)
                throw ParseError("exponent must be a nonnegative integer", cur.pos);
            auto node = mk(Kind::POW, p);
            node->lhs = std::move(base);
            node->index = int(cur.num.get_num().get_si());
            advance();
            return node;
        }
        return base;
    }

    std::unique_ptr<Node> primary() {
        switch (cur.type) {
            case Token::NUM: {
                auto n = mk(Kind::NUM, cur.pos);
                n->num = cur.num;
                advance();
                return n;
            }
            case Token::ZETA: {
                auto n = mk(Kind::ZETA, cur.pos);
                advance();
                return n;
            }
            case Token::PARAM: {
                auto n = mk(Kind::PARAM, cur.pos);
                n->param = cur.param;
                advance();
                return n;
            }
            case Token::GEN: {
                auto n = mk(Kind::GEN, cur.pos);
                n->gen = cur.gen;
                n->index = cur.index;
                advance();
                return n;
            }
            case Token::CLIFFMONO: {
                auto n = mk(Kind::CLIFFMONO, cur.pos);
                n->mask = cur.mask;
                advance();
                return n;
            }
            case Token::WINDOW: {
                auto n = mk(Kind::WINDOW, cur.pos);
                n->window = cur.window;
                n->windowEntries = cur.windowEntries;
                advance();
                return n;
            }
            case Token::COVER_Z: {
                auto n = mk(Kind::COVER_Z, cur.pos);
                advance();
                return n;
            }
            case Token::LPAREN: {
                advance();
                auto e = expr();
                if (cur.type != Token::RPAREN)
                    throw ParseError("expected ')'", cur.pos);
                advance();
                return e;
            }
            default:
                throw ParseError("expected an operand", cur.pos);
        }
    }
};

SignedPerm windowToPerm(const std::vector<int>& entries, int n, size_t pos) {
    if (int(entries.size()) != n)
        throw ParseError("window length does not match the rank", pos);
    SignedPerm w(n);
    std::vector<bool> seen(size_t(n) + 1, false);
    for (int i = 0; i < n; ++i) {
        int v = entries[i];
        int a = std::abs(v);
        if (a < 1 || a > n) throw ParseError("index out of range", pos);
        if (seen[a]) throw ParseError("window is not a permutation", pos);
        seen[a] = true;
        w.setImage(i + 1, a, v < 0 ? -1 : 1);
    }
    return w;
}

// Generic evaluation: Adapter supplies element construction per token.
template <typename Adapter>
typename Adapter::Elem evalNode(const Node& node, Adapter& ad) {
    using Elem = typename Adapter::Elem;
    switch (node.kind) {
        case Kind::NUM:
            return ad.scalar(ParamPoly(node.num), node.pos);
        case Kind::ZETA:
            return ad.scalar(ParamPoly(CycScalar::zetaPow(1)), node.pos);
        case Kind::PARAM:
            return ad.param(node.param, node.pos);
        case Kind::GEN:
            return ad.gen(node.gen, node.index, node.pos);
        case Kind::CLIFFMONO:
            return ad.cliffMono(node.mask, node.pos);
        case Kind::WINDOW:
            return ad.window(node.window, node.windowEntries, node.pos);
        case Kind::COVER_Z:
            return ad.coverZ(node.pos);
        case Kind::ADD:
            return ad.add(evalNode(*node.lhs, ad), evalNode(*node.rhs, ad));
        case Kind::SUB:
            return ad.sub(evalNode(*node.lhs, ad), evalNode(*node.rhs, ad));
        case Kind::MUL:
            return ad.mul(evalNode(*node.lhs, ad), evalNode(*node.rhs, ad));
        case Kind::NEG:
            return ad.neg(evalNode(*node.lhs, ad));
        case Kind::POW: {
            Elem base = evalNode(*node.lhs, ad);
            Elem acc = ad.oneElem();
            for (int i = 0; i < node.index; ++i) acc = ad.mul(acc, base);
            return acc;
        }
    }
    throw InternalError("unhandled AST node");
}

[[noreturn]] void badToken(const char* what, size_t pos) {
    throw ParseError(std::string("unknown token for algebra: ") + what, pos);
}

void checkParamAllowed(int param, Family fam, bool tAllowed, size_t pos) {
    if (param == 0 && !tAllowed)
        throw ParseError("parameter t is only available in daha", pos);
    if (param == 2 && fam != Family::B)
        throw ParseError("parameter v is only available for family B", pos);
}

void checkIndex(int i, int n, size_t pos) {
    if (i < 1 || i > n) throw ParseError("index out of range", pos);
}

struct DahcaAdapter {
    using Elem = DahcaElem;
    const DahcaAlgebra& alg;
    const WeylType& t;

    Elem oneElem() { return alg.one(); }
    Elem scalar(const ParamPoly& p, size_t) { return alg.scalar(p); }
    Elem param(int which, size_t pos) {
        checkParamAllowed(which, t.family, false, pos);
        return alg.scalar(which == 1 ? ParamPoly::u() : ParamPoly::v());
    }
    Elem gen(GenName g, int i, size_t pos) {
        switch (g) {
            case GenName::X: checkIndex(i, t.n, pos); return alg.xGen(i);
            case GenName::Y: checkIndex(i, t.n, pos); return alg.yGen(i);
            case GenName::C: checkIndex(i, t.n, pos); return alg.cGen(i);
            case GenName::S:
                if (i < 1 || i > numGenerators(t))
                    throw ParseError("index out of range", pos);
                return alg.weylElem(simpleReflection(t, i));
            default: badToken("generator", pos);
        }
    }
    Elem cliffMono(unsigned mask, size_t pos) {
        if (mask >> t.n) throw ParseError("index out of range", pos);
        return alg.monomial(
            {ExpVec(t.n), mask, SignedPerm::identity(t.n), ExpVec(t.n)}, ParamPoly(1));
    }
    Elem window(WindowName wn, const std::vector<int>& entries, size_t pos) {
        if (wn != WindowName::W) badToken("window", pos);
        SignedPerm w = windowToPerm(entries, t.n, pos);
        if (!memberOf(t, w))
            throw ParseError("element is not in " + t.str(), pos);
        return alg.weylElem(w);
    }
    Elem coverZ(size_t pos) { badToken("z", pos); }
    Elem add(const Elem& a, const Elem& b) { return a + b; }
    Elem sub(const Elem& a, const Elem& b) { return a - b; }
    Elem mul(const Elem& a, const Elem& b) { return alg.mul(a, b); }
    Elem neg(const Elem& a) { return -a; }
};

struct SdahaAdapter {
    using Elem = SdahaElem;
    const SdahaAlgebra& alg;
    const WeylType& t;

    Elem oneElem() { return alg.one(); }
    Elem scalar(const ParamPoly& p, size_t) { return alg.scalar(p); }
    Elem param(int which, size_t pos) {
        checkParamAllowed(which, t.family, false, pos);
        return alg.scalar(which == 1 ? ParamPoly::u() : ParamPoly::v());
    }
    Elem gen(GenName g, int i, size_t pos) {
        switch (g) {
            case GenName::XI: checkIndex(i, t.n, pos); return alg.xiGen(i);
            case GenName::Y: checkIndex(i, t.n, pos); return alg.yGen(i);
            case GenName::T:
                if (i < 1 || i > numGenerators(t))
                    throw ParseError("index out of range", pos);
                return alg.tGen(i);
            default: badToken("generator", pos);
        }
    }
    Elem cliffMono(unsigned, size_t pos) { badToken("c", pos); }
    Elem window(WindowName wn, const std::vector<int>& entries, size_t pos) {
        if (wn != WindowName::TW) badToken("window", pos);
        SignedPerm w = windowToPerm(entries, t.n, pos);
        if (!memberOf(t, w))
            throw ParseError("element is not in " + t.str(), pos);
        return alg.fromSpin(SpinElem::basis(t, w, ParamPoly(1)));
    }
    Elem coverZ(size_t pos) { badToken("z", pos); }
    Elem add(const Elem& a, const Elem& b) { return a + b; }
    Elem sub(const Elem& a, const Elem& b) { return a - b; }
    Elem mul(const Elem& a, const Elem& b) { return alg.mul(a, b); }
    Elem neg(const Elem& a) { return -a; }
};

struct CdahaAdapter {
    using Elem = CdahaElem;
    const CdahaAlgebra& alg;
    const WeylType& t;

    Elem oneElem() { return alg.one(); }
    Elem scalar(const ParamPoly& p, size_t) { return alg.scalar(p); }
    Elem param(int which, size_t pos) {
        checkParamAllowed(which, t.family, false, pos);
        return alg.scalar(which == 1 ? ParamPoly::u() : ParamPoly::v());
    }
    Elem gen(GenName g, int i, size_t pos) {
        switch (g) {
            case GenName::XT: checkIndex(i, t.n, pos); return alg.xtGen(i);
            case GenName::YT: checkIndex(i, t.n, pos); return alg.ytGen(i);
            case GenName::TT:
                if (i < 1 || i > numGenerators(t))
                    throw ParseError("index out of range", pos);
                return alg.ttGen(i);
            default: badToken("generator", pos);
        }
    }
    Elem cliffMono(unsigned, size_t pos) { badToken("c", pos); }
    Elem window(WindowName wn, const std::vector<int>& entries, size_t pos) {
        if (wn != WindowName::WT) badToken("window", pos);
        SignedPerm w = windowToPerm(entries, t.n, pos);
        if (!memberOf(t, w))
            throw ParseError("element is not in " + t.str(), pos);
        return alg.coverElem({0, w});
    }
    Elem coverZ(size_t) { return alg.zElem(); }
    Elem add(const Elem& a, const Elem& b) { return a + b; }
    Elem sub(const Elem& a, const Elem& b) { return a - b; }
    Elem mul(const Elem& a, const Elem& b) { return alg.mul(a, b); }
    Elem neg(const Elem& a) { return -a; }
};

struct DahaAdapter {
    using Elem = DahaElem;
    const DahaAlgebra& alg;
    const WeylType& t;

    Elem oneElem() { return alg.one(); }
    Elem scalar(const ParamPoly& p, size_t) { return alg.scalar(p); }
    Elem param(int which, size_t pos) {
        checkParamAllowed(which, t.family, true, pos);
        return alg.scalar(which == 0   ? ParamPoly::t()
                          : which == 1 ? ParamPoly::u()
                                       : ParamPoly::v());
    }
    Elem gen(GenName g, int i, size_t pos) {
        switch (g) {
            case GenName::X: checkIndex(i, t.n, pos); return alg.xGen(i);
            case GenName::Y: checkIndex(i, t.n, pos); return alg.yGen(i);
            case GenName::S:
                if (i < 1 || i > numGenerators(t))
                    throw ParseError("index out of range", pos);
                return alg.weylElem(simpleReflection(t, i));
            default: badToken("generator", pos);
        }
    }
    Elem cliffMono(unsigned, size_t pos) { badToken("c", pos); }
    Elem window(WindowName wn, const std::vector<int>& entries, size_t pos) {
        if (wn != WindowName::W) badToken("window", pos);
        SignedPerm w = windowToPerm(entries, t.n, pos);
        if (!memberOf(t, w))
            throw ParseError("element is not in " + t.str(), pos);
        return alg.weylElem(w);
    }
    Elem coverZ(size_t pos) { badToken("z", pos); }
    Elem add(const Elem& a, const Elem& b) { return a + b; }
    Elem sub(const Elem& a, const Elem& b) { return a - b; }
    Elem mul(const Elem& a, const Elem& b) { return alg.mul(a, b); }
    Elem neg(const Elem& a) { return -a; }
};

struct TensorSdahaAdapter {
    using Elem = TensorSdahaElem;
    const SdahaAlgebra& alg;
    const WeylType& t;

    Elem oneElem() { return TensorSdahaElem::one(t); }
    Elem scalar(const ParamPoly& p, size_t) {
        return TensorSdahaElem::one(t) * p;
    }
    Elem param(int which, size_t pos) {
        checkParamAllowed(which, t.family, false, pos);
        return TensorSdahaElem::one(t) *
               (which == 1 ? ParamPoly::u() : ParamPoly::v());
    }
    Elem gen(GenName g, int i, size_t pos) {
        switch (g) {
            case GenName::XI:
                checkIndex(i, t.n, pos);
                return tensorSdahaFromSdaha(alg.xiGen(i));
            case GenName::Y:
                checkIndex(i, t.n, pos);
                return tensorSdahaFromSdaha(alg.yGen(i));
            case GenName::T:
                if (i < 1 || i > numGenerators(t))
                    throw ParseError("index out of range", pos);
                return tensorSdahaFromSdaha(alg.tGen(i));
            case GenName::C:
                checkIndex(i, t.n, pos);
                return tensorSdahaFromClifford(t, 1u << (i - 1), ParamPoly(1));
            default: badToken("generator", pos);
        }
    }
    Elem cliffMono(unsigned mask, size_t pos) {
        if (mask >> t.n) throw ParseError("index out of range", pos);
        return tensorSdahaFromClifford(t, mask, ParamPoly(1));
    }
    Elem window(WindowName wn, const std::vector<int>& entries, size_t pos) {
        if (wn != WindowName::TW) badToken("window", pos);
        SignedPerm w = windowToPerm(entries, t.n, pos);
        if (!memberOf(t, w))
            throw ParseError("element is not in " + t.str(), pos);
        return tensorSdahaFromSdaha(alg.fromSpin(SpinElem::basis(t, w, ParamPoly(1))));
    }
    Elem coverZ(size_t pos) { badToken("z", pos); }
    Elem add(const Elem& a, const Elem& b) { return a + b; }
    Elem sub(const Elem& a, const Elem& b) { return a - b; }
    Elem mul(const Elem& a, const Elem& b) { return a * b; }
    Elem neg(const Elem& a) { return -a; }
};

struct VarPolyAdapter {
    using Elem = VarPoly;
    int n;
    bool xVars;

    Elem oneElem() { return VarPoly::one(n); }
    Elem scalar(const ParamPoly& p, size_t) { return VarPoly::one(n) * p; }
    Elem param(int which, size_t pos) {
        if (which == 0) throw ParseError("parameter t is only available in daha", pos);
        return VarPoly::one(n) * (which == 1 ? ParamPoly::u() : ParamPoly::v());
    }
    Elem gen(GenName g, int i, size_t pos) {
        bool ok = (g == GenName::X && xVars) || (g == GenName::Y && !xVars);
        if (!ok) badToken("variable for this polynomial family", pos);
        checkIndex(i, n, pos);
        return VarPoly::var(n, i);
    }
    Elem cliffMono(unsigned, size_t pos) { badToken("c", pos); }
    Elem window(WindowName, const std::vector<int>&, size_t pos) {
        badToken("window", pos);
    }
    Elem coverZ(size_t pos) { badToken("z", pos); }
    Elem add(const Elem& a, const Elem& b) { return a + b; }
    Elem sub(const Elem& a, const Elem& b) { return a - b; }
    Elem mul(const Elem& a, const Elem& b) { return a * b; }
    Elem neg(const Elem& a) { return -a; }
};

struct CliffordAdapter {
    using Elem = CliffordElem;
    int n;

    Elem oneElem() { return CliffordElem::one(n); }
    Elem scalar(const ParamPoly& p, size_t pos) {
        if (!p.isZero() && (p.degree() > 0))
            throw ParseError("module elements take scalar coefficients only", pos);
        return CliffordElem::monomial(n, 0, p.constant());
    }
    Elem param(int, size_t pos) {
        throw ParseError("module elements take scalar coefficients only", pos);
    }
    Elem gen(GenName g, int i, size_t pos) {
        if (g != GenName::C) badToken("generator", pos);
        checkIndex(i, n, pos);
        return CliffordElem::gen(n, i);
    }
    Elem cliffMono(unsigned mask, size_t pos) {
        if (mask >> n) throw ParseError("index out of range", pos);
        return CliffordElem::monomial(n, mask, CycScalar(1));
    }
    Elem window(WindowName, const std::vector<int>&, size_t pos) {
        badToken("window", pos);
    }
    Elem coverZ(size_t pos) { badToken("z", pos); }
    Elem add(const Elem& a, const Elem& b) { return a + b; }
    Elem sub(const Elem& a, const Elem& b) { return a - b; }
    Elem mul(const Elem& a, const Elem& b) { return a * b; }
    Elem neg(const Elem& a) { return -a; }
};

}  // namespace

std::unique_ptr<ast::Node> parseExpr(const std::string& src, ExprLang) {
    // The grammar is shared; the per-language token restrictions are
    // enforced during evaluation, where offsets are still at hand.
    Parser p(src);
    return p.parse();
}

DahcaElem evalDahca(const std::string& src, const WeylType& t, bool allowSmallD) {
    auto node = parseExpr(src, ExprLang::DAHCA);
    DahcaAdapter ad{DahcaAlgebra::get(t, allowSmallD), t};
    return evalNode(*node, ad);
}

SdahaElem evalSdaha(const std::string& src, const WeylType& t, bool allowSmallD) {
    auto node = parseExpr(src, ExprLang::SDAHA);
    SdahaAdapter ad{SdahaAlgebra::get(t, allowSmallD), t};
    return evalNode(*node, ad);
}

CdahaElem evalCdaha(const std::string& src, const WeylType& t, bool allowSmallD) {
    auto node = parseExpr(src, ExprLang::CDAHA);
    CdahaAdapter ad{CdahaAlgebra::get(t, allowSmallD), t};
    return evalNode(*node, ad);
}

DahaElem evalDaha(const std::string& src, const WeylType& t, bool allowSmallD) {
    auto node = parseExpr(src, ExprLang::DAHA);
    DahaAdapter ad{DahaAlgebra::get(t, allowSmallD), t};
    return evalNode(*node, ad);
}

TensorSdahaElem evalTensorSdaha(const std::string& src, const WeylType& t,
                                bool allowSmallD) {
    auto node = parseExpr(src, ExprLang::TENSOR_SDAHA);
    TensorSdahaAdapter ad{SdahaAlgebra::get(t, allowSmallD), t};
    return evalNode(*node, ad);
}

VarPoly evalVarPoly(const std::string& src, int n, bool xVars) {
    auto node = parseExpr(src, xVars ? ExprLang::XPOLY : ExprLang::YPOLY);
    VarPolyAdapter ad{n, xVars};
    return evalNode(*node, ad);
}

CliffordElem evalClifford(const std::string& src, int n) {
    auto node = parseExpr(src, ExprLang::CLIFFORD);
    CliffordAdapter ad{n};
    return evalNode(*node, ad);
}

}  // namespace heckec
