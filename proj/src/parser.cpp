#include "contentlab/parser.hpp"

#include "contentlab/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace contentlab {

namespace {

// ------------------------------------------------------------------
// tokens

enum class Tok {
    Num,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Semi,
    End,
};

const char *tok_label(Tok t) {
    switch (t) {
    case Tok::Num: return "number";
    case Tok::Ident: return "name";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    int col; // 1-based offset into the source string
};

[[noreturn]] void syntax_error(int col, const std::string &found,
                               std::vector<std::string> expected) {
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += expected.size() == 2 ? " or " : ", ";
        if (i + 1 == expected.size() && expected.size() > 2) msg += "or ";
        msg += expected[i];
    }
    msg += " at column " + std::to_string(col) + ", found " + found;
    nlohmann::json payload{{"column", col},
                           {"found", found},
                           {"expected", expected}};
    throw Error(ErrorKind::SyntaxError, msg, std::move(payload));
}

[[noreturn]] void elab_error(int col, const std::string &msg,
                             nlohmann::json extra = nlohmann::json::object()) {
    extra["column"] = col;
    throw Error(ErrorKind::ElaborationError,
                msg + " at column " + std::to_string(col), std::move(extra));
}

std::vector<Token> lex(const std::string &src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            out.push_back({Tok::Num, src.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) ||
                    src[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, src.substr(i, j - i), col});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '[': k = Tok::LBrack; break;
        case ']': k = Tok::RBrack; break;
        case ',': k = Tok::Comma; break;
        case ';': k = Tok::Semi; break;
        default:
            syntax_error(col, "'" + std::string(1, src[i]) + "'",
                         {"a token"});
        }
        out.push_back({k, std::string(1, src[i]), col});
        ++i;
    }
    out.push_back({Tok::End, "end of input",
                   static_cast<int>(src.size()) + 1});
    return out;
}

struct Cursor {
    std::vector<Token> toks;
    std::size_t at = 0;

    explicit Cursor(const std::string &src) : toks(lex(src)) {}

    const Token &peek() const { return toks[at]; }
    bool is(Tok k) const { return toks[at].kind == k; }

    Token take() {
        Token t = toks[at];
        if (toks[at].kind != Tok::End) ++at;
        return t;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token &t = peek();
        std::string found = t.kind == Tok::End ? t.text : "'" + t.text + "'";
        syntax_error(t.col, found, std::move(expected));
    }

    Token expect(Tok k) {
        if (!is(k)) fail({tok_label(k)});
        return take();
    }

    void expect_end() const {
        if (!is(Tok::End))
            fail({"an operator", "end of input"});
    }
};

// ------------------------------------------------------------------
// expression syntax, shared by element and coefficient-polynomial input

struct Node {
    enum Kind { Num, Sym, Neg, Add, Sub, Mul, PowNat, PowVec } kind;
    int col = 0;
    Rat value;                 // Num
    std::string name;          // Sym
    long power = 0;            // PowNat
    std::vector<Int> coords;   // PowVec
    std::unique_ptr<Node> a, b;
};
using NodeP = std::unique_ptr<Node>;

NodeP mk(Node::Kind k, int col) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->col = col;
    return n;
}

Int parse_int_token(const Token &t) { return Int(t.text); }

// int := '-'? nat
Int parse_signed_int(Cursor &cur) {
    bool negate = false;
    if (cur.is(Tok::Minus)) {
        cur.take();
        negate = true;
    }
    Token t = cur.expect(Tok::Num);
    Int v = parse_int_token(t);
    return negate ? Int(-v) : v;
}

// vector := '(' int (',' int)* ')'
std::vector<Int> parse_vector(Cursor &cur) {
    cur.expect(Tok::LParen);
    std::vector<Int> coords;
    coords.push_back(parse_signed_int(cur));
    while (cur.is(Tok::Comma)) {
        cur.take();
        coords.push_back(parse_signed_int(cur));
    }
    cur.expect(Tok::RParen);
    return coords;
}

NodeP parse_expr_node(Cursor &cur);

NodeP parse_atom(Cursor &cur) {
    if (cur.is(Tok::Num)) {
        Token num = cur.take();
        Int p = parse_int_token(num);
        Int q = 1;
        if (cur.is(Tok::Slash)) {
            cur.take();
            Token den = cur.expect(Tok::Num);
            q = parse_int_token(den);
            if (q == 0)
                syntax_error(den.col, "'0'", {"a nonzero denominator"});
        }
        auto n = mk(Node::Num, num.col);
        n->value = Rat(p, q);
        return n;
    }
    if (cur.is(Tok::Ident)) {
        Token id = cur.take();
        auto n = mk(Node::Sym, id.col);
        n->name = id.text;
        return n;
    }
    if (cur.is(Tok::LParen)) {
        cur.take();
        NodeP inner = parse_expr_node(cur);
        cur.expect(Tok::RParen);
        return inner;
    }
    cur.fail({"number", "name", "'('"});
}

NodeP parse_power(Cursor &cur) {
    NodeP base = parse_atom(cur);
    if (!cur.is(Tok::Caret)) return base;
    Token caret = cur.take();
    if (cur.is(Tok::LParen)) {
        auto n = mk(Node::PowVec, caret.col);
        n->coords = parse_vector(cur);
        n->a = std::move(base);
        return n;
    }
    if (cur.is(Tok::Num)) {
        Token e = cur.take();
        if (e.text.size() > 4)
            syntax_error(e.col, "'" + e.text + "'",
                         {"an exponent below 10000"});
        auto n = mk(Node::PowNat, caret.col);
        n->power = std::stol(e.text);
        n->a = std::move(base);
        return n;
    }
    cur.fail({"number", "'('"});
}

NodeP parse_factor(Cursor &cur) {
    if (cur.is(Tok::Minus)) {
        Token m = cur.take();
        auto n = mk(Node::Neg, m.col);
        n->a = parse_factor(cur);
        return n;
    }
    return parse_power(cur);
}

NodeP parse_term(Cursor &cur) {
    NodeP lhs = parse_factor(cur);
    while (cur.is(Tok::Star)) {
        Token s = cur.take();
        auto n = mk(Node::Mul, s.col);
        n->a = std::move(lhs);
        n->b = parse_factor(cur);
        lhs = std::move(n);
    }
    return lhs;
}

NodeP parse_expr_node(Cursor &cur) {
    NodeP lhs = parse_term(cur);
    while (cur.is(Tok::Plus) || cur.is(Tok::Minus)) {
        Token op = cur.take();
        auto n = mk(op.kind == Tok::Plus ? Node::Add : Node::Sub, op.col);
        n->a = std::move(lhs);
        n->b = parse_term(cur);
        lhs = std::move(n);
    }
    return lhs;
}

// ------------------------------------------------------------------
// elaboration into a concrete ring

// Every variable in scope, mapped to its embedding in `ring`.
std::map<std::string, RingElement> scope_vars(const RingId &ring) {
    std::map<std::string, RingElement> vars;
    if (ring.kind() == RingKind::UniPoly) {
        for (auto &[name, elem] : scope_vars(ring.base()))
            vars.emplace(name, make_poly(ring, {elem}));
        vars.emplace(ring.var(),
                     make_poly(ring, {ring_zero(ring.base()),
                                      ring_one(ring.base())}));
    } else if (ring.kind() == RingKind::BiPolyQ) {
        vars.emplace(ring.var_x(), make_bipoly(ring, {{{1, 0}, Rat(1)}}));
        vars.emplace(ring.var_y(), make_bipoly(ring, {{{0, 1}, Rat(1)}}));
    }
    return vars;
}

RingElement scalar_in(const RingId &ring, const Rat &v, int col) {
    try {
        if (denominator(v) == 1) return from_int(ring, numerator(v));
        return from_rat(ring, v);
    } catch (const Error &e) {
        elab_error(col, e.what());
    }
}

GroupElement group_exponent(const GroupId &g, std::vector<Int> coords,
                            int col) {
    if (static_cast<int>(coords.size()) != g.rank())
        elab_error(col, "exponent vector has " +
                            std::to_string(coords.size()) +
                            " entries, the value group " + g.to_string() +
                            " needs " + std::to_string(g.rank()));
    return group_element(g, std::move(coords));
}

RingElement hahn_mono_in(const RingId &ring, std::vector<Int> coords,
                         int col) {
    GroupElement v = group_exponent(ring.group(), std::move(coords), col);
    try {
        return hahn_monomial(ring, v);
    } catch (const Error &e) {
        elab_error(col, e.what());
    }
}

RingElement eval_element(const Node &n, const RingId &ring,
                         const std::map<std::string, RingElement> &vars) {
    switch (n.kind) {
    case Node::Num:
        return scalar_in(ring, n.value, n.col);
    case Node::Sym: {
        auto it = vars.find(n.name);
        if (it != vars.end()) return it->second;
        if (ring.kind() == RingKind::HahnVal && n.name == "t") {
            if (ring.group().rank() == 1)
                return hahn_mono_in(ring, {Int(1)}, n.col);
            elab_error(n.col, "the series symbol t needs an exponent "
                              "vector over " +
                                  ring.group().to_string());
        }
        elab_error(n.col, "unknown symbol '" + n.name + "' in " +
                              ring.to_string(),
                   {{"symbol", n.name}, {"ring", ring.to_string()}});
    }
    case Node::Neg:
        return neg(eval_element(*n.a, ring, vars));
    case Node::Add:
        return add(eval_element(*n.a, ring, vars),
                   eval_element(*n.b, ring, vars));
    case Node::Sub:
        return sub(eval_element(*n.a, ring, vars),
                   eval_element(*n.b, ring, vars));
    case Node::Mul:
        return mul(eval_element(*n.a, ring, vars),
                   eval_element(*n.b, ring, vars));
    case Node::PowNat:
        return pow_elem(eval_element(*n.a, ring, vars),
                        static_cast<unsigned>(n.power));
    case Node::PowVec: {
        if (n.a->kind != Node::Sym || n.a->name != "t")
            elab_error(n.col, "a vector exponent only applies to the "
                              "series symbol t");
        if (ring.kind() != RingKind::HahnVal)
            elab_error(n.col, "no series symbol in " + ring.to_string());
        return hahn_mono_in(ring, n.coords, n.col);
    }
    }
    throw Error(ErrorKind::Internal, "bad parse node");
}

// ------------------------------------------------------------------
// coefficient polynomials, evaluated without materializing base[var]

PolyOverRing poly_const(const RingId &base, const std::string &var,
                        RingElement e) {
    return PolyOverRing::make(base, var, {std::move(e)});
}

PolyOverRing eval_poly(const Node &n, const RingId &base,
                       const std::string &var,
                       const std::map<std::string, RingElement> &vars) {
    switch (n.kind) {
    case Node::Num:
        return poly_const(base, var, scalar_in(base, n.value, n.col));
    case Node::Sym: {
        if (n.name == var)
            return PolyOverRing::make(base, var,
                                      {ring_zero(base), ring_one(base)});
        auto it = vars.find(n.name);
        if (it != vars.end()) return poly_const(base, var, it->second);
        if (base.kind() == RingKind::HahnVal && n.name == "t") {
            if (base.group().rank() == 1)
                return poly_const(base, var,
                                  hahn_mono_in(base, {Int(1)}, n.col));
            elab_error(n.col, "the series symbol t needs an exponent "
                              "vector over " +
                                  base.group().to_string());
        }
        elab_error(n.col, "unknown symbol '" + n.name + "' in " +
                              base.to_string() + "[" + var + "]",
                   {{"symbol", n.name},
                    {"ring", base.to_string() + "[" + var + "]"}});
    }
    case Node::Neg:
        return poly_scale(neg(ring_one(base)),
                          eval_poly(*n.a, base, var, vars));
    case Node::Add:
        return poly_add(eval_poly(*n.a, base, var, vars),
                        eval_poly(*n.b, base, var, vars));
    case Node::Sub:
        return poly_add(eval_poly(*n.a, base, var, vars),
                        poly_scale(neg(ring_one(base)),
                                   eval_poly(*n.b, base, var, vars)));
    case Node::Mul:
        return poly_mul(eval_poly(*n.a, base, var, vars),
                        eval_poly(*n.b, base, var, vars));
    case Node::PowNat: {
        PolyOverRing b = eval_poly(*n.a, base, var, vars);
        PolyOverRing acc = poly_const(base, var, ring_one(base));
        for (long i = 0; i < n.power; ++i) acc = poly_mul(acc, b);
        return acc;
    }
    case Node::PowVec: {
        if (n.a->kind != Node::Sym || n.a->name != "t")
            elab_error(n.col, "a vector exponent only applies to the "
                              "series symbol t");
        if (base.kind() != RingKind::HahnVal)
            elab_error(n.col, "no series symbol in " + base.to_string());
        return poly_const(base, var, hahn_mono_in(base, n.coords, n.col));
    }
    }
    throw Error(ErrorKind::Internal, "bad parse node");
}

// ------------------------------------------------------------------
// ring and group names

GroupId parse_group_at(Cursor &cur) {
    Token id = cur.expect(Tok::Ident);
    if (id.text == "Z") return GroupId::integers();
    if (id.text == "LexZ") {
        cur.expect(Tok::LParen);
        Token k = cur.expect(Tok::Num);
        cur.expect(Tok::RParen);
        if (k.text.size() > 2)
            syntax_error(k.col, "'" + k.text + "'", {"a small rank"});
        return GroupId::lex(std::stoi(k.text));
    }
    if (id.text == "Quad") {
        cur.expect(Tok::LParen);
        Token d = cur.expect(Tok::Num);
        cur.expect(Tok::RParen);
        if (d.text.size() > 6)
            syntax_error(d.col, "'" + d.text + "'", {"a small radicand"});
        return GroupId::quad(std::stol(d.text));
    }
    syntax_error(id.col, "'" + id.text + "'", {"Z", "LexZ", "Quad"});
}

RingId parse_ring_at(Cursor &cur) {
    Token id = cur.expect(Tok::Ident);
    RingId ring = RingId::integers();
    if (id.text == "Int") {
        ring = RingId::integers();
    } else if (id.text == "Q") {
        ring = RingId::rationals();
    } else if (id.text == "Mod") {
        cur.expect(Tok::LParen);
        Token n = cur.expect(Tok::Num);
        cur.expect(Tok::RParen);
        ring = RingId::integers_mod(parse_int_token(n));
    } else if (id.text == "Fp") {
        cur.expect(Tok::LParen);
        Token p = cur.expect(Tok::Num);
        cur.expect(Tok::RParen);
        ring = RingId::prime_field(parse_int_token(p));
    } else if (id.text == "Hahn") {
        cur.expect(Tok::LParen);
        GroupId g = parse_group_at(cur);
        cur.expect(Tok::Comma);
        RingId residue = parse_ring_at(cur);
        cur.expect(Tok::RParen);
        ring = RingId::hahn(g, residue);
    } else {
        syntax_error(id.col, "'" + id.text + "'",
                     {"Int", "Q", "Mod", "Fp", "Hahn"});
    }
    while (cur.is(Tok::LBrack)) {
        Token open = cur.take();
        Token v1 = cur.expect(Tok::Ident);
        if (cur.is(Tok::Comma)) {
            cur.take();
            Token v2 = cur.expect(Tok::Ident);
            cur.expect(Tok::RBrack);
            if (ring != RingId::rationals())
                elab_error(open.col, "two-variable polynomials only live "
                                     "over Q, not " +
                                         ring.to_string());
            ring = RingId::bi_poly_q(v1.text, v2.text);
            continue;
        }
        cur.expect(Tok::RBrack);
        ring = RingId::uni_poly(ring, v1.text);
    }
    return ring;
}

// ------------------------------------------------------------------
// series descriptors

Rat parse_rat_at(Cursor &cur) {
    bool negate = false;
    if (cur.is(Tok::Minus)) {
        cur.take();
        negate = true;
    }
    Token p = cur.expect(Tok::Num);
    Int num = parse_int_token(p);
    Int den = 1;
    if (cur.is(Tok::Slash)) {
        cur.take();
        Token q = cur.expect(Tok::Num);
        den = parse_int_token(q);
        if (den == 0) syntax_error(q.col, "'0'", {"a nonzero denominator"});
    }
    Rat v(num, den);
    return negate ? Rat(-v) : v;
}

} // namespace

RingElement parse_element(const std::string &src, const RingId &ring) {
    Cursor cur(src);
    NodeP ast = parse_expr_node(cur);
    cur.expect_end();
    return eval_element(*ast, ring, scope_vars(ring));
}

PolyOverRing parse_poly(const std::string &src, const RingId &base,
                        const std::string &var) {
    Cursor cur(src);
    NodeP ast = parse_expr_node(cur);
    cur.expect_end();
    return eval_poly(*ast, base, var, scope_vars(base));
}

RingId parse_ring(const std::string &src) {
    Cursor cur(src);
    RingId r = parse_ring_at(cur);
    cur.expect_end();
    return r;
}

GroupId parse_group(const std::string &src) {
    Cursor cur(src);
    GroupId g = parse_group_at(cur);
    cur.expect_end();
    return g;
}

SeriesDescriptor parse_descriptor(const std::string &src,
                                  const RingId &hahn_ring) {
    if (hahn_ring.kind() != RingKind::HahnVal)
        throw Error(ErrorKind::WrongRingKind,
                    "descriptors need a Hahn series ring, got " +
                        hahn_ring.to_string());
    const GroupId &g = hahn_ring.group();
    Cursor cur(src);
    Token id = cur.expect(Tok::Ident);

    if (id.text == "finite") {
        cur.expect(Tok::LBrack);
        std::vector<GroupElement> elems;
        if (!cur.is(Tok::RBrack)) {
            int col = cur.peek().col;
            elems.push_back(group_exponent(g, parse_vector(cur), col));
            while (cur.is(Tok::Comma)) {
                cur.take();
                col = cur.peek().col;
                elems.push_back(group_exponent(g, parse_vector(cur), col));
            }
        }
        cur.expect(Tok::RBrack);
        cur.expect_end();
        return SeriesDescriptor::make(hahn_ring,
                                      SeqDescriptor::finite(std::move(elems)));
    }

    if (id.text == "affine") {
        cur.expect(Tok::LParen);
        int col = cur.peek().col;
        GroupElement start = group_exponent(g, parse_vector(cur), col);
        cur.expect(Tok::Semi);
        col = cur.peek().col;
        GroupElement step = group_exponent(g, parse_vector(cur), col);
        cur.expect(Tok::RParen);
        cur.expect_end();
        return SeriesDescriptor::make(hahn_ring,
                                      SeqDescriptor::affine(start, step));
    }

    if (id.text == "conv") {
        cur.expect(Tok::LParen);
        Rat p = parse_rat_at(cur);
        Rat q(0);
        if (cur.is(Tok::Plus) || cur.is(Tok::Minus)) {
            bool minus = cur.take().kind == Tok::Minus;
            q = parse_rat_at(cur);
            if (minus) q = Rat(-q);
            cur.expect(Tok::Star);
            Token root = cur.expect(Tok::Ident);
            if (root.text != "sqrt")
                syntax_error(root.col, "'" + root.text + "'", {"sqrt"});
            cur.expect(Tok::LParen);
            Token d = cur.expect(Tok::Num);
            cur.expect(Tok::RParen);
            if (d.text.size() > 6 || g.kind() != GroupKind::QuadDense ||
                std::stol(d.text) != g.d())
                elab_error(d.col, "sqrt(" + d.text +
                                      ") does not match the value group " +
                                      g.to_string());
        }
        cur.expect(Tok::RParen);
        cur.expect_end();
        return SeriesDescriptor::make(
            hahn_ring, SeqDescriptor::convergent_quad(g, p, q));
    }

    syntax_error(id.col, "'" + id.text + "'", {"finite", "affine", "conv"});
}

} // namespace contentlab
