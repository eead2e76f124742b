#include "autoint/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

#include "autoint/format.hpp"

namespace autoint {

namespace {

template <class... Fs>
struct Overload : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

ExprPtr make(Expr::Constant c) { return std::make_shared<const Expr>(Expr{c}); }
ExprPtr make(Expr::Variable v) { return std::make_shared<const Expr>(Expr{v}); }
ExprPtr make(Expr::Negate n) { return std::make_shared<const Expr>(Expr{std::move(n)}); }
ExprPtr make(Expr::Binary b) { return std::make_shared<const Expr>(Expr{std::move(b)}); }
ExprPtr make(Expr::PowInt p) { return std::make_shared<const Expr>(Expr{std::move(p)}); }
ExprPtr make(Expr::Apply a) { return std::make_shared<const Expr>(Expr{std::move(a)}); }

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, at + 1); // offsets are 1-based for humans
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eof() const { return pos >= src.size(); }
    char peek() const { return src[pos]; }

    bool accept(char c) {
        if (!eof() && src[pos] == c) {
            ++pos;
            skip_ws();
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (eof() || src[pos] != c) fail(std::string("expected ") + what, pos);
        ++pos;
        skip_ws();
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            if (accept('+')) {
                lhs = make(Expr::Binary{BinOp::Add, lhs, parse_term()});
            } else if (accept('-')) {
                lhs = make(Expr::Binary{BinOp::Sub, lhs, parse_term()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            if (accept('*')) {
                lhs = make(Expr::Binary{BinOp::Mul, lhs, parse_factor()});
            } else if (accept('/')) {
                lhs = make(Expr::Binary{BinOp::Div, lhs, parse_factor()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_factor() {
        if (accept('-')) return make(Expr::Negate{parse_factor()});
        ExprPtr base = parse_atom();
        if (accept('^')) {
            if (eof()) fail("expected integer exponent after '^'", pos);
            if (peek() == '-') fail("negative exponent not allowed", pos);
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                fail("expected integer exponent after '^'", pos);
            }
            const std::size_t start = pos;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
            if (!eof() && peek() == '.') fail("fractional exponent not allowed", pos);
            unsigned exponent = 0;
            const auto res = std::from_chars(src.data() + start, src.data() + pos, exponent);
            if (res.ec != std::errc{}) fail("exponent out of range", start);
            skip_ws();
            return make(Expr::PowInt{base, exponent});
        }
        return base;
    }

    ExprPtr parse_atom() {
        if (eof()) fail("unexpected end of input", pos);
        const char c = peek();
        if (accept('(')) {
            ExprPtr inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        fail(std::string("unexpected character '") + c + "'", pos);
    }

    ExprPtr parse_number() {
        const std::size_t start = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (!eof() && peek() == '.') {
            ++pos;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        }
        if (pos == start || (pos == start + 1 && src[start] == '.')) {
            fail("malformed number", start);
        }
        if (!eof() && (peek() == 'e' || peek() == 'E')) {
            std::size_t mark = pos;
            ++pos;
            if (!eof() && (peek() == '+' || peek() == '-')) ++pos;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                pos = mark; // "2e" with no digits: let the 'e' be seen as an identifier error
            } else {
                while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
            }
        }
        double value = 0.0;
        const auto res = std::from_chars(src.data() + start, src.data() + pos, value);
        if (res.ec != std::errc{} || res.ptr != src.data() + pos) {
            fail("malformed number", start);
        }
        skip_ws();
        return make(Expr::Constant{value});
    }

    ExprPtr parse_ident() {
        const std::size_t start = pos;
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos;
        const std::string_view name = src.substr(start, pos - start);
        skip_ws();
        if (name == "x") return make(Expr::Variable{});

        std::optional<ElemFn> fn;
        if (name == "exp") fn = ElemFn::exp();
        else if (name == "sin") fn = ElemFn::sin();
        else if (name == "cos") fn = ElemFn::cos();
        else if (name == "ln") fn = ElemFn::ln();
        else if (name == "atan") fn = ElemFn::arctan();
        else if (name == "recip") fn = ElemFn::recip();
        if (!fn) fail("unknown identifier '" + std::string(name) + "'", start);

        expect('(', "'(' after function name");
        ExprPtr arg = parse_expr();
        expect(')', "')'");
        return make(Expr::Apply{*fn, arg});
    }
};

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

// Binding strength, used to decide parenthesization: Add/Sub = 1, Mul/Div = 2,
// everything tighter = 3.
int prec(const Expr& e) {
    return std::visit(Overload{
                          [](const Expr::Binary& b) {
                              return (b.op == BinOp::Add || b.op == BinOp::Sub) ? 1 : 2;
                          },
                          [](const auto&) { return 3; },
                      },
                      e.node);
}

void render_to(const Expr& e, std::string& out);

void render_child(const Expr& child, int min_prec, std::string& out) {
    if (prec(child) < min_prec) {
        out += '(';
        render_to(child, out);
        out += ')';
    } else {
        render_to(child, out);
    }
}

void render_to(const Expr& e, std::string& out) {
    std::visit(Overload{
                   [&](const Expr::Constant& c) { out += fmt_sig(c.value, 17); },
                   [&](const Expr::Variable&) { out += 'x'; },
                   [&](const Expr::Negate& n) {
                       out += '-';
                       // the operand of unary minus is a factor, so any
                       // binary child needs parentheses to reparse as one
                       render_child(*n.arg, 3, out);
                   },
                   [&](const Expr::Binary& b) {
                       const int p = (b.op == BinOp::Add || b.op == BinOp::Sub) ? 1 : 2;
                       render_child(*b.lhs, p, out);
                       switch (b.op) {
                           case BinOp::Add: out += '+'; break;
                           case BinOp::Sub: out += '-'; break;
                           case BinOp::Mul: out += '*'; break;
                           case BinOp::Div: out += '/'; break;
                       }
                       // left-associative grammar: equal precedence on the right
                       // must be parenthesized to reparse into the same shape
                       render_child(*b.rhs, p + 1, out);
                   },
                   [&](const Expr::PowInt& p) {
                       // '^' applies to an atom; a negative constant base
                       // would otherwise reparse as -(c^k)
                       const auto* c = std::get_if<Expr::Constant>(&p.base->node);
                       const bool atom = (c != nullptr && !std::signbit(c->value)) ||
                                         std::holds_alternative<Expr::Variable>(p.base->node) ||
                                         std::holds_alternative<Expr::Apply>(p.base->node);
                       if (!atom) {
                           out += '(';
                           render_to(*p.base, out);
                           out += ')';
                       } else {
                           render_to(*p.base, out);
                       }
                       out += '^';
                       out += std::to_string(p.exponent);
                   },
                   [&](const Expr::Apply& a) {
                       out += a.fn.name();
                       out += '(';
                       render_to(*a.arg, out);
                       out += ')';
                   },
               },
               e.node);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

// One exponentiation routine for both value types so the scalar and jet
// paths perform the identical multiplication sequence.
template <class V>
V pow_by_squaring(const V& base, unsigned exponent, const V& one) {
    if (exponent == 0) return one;
    V acc = one;
    V b = base;
    unsigned e = exponent;
    for (;;) {
        if (e & 1u) acc = acc * b;
        e >>= 1u;
        if (e == 0) break;
        b = b * b;
    }
    return acc;
}

} // namespace

ExprPtr parse(std::string_view src) {
    Parser p{src};
    p.skip_ws();
    if (p.eof()) p.fail("empty expression", 0);
    ExprPtr e = p.parse_expr();
    p.skip_ws();
    if (!p.eof()) p.fail(std::string("unexpected character '") + p.peek() + "'", p.pos);
    return e;
}

std::string render(const Expr& e) {
    std::string out;
    render_to(e, out);
    return out;
}

bool equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        Overload{
            [&](const Expr::Constant& ca) {
                return ca.value == std::get<Expr::Constant>(b.node).value;
            },
            [&](const Expr::Variable&) { return true; },
            [&](const Expr::Negate& na) {
                return equal(*na.arg, *std::get<Expr::Negate>(b.node).arg);
            },
            [&](const Expr::Binary& ba) {
                const auto& bb = std::get<Expr::Binary>(b.node);
                return ba.op == bb.op && equal(*ba.lhs, *bb.lhs) && equal(*ba.rhs, *bb.rhs);
            },
            [&](const Expr::PowInt& pa) {
                const auto& pb = std::get<Expr::PowInt>(b.node);
                return pa.exponent == pb.exponent && equal(*pa.base, *pb.base);
            },
            [&](const Expr::Apply& aa) {
                const auto& ab = std::get<Expr::Apply>(b.node);
                return aa.fn == ab.fn && equal(*aa.arg, *ab.arg);
            },
        },
        a.node);
}

double eval_real(const Expr& e, double x) {
    return std::visit(
        Overload{
            [&](const Expr::Constant& c) { return c.value; },
            [&](const Expr::Variable&) { return x; },
            [&](const Expr::Negate& n) { return -eval_real(*n.arg, x); },
            [&](const Expr::Binary& b) {
                const double l = eval_real(*b.lhs, x);
                const double r = eval_real(*b.rhs, x);
                switch (b.op) {
                    case BinOp::Add: return l + r;
                    case BinOp::Sub: return l - r;
                    case BinOp::Mul: return l * r;
                    case BinOp::Div:
                        if (r == 0.0) {
                            throw DomainError("division by zero in '" + render(e) + "'");
                        }
                        return l * (1.0 / r);
                }
                return 0.0;
            },
            [&](const Expr::PowInt& p) {
                return pow_by_squaring(eval_real(*p.base, x), p.exponent, 1.0);
            },
            [&](const Expr::Apply& a) {
                const double v = eval_real(*a.arg, x);
                try {
                    return a.fn.eval(v);
                } catch (const DomainError& err) {
                    throw DomainError(std::string(err.what()) + " in '" + render(e) + "'");
                }
            },
        },
        e.node);
}

Jet eval_jet(const Expr& e, const Jet& u) {
    const int n = u.order();
    return std::visit(
        Overload{
            [&](const Expr::Constant& c) { return Jet::constant(n, c.value); },
            [&](const Expr::Variable&) { return u; },
            [&](const Expr::Negate& neg) { return -eval_jet(*neg.arg, u); },
            [&](const Expr::Binary& b) {
                const Jet l = eval_jet(*b.lhs, u);
                const Jet r = eval_jet(*b.rhs, u);
                switch (b.op) {
                    case BinOp::Add: return l + r;
                    case BinOp::Sub: return l - r;
                    case BinOp::Mul: return l * r;
                    case BinOp::Div:
                        if (r.real() == 0.0) {
                            throw DomainError("division by a jet with zero real part in '" +
                                              render(e) + "'");
                        }
                        return l * recip(r);
                }
                return Jet(n);
            },
            [&](const Expr::PowInt& p) {
                return pow_by_squaring(eval_jet(*p.base, u), p.exponent, Jet::constant(n, 1.0));
            },
            [&](const Expr::Apply& a) {
                const Jet v = eval_jet(*a.arg, u);
                try {
                    return extend(a.fn, v);
                } catch (const DomainError& err) {
                    throw DomainError(std::string(err.what()) + " in '" + render(e) + "'");
                }
            },
        },
        e.node);
}

} // namespace autoint
