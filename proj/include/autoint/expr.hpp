#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "autoint/elementary.hpp"
#include "autoint/jet.hpp"

namespace autoint {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinOp { Add, Sub, Mul, Div };

/// Immutable expression tree over one variable. Nodes are shared freely;
/// nothing mutates after parse.
struct Expr {
    struct Constant {
        double value;
    };
    struct Variable {};
    struct Negate {
        ExprPtr arg;
    };
    struct Binary {
        BinOp op;
        ExprPtr lhs;
        ExprPtr rhs;
    };
    struct PowInt {
        ExprPtr base;
        unsigned exponent;
    };
    struct Apply {
        ElemFn fn;
        ExprPtr arg;
    };

    std::variant<Constant, Variable, Negate, Binary, PowInt, Apply> node;
};

/// Recursive-descent parse of
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' uint)?
///   atom   := number | 'x' | ident '(' expr ')' | '(' expr ')'
///   ident  := exp | sin | cos | ln | atan | recip
/// Whitespace-insensitive. Throws ParseError with a 1-based offset on
/// lexical errors, unknown identifiers, unbalanced parentheses, and
/// negative or fractional exponents.
ExprPtr parse(std::string_view src);

/// Canonical source form; parsing it back yields an identical tree.
std::string render(const Expr& e);

/// Structural equality (constants compared by value).
bool equal(const Expr& a, const Expr& b);

/// Scalar evaluation. Domain errors name the offending subexpression.
/// Division is evaluated as lhs * (1/rhs) so that the result agrees bit for
/// bit with the real part of eval_jet.
double eval_real(const Expr& e, double x);

/// Evaluation over jets: arithmetic nodes via jet arithmetic, function
/// applications via the elementary extensions, division via recip.
Jet eval_jet(const Expr& e, const Jet& u);

} // namespace autoint
