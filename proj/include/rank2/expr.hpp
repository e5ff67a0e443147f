#pragma once

// Concrete syntax for rational functions:
//
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | base ("^" signed_int)?
//   base   := "x1" | "x2" | int | "(" expr ")"
//
// Whitespace is insignificant. Implicit multiplication is rejected; exponents
// are integer literals. This grammar is the CLI input contract. The same
// machinery parses combiner expressions over a caller-supplied variable list
// (X1..Xm).

#include <string>
#include <string_view>
#include <vector>

#include "rank2/multipoly.hpp"
#include "rank2/ratfunc.hpp"

namespace rank2 {

struct ExprAst {
    enum class Kind { Var, Int, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    int var = 0;          // Kind::Var, 1-based index into the variable list
    Integer value;        // Kind::Int literal or Kind::Pow exponent
    std::vector<ExprAst> child;
};

ExprAst parse(std::string_view text);  // variables x1, x2
ExprAst parse_with_vars(std::string_view text, const std::vector<std::string>& vars);

// bottom-up exact evaluation; throws DivisionByZero on identically-zero
// denominators
RationalFunction to_ratfunc(const ExprAst& ast);
RationalFunction parse_ratfunc(std::string_view text);

// for combiner expressions: polynomial over `arity` variables; division only
// by nonzero constants, exponents >= 0 (throws NotPolynomial otherwise)
MultiPoly to_multipoly(const ExprAst& ast, long arity);

std::string print_canonical(const RationalFunction& f);

}  // namespace rank2
