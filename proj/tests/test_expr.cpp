#include <random>

#include "doctest.h"
#include "rank2/errors.hpp"
#include "rank2/expr.hpp"

using namespace rank2;

TEST_CASE("parser recognizes the grammar") {
    const ExprAst ast = parse("(x1^2+x2^2+1)/(x1*x2)");
    REQUIRE(ast.kind == ExprAst::Kind::Div);
    REQUIRE(ast.child[0].kind == ExprAst::Kind::Add);
    REQUIRE(ast.child[0].child[0].kind == ExprAst::Kind::Add);
    CHECK(ast.child[0].child[0].child[0].kind == ExprAst::Kind::Pow);
    CHECK(ast.child[1].kind == ExprAst::Kind::Mul);

    const ExprAst v = parse("x1");
    CHECK(v.kind == ExprAst::Kind::Var);
    CHECK(v.var == 1);
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse("x1 +* x2");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 4);
        CHECK(!e.expected().empty());
    }

    CHECK_THROWS_AS(parse("(x1 + x2"), SyntaxError);   // unbalanced parens
    CHECK_THROWS_AS(parse("x1 + y"), SyntaxError);     // unknown identifier
    CHECK_THROWS_AS(parse("x1 ^ x2"), SyntaxError);    // non-integer exponent
    CHECK_THROWS_AS(parse("x1^(-2)"), SyntaxError);    // exponents are literals
    CHECK_THROWS_AS(parse("x1 x2"), SyntaxError);      // implicit multiplication
    CHECK_THROWS_AS(parse(""), SyntaxError);

    try {
        parse("x1 + y2");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 5);
    }
}

TEST_CASE("evaluation to rational functions") {
    const RationalFunction f = parse_ratfunc("x1 + 2/x1");
    CHECK(ratfunc_equal(f, parse_ratfunc("(x1^2 + 2)/x1")));

    CHECK(parse_ratfunc("x1 - x1").is_zero());
    CHECK_THROWS_AS(parse_ratfunc("1/(x1-x1)"), DivisionByZero);

    // negative exponents invert
    CHECK(ratfunc_equal(parse_ratfunc("x1^-2"), parse_ratfunc("1/x1^2")));
    // unary minus binds below the power
    CHECK(ratfunc_equal(parse_ratfunc("-x1^2"), parse_ratfunc("0 - x1^2")));
    // precedence: * over +
    CHECK(ratfunc_equal(parse_ratfunc("1 + 2*x1"), parse_ratfunc("(2*x1) + 1")));
    // left associativity of division
    CHECK(ratfunc_equal(parse_ratfunc("8/2/2"), parse_ratfunc("2")));
}

TEST_CASE("canonical printing contract") {
    CHECK(print_canonical(parse_ratfunc("(x1^2+x2^2+1)/(x1*x2)")) ==
          "(x1^2 + x2^2 + 1)/(x1*x2)");
    CHECK(print_canonical(RationalFunction()) == "0");
    CHECK(print_canonical(parse_ratfunc("3/2")) == "3/2");
    CHECK(print_canonical(parse_ratfunc("(x2+1)/x1")) == "(x2 + 1)/x1");
    CHECK(print_canonical(parse_ratfunc("x1/(3/2)")) == "2*x1/3");
    CHECK(print_canonical(parse_ratfunc("1/(x1*x2)")) == "1/(x1*x2)");
    CHECK(print_canonical(parse_ratfunc("x1/(2*x2)")) == "x1/(2*x2)");
}

TEST_CASE("print/parse round-trip on random rational functions") {
    std::mt19937 rng(20240806);
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3), coef(-4, 4);
    auto random_poly = [&](bool nonzero) {
        Polynomial p;
        const int k = nterms(rng);
        for (int i = 0; i < k; ++i)
            p.add_term({expo(rng), expo(rng)}, Rational(coef(rng)));
        if (nonzero && p.is_zero()) p.add_term({1, 0}, Rational(2));
        return p;
    };
    for (int i = 0; i < 1000; ++i) {
        const RationalFunction f(random_poly(false), random_poly(true));
        const RationalFunction back = parse_ratfunc(print_canonical(f));
        CHECK(ratfunc_equal(f, back));
    }
}

TEST_CASE("combiner expressions parse over X variables") {
    const ExprAst ast = parse_with_vars("X1*X2 + X2*X3 + X1*X3", {"X1", "X2", "X3"});
    const MultiPoly p = to_multipoly(ast, 3);
    CHECK(p.is_symmetric());
    const MultiPoly q =
        to_multipoly(parse_with_vars("X1 + 2*X2", {"X1", "X2"}), 2);
    CHECK_FALSE(q.is_symmetric());
    CHECK_THROWS_AS(
        to_multipoly(parse_with_vars("X1^-1", {"X1"}), 1), NotPolynomial);
    CHECK_THROWS_AS(
        to_multipoly(parse_with_vars("X1/X2", {"X1", "X2"}), 2), NotPolynomial);
}
