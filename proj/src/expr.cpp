#include "rank2/expr.hpp"

#include <cctype>
#include <sstream>

#include "rank2/errors.hpp"

namespace rank2 {

namespace {

struct Token {
    enum class Type { Int, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::size_t offset;
    Integer value;  // Int
    int var = 0;    // Var
    std::string text;
};

class Lexer {
public:
    Lexer(std::string_view text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {
        tokenize();
    }
    const std::vector<Token>& tokens() const { return tokens_; }

private:
    void tokenize() {
        std::size_t i = 0;
        while (i < text_.size()) {
            const char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits;
                while (i < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[i])))
                    digits += text_[i++];
                Token t{Token::Type::Int, start, Integer(digits), 0, digits};
                tokens_.push_back(std::move(t));
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name;
                while (i < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[i])) ||
                        text_[i] == '_'))
                    name += text_[i++];
                int var = 0;
                for (std::size_t v = 0; v < vars_.size(); ++v)
                    if (vars_[v] == name) var = static_cast<int>(v) + 1;
                if (var == 0) {
                    std::vector<std::string> expected;
                    for (const auto& v : vars_) expected.push_back("'" + v + "'");
                    throw SyntaxError(start, expected,
                                      syntax_message(start, expected,
                                                     "unknown identifier '" + name + "'"));
                }
                tokens_.push_back({Token::Type::Var, start, Integer(0), var, name});
                continue;
            }
            Token::Type type;
            switch (c) {
                case '+': type = Token::Type::Plus; break;
                case '-': type = Token::Type::Minus; break;
                case '*': type = Token::Type::Star; break;
                case '/': type = Token::Type::Slash; break;
                case '^': type = Token::Type::Caret; break;
                case '(': type = Token::Type::LParen; break;
                case ')': type = Token::Type::RParen; break;
                default:
                    throw SyntaxError(start, {},
                                      syntax_message(start, {},
                                                     std::string("unexpected character '") +
                                                         c + "'"));
            }
            tokens_.push_back({type, start, Integer(0), 0, std::string(1, c)});
            ++i;
        }
        tokens_.push_back({Token::Type::End, text_.size(), Integer(0), 0, "<end>"});
    }

public:
    static std::string syntax_message(std::size_t offset,
                                      const std::vector<std::string>& expected,
                                      const std::string& found) {
        std::ostringstream os;
        os << "syntax error at offset " << offset;
        if (!expected.empty()) {
            os << ": expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
                os << expected[i];
            }
        }
        if (!found.empty()) os << "; found " << found;
        return os.str();
    }

private:
    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::vector<Token> tokens_;
};

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars)
        : vars_(vars), lexer_(text, vars) {}

    ExprAst run() {
        ExprAst e = parse_expr();
        const Token& t = peek();
        if (t.type != Token::Type::End)
            fail(t, {"'+'", "'-'", "'*'", "'/'", "end of input"});
        return e;
    }

private:
    const Token& peek() const { return lexer_.tokens()[pos_]; }
    const Token& advance() { return lexer_.tokens()[pos_++]; }
    bool accept(Token::Type type) {
        if (peek().type == type) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const Token& t, std::vector<std::string> expected) {
        throw SyntaxError(t.offset, expected,
                          Lexer::syntax_message(t.offset, expected,
                                                "'" + t.text + "'"));
    }

    std::vector<std::string> base_expected() const {
        std::vector<std::string> e{"integer"};
        for (const auto& v : vars_) e.push_back("'" + v + "'");
        e.push_back("'('");
        e.push_back("'-'");
        return e;
    }

    ExprAst parse_expr() {
        ExprAst lhs = parse_term();
        while (true) {
            if (accept(Token::Type::Plus)) {
                ExprAst node{ExprAst::Kind::Add};
                node.child = {std::move(lhs), parse_term()};
                lhs = std::move(node);
            } else if (accept(Token::Type::Minus)) {
                ExprAst node{ExprAst::Kind::Sub};
                node.child = {std::move(lhs), parse_term()};
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    ExprAst parse_term() {
        ExprAst lhs = parse_factor();
        while (true) {
            if (accept(Token::Type::Star)) {
                ExprAst node{ExprAst::Kind::Mul};
                node.child = {std::move(lhs), parse_factor()};
                lhs = std::move(node);
            } else if (accept(Token::Type::Slash)) {
                ExprAst node{ExprAst::Kind::Div};
                node.child = {std::move(lhs), parse_factor()};
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    ExprAst parse_factor() {
        if (accept(Token::Type::Minus)) {
            ExprAst node{ExprAst::Kind::Neg};
            node.child = {parse_factor()};
            return node;
        }
        ExprAst base = parse_base();
        if (accept(Token::Type::Caret)) {
            bool negative = accept(Token::Type::Minus);
            const Token& t = peek();
            if (t.type != Token::Type::Int)
                fail(t, negative ? std::vector<std::string>{"integer"}
                                 : std::vector<std::string>{"integer", "'-'"});
            advance();
            ExprAst node{ExprAst::Kind::Pow};
            node.value = negative ? Integer(-t.value) : t.value;
            node.child = {std::move(base)};
            return node;
        }
        return base;
    }

    ExprAst parse_base() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::Int: {
                advance();
                ExprAst node{ExprAst::Kind::Int};
                node.value = t.value;
                return node;
            }
            case Token::Type::Var: {
                advance();
                ExprAst node{ExprAst::Kind::Var};
                node.var = t.var;
                return node;
            }
            case Token::Type::LParen: {
                advance();
                ExprAst inner = parse_expr();
                const Token& closing = peek();
                if (closing.type != Token::Type::RParen)
                    fail(closing, {"'+'", "'-'", "'*'", "'/'", "')'"});
                advance();
                return inner;
            }
            default:
                fail(t, base_expected());
        }
    }

    const std::vector<std::string>& vars_;
    Lexer lexer_;
    std::size_t pos_ = 0;
};

constexpr long kMaxExponent = 1000000;

long exponent_to_long(const Integer& e) {
    if (!e.fits_slong_p() || e > kMaxExponent || e < -kMaxExponent)
        throw ResourceExhausted("exponent too large: " + e.get_str());
    return e.get_si();
}

}  // namespace

ExprAst parse(std::string_view text) { return parse_with_vars(text, {"x1", "x2"}); }

ExprAst parse_with_vars(std::string_view text, const std::vector<std::string>& vars) {
    return Parser(text, vars).run();
}

RationalFunction to_ratfunc(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::Var:
            if (ast.var > 2) throw IndexOutOfRange("rational functions have two variables");
            return RationalFunction::var(ast.var);
        case ExprAst::Kind::Int:
            return RationalFunction::constant(Rational(ast.value));
        case ExprAst::Kind::Neg:
            return -to_ratfunc(ast.child[0]);
        case ExprAst::Kind::Add:
            return to_ratfunc(ast.child[0]) + to_ratfunc(ast.child[1]);
        case ExprAst::Kind::Sub:
            return to_ratfunc(ast.child[0]) - to_ratfunc(ast.child[1]);
        case ExprAst::Kind::Mul:
            return to_ratfunc(ast.child[0]) * to_ratfunc(ast.child[1]);
        case ExprAst::Kind::Div:
            return to_ratfunc(ast.child[0]) / to_ratfunc(ast.child[1]);
        case ExprAst::Kind::Pow:
            return to_ratfunc(ast.child[0]).pow(exponent_to_long(ast.value));
    }
    throw PreconditionViolated("corrupt expression node");
}

RationalFunction parse_ratfunc(std::string_view text) {
    return to_ratfunc(parse(text));
}

MultiPoly to_multipoly(const ExprAst& ast, long arity) {
    switch (ast.kind) {
        case ExprAst::Kind::Var:
            return MultiPoly::variable(arity, ast.var);
        case ExprAst::Kind::Int:
            return MultiPoly::constant(arity, Rational(ast.value));
        case ExprAst::Kind::Neg:
            return -to_multipoly(ast.child[0], arity);
        case ExprAst::Kind::Add:
            return to_multipoly(ast.child[0], arity) + to_multipoly(ast.child[1], arity);
        case ExprAst::Kind::Sub:
            return to_multipoly(ast.child[0], arity) - to_multipoly(ast.child[1], arity);
        case ExprAst::Kind::Mul:
            return to_multipoly(ast.child[0], arity) * to_multipoly(ast.child[1], arity);
        case ExprAst::Kind::Div: {
            MultiPoly rhs = to_multipoly(ast.child[1], arity);
            if (!rhs.is_constant())
                throw NotPolynomial("division by a non-constant in a polynomial context");
            if (rhs.is_zero()) throw DivisionByZero("division by zero");
            return to_multipoly(ast.child[0], arity)
                .scaled(1 / rhs.terms().begin()->second);
        }
        case ExprAst::Kind::Pow: {
            const long e = exponent_to_long(ast.value);
            if (e < 0)
                throw NotPolynomial("negative exponent in a polynomial context");
            return to_multipoly(ast.child[0], arity).pow(e);
        }
    }
    throw PreconditionViolated("corrupt expression node");
}

std::string print_canonical(const RationalFunction& f) { return f.str(); }

}  // namespace rank2
