#include "amalgrade/polynomial.hpp"

#include "expr.hpp"
#include "lexer.hpp"

namespace amalgrade {

namespace detail {

namespace {

// expr   := addend (('+'|'-') addend)*
// addend := factor ('*' factor)*
// factor := base ('^' int)?
// base   := '(' expr ')' | '-' factor | ident | literal
// literal:= int ('/' int)?
class ExprParser {
public:
    ExprParser(Lexer& lx, const PolyRingPtr& ring) : lx_(lx), ring_(ring) {}

    Polynomial parse_expr() {
        Polynomial acc = parse_addend();
        while (lx_.at_punct('+') || lx_.at_punct('-')) {
            bool plus = lx_.at_punct('+');
            lx_.next();
            Polynomial rhs = parse_addend();
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

private:
    Polynomial parse_addend() {
        Polynomial acc = parse_factor();
        while (lx_.at_punct('*')) {
            lx_.next();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (lx_.at_punct('^')) {
            lx_.next();
            Token e = lx_.expect_int("as exponent");
            unsigned long v = std::stoul(e.text);
            if (v > 64) throw ParseError("exponent too large: " + e.text, e.line, e.col);
            return base.pow(static_cast<unsigned>(v));
        }
        return base;
    }

    Polynomial parse_base() {
        if (lx_.at_punct('(')) {
            lx_.next();
            Polynomial inner = parse_expr();
            lx_.expect_punct(')', "to close parenthesis");
            return inner;
        }
        if (lx_.at_punct('-')) {
            lx_.next();
            return -parse_factor();
        }
        const Token& t = lx_.peek();
        if (t.kind == Token::Ident) {
            int idx = ring_->var_index(t.text);
            if (idx < 0)
                throw ParseError("unknown variable \"" + t.text + "\" in " + ring_->to_string(),
                                 t.line, t.col);
            lx_.next();
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        if (t.kind == Token::Int) {
            std::string num = lx_.next().text;
            if (lx_.at_punct('/')) {
                lx_.next();
                Token den = lx_.expect_int("as denominator");
                return Polynomial::constant(
                    ring_, FieldElement::from_string(ring_->field(), num + "/" + den.text));
            }
            return Polynomial::constant(ring_, FieldElement::from_string(ring_->field(), num));
        }
        lx_.fail("expected a polynomial term");
    }

    Lexer& lx_;
    const PolyRingPtr& ring_;
};

} // namespace

Polynomial parse_poly_expr(Lexer& lx, const PolyRingPtr& ring) {
    return ExprParser(lx, ring).parse_expr();
}

} // namespace detail

Polynomial parse_polynomial(const PolyRingPtr& r, const std::string& text) {
    detail::Lexer lx(text);
    Polynomial p = detail::ExprParser(lx, r).parse_expr();
    if (lx.peek().kind != detail::Token::End) lx.fail("trailing input after polynomial");
    return p;
}

} // namespace amalgrade
