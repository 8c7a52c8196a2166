#include "branchcheck/parser.hpp"

#include <cctype>
#include <limits>

namespace branchcheck {

namespace {

class Parser {
  public:
    Parser(const std::string& src, VarSet allowed) : src_(src), allowed_(allowed) {}

    Polynomial run() {
        skip_whitespace();
        if (at_end()) throw ParseError(0, "empty input");
        Polynomial p = parse_expr();
        skip_whitespace();
        if (!at_end()) {
            if (peek() == '/')
                throw ParseError(pos_, "'/' is only allowed inside rational constants like 1/2");
            throw ParseError(pos_, std::string("unexpected '") + peek() + "'");
        }
        return p;
    }

  private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    void skip_whitespace() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool accept(char c) {
        skip_whitespace();
        if (at_end() || peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        skip_whitespace();
        if (at_end() || peek() != c) throw ParseError(pos_, what);
        ++pos_;
    }

    Polynomial parse_expr() {
        Polynomial p = parse_term();
        for (;;) {
            if (accept('+'))
                p += parse_term();
            else if (accept('-'))
                p -= parse_term();
            else
                return p;
        }
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (accept('*')) p = p * parse_factor();
        return p;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        skip_whitespace();
        if (!at_end() && peek() == '^') {
            ++pos_;
            return base.pow(parse_exponent());
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_whitespace();
        if (at_end()) throw ParseError(pos_, "unexpected end of input");
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_expr();
            expect(')', "expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            auto var = var_from_char(c);
            if (!var || !allowed_.contains(*var))
                throw ParseError(pos_, std::string("unknown variable '") + c + "'");
            ++pos_;
            return Polynomial::variable(*var);
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    Polynomial parse_number() {
        Integer num = parse_integer_literal();
        skip_whitespace();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_whitespace();
            std::size_t den_pos = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(pos_, "expected an integer after '/'");
            Integer den = parse_integer_literal();
            if (den == 0) throw ParseError(den_pos, "division by zero");
            return Polynomial(make_rational(num, den));
        }
        return Polynomial(Rational(num));
    }

    Integer parse_integer_literal() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Integer(src_.substr(start, pos_ - start));
    }

    unsigned parse_exponent() {
        skip_whitespace();
        std::size_t start = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(pos_, "exponent must be a nonnegative integer literal");
        Integer e = parse_integer_literal();
        if (!e.fits_uint_p() || e > 1000000)
            throw ParseError(start, "exponent too large");
        return static_cast<unsigned>(e.get_ui());
    }

    const std::string& src_;
    VarSet allowed_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& src, VarSet allowed_vars) {
    return Parser(src, allowed_vars).run();
}

}  // namespace branchcheck
