#include "ratdecomp/parse.hpp"

#include <cctype>

namespace ratdecomp {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Field& field, const std::string& var) : text_(text), field_(field), var_(var) {}

    RatFunc run()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail(ErrorCode::SyntaxError, "empty expression");
        RatFunc r = expr();
        skip_ws();
        if (pos_ < text_.size())
            fail(ErrorCode::SyntaxError, std::string("unexpected '") + text_[pos_] + "'");
        return r;
    }

private:
    [[noreturn]] void fail(ErrorCode code, const std::string& msg) const { throw ParseError(code, msg, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RatFunc expr()
    {
        RatFunc acc = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            RatFunc rhs = term();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    RatFunc term()
    {
        RatFunc acc = unary();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            std::size_t at = pos_++;
            RatFunc rhs = unary();
            if (c == '*') {
                acc = acc * rhs;
            } else {
                if (rhs.num().is_zero()) {
                    pos_ = at;
                    throw ParseError(ErrorCode::DivisionByZero, "division by zero", at);
                }
                acc = acc / rhs;
            }
        }
        return acc;
    }

    RatFunc unary()
    {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    RatFunc power()
    {
        RatFunc base = primary();
        if (peek() == '^') {
            ++pos_;
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
            }
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail(ErrorCode::SyntaxError, "exponent must be an integer literal");
            std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 5 || std::stoi(digits) > 10000) {
                pos_ = start;
                fail(ErrorCode::SyntaxError, "exponent too large");
            }
            int e = std::stoi(digits);
            if (negative && base.num().is_zero()) {
                pos_ = start;
                throw ParseError(ErrorCode::DivisionByZero, "zero raised to a negative power", start);
            }
            base = base.pow(negative ? -e : e);
            if (peek() == '^')
                fail(ErrorCode::SyntaxError, "chained exponents need parentheses");
        }
        check_no_juxtaposition();
        return base;
    }

    void check_no_juxtaposition()
    {
        char c = peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')
            fail(ErrorCode::SyntaxError, "implicit multiplication is not allowed; use '*'");
    }

    RatFunc primary()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc inner = expr();
            if (peek() != ')')
                fail(ErrorCode::SyntaxError, "expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            mpz_class v(std::string(text_.substr(start, pos_ - start)));
            return RatFunc::constant(field_.from_mpz(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == var_)
                return RatFunc::x(field_);
            if (field_.is_extension() && name == field_.generator_name())
                return RatFunc::constant(field_.gen());
            pos_ = start;
            fail(ErrorCode::UnknownSymbol, "unknown symbol '" + name + "'");
        }
        if (c == '\0')
            fail(ErrorCode::SyntaxError, "unexpected end of input");
        fail(ErrorCode::SyntaxError, std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const Field& field_;
    const std::string& var_;
    std::size_t pos_ = 0;
};

} // namespace

RatFunc parse_expression(std::string_view text, const Field& field, const std::string& var)
{
    return Parser(text, field, var).run();
}

Poly parse_polynomial(std::string_view text, const Field& field, const std::string& var)
{
    RatFunc r = parse_expression(text, field, var);
    if (!r.is_polynomial())
        throw ParseError(ErrorCode::SyntaxError, "expected a polynomial, got " + r.to_string(var), 0);
    return r.as_poly();
}

} // namespace ratdecomp
