#include "enriques/algebra/parse.hpp"

#include <cctype>
#include <string>

#include "enriques/errors.hpp"

namespace enriques::algebra {

namespace {

class Parser {
public:
    Parser(std::string_view text, const FiniteField& f) : text_(text), field_(f) {}

    RatFunc parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty expression");
        RatFunc r = expr();
        skip_space();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        int line = 1, column = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(what, line, column);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (accept('+') || accept('-')) {
                r += term();
            } else {
                return r;
            }
        }
    }

    RatFunc term() {
        RatFunc r = power();
        for (;;) {
            if (accept('*')) {
                r *= power();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                RatFunc d = power();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RatFunc power() {
        RatFunc base = atom();
        if (!accept('^')) return base;
        skip_space();
        const bool negative = accept('-');
        skip_space();
        const std::size_t at = pos_;
        const unsigned long e = integer();
        if (e > 100000) {
            pos_ = at;
            fail("exponent too large");
        }
        if (negative && base.is_zero()) {
            pos_ = at;
            fail("negative power of zero");
        }
        return base.pow(negative ? -static_cast<int>(e) : static_cast<int>(e));
    }

    unsigned long integer() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 1000000000UL) fail("integer too large");
            ++pos_;
        }
        return v;
    }

    RatFunc atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            ++pos_;
            return atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RatFunc::constant(field_, static_cast<Raw>(integer() % 2));
        }
        if (c >= 'a' && c <= 'z') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                           std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "w") {
                if (field_.is_prime()) {
                    pos_ = start;
                    fail("the constant w needs a field extension (k >= 2)");
                }
                return RatFunc::constant(field_, field_.generator());
            }
            return RatFunc(Poly::variable(field_, name));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    FiniteField field_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const FiniteField& field) { return Parser(text, field).parse(); }

Poly parse_poly(std::string_view text, const FiniteField& field) {
    RatFunc r = parse_ratfunc(text, field);
    if (!r.is_polynomial()) throw ParseError("expected a polynomial, got " + r.to_string(), 1, 1);
    return r.num();
}

}  // namespace enriques::algebra
