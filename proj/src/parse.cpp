#include "multbound/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace multbound {

namespace {

class Scanner {
public:
    Scanner(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    LaurentPolynomial run() {
        int dim = static_cast<int>(vars_.size());
        LaurentPolynomial total(dim);
        skip_ws();
        if (eof()) throw std::invalid_argument("empty polynomial expression");
        bool first = true;
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            total = total + term(sign);
            skip_ws();
            first = false;
        }
        return total;
    }

private:
    const std::string& text_;
    const std::vector<std::string>& vars_;
    size_t pos_ = 0;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) +
                                    ": " + msg + " in '" + text_ + "'");
    }

    LaurentPolynomial term(int sign) {
        int dim = static_cast<int>(vars_.size());
        Rational coeff(sign);
        Exponents exp(dim, 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == '+' || c == '-') break;
            if (c == '*') {
                if (!saw_factor) fail("unexpected '*'");
                ++pos_;
                skip_ws();
                if (eof()) fail("dangling '*'");
                c = peek();
            } else if (saw_factor) {
                // implicit products like "2x" are accepted
            }
            if (c == '(' ) {
                coeff *= parenthesized_rational();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= rational();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                auto [index, e] = variable_power();
                exp[index] += e;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            saw_factor = true;
        }
        if (!saw_factor) fail("empty term");
        return LaurentPolynomial::monomial(dim, exp, coeff);
    }

    Rational parenthesized_rational() {
        ++pos_;  // '('
        skip_ws();
        int sign = 1;
        if (!eof() && peek() == '-') { sign = -1; ++pos_; skip_ws(); }
        Rational r = rational() * sign;
        skip_ws();
        if (eof() || peek() != ')') fail("expected ')'");
        ++pos_;
        return r;
    }

    Rational rational() {
        Int num = integer();
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            skip_ws();
            Int den = integer();
            return make_rational(num, den);
        }
        return Rational(num);
    }

    Int integer() {
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return Int(text_.substr(start, pos_ - start));
    }

    std::pair<int, long> variable_power() {
        size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        int index = -1;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) { index = static_cast<int>(i); break; }
        if (index < 0) fail("unknown variable '" + name + "'");
        long e = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            skip_ws();
            bool paren = false;
            if (!eof() && peek() == '(') { paren = true; ++pos_; skip_ws(); }
            long sign = 1;
            if (!eof() && peek() == '-') { sign = -1; ++pos_; }
            Int v = integer();
            e = sign * to_long(v);
            if (paren) {
                skip_ws();
                if (eof() || peek() != ')') fail("expected ')'");
                ++pos_;
            }
        }
        return {index, e};
    }
};

}  // namespace

LaurentPolynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& variables) {
    if (variables.empty()) throw std::invalid_argument("no variables declared");
    return Scanner(text, variables).run();
}

}  // namespace multbound
