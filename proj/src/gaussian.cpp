// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/gaussian.hpp"

#include <cctype>
#include <cstdlib>

namespace ctxlogic {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm_sq();
    if (n.is_zero()) throw InvalidInputError("division by zero Gaussian rational");
    GaussianRational c = o.conj();
    *this *= c;
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();

    auto imag_part = [](const Rational& v) -> std::string {
        if (v == Rational(1)) return "i";
        if (v == Rational(-1)) return "-i";
        return v.to_string() + "*i";
    };

    if (re_.is_zero()) return imag_part(im_);
    if (im_.sign() > 0) return re_.to_string() + "+" + imag_part(im_);
    // imag_part already carries the minus sign
    return re_.to_string() + imag_part(im_);
}

int compare(const GaussianRational& a, const GaussianRational& b) {
    if (a.re() < b.re()) return -1;
    if (b.re() < a.re()) return 1;
    if (a.im() < b.im()) return -1;
    if (b.im() < a.im()) return 1;
    return 0;
}

namespace {

// Scanner over the literal grammar:
//   gaussian := term [ ('+'|'-') term ]
//   term     := sign? ( 'i' | number ( '*'? 'i' | 'i' )? )
//   number   := digits [ '/' digits ]
// A term is imaginary iff it ends in 'i'.
class LiteralScanner {
public:
    explicit LiteralScanner(std::string_view text) : text_(text) {}

    GaussianRational parse() {
        if (text_.empty()) throw ParseError("empty scalar literal", 0);
        Rational re(0);
        Rational im(0);
        bool saw_real = false;
        bool saw_imag = false;

        parse_term(re, im, saw_real, saw_imag, /*leading=*/true);
        if (!done()) {
            char c = peek();
            if (c != '+' && c != '-') {
                throw ParseError("expected '+', '-' or end of scalar literal", pos_);
            }
            parse_term(re, im, saw_real, saw_imag, /*leading=*/false);
        }
        if (!done()) throw ParseError("trailing characters in scalar literal", pos_);
        return {re, im};
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void parse_term(Rational& re, Rational& im, bool& saw_real, bool& saw_imag,
                    bool leading) {
        std::size_t start = pos_;
        int sign = 1;
        if (!done() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++pos_;
        }
        if (done()) throw ParseError("dangling sign in scalar literal", pos_);

        bool imaginary = false;
        Rational magnitude(1);
        if (peek() == 'i') {
            ++pos_;
            imaginary = true;
        } else {
            magnitude = parse_number();
            if (!done() && (peek() == '*' || peek() == 'i')) {
                if (peek() == '*') {
                    ++pos_;
                    if (done() || peek() != 'i') {
                        throw ParseError("expected 'i' after '*'", pos_);
                    }
                }
                ++pos_; // consume 'i'
                imaginary = true;
            }
        }

        Rational value = (sign < 0) ? -magnitude : magnitude;
        if (imaginary) {
            if (saw_imag) throw ParseError("duplicate imaginary part", start);
            im = value;
            saw_imag = true;
        } else {
            if (!leading || saw_real) throw ParseError("duplicate real part", start);
            re = value;
            saw_real = true;
        }
    }

    Rational parse_number() {
        std::int64_t num = parse_digits();
        if (!done() && peek() == '/') {
            ++pos_;
            std::size_t den_at = pos_;
            std::int64_t den = parse_digits();
            if (den == 0) throw ParseError("zero denominator", den_at);
            return {num, den};
        }
        return num;
    }

    std::int64_t parse_digits() {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected digits", pos_);
        }
        std::int64_t v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            int d = peek() - '0';
            if (v > (INT64_MAX - d) / 10) throw ParseError("integer literal too large", pos_);
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

GaussianRational parse_gaussian(std::string_view text) {
    return LiteralScanner(text).parse();
}

} // namespace ctxlogic
