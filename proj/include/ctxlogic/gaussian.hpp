// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_GAUSSIAN_HPP
#define CTXLOGIC_GAUSSIAN_HPP

#include <string>
#include <string_view>

#include "ctxlogic/rational.hpp"

namespace ctxlogic {

/// Complex number with exact rational real and imaginary parts.
/// The scalar field of every projector and ray in this library.
class GaussianRational {
public:
    constexpr GaussianRational() = default;
    GaussianRational(Rational re) : re_(re) {} // NOLINT: implicit by design
    GaussianRational(std::int64_t re) : re_(re) {} // NOLINT
    GaussianRational(Rational re, Rational im) : re_(re), im_(im) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2 = re^2 + im^2, an exact rational.
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Canonical literal: "0", "3", "-1/2", "i", "-i", "2/3*i", "1+i", "1/2-3/4*i".
    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

/// Fixed total order used for canonical sorting (re first, then im).
/// Returns <0, 0 or >0.
int compare(const GaussianRational& a, const GaussianRational& b);

/// Parses the whitespace-free literal syntax: "a/b", "a", "i", "-i",
/// "a/b+c/d*i", "a-c*i" and the obvious variants. Throws ParseError.
GaussianRational parse_gaussian(std::string_view text);

} // namespace ctxlogic

#endif
