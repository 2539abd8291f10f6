// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_RATIONAL_HPP
#define CTXLOGIC_RATIONAL_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "ctxlogic/error.hpp"

namespace ctxlogic {

/// Exact rational number. Stored fully reduced with a positive denominator,
/// so structural equality is value equality. Intermediate products run in
/// 128-bit arithmetic; a result outside the 64-bit range throws OverflowError.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n) {} // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "n" when integral, "n/d" otherwise.
    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace ctxlogic

template <>
struct std::hash<ctxlogic::Rational> {
    std::size_t operator()(const ctxlogic::Rational& r) const noexcept {
        std::size_t h = std::hash<std::int64_t>{}(r.numerator());
        return h * 1000003u ^ std::hash<std::int64_t>{}(r.denominator());
    }
};

#endif
