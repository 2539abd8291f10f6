// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/rational.hpp"

#include <limits>
#include <numeric>

namespace ctxlogic {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError(std::string("exact arithmetic overflow in ") + what);
    }
    return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidInputError("rational with zero denominator");
    Wide n = num;
    Wide d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n, "rational construction");
    den_ = narrow(d, "rational construction");
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-Wide(num_), "negation");
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    Wide n = Wide(num_) * o.den_ + Wide(o.num_) * den_;
    Wide d = Wide(den_) * o.den_;
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n, "addition");
    den_ = narrow(d, "addition");
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
    if (num_ == 0 || o.num_ == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    // Cross-reduce before multiplying to keep intermediates small.
    Wide g1 = wide_gcd(num_, o.den_);
    Wide g2 = wide_gcd(o.num_, den_);
    Wide n = (Wide(num_) / g1) * (Wide(o.num_) / g2);
    Wide d = (Wide(den_) / g2) * (Wide(o.den_) / g1);
    num_ = narrow(n, "multiplication");
    den_ = narrow(d, "multiplication");
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw InvalidInputError("division by zero rational");
    Rational inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
        inv.num_ = narrow(-Wide(inv.num_), "division");
        inv.den_ = narrow(-Wide(inv.den_), "division");
    }
    return *this *= inv;
}

bool operator<(const Rational& a, const Rational& b) {
    return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace ctxlogic
