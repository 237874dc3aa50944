#include "tda/rational.hpp"

#include <numeric>

namespace tda {

namespace {

using i128 = __int128;

std::int64_t checked64(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw input_error(std::string("rational overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw input_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            std::int64_t n = std::stoll(s, &used);
            if (used != s.size()) throw input_error("bad rational: " + s);
            return Rational(n);
        }
        std::int64_t n = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw input_error("bad rational: " + s);
        std::int64_t d = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1) throw input_error("bad rational: " + s);
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw input_error("bad rational: " + s);
    } catch (const std::out_of_range&) {
        throw input_error("rational out of range: " + s);
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    // Reduce in 128 bits before the range check so x/6 + y/10 style sums
    // don't overflow spuriously.
    i128 a = n < 0 ? -n : n, b = d;
    while (b) { i128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    Rational r;
    r.num_ = checked64(n, "+");
    r.den_ = checked64(d, "+");
    return r;
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    i128 n = i128(num_) * o.num_;
    i128 d = i128(den_) * o.den_;
    i128 a = n < 0 ? -n : n, b = d;
    while (b) { i128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    Rational r;
    r.num_ = checked64(n, "*");
    r.den_ = checked64(d, "*");
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw input_error("rational division by zero");
    Rational inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this * inv;
}

bool Rational::operator<(const Rational& o) const {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Ext Ext::parse(const std::string& s) {
    if (s == "inf" || s == "+inf") return pos_inf();
    if (s == "-inf") return neg_inf();
    return Ext(Rational::parse(s));
}

const Rational& Ext::value() const {
    if (cls_ != 0) throw std::logic_error("value() on infinite Ext");
    return v_;
}

bool Ext::operator<(const Ext& o) const {
    if (cls_ != o.cls_) return cls_ < o.cls_;
    if (cls_ != 0) return false;
    return v_ < o.v_;
}

Ext Ext::operator+(const Rational& r) const {
    if (cls_ != 0) return *this;
    return Ext(v_ + r);
}

std::string Ext::str() const {
    if (cls_ == 1) return "inf";
    if (cls_ == -1) return "-inf";
    return v_.str();
}

Ext gap(const Ext& a, const Ext& b) {
    if (!a.finite() || !b.finite())
        return a == b ? Ext(Rational(0)) : Ext::pos_inf();
    return Ext((a.value() - b.value()).abs());
}

bool le_limit(const Ext& x, const Ext& t) {
    if (t.is_pos_inf()) return !x.is_pos_inf();
    return x <= t;
}

}  // namespace tda
