#pragma once
// Exact rational arithmetic on 64-bit numerator/denominator, plus the
// extended line (rationals together with -inf/+inf).  All barcode geometry
// in the library is done with these; no floating point anywhere.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tda {

// Thrown on malformed or inconsistent user input (parse errors, shape
// mismatches, invariant violations).  Distinct from logic_error so callers
// can map it to a dedicated exit code.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    static Rational parse(const std::string& s);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    bool is_zero() const { return num_ == 0; }

    std::string str() const;

private:
    std::int64_t num_;
    std::int64_t den_;  // > 0, gcd(|num|, den) = 1
};

// A rational or +-infinity.  Infinite endpoints of intervals and infinite
// distances are both carried by this type.
class Ext {
public:
    Ext() : cls_(0), v_() {}
    Ext(Rational v) : cls_(0), v_(v) {}
    Ext(std::int64_t v) : cls_(0), v_(v) {}

    static Ext pos_inf() { Ext e; e.cls_ = 1; return e; }
    static Ext neg_inf() { Ext e; e.cls_ = -1; return e; }
    static Ext parse(const std::string& s);

    bool finite() const { return cls_ == 0; }
    bool is_pos_inf() const { return cls_ == 1; }
    bool is_neg_inf() const { return cls_ == -1; }
    const Rational& value() const;

    bool operator==(const Ext& o) const { return cls_ == o.cls_ && (cls_ != 0 || v_ == o.v_); }
    bool operator!=(const Ext& o) const { return !(*this == o); }
    bool operator<(const Ext& o) const;
    bool operator<=(const Ext& o) const { return *this < o || *this == o; }
    bool operator>(const Ext& o) const { return o < *this; }
    bool operator>=(const Ext& o) const { return o <= *this; }

    // Shift by a finite amount; infinities are fixed points.
    Ext operator+(const Rational& r) const;
    Ext operator-(const Rational& r) const { return *this + (-r); }

    std::string str() const;

private:
    int cls_;  // -1, 0, +1
    Rational v_;
};

// |a - b| on the extended line.  Same-signed infinities are at distance 0,
// an infinite endpoint is at distance +inf from everything else.  This is
// the convention used by all endpoint comparisons in interleaving checks.
Ext gap(const Ext& a, const Ext& b);

// x <= t, where t = +inf is read as a limit: true iff x is finite.  Used
// when probing matching feasibility "at epsilon large enough".
bool le_limit(const Ext& x, const Ext& t);

}  // namespace tda
