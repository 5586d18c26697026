#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace sicrank {

/// Exact arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(int value) : q_(value) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Exact value of a finite double (every finite double is a dyadic rational).
    static Rational from_double(double value);
    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    std::string to_string() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }
    std::string numerator_string() const { return q_.get_num().get_str(); }
    std::string denominator_string() const { return q_.get_den().get_str(); }

    bool is_integer() const { return q_.get_den() == 1; }
    Rational ceil() const;
    Rational floor() const;
    /// Value of an integral rational that fits in int64; throws otherwise.
    std::int64_t to_int64() const;

    int sign() const { return sgn(q_); }
    Rational abs() const { return Rational(::abs(q_)); }
    Rational reciprocal() const;

    const mpq_class& raw() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_;
};

} // namespace sicrank
