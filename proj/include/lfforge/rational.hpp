#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lfforge/errors.hpp"

namespace lfforge {

// Exact rational number, always stored reduced with a positive denominator.
// Backed by an arbitrary-precision integer, so arithmetic never overflows
// and never rounds. The num()/den()/floor()/ceil() accessors narrow to 64
// bits and throw OverflowError when the reduced value no longer fits;
// str() and decimal() have no such limit.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d);
    Rational(Int n, Int d);

    long long num() const;
    long long den() const;
    const Int& num_big() const { return num_; }
    const Int& den_big() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_.sign(); }

    long long floor() const;
    long long ceil() const;

    // "3", "-5/4"
    std::string str() const;
    // Fixed-point decimal with the given number of fractional digits,
    // rounded half away from zero. Exact integer arithmetic throughout,
    // so output bytes are platform independent.
    std::string decimal(int digits) const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Values are canonical, so equality is componentwise.
    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace lfforge
