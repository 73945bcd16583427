#include "lfforge/rational.hpp"

#include <limits>
#include <ostream>
#include <utility>

namespace lfforge {

namespace {

using Int = Rational::Int;

long long narrow64(const Int& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw OverflowError(std::string(what) + " does not fit in 64 bits");
    return v.convert_to<long long>();
}

}  // namespace

Rational::Rational(Int n, Int d) {
    if (d == 0) throw Error("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        den_ = 1;
        return;
    }
    const Int g = boost::multiprecision::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

Rational::Rational(long long n, long long d) : Rational(Int(n), Int(d)) {}

long long Rational::num() const { return narrow64(num_, "numerator"); }

long long Rational::den() const { return narrow64(den_, "denominator"); }

long long Rational::floor() const {
    const Int q = num_ / den_;  // truncates toward zero
    return narrow64(num_ >= 0 || q * den_ == num_ ? q : q - 1, "floor");
}

long long Rational::ceil() const {
    const Int q = num_ / den_;
    return narrow64(num_ <= 0 || q * den_ == num_ ? q : q + 1, "ceil");
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

std::string Rational::decimal(int digits) const {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const Int n = boost::multiprecision::abs(num_) * scale;
    Int q = n / den_;
    const Int r = n % den_;
    if (2 * r >= den_) ++q;  // round half away from zero
    std::string frac;
    for (int i = 0; i < digits; ++i) {
        frac += static_cast<char>('0' + (q % 10).convert_to<int>());
        q /= 10;
    }
    std::string out = num_ < 0 ? "-" : "";
    out += q.str();
    if (digits > 0) {
        out += '.';
        out.append(frac.rbegin(), frac.rend());
    }
    return out;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lfforge
