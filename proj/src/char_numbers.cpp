#include "lfforge/char_numbers.hpp"

#include <limits>
#include <string>

#include "lfforge/errors.hpp"

namespace lfforge {

namespace {

long long narrow(__int128 v, const char* what) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw OverflowError(std::string(what) + " overflowed 64 bits");
    return static_cast<long long>(v);
}

}  // namespace

CharNumbers from_e_sigma(long long e, long long sigma) {
    CharNumbers c;
    c.e = e;
    c.sigma = sigma;
    c.chi_h = Rational(e, 4) + Rational(sigma, 4);
    c.c1_sq = narrow(3 * static_cast<__int128>(sigma) + 2 * static_cast<__int128>(e), "c1_sq");
    c.integral_chi = c.chi_h.is_integer();
    return c;
}

CharNumbers from_chi_c1(const Rational& chi_h, long long c1_sq) {
    const Rational e = Rational(12) * chi_h - Rational(c1_sq);
    const Rational sigma = Rational(c1_sq) - Rational(8) * chi_h;
    if (!e.is_integer())
        throw NonIntegralInvariant("e = 12*chi_h - c1_sq = " + e.str() + " is not an integer");
    if (!sigma.is_integer())
        throw NonIntegralInvariant("sigma = c1_sq - 8*chi_h = " + sigma.str() +
                                   " is not an integer");
    return from_e_sigma(e.num(), sigma.num());
}

CharNumbers fiber_sum(const CharNumbers& x, const CharNumbers& y, long long g) {
    if (g < 1)
        throw GenusOutOfRange("fiber_sum: surface genus must be >= 1, got " + std::to_string(g));
    // e(surface) = 2 - 2g is removed twice from the disjoint union.
    const long long e = narrow(static_cast<__int128>(x.e) + y.e - 2 * (2 - 2 * static_cast<__int128>(g)),
                               "fiber_sum e");
    const long long sigma = narrow(static_cast<__int128>(x.sigma) + y.sigma, "fiber_sum sigma");
    return from_e_sigma(e, sigma);
}

}  // namespace lfforge
