#pragma once

#include "lfforge/rational.hpp"

namespace lfforge {

// Characteristic numbers of a closed oriented 4-manifold, kept mutually
// consistent:
//   chi_h = (e + sigma) / 4       (exact rational)
//   c1_sq = 3*sigma + 2*e
// chi_h may be a non-integer rational; integral_chi records whether
// (e + sigma) is divisible by 4.
struct CharNumbers {
    long long e = 0;
    long long sigma = 0;
    Rational chi_h;
    long long c1_sq = 0;
    bool integral_chi = true;

    friend bool operator==(const CharNumbers&, const CharNumbers&) = default;
};

CharNumbers from_e_sigma(long long e, long long sigma);

// Inverse of the two identities: e = 12*chi_h - c1_sq, sigma = c1_sq - 8*chi_h.
// Throws NonIntegralInvariant if e or sigma would be non-integral.
CharNumbers from_chi_c1(const Rational& chi_h, long long c1_sq);

// Fiber sum along a square-zero surface of genus g >= 1: signatures add,
// Euler characteristics add minus twice e(surface). Equivalently
// c1_sq gains 8(g-1) and chi_h gains (g-1) over the plain sums.
CharNumbers fiber_sum(const CharNumbers& x, const CharNumbers& y, long long g);

}  // namespace lfforge
