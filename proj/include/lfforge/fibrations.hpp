#pragma once

#include <string>

#include "lfforge/char_numbers.hpp"

namespace lfforge {

// A Lefschetz fibration over the sphere: fiber genus, number of nodal
// fibers, whether every vanishing cycle is nonseparating, and the
// characteristic numbers of the total space.
//
// Invariant: total.e == 2*(2 - 2*fiber_genus) + singular_fibers.
struct FibrationDescriptor {
    long long fiber_genus = 1;      // >= 1
    long long singular_fibers = 0;  // >= 0
    bool all_nonseparating = false;
    CharNumbers total;
    std::string label;

    friend bool operator==(const FibrationDescriptor&, const FibrationDescriptor&) = default;
};

// A surface bundle over a surface (no singular fibers).
// Invariant: e == (2 - 2*base_genus) * (2 - 2*fiber_genus).
struct SurfaceBundle {
    long long fiber_genus = 0;
    long long base_genus = 0;
    long long e = 0;
    long long sigma = 0;
    std::string label;

    friend bool operator==(const SurfaceBundle&, const SurfaceBundle&) = default;
};

// X(h,k): genus h+k fibration over the sphere with 8h+2k+4 nonseparating
// nodal fibers and signature -4(h+1). Requires h >= 2 and even k >= 2.
FibrationDescriptor x_family(long long h, long long k);

// E(n): e = 12n, chi_h = n, c1_sq = 0, sigma = -8n. Requires n >= 1.
CharNumbers elliptic_surface(long long n);

// Genus 2g+n-1 fibration on E(n) surgered along a genus-g fibered knot:
// 16n+8g-8 nodal fibers, total-space invariants of E(n). Requires n >= 2
// (NOrderTooSmall below that: the nonseparating guarantee fails) and g >= 0.
FibrationDescriptor knot_surgered_fibration(long long n, long long g);

// Equal fiber genus, equal fiber count, and all cycles nonseparating on
// both sides.
bool equivalent(const FibrationDescriptor& f1, const FibrationDescriptor& f2);

// Glue f1 to orientation-reversed f2 along the complements of the nodal
// fiber neighborhoods. The result fibers over a genus s-1 surface with no
// singular fibers and sigma = sigma(f1) - sigma(f2). Requires
// equivalent(f1, f2) and s >= 1.
SurfaceBundle glue_difference(const FibrationDescriptor& f1, const FibrationDescriptor& f2);

}  // namespace lfforge
