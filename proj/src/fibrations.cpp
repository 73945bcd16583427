#include "lfforge/fibrations.hpp"

#include <string>

#include "lfforge/errors.hpp"

namespace lfforge {

namespace {

// total.e of a fibration over the sphere with s nodal fibers.
long long sphere_fibration_euler(long long fiber_genus, long long s) {
    return 2 * (2 - 2 * fiber_genus) + s;
}

}  // namespace

FibrationDescriptor x_family(long long h, long long k) {
    if (h < 2)
        throw ParamOutOfRange("x_family: h must be >= 2, got " + std::to_string(h));
    if (k < 2 || k % 2 != 0)
        throw ParamOutOfRange("x_family: k must be an even integer >= 2, got " + std::to_string(k));

    FibrationDescriptor f;
    f.fiber_genus = h + k;
    f.singular_fibers = 8 * h + 2 * k + 4;
    f.all_nonseparating = true;
    f.total = from_e_sigma(sphere_fibration_euler(f.fiber_genus, f.singular_fibers), -4 * (h + 1));
    f.label = "X(" + std::to_string(h) + "," + std::to_string(k) + ")";

    if (f.total.e != 8 + 4 * h - 2 * k || f.total.chi_h != Rational(2 - k, 2) ||
        f.total.c1_sq != -4 * (h + k - 1))
        throw ConsistencyViolation("x_family: derived invariants disagree for " + f.label);
    return f;
}

CharNumbers elliptic_surface(long long n) {
    if (n < 1)
        throw ParamOutOfRange("elliptic_surface: n must be >= 1, got " + std::to_string(n));
    return from_e_sigma(12 * n, -8 * n);
}

FibrationDescriptor knot_surgered_fibration(long long n, long long g) {
    if (n < 2)
        throw NOrderTooSmall("knot_surgered_fibration: n must be >= 2, got " + std::to_string(n));
    if (g < 0)
        throw ParamOutOfRange("knot_surgered_fibration: knot genus must be >= 0, got " +
                              std::to_string(g));
    if (2 * g + n - 1 < 1)
        throw ParamOutOfRange("knot_surgered_fibration: fiber genus 2g+n-1 must be >= 1");

    FibrationDescriptor f;
    f.fiber_genus = 2 * g + n - 1;
    f.singular_fibers = 16 * n + 8 * g - 8;
    f.all_nonseparating = true;
    f.total = elliptic_surface(n);  // surgery preserves e and sigma
    f.label = "E(" + std::to_string(n) + ")_K[g=" + std::to_string(g) + "]";

    if (f.total.e != sphere_fibration_euler(f.fiber_genus, f.singular_fibers))
        throw ConsistencyViolation("knot_surgered_fibration: Euler count disagrees for " + f.label);
    return f;
}

bool equivalent(const FibrationDescriptor& f1, const FibrationDescriptor& f2) {
    return f1.fiber_genus == f2.fiber_genus && f1.singular_fibers == f2.singular_fibers &&
           f1.all_nonseparating && f2.all_nonseparating;
}

SurfaceBundle glue_difference(const FibrationDescriptor& f1, const FibrationDescriptor& f2) {
    if (!equivalent(f1, f2))
        throw NotEquivalent("glue_difference: " + f1.label + " and " + f2.label +
                            " are not equivalent fibrations");
    const long long s = f1.singular_fibers;
    if (s < 1) throw NotEquivalent("glue_difference: need at least one singular fiber");

    SurfaceBundle y;
    y.fiber_genus = f1.fiber_genus;
    y.base_genus = s - 1;
    y.sigma = f1.total.sigma - f2.total.sigma;  // Novikov additivity
    y.e = (2 - 2 * y.base_genus) * (2 - 2 * y.fiber_genus);
    y.label = f1.label + " - " + f2.label;
    return y;
}

}  // namespace lfforge
