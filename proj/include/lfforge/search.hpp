#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lfforge/fibrations.hpp"
#include "lfforge/rational.hpp"

namespace lfforge {

// A parameter quadruple satisfying the bundle-construction constraint
// system:
//   h >= 2,  k >= 2 even,  n >= 2,  g >= 1,
//   h + k == n + 2g - 1,
//   8 + 4h - 2k == 12n.
struct ParamSolution {
    long long h = 0, k = 0, n = 0, g = 0;

    friend bool operator==(const ParamSolution&, const ParamSolution&) = default;
};

// Re-checks every constraint above from scratch.
bool satisfies_constraints(const ParamSolution& s);

// All solutions with 2 <= h <= h_max and 2 <= k <= k_max, ordered
// lexicographically by (h, k). Exhaustive grid scan, deterministic.
// Throws RangeTooSmall if either bound is below 2.
std::vector<ParamSolution> solve_params(long long h_max, long long k_max);

long long closed_form_sigma(const ParamSolution& s);  // 8n - 4(h+1)
long long mirror_sigma(const ParamSolution& s);       // 4(h+1) - 8n, factors swapped

// Keeps exactly the solutions whose bundle signature 8n - 4(h+1) is nonzero.
std::vector<ParamSolution> nonzero_signature_filter(const std::vector<ParamSolution>& sols);

// Builds Y(h,k) = X(h,k) - E(n)_K via glue_difference and cross-checks the
// closed forms: fiber genus h+k, base genus 8h+2k+3, sigma 8n-4(h+1).
// Any disagreement throws ConsistencyViolation.
SurfaceBundle construct_bundle(const ParamSolution& s);

// One row of the solutions table: the quadruple joined with its bundle.
struct SolutionRow {
    ParamSolution sol;
    long long fiber_genus = 0;
    long long base_genus = 0;
    long long sigma = 0;
    long long sigma_mirror = 0;
    long long singular_fibers = 0;
};
SolutionRow solution_row(const ParamSolution& s);

enum class GeoTag { lattice_manifold, line_8chi, line_12chi_minus_e };
std::string geo_tag_name(GeoTag t);

struct GeographyPoint {
    Rational chi_h;
    Rational c1_sq;
    GeoTag tag = GeoTag::lattice_manifold;

    friend bool operator==(const GeographyPoint&, const GeographyPoint&) = default;
};

// Samples, over [chi_min, chi_max] at the given step (both endpoints always
// included):
//   line_8chi:            c1^2 = 8 chi - 4(h+1)
//   line_12chi_minus_e:   c1^2 = 12 chi - e(X(h,k))
// plus the integer lattice points (n, 0) with n >= 1 in range, and the
// (chi_h, c1^2) point of X(h,k) itself (tagged lattice_manifold, emitted
// last). Throws BadRange for an empty range or nonpositive step.
std::vector<GeographyPoint> geography_emit(long long h, long long k, const Rational& chi_min,
                                           const Rational& chi_max, const Rational& step);

// CSV schemas, byte-deterministic:
//   solutions: h,k,n,g,fiber_genus,base_genus,sigma,sigma_mirror,s_singular_fibers
//   geography: tag,chi_num,chi_den,c1sq_num,c1sq_den,chi_dec,c1sq_dec
// Decimal columns carry exactly six fractional digits.
void write_solutions_csv(std::ostream& out, const std::vector<SolutionRow>& rows);
void write_geography_csv(std::ostream& out, const std::vector<GeographyPoint>& pts);

}  // namespace lfforge
