#include "lfforge/search.hpp"

#include <ostream>
#include <string>

#include "lfforge/errors.hpp"

namespace lfforge {

bool satisfies_constraints(const ParamSolution& s) {
    return s.h >= 2 && s.k >= 2 && s.k % 2 == 0 && s.n >= 2 && s.g >= 1 &&
           s.h + s.k == s.n + 2 * s.g - 1 && 8 + 4 * s.h - 2 * s.k == 12 * s.n;
}

std::vector<ParamSolution> solve_params(long long h_max, long long k_max) {
    if (h_max < 2 || k_max < 2)
        throw RangeTooSmall("solve_params: need h_max >= 2 and k_max >= 2, got " +
                            std::to_string(h_max) + ", " + std::to_string(k_max));
    std::vector<ParamSolution> out;
    for (long long h = 2; h <= h_max; ++h) {
        for (long long k = 2; k <= k_max; k += 2) {
            // 8 + 4h - 2k = 12n  <=>  2h - k + 4 = 6n
            const long long lhs = 2 * h - k + 4;
            if (lhs % 6 != 0) continue;
            const long long n = lhs / 6;
            if (n < 2) continue;
            const long long t = h + k - n + 1;  // must be positive and even
            if (t <= 0 || t % 2 != 0) continue;
            const ParamSolution s{h, k, n, t / 2};
            if (!satisfies_constraints(s))
                throw ConsistencyViolation("solve_params: candidate fails recheck at h=" +
                                           std::to_string(h) + " k=" + std::to_string(k));
            out.push_back(s);
        }
    }
    return out;
}

long long closed_form_sigma(const ParamSolution& s) { return 8 * s.n - 4 * (s.h + 1); }

long long mirror_sigma(const ParamSolution& s) { return 4 * (s.h + 1) - 8 * s.n; }

std::vector<ParamSolution> nonzero_signature_filter(const std::vector<ParamSolution>& sols) {
    std::vector<ParamSolution> out;
    for (const auto& s : sols)
        if (closed_form_sigma(s) != 0) out.push_back(s);
    return out;
}

SurfaceBundle construct_bundle(const ParamSolution& s) {
    if (!satisfies_constraints(s))
        throw ParamOutOfRange("construct_bundle: (" + std::to_string(s.h) + "," +
                              std::to_string(s.k) + "," + std::to_string(s.n) + "," +
                              std::to_string(s.g) + ") violates the constraint system");
    SurfaceBundle y = glue_difference(x_family(s.h, s.k), knot_surgered_fibration(s.n, s.g));
    if (y.fiber_genus != s.h + s.k)
        throw ConsistencyViolation("construct_bundle: fiber genus " +
                                   std::to_string(y.fiber_genus) + " != h+k");
    if (y.base_genus != 8 * s.h + 2 * s.k + 3)
        throw ConsistencyViolation("construct_bundle: base genus " +
                                   std::to_string(y.base_genus) + " != 8h+2k+3");
    if (y.sigma != closed_form_sigma(s))
        throw ConsistencyViolation("construct_bundle: sigma " + std::to_string(y.sigma) +
                                   " != 8n-4(h+1)");
    y.label = "Y(" + std::to_string(s.h) + "," + std::to_string(s.k) + ")";
    return y;
}

SolutionRow solution_row(const ParamSolution& s) {
    const SurfaceBundle y = construct_bundle(s);
    SolutionRow row;
    row.sol = s;
    row.fiber_genus = y.fiber_genus;
    row.base_genus = y.base_genus;
    row.sigma = y.sigma;
    row.sigma_mirror = mirror_sigma(s);
    row.singular_fibers = 8 * s.h + 2 * s.k + 4;
    return row;
}

std::string geo_tag_name(GeoTag t) {
    switch (t) {
        case GeoTag::lattice_manifold: return "lattice_manifold";
        case GeoTag::line_8chi: return "line_8chi";
        case GeoTag::line_12chi_minus_e: return "line_12chi_minus_e";
    }
    throw Error("geo_tag_name: unknown tag");
}

std::vector<GeographyPoint> geography_emit(long long h, long long k, const Rational& chi_min,
                                           const Rational& chi_max, const Rational& step) {
    if (chi_min > chi_max)
        throw BadRange("geography_emit: chi_min " + chi_min.str() + " > chi_max " + chi_max.str());
    if (step.sign() <= 0) throw BadRange("geography_emit: step must be positive");
    const FibrationDescriptor x = x_family(h, k);

    auto samples = [&] {
        std::vector<Rational> xs;
        for (Rational chi = chi_min; chi < chi_max; chi += step) xs.push_back(chi);
        xs.push_back(chi_max);  // include the right endpoint regardless of step
        return xs;
    }();

    std::vector<GeographyPoint> pts;
    const Rational line8_offset(-4 * (h + 1));
    for (const Rational& chi : samples)
        pts.push_back({chi, Rational(8) * chi + line8_offset, GeoTag::line_8chi});
    const Rational line12_offset(-x.total.e);
    for (const Rational& chi : samples)
        pts.push_back({chi, Rational(12) * chi + line12_offset, GeoTag::line_12chi_minus_e});

    long long first = chi_min.ceil();
    if (first < 1) first = 1;
    for (long long n = first; Rational(n) <= chi_max; ++n)
        pts.push_back({Rational(n), Rational(0), GeoTag::lattice_manifold});

    pts.push_back({x.total.chi_h, Rational(x.total.c1_sq), GeoTag::lattice_manifold});
    return pts;
}

void write_solutions_csv(std::ostream& out, const std::vector<SolutionRow>& rows) {
    out << "h,k,n,g,fiber_genus,base_genus,sigma,sigma_mirror,s_singular_fibers\n";
    for (const auto& r : rows)
        out << r.sol.h << ',' << r.sol.k << ',' << r.sol.n << ',' << r.sol.g << ','
            << r.fiber_genus << ',' << r.base_genus << ',' << r.sigma << ',' << r.sigma_mirror
            << ',' << r.singular_fibers << '\n';
}

void write_geography_csv(std::ostream& out, const std::vector<GeographyPoint>& pts) {
    out << "tag,chi_num,chi_den,c1sq_num,c1sq_den,chi_dec,c1sq_dec\n";
    for (const auto& p : pts)
        out << geo_tag_name(p.tag) << ',' << p.chi_h.num() << ',' << p.chi_h.den() << ','
            << p.c1_sq.num() << ',' << p.c1_sq.den() << ',' << p.chi_h.decimal(6) << ','
            << p.c1_sq.decimal(6) << '\n';
}

}  // namespace lfforge
