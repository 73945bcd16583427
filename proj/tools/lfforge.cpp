// lfforge: exact calculator and search tool for surface bundles glued from
// pairs of equivalent Lefschetz fibrations over the sphere.
//
// Subcommands: search, family, verify, meyer, geography. See README.md.
// Exit codes: 0 success (MISMATCH findings included), 1 domain error,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lfforge/char_numbers.hpp"
#include "lfforge/errors.hpp"
#include "lfforge/fibrations.hpp"
#include "lfforge/meyer.hpp"
#include "lfforge/search.hpp"
#include "lfforge/symplectic.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lfforge;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

json rational_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

// ---------------------------------------------------------------- search

json solution_row_json(const SolutionRow& r) {
    return json{{"h", r.sol.h},
                {"k", r.sol.k},
                {"n", r.sol.n},
                {"g", r.sol.g},
                {"fiber_genus", r.fiber_genus},
                {"base_genus", r.base_genus},
                {"sigma", r.sigma},
                {"sigma_mirror", r.sigma_mirror},
                {"s_singular_fibers", r.singular_fibers}};
}

void print_solutions_table(std::ostream& out, const std::vector<SolutionRow>& rows) {
    out << "h\tk\tn\tg\tfiber_genus\tbase_genus\tsigma\tsigma_mirror\ts\n";
    for (const auto& r : rows)
        out << r.sol.h << '\t' << r.sol.k << '\t' << r.sol.n << '\t' << r.sol.g << '\t'
            << r.fiber_genus << '\t' << r.base_genus << '\t' << r.sigma << '\t' << r.sigma_mirror
            << '\t' << r.singular_fibers << '\n';
    out << "# " << rows.size() << " solution(s)\n";
}

int run_search(long long h_max, long long k_max, bool nonzero_only, const std::string& format) {
    if (h_max < 2 || k_max < 2) {
        std::cerr << "search: --h-max and --k-max must be >= 2\n";
        return kExitUsage;
    }
    auto sols = solve_params(h_max, k_max);
    if (nonzero_only) sols = nonzero_signature_filter(sols);
    std::vector<SolutionRow> rows;
    rows.reserve(sols.size());
    for (const auto& s : sols) rows.push_back(solution_row(s));

    if (format == "csv") {
        write_solutions_csv(std::cout, rows);
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(solution_row_json(r));
        std::cout << arr.dump(2) << '\n';
    } else {
        print_solutions_table(std::cout, rows);
    }
    return kExitOk;
}

// ---------------------------------------------------------------- family

void print_family_table(std::ostream& out, const FibrationDescriptor& f) {
    out << "label:             " << f.label << '\n'
        << "fiber_genus:       " << f.fiber_genus << '\n'
        << "base:              sphere\n"
        << "singular_fibers:   " << f.singular_fibers << '\n'
        << "all_nonseparating: " << (f.all_nonseparating ? "true" : "false") << '\n'
        << "e:                 " << f.total.e << '\n'
        << "sigma:             " << f.total.sigma << '\n'
        << "chi_h:             " << f.total.chi_h.str() << '\n'
        << "c1_sq:             " << f.total.c1_sq << '\n';
}

int run_family(const FibrationDescriptor& f, const std::string& format) {
    if (format == "csv") {
        std::cout << "label,fiber_genus,base,singular_fibers,all_nonseparating,e,sigma,"
                     "chi_h_num,chi_h_den,c1_sq\n"
                  << f.label << ',' << f.fiber_genus << ",sphere," << f.singular_fibers << ','
                  << (f.all_nonseparating ? "true" : "false") << ',' << f.total.e << ','
                  << f.total.sigma << ',' << f.total.chi_h.num() << ',' << f.total.chi_h.den()
                  << ',' << f.total.c1_sq << '\n';
    } else if (format == "json") {
        json j{{"label", f.label},
               {"fiber_genus", f.fiber_genus},
               {"base", "sphere"},
               {"singular_fibers", f.singular_fibers},
               {"all_nonseparating", f.all_nonseparating},
               {"e", f.total.e},
               {"sigma", f.total.sigma},
               {"chi_h", rational_json(f.total.chi_h)},
               {"c1_sq", f.total.c1_sq}};
        std::cout << j.dump(2) << '\n';
    } else {
        print_family_table(std::cout, f);
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct Claim {
    std::string name;
    long long claimed;
    long long computed;
};

// The two bundled claim sets record the published headline values for the
// constructions at (h,k) = (5,2) and (8,2); every figure is recomputed from
// the formulas and compared.
std::vector<Claim> claim_set_rows(const std::string& id) {
    long long h, k, claimed_fiber, claimed_base, claimed_sigma, claimed_s, claimed_lattice_chi,
        claimed_b, claimed_a, claimed_knot_genus;
    if (id == "4.2") {
        h = 5;
        k = 2;
        claimed_fiber = 7;
        claimed_base = 47;
        claimed_sigma = -8;
        claimed_s = 48;
        claimed_b = 0;
        claimed_a = -24;
        claimed_lattice_chi = 2;
        claimed_knot_genus = 3;
    } else {  // "4.3"
        h = 8;
        k = 2;
        claimed_fiber = 10;
        claimed_base = 75;
        claimed_sigma = -12;
        claimed_s = 76;
        claimed_b = 0;
        claimed_a = -36;
        claimed_lattice_chi = 3;
        claimed_knot_genus = 4;
    }

    const FibrationDescriptor x = x_family(h, k);
    const long long n = (h - k / 2 + 2) / 3;
    const long long g = (h + k - n + 1) / 2;
    const FibrationDescriptor enk = knot_surgered_fibration(n, g);
    const SurfaceBundle y = glue_difference(x, enk);
    if (x.singular_fibers != enk.singular_fibers)
        throw ConsistencyViolation("verify: the two families disagree on fiber count");
    const CharNumbers en = elliptic_surface(n);

    std::vector<Claim> claims;
    claims.push_back({"fiber_genus", claimed_fiber, y.fiber_genus});
    claims.push_back({"base_genus", claimed_base, y.base_genus});
    claims.push_back({"sigma_Y", claimed_sigma, y.sigma});
    claims.push_back({"singular_fibers_both", claimed_s, x.singular_fibers});
    claims.push_back({"b_chi_h_X", claimed_b, x.total.chi_h.num()});  // chi_h(X) is an integer here
    claims.push_back({"a_c1sq_X", claimed_a, x.total.c1_sq});
    claims.push_back({"lattice_chi_h", claimed_lattice_chi, en.chi_h.num()});
    claims.push_back({"lattice_c1sq", 0, en.c1_sq});
    claims.push_back({"knot_genus", claimed_knot_genus, g});
    return claims;
}

int run_verify(const std::string& id, const std::string& format) {
    const auto claims = claim_set_rows(id);
    std::size_t mismatches = 0;
    for (const auto& c : claims)
        if (c.claimed != c.computed) ++mismatches;

    if (format == "csv") {
        std::cout << "claim,claimed,computed,verdict\n";
        for (const auto& c : claims)
            std::cout << c.name << ',' << c.claimed << ',' << c.computed << ','
                      << (c.claimed == c.computed ? "MATCH" : "MISMATCH") << '\n';
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& c : claims)
            arr.push_back(json{{"claim", c.name},
                               {"claimed", c.claimed},
                               {"computed", c.computed},
                               {"verdict", c.claimed == c.computed ? "MATCH" : "MISMATCH"}});
        std::cout << arr.dump(2) << '\n';
    } else {
        for (const auto& c : claims) {
            std::ostringstream line;
            line << (c.claimed == c.computed ? "MATCH    " : "MISMATCH ") << c.name;
            std::string s = line.str();
            if (s.size() < 32) s.resize(32, ' ');
            std::cout << s << " claimed=" << c.claimed << " computed=" << c.computed << '\n';
        }
        std::cout << "# " << id << ": " << (claims.size() - mismatches) << " MATCH, " << mismatches
                  << " MISMATCH\n";
    }
    return kExitOk;  // a MISMATCH is a finding, not a failure
}

// ---------------------------------------------------------------- meyer

std::vector<long long> parse_int_list(const std::string& text) {
    std::string cleaned = text;
    for (char& ch : cleaned)
        if (ch == ',') ch = ' ';
    std::istringstream is(cleaned);
    std::vector<long long> out;
    long long v;
    while (is >> v) out.push_back(v);
    if (!is.eof()) throw Error("malformed integer list: '" + text + "'");
    return out;
}

int run_meyer_sig(const std::string& path, const std::string& format) {
    const TwistWord w = read_twist_word_file(path);
    const long long sig = signature_from_word(w);
    if (format == "json")
        std::cout << json{{"signature", sig}}.dump(2) << '\n';
    else if (format == "csv")
        std::cout << "signature\n" << sig << '\n';
    else
        std::cout << sig << '\n';
    return kExitOk;
}

int run_meyer_product(const std::string& path, const std::string& format) {
    const TwistWord w = read_twist_word_file(path);
    const SympMatrix p = word_product(w);
    if (format == "json") {
        json rows = json::array();
        for (long long i = 0; i < p.dim(); ++i) {
            json row = json::array();
            for (long long j = 0; j < p.dim(); ++j) row.push_back(p.at(i, j));
            rows.push_back(row);
        }
        std::cout << json{{"g", p.genus()}, {"matrix", rows}}.dump(2) << '\n';
    } else if (format == "csv") {
        for (long long i = 0; i < p.dim(); ++i) {
            for (long long j = 0; j < p.dim(); ++j) {
                if (j) std::cout << ',';
                std::cout << p.at(i, j);
            }
            std::cout << '\n';
        }
    } else {
        std::cout << p.str();
    }
    return kExitOk;
}

int run_meyer_tau(long long g, const std::string& a_text, const std::string& b_text,
                  const std::string& format) {
    const SympMatrix a = SympMatrix::from_entries(g, parse_int_list(a_text));
    const SympMatrix b = SympMatrix::from_entries(g, parse_int_list(b_text));
    const long long tau = meyer_tau(a, b);
    if (format == "json")
        std::cout << json{{"tau", tau}}.dump(2) << '\n';
    else if (format == "csv")
        std::cout << "tau\n" << tau << '\n';
    else
        std::cout << tau << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------- geography

int run_geography(long long h, long long k, const Rational& chi_min, const Rational& chi_max,
                  const Rational& step, const std::string& out_path) {
    const auto pts = geography_emit(h, k, chi_min, chi_max, step);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "geography: cannot open '" << out_path << "' for writing\n";
        return kExitDomain;
    }
    write_geography_csv(out, pts);
    if (!out.flush()) {
        std::cerr << "geography: write to '" << out_path << "' failed\n";
        return kExitDomain;
    }
    std::cout << "wrote " << pts.size() << " rows to " << out_path << '\n';
    return kExitOk;
}

// A rational CLI argument: "3", "-1/2", or a plain decimal like "0.25".
Rational parse_rational_arg(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string frac = text.substr(dot + 1);
        if (frac.size() > 18) throw Error("too many decimal digits: '" + text + "'");
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        long long whole = std::stoll(text.substr(0, dot) + frac);
        return Rational(whole, den);
    }
    return Rational(std::stoll(text));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact surface-bundle calculator: fibration families, gluing, "
                 "parameter search, and a symplectic signature oracle"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->envname("LF_FORGE_FORMAT");

    // search
    auto* search_cmd = app.add_subcommand("search", "enumerate parameter solutions and bundles");
    search_cmd->fallthrough();
    long long h_max = 0, k_max = 0;
    bool nonzero_only = false;
    search_cmd->add_option("--h-max", h_max, "upper bound for h")->required();
    search_cmd->add_option("--k-max", k_max, "upper bound for k")->required();
    search_cmd->add_flag("--nonzero-only", nonzero_only, "keep only nonzero-signature bundles");

    // family
    auto* family_cmd = app.add_subcommand("family", "print one fibration descriptor");
    family_cmd->fallthrough();
    family_cmd->set_help_flag("--help", "print help");  // frees -h for the --h option
    std::string which;
    long long fam_h = 0, fam_k = 0, fam_n = 0, fam_g = 0;
    family_cmd->add_option("which", which, "x | enk")->required()
        ->check(CLI::IsMember({"x", "enk"}));
    family_cmd->add_option("--h", fam_h, "h (x family)");
    family_cmd->add_option("--k", fam_k, "k (x family)");
    family_cmd->add_option("--n", fam_n, "n (enk family)");
    family_cmd->add_option("--g", fam_g, "knot genus (enk family)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "recompute a bundled claim set");
    verify_cmd->fallthrough();
    std::string claim_id;
    verify_cmd->add_option("id", claim_id, "claim set: 4.2 | 4.3")->required();

    // meyer
    auto* meyer_cmd = app.add_subcommand("meyer", "symplectic monodromy computations");
    meyer_cmd->fallthrough();
    meyer_cmd->require_subcommand(1);
    auto* sig_cmd = meyer_cmd->add_subcommand("sig", "signature of a closed monodromy word");
    sig_cmd->fallthrough();
    auto* product_cmd = meyer_cmd->add_subcommand("product", "total symplectic matrix of a word");
    product_cmd->fallthrough();
    auto* tau_cmd = meyer_cmd->add_subcommand("tau", "cocycle value of two inline matrices");
    tau_cmd->fallthrough();
    std::string word_path;
    sig_cmd->add_option("word_file", word_path, "twist word file")->required();
    std::string product_path;
    product_cmd->add_option("word_file", product_path, "twist word file")->required();
    long long tau_g = 0;
    std::string tau_a, tau_b;
    tau_cmd->add_option("--g", tau_g, "genus")->required();
    tau_cmd->add_option("--a", tau_a, "first matrix, 4g^2 row-major integers")->required();
    tau_cmd->add_option("--b", tau_b, "second matrix, 4g^2 row-major integers")->required();

    // geography
    auto* geo_cmd = app.add_subcommand("geography", "emit lattice/line sample CSV");
    geo_cmd->fallthrough();
    geo_cmd->set_help_flag("--help", "print help");
    long long geo_h = 0, geo_k = 0;
    std::string chi_min_s, chi_max_s, step_s = "1", out_path;
    geo_cmd->add_option("--h", geo_h, "h of the x-family fibration")->required();
    geo_cmd->add_option("--k", geo_k, "k of the x-family fibration")->required();
    geo_cmd->add_option("--chi-min", chi_min_s, "left end of chi range (rational)")->required();
    geo_cmd->add_option("--chi-max", chi_max_s, "right end of chi range (rational)")->required();
    geo_cmd->add_option("--step", step_s, "sample step (rational, default 1)");
    geo_cmd->add_option("--out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*search_cmd) return run_search(h_max, k_max, nonzero_only, format);
        if (*family_cmd) {
            if (which == "x") {
                if (family_cmd->count("--h") == 0 || family_cmd->count("--k") == 0) {
                    std::cerr << "family x: --h and --k are required\n";
                    return kExitUsage;
                }
                return run_family(x_family(fam_h, fam_k), format);
            }
            if (family_cmd->count("--n") == 0 || family_cmd->count("--g") == 0) {
                std::cerr << "family enk: --n and --g are required\n";
                return kExitUsage;
            }
            return run_family(knot_surgered_fibration(fam_n, fam_g), format);
        }
        if (*verify_cmd) {
            if (claim_id != "4.2" && claim_id != "4.3") {
                std::cerr << "verify: unknown claim set '" << claim_id << "' (use 4.2 or 4.3)\n";
                return kExitUsage;
            }
            return run_verify(claim_id, format);
        }
        if (*meyer_cmd) {
            if (*sig_cmd) return run_meyer_sig(word_path, format);
            if (*product_cmd) return run_meyer_product(product_path, format);
            return run_meyer_tau(tau_g, tau_a, tau_b, format);
        }
        if (*geo_cmd) {
            Rational chi_min, chi_max, step;
            try {
                chi_min = parse_rational_arg(chi_min_s);
                chi_max = parse_rational_arg(chi_max_s);
                step = parse_rational_arg(step_s);
            } catch (const std::exception& e) {
                std::cerr << "geography: bad rational argument: " << e.what() << '\n';
                return kExitUsage;
            }
            if (chi_min > chi_max || step.sign() <= 0) {
                std::cerr << "geography: need chi_min <= chi_max and step > 0\n";
                return kExitUsage;
            }
            return run_geography(geo_h, geo_k, chi_min, chi_max, step, out_path);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
