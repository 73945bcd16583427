#pragma once

#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lfforge/symplectic.hpp"

namespace testsupport {

inline std::vector<long long> random_primitive_vector(std::mt19937& rng, long long g) {
    std::uniform_int_distribution<long long> entry(-2, 2);
    for (;;) {
        std::vector<long long> v(static_cast<std::size_t>(2 * g));
        long long gg = 0;
        for (auto& x : v) {
            x = entry(rng);
            gg = std::gcd(gg, x < 0 ? -x : x);
        }
        if (gg == 1) return v;
    }
}

inline lfforge::SympMatrix random_transvection_product(std::mt19937& rng, long long g,
                                                       int max_factors) {
    std::uniform_int_distribution<int> nf(1, max_factors);
    const int n = nf(rng);
    auto m = lfforge::transvection(g, random_primitive_vector(rng, g));
    for (int i = 1; i < n; ++i)
        m = lfforge::transvection(g, random_primitive_vector(rng, g)) * m;
    return m;
}

struct CmdResult {
    int status = -1;
    std::string output;
};

// Runs a shell command, capturing stdout+stderr and the exit status.
inline CmdResult run_cmd(const std::string& cmd) {
    CmdResult r;
    const std::string full = cmd + " 2>&1";
    FILE* p = popen(full.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, got);
    const int rc = pclose(p);
    if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
    return r;
}

inline std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace testsupport
