#include "lfforge/symplectic.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace lfforge {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw OverflowError("symplectic matrix arithmetic overflowed 64 bits");
    return static_cast<long long>(v);
}

void check_genus(long long g) {
    if (g < 1) throw GenusOutOfRange("genus must be >= 1, got " + std::to_string(g));
}

void check_twist_vector(long long g, std::span<const long long> c) {
    if (static_cast<long long>(c.size()) != 2 * g)
        throw GenusMismatch("twist vector has length " + std::to_string(c.size()) +
                            ", expected " + std::to_string(2 * g));
    long long gg = 0;
    for (long long x : c) gg = std::gcd(gg, x < 0 ? -x : x);
    if (gg == 0) throw ZeroVector("twist vector is zero");
    if (gg != 1)
        throw NotPrimitive("twist vector has entry gcd " + std::to_string(gg) +
                           "; curve classes must be primitive");
}

}  // namespace

SympMatrix SympMatrix::identity(long long g) {
    check_genus(g);
    const long long n = 2 * g;
    std::vector<long long> m(static_cast<std::size_t>(n * n), 0);
    for (long long i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
    return SympMatrix(g, std::move(m));
}

SympMatrix SympMatrix::from_entries(long long g, const std::vector<long long>& row_major) {
    check_genus(g);
    const long long n = 2 * g;
    if (static_cast<long long>(row_major.size()) != n * n)
        throw GenusMismatch("expected " + std::to_string(n * n) + " entries for genus " +
                            std::to_string(g) + ", got " + std::to_string(row_major.size()));
    SympMatrix m(g, row_major);
    if (!m.is_symplectic())
        throw NotSymplectic("matrix does not preserve the symplectic form");
    return m;
}

SympMatrix SympMatrix::operator*(const SympMatrix& rhs) const {
    if (g_ != rhs.g_)
        throw GenusMismatch("cannot multiply genus " + std::to_string(g_) + " by genus " +
                            std::to_string(rhs.g_));
    const long long n = dim();
    std::vector<long long> out(static_cast<std::size_t>(n * n), 0);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            i128 acc = 0;
            for (long long k = 0; k < n; ++k)
                acc += static_cast<i128>(at(i, k)) * rhs.at(k, j);
            out[static_cast<std::size_t>(i * n + j)] = narrow(acc);
        }
    return SympMatrix(g_, std::move(out));
}

SympMatrix SympMatrix::inverse() const {
    // (J M^T J)_{ij} = sum_{k,l} J_{ik} M_{lk} J_{lj}; J has one nonzero
    // entry per row, so the double sum collapses to a sign shuffle.
    const long long g = g_;
    const long long n = dim();
    auto jsign = [g](long long i) { return i < g ? 1LL : -1LL; };       // row i of J hits column...
    auto jcol = [g, n](long long i) { return i < g ? i + g : i - g; };  // ...jcol(i) with sign jsign(i)
    std::vector<long long> out(static_cast<std::size_t>(n * n), 0);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            // -(J M^T J)_{ij} = -J_{i,jcol(i)} M_{jcol(j),jcol(i)} J_{jcol(j),j}
            const long long v = at(jcol(j), jcol(i));
            out[static_cast<std::size_t>(i * n + j)] = -jsign(i) * (-jsign(j)) * v;
        }
    return SympMatrix(g_, std::move(out));
}

bool SympMatrix::is_symplectic() const {
    // Check <M e_i, M e_j> == <e_i, e_j> on all basis pairs.
    const long long n = dim();
    for (long long i = 0; i < n; ++i)
        for (long long j = i + 1; j < n; ++j) {
            i128 acc = 0;
            for (long long r = 0; r < g_; ++r)
                acc += static_cast<i128>(at(r, i)) * at(r + g_, j) -
                       static_cast<i128>(at(r + g_, i)) * at(r, j);
            i128 expect = 0;
            if (j == i + g_) expect = 1;
            if (acc != expect) return false;
        }
    return true;
}

bool SympMatrix::is_identity() const { return *this == identity(g_); }

std::string SympMatrix::str() const {
    std::ostringstream os;
    const long long n = dim();
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

long long symplectic_pairing(std::span<const long long> x, std::span<const long long> y) {
    if (x.size() != y.size() || x.size() % 2 != 0)
        throw GenusMismatch("symplectic pairing needs two vectors of equal even length");
    const std::size_t g = x.size() / 2;
    i128 acc = 0;
    for (std::size_t i = 0; i < g; ++i)
        acc += static_cast<i128>(x[i]) * y[i + g] - static_cast<i128>(x[i + g]) * y[i];
    return narrow(acc);
}

SympMatrix transvection(long long g, std::span<const long long> c) {
    check_genus(g);
    check_twist_vector(g, c);
    const long long n = 2 * g;
    // column j of the result is e_j + <e_j, c> c; <e_j, c> = (Jc)_j
    std::vector<long long> w(static_cast<std::size_t>(n));
    for (long long j = 0; j < g; ++j) {
        w[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j + g)];
        w[static_cast<std::size_t>(j + g)] = -c[static_cast<std::size_t>(j)];
    }
    std::vector<long long> m(static_cast<std::size_t>(n * n), 0);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            i128 v = (i == j) ? 1 : 0;
            v += static_cast<i128>(w[static_cast<std::size_t>(j)]) * c[static_cast<std::size_t>(i)];
            m[static_cast<std::size_t>(i * n + j)] = narrow(v);
        }
    return SympMatrix::from_entries(g, m);
}

TwistWord::TwistWord(long long g, std::vector<std::vector<long long>> twists)
    : g_(g), twists_(std::move(twists)) {
    check_genus(g_);
    for (std::size_t i = 0; i < twists_.size(); ++i) {
        try {
            check_twist_vector(g_, twists_[i]);
        } catch (const Error& e) {
            throw Error("twist " + std::to_string(i) + ": " + e.what());
        }
    }
}

SympMatrix word_product(const TwistWord& w) {
    if (w.empty()) throw EmptyWord("word_product: empty twist word");
    SympMatrix p = transvection(w.genus(), w.twists()[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
        p = transvection(w.genus(), w.twists()[i]) * p;
    return p;
}

TwistWord read_twist_word(std::istream& in) {
    long long g = -1;
    std::vector<std::vector<long long>> twists;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;  // blank or comment
        ls.clear();
        ls.str(line);
        if (g < 0) {
            if (!(ls >> g) || g < 1)
                throw ParseError(lineno, "expected a genus >= 1, got '" + line + "'");
            long long extra;
            if (ls >> extra) throw ParseError(lineno, "trailing data after the genus");
            continue;
        }
        std::vector<long long> v;
        long long x;
        while (ls >> x) v.push_back(x);
        if (!ls.eof()) throw ParseError(lineno, "malformed integer in twist vector");
        if (static_cast<long long>(v.size()) != 2 * g)
            throw ParseError(lineno, "expected " + std::to_string(2 * g) +
                                         " integers, got " + std::to_string(v.size()));
        try {
            check_twist_vector(g, v);
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
        twists.push_back(std::move(v));
    }
    if (g < 0) throw ParseError(lineno, "missing genus line");
    return TwistWord(g, std::move(twists));
}

TwistWord read_twist_word_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open word file: " + path);
    return read_twist_word(in);
}

void write_twist_word(std::ostream& out, const TwistWord& w) {
    out << w.genus() << '\n';
    for (const auto& t : w.twists()) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (j) out << ' ';
            out << t[j];
        }
        out << '\n';
    }
}

}  // namespace lfforge
