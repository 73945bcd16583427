#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lfforge/errors.hpp"

namespace lfforge {

// 2g x 2g integer matrix preserving the standard symplectic form. The form
// is fixed once for the whole library:
//   J = [[0, I_g], [-I_g, 0]],   <x, y> = x^T J y.
class SympMatrix {
public:
    static SympMatrix identity(long long g);

    // Validates M^T J M == J; throws NotSymplectic otherwise.
    static SympMatrix from_entries(long long g, const std::vector<long long>& row_major);

    long long genus() const { return g_; }
    long long dim() const { return 2 * g_; }
    long long at(long long i, long long j) const { return m_[static_cast<std::size_t>(i * dim() + j)]; }

    // Matrix product; entries widened to 128 bits and overflow-checked.
    SympMatrix operator*(const SympMatrix& rhs) const;

    // Exact inverse -J M^T J (uses J^2 = -I), still an integer matrix.
    SympMatrix inverse() const;

    bool is_symplectic() const;
    bool is_identity() const;

    const std::vector<long long>& entries() const { return m_; }
    std::string str() const;  // one row per line

    friend bool operator==(const SympMatrix&, const SympMatrix&) = default;

private:
    SympMatrix(long long g, std::vector<long long> m) : g_(g), m_(std::move(m)) {}

    long long g_;
    std::vector<long long> m_;  // row-major
};

// <x, y> = x^T J y for integer vectors of length 2g.
long long symplectic_pairing(std::span<const long long> x, std::span<const long long> y);

// Homology action of a right-handed Dehn twist along the primitive class c:
//   x -> x + <x, c> c.
// Throws ZeroVector / NotPrimitive for invalid classes.
SympMatrix transvection(long long g, std::span<const long long> c);

// An ordered sequence of right-handed Dehn twists, each given by a nonzero
// primitive vector in Z^{2g} (nonseparating curve classes are primitive).
class TwistWord {
public:
    TwistWord(long long g, std::vector<std::vector<long long>> twists);

    long long genus() const { return g_; }
    const std::vector<std::vector<long long>>& twists() const { return twists_; }
    std::size_t size() const { return twists_.size(); }
    bool empty() const { return twists_.empty(); }

    friend bool operator==(const TwistWord&, const TwistWord&) = default;

private:
    long long g_;
    std::vector<std::vector<long long>> twists_;
};

// Product of the word's transvections. twists()[0] acts first and matrices
// multiply on the left, so the result is T(c_s) * ... * T(c_1).
// Throws EmptyWord for an empty word.
SympMatrix word_product(const TwistWord& w);

// Word file format (line based):
//   first significant line: the genus g
//   each following significant line: 2g space-separated integers, one twist
//   vector per line in word order
// Blank lines and lines starting with '#' are ignored.
TwistWord read_twist_word(std::istream& in);
TwistWord read_twist_word_file(const std::string& path);
void write_twist_word(std::ostream& out, const TwistWord& w);

}  // namespace lfforge
