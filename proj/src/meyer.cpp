#include "lfforge/meyer.hpp"

#include <cstddef>
#include <string>

#include "lfforge/rational_linalg.hpp"

namespace lfforge {

namespace {

// With the fixed conventions here the raw cocycle sum already reproduces
// -8 on the calibration word, so the global sign is +1.
constexpr long long kCocycleSumSign = +1;

}  // namespace

long long meyer_tau(const SympMatrix& a, const SympMatrix& b) {
    if (a.genus() != b.genus())
        throw GenusMismatch("meyer_tau: genus " + std::to_string(a.genus()) + " vs " +
                            std::to_string(b.genus()));
    if (!a.is_symplectic() || !b.is_symplectic())
        throw NotSymplectic("meyer_tau: arguments must be symplectic");

    const long long g = a.genus();
    const std::size_t n = static_cast<std::size_t>(2 * g);
    const SympMatrix ai = a.inverse();

    // Solution space of (A^{-1}-I) x + (B-I) y = 0 as the null space of the
    // n x 2n block matrix [A^{-1}-I | B-I].
    RatMat sys(n, RatVec(2 * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long long d = (i == j) ? 1 : 0;
            sys[i][j] = Rational(ai.at(i, j) - d);
            sys[i][n + j] = Rational(b.at(i, j) - d);
        }
    const RatMat basis = nullspace(sys);
    const std::size_t m = basis.size();
    if (m == 0) return 0;

    // K = J (I - B), integer.  b(u,v) = (x_u + y_u)^T K y_v.
    std::vector<std::vector<long long>> kmat(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // row i of J picks row i+g of (I-B) with sign +, or row i-g with sign -
            const std::size_t src = i < static_cast<std::size_t>(g) ? i + g : i - g;
            const long long sign = i < static_cast<std::size_t>(g) ? 1 : -1;
            const long long d = (src == j) ? 1 : 0;
            kmat[i][j] = sign * (d - b.at(src, j));
        }

    RatMat gram(m, RatVec(m));
    for (std::size_t r = 0; r < m; ++r) {
        RatVec w(n);  // x_r + y_r
        for (std::size_t i = 0; i < n; ++i) w[i] = basis[r][i] + basis[r][n + i];
        RatVec wk(n);  // w^T K
        for (std::size_t j = 0; j < n; ++j) {
            Rational acc;
            for (std::size_t i = 0; i < n; ++i) acc += w[i] * Rational(kmat[i][j]);
            wk[j] = acc;
        }
        for (std::size_t c = 0; c < m; ++c) {
            Rational acc;
            for (std::size_t j = 0; j < n; ++j) acc += wk[j] * basis[c][n + j];
            gram[r][c] = acc;
        }
    }

    RatMat sym(m, RatVec(m));
    const Rational half(1, 2);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) sym[r][c] = (gram[r][c] + gram[c][r]) * half;

    return symmetric_signature(std::move(sym));
}

long long signature_from_word(const TwistWord& w) {
    if (w.empty()) throw EmptyWord("signature_from_word: empty twist word");

    std::vector<SympMatrix> letters;
    letters.reserve(w.size());
    for (const auto& t : w.twists()) letters.push_back(transvection(w.genus(), t));

    SympMatrix total = letters[0];
    for (std::size_t i = 1; i < letters.size(); ++i) total = letters[i] * total;
    if (!total.is_identity())
        throw NonTrivialMonodromy("signature_from_word: word product is not the identity:\n" +
                                  total.str());

    long long sum = 0;
    SympMatrix partial = letters[0];
    for (std::size_t j = 1; j < letters.size(); ++j) {
        sum += meyer_tau(partial, letters[j]);
        partial = letters[j] * partial;
    }
    return kCocycleSumSign * sum;
}

}  // namespace lfforge
