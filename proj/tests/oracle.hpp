#ifndef SPSLICE_TESTS_ORACLE_HPP
#define SPSLICE_TESTS_ORACLE_HPP

// Reference implementations that share no code with the library: plain
// pairs of GMP rationals, Leibniz determinants, characteristic polynomials
// by interpolation and ranks by minors. Slow, only for small matrices.

#include "spslice/linalg/matrix.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

struct Q {
    mpq_class re{0}, im{0};
};

inline Q add(const Q& a, const Q& b) { return {a.re + b.re, a.im + b.im}; }
inline Q sub(const Q& a, const Q& b) { return {a.re - b.re, a.im - b.im}; }
inline Q mul(const Q& a, const Q& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Q div(const Q& a, const Q& b)
{
    const mpq_class n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline bool zero(const Q& a) { return a.re == 0 && a.im == 0; }
inline bool eq(const Q& a, const Q& b) { return a.re == b.re && a.im == b.im; }

using M = std::vector<std::vector<Q>>;

inline M from(const spslice::QMatrix& m)
{
    M out(m.rows(), std::vector<Q>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = {m(r, c).re(), m(r, c).im()};
    return out;
}

inline M mul(const M& a, const M& b)
{
    M out(a.size(), std::vector<Q>(b.empty() ? 0 : b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < out[i].size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k) out[i][j] = add(out[i][j], mul(a[i][k], b[k][j]));
    return out;
}

/// Sum over permutations with sign from the inversion count.
inline Q det(const M& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Q total;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
        Q term{1, 0};
        for (std::size_t i = 0; i < n; ++i) term = mul(term, m[i][p[i]]);
        total = inversions % 2 ? sub(total, term) : add(total, term);
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// Solves V c = y for a square system by elimination with pivot search.
inline std::vector<Q> solve(M a, std::vector<Q> y)
{
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (zero(a[piv][col])) ++piv;
        std::swap(a[piv], a[col]);
        std::swap(y[piv], y[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || zero(a[r][col])) continue;
            const Q f = div(a[r][col], a[col][col]);
            for (std::size_t c = col; c < n; ++c) a[r][c] = sub(a[r][c], mul(f, a[col][c]));
            y[r] = sub(y[r], mul(f, y[col]));
        }
    }
    for (std::size_t r = 0; r < n; ++r) y[r] = div(y[r], a[r][r]);
    return y;
}

/// det(x I - m) sampled at x = 0..n and interpolated; highest degree first.
inline std::vector<Q> charpoly(const M& m)
{
    const std::size_t n = m.size();
    M vander(n + 1, std::vector<Q>(n + 1));
    std::vector<Q> values(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        M shifted = m;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) shifted[r][c] = sub(Q{}, m[r][c]);
            shifted[r][r] = add(shifted[r][r], Q{static_cast<long>(k), 0});
        }
        values[k] = n ? det(shifted) : Q{1, 0};
        mpq_class power = 1;
        for (std::size_t d = 0; d <= n; ++d) {
            vander[k][n - d] = {power, 0};
            power *= static_cast<long>(k);
        }
    }
    return solve(vander, values);
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

/// Largest k with a nonzero k x k minor.
inline std::size_t rank(const M& m)
{
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t k = std::min(rows, cols); k > 0; --k)
        for (const auto& rs : subsets(rows, k))
            for (const auto& cs : subsets(cols, k)) {
                M sub(k, std::vector<Q>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
                if (!zero(det(sub))) return k;
            }
    return 0;
}

/// Block sizes of a nilpotent matrix from the ranks of its powers.
inline std::vector<std::size_t> jordan_blocks(const M& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> ranks{n};
    M power = m;
    while (ranks.back() > 0 && ranks.size() <= n) {
        ranks.push_back(rank(power));
        power = mul(power, m);
    }
    std::vector<std::size_t> parts;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const std::size_t at_least_k = ranks[k - 1] - ranks[k];
        const std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t c = 0; c < at_least_k - at_least_next; ++c) parts.push_back(k);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

} // namespace oracle

#endif
