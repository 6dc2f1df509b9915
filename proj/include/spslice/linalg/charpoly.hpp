#ifndef SPSLICE_LINALG_CHARPOLY_HPP
#define SPSLICE_LINALG_CHARPOLY_HPP

#include "spslice/linalg/matrix.hpp"

#include <vector>

namespace spslice {

/*
 * Characteristic polynomial det(lambda I - M) by the Berkowitz algorithm.
 * Division-free, so it works over any commutative ring (GaussRat or
 * MultiPoly entries). Coefficients are returned highest degree first:
 * {1, c_1, ..., c_n} with c_n the constant term.
 */
template <typename T>
std::vector<T> charpoly(const Matrix<T>& m)
{
    if (!m.is_square()) throw UsageError("charpoly: non-square matrix");
    const std::size_t n = m.rows();
    const T zero = m.zero_like();
    T one = zero;
    one += T{1};
    std::vector<T> coeffs{one};
    for (std::size_t r = 0; r < n; ++r) {
        // Toeplitz column for the step from the leading r x r block to r+1.
        std::vector<T> t;
        t.reserve(r + 2);
        t.push_back(one);
        t.push_back(-m(r, r));
        std::vector<T> v(r, zero); // M^k C, starting with C
        for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            T rc = zero;
            for (std::size_t i = 0; i < r; ++i) rc += m(r, i) * v[i];
            t.push_back(-rc);
            if (k + 1 < r) {
                std::vector<T> next(r, zero);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        if (!m(i, j).is_zero() && !v[j].is_zero()) next[i] += m(i, j) * v[j];
                v = std::move(next);
            }
        }
        std::vector<T> next(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * coeffs[j];
        coeffs = std::move(next);
    }
    return coeffs;
}

/// Renders coefficients {1, c1, ..., cn} as e.g. "λ^6 - 22*λ^4 + 153*λ^2 - 324".
std::string charpoly_string(const std::vector<GaussRat>& coeffs, const std::string& var = "λ");

} // namespace spslice

#endif
