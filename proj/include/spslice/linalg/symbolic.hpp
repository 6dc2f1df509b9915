#ifndef SPSLICE_LINALG_SYMBOLIC_HPP
#define SPSLICE_LINALG_SYMBOLIC_HPP

#include "spslice/linalg/matrix.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace spslice {

/// Determinant of the submatrix on the given (sorted) rows and columns, by
/// Laplace expansion along rows with memoisation on the remaining column
/// set. Division-free; intended for polynomial entries and sizes <= 8.
template <typename T>
T minor_det(const Matrix<T>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    if (rows.size() != cols.size()) throw UsageError("minor_det: non-square selection");
    const std::size_t k = rows.size();
    if (k > 20) throw UsageError("minor_det: selection too large");
    std::unordered_map<std::uint32_t, T> memo;
    // det of rows[depth..] x cols in `mask`, where popcount(mask) == k - depth.
    auto rec = [&](auto&& self, std::size_t depth, std::uint32_t mask) -> T {
        if (depth == k) {
            T one = m.zero_like();
            one += T{1};
            return one;
        }
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        T acc = m.zero_like();
        int sign = 1;
        for (std::size_t c = 0; c < k; ++c) {
            if (!(mask & (1u << c))) continue;
            const T& entry = m(rows[depth], cols[c]);
            if (!entry.is_zero()) {
                T sub = self(self, depth + 1, mask & ~(1u << c));
                if (!sub.is_zero()) {
                    if (sign > 0) acc += entry * sub;
                    else acc -= entry * sub;
                }
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, 0, k == 0 ? 0u : ((1u << k) - 1u));
}

template <typename T>
T cofactor_determinant(const Matrix<T>& m)
{
    if (!m.is_square()) throw UsageError("cofactor_determinant: non-square");
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return minor_det(m, idx, idx);
}

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

struct MinorReport {
    bool all_vanish = true;
    std::size_t minors_checked = 0;
    /// First nonvanishing minor, if any.
    std::vector<std::size_t> witness_rows, witness_cols;
    MultiPoly witness;
};

/// Expands every k x k minor of a square polynomial matrix. all_vanish is
/// true iff each one is the zero polynomial (generic rank < k). Minors are
/// evaluated in parallel; the result is independent of scheduling.
MinorReport minor_vanishing_report(const PolyMatrix& m, std::size_t k);

inline bool minor_vanishing(const PolyMatrix& m, std::size_t k)
{
    return minor_vanishing_report(m, k).all_vanish;
}

} // namespace spslice

#endif
