#include "spslice/linalg/elimination.hpp"

namespace spslice {

EchelonForm rref(QMatrix m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
        const GaussRat inv = m(r, c).inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!m(r, k).is_zero()) m(r, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const GaussRat f = m(i, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const QMatrix& m)
{
    return rref(m).rank();
}

QMatrix null_space_rows(const QMatrix& m)
{
    const auto ech = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    QMatrix basis(free_cols.size(), cols);
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        const std::size_t fc = free_cols[f];
        basis(f, fc) = GaussRat{1};
        for (std::size_t i = 0; i < ech.pivots.size(); ++i)
            basis(f, ech.pivots[i]) = -ech.reduced(i, fc);
    }
    return basis;
}

std::optional<std::vector<GaussRat>> solve_particular(const QMatrix& augmented)
{
    const std::size_t unknowns = augmented.cols() - 1;
    const auto ech = rref(augmented);
    std::vector<GaussRat> x(unknowns);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
        if (ech.pivots[i] == unknowns) return std::nullopt;
        x[ech.pivots[i]] = ech.reduced(i, unknowns);
    }
    return x;
}

GaussRat determinant(const QMatrix& input)
{
    if (!input.is_square()) throw UsageError("determinant: non-square");
    QMatrix m = input;
    const std::size_t n = m.rows();
    GaussRat det{1};
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return GaussRat{};
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        const GaussRat inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const GaussRat f = m(i, c) * inv;
            for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
        }
    }
    return det;
}

QMatrix inverse(const QMatrix& m)
{
    if (!m.is_square()) throw UsageError("inverse: non-square");
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, QMatrix::identity(n));
    const auto ech = rref(aug);
    if (ech.rank() < n || ech.pivots[n - 1] != n - 1) throw DomainError("inverse: singular matrix");
    return ech.reduced.block(0, n, n, n);
}

} // namespace spslice
