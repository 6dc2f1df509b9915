#include "spslice/liealg/parabolic.hpp"

#include "spslice/linalg/elimination.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace spslice::lie {

std::size_t ParabolicData::block_of(std::size_t r) const
{
    std::size_t end = 0;
    for (std::size_t k = 0; k < flag_type.size(); ++k) {
        end += flag_type[k];
        if (r < end) return k;
    }
    throw UsageError("ParabolicData::block_of: index out of range");
}

namespace {

// sp elements A with A(r, c) == 0 wherever zero_at(r, c).
std::vector<QMatrix> sp_with_zeros(const SpAlgebra& g, const std::function<bool(std::size_t, std::size_t)>& zero_at)
{
    const std::size_t size = g.size(), dim2 = size * size;
    std::vector<std::size_t> forced;
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c)
            if (zero_at(r, c)) forced.push_back(r * size + c);
    QMatrix system(dim2 + forced.size(), dim2);
    system.set_block(0, 0, g.membership_system());
    for (std::size_t k = 0; k < forced.size(); ++k) system(dim2 + k, forced[k]) = GaussRat{1};
    const QMatrix rows = kernel(system).basis();
    std::vector<QMatrix> out;
    for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back(unflatten(rows.row(r), size, size));
    return out;
}

} // namespace

ParabolicData parabolic(const std::vector<std::size_t>& flag_type, const SpAlgebra& g)
{
    if (!(g.gram() == antidiagonal_gram(g.n())))
        throw UsageError("parabolic: algebra must be in antidiagonal form");
    const std::size_t total = std::accumulate(flag_type.begin(), flag_type.end(), std::size_t{0});
    if (total != g.size()) throw UsageError("parabolic: flag type does not sum to 2n");
    if (std::find(flag_type.begin(), flag_type.end(), 0) != flag_type.end())
        throw UsageError("parabolic: flag type has a zero part");
    if (!std::equal(flag_type.begin(), flag_type.end(), flag_type.rbegin()))
        throw UsageError("parabolic: flag type must be palindromic");

    ParabolicData p;
    p.flag_type = flag_type;
    const auto block = [&p](std::size_t r) { return p.block_of(r); };

    p.levi_basis = sp_with_zeros(g, [&](std::size_t r, std::size_t c) { return block(r) != block(c); });
    p.nilradical_basis = sp_with_zeros(g, [&](std::size_t r, std::size_t c) { return block(r) >= block(c); });
    p.levi_upper_nilpotent =
        sp_with_zeros(g, [&](std::size_t r, std::size_t c) { return block(r) != block(c) || r >= c; });
    p.levi_lower_nilpotent =
        sp_with_zeros(g, [&](std::size_t r, std::size_t c) { return block(r) != block(c) || r <= c; });
    p.levi_dim = p.levi_basis.size();

    // Centre: coefficient vectors w with [sum_k w_k l_k, l_j] = 0 for all j.
    const std::size_t size = g.size(), dim2 = size * size, ld = p.levi_dim;
    QMatrix system(dim2 * ld, ld);
    for (std::size_t k = 0; k < ld; ++k)
        for (std::size_t j = 0; j < ld; ++j) {
            const QMatrix br = bracket(p.levi_basis[k], p.levi_basis[j]);
            for (std::size_t e = 0; e < dim2; ++e) system(j * dim2 + e, k) = br.data()[e];
        }
    const QMatrix coeffs = kernel(system).basis();
    std::vector<QMatrix> center;
    for (std::size_t r = 0; r < coeffs.rows(); ++r) {
        QMatrix z(size, size);
        for (std::size_t k = 0; k < ld; ++k) z += p.levi_basis[k] * coeffs(r, k);
        center.push_back(z);
    }

    // Normalised candidates: +1 on block k, -1 on the mirrored block.
    const std::size_t m = flag_type.size();
    std::vector<QMatrix> normalised;
    std::vector<std::size_t> sizes;
    for (std::size_t k = 0; k < m / 2; ++k) {
        QMatrix z(size, size);
        for (std::size_t r = 0; r < size; ++r) {
            if (block(r) == k) z(r, r) = GaussRat{1};
            if (block(r) == m - 1 - k) z(r, r) = GaussRat{-1};
        }
        normalised.push_back(z);
        sizes.push_back(flag_type[k]);
    }
    if (matrix_span(normalised) == matrix_span(center)) {
        p.levi_center_basis = std::move(normalised);
        p.center_block_sizes = std::move(sizes);
    } else {
        p.levi_center_basis = std::move(center);
    }
    return p;
}

} // namespace spslice::lie
