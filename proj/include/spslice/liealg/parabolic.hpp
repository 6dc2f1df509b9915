#ifndef SPSLICE_LIEALG_PARABOLIC_HPP
#define SPSLICE_LIEALG_PARABOLIC_HPP

#include "spslice/liealg/sp_algebra.hpp"

#include <vector>

namespace spslice::lie {

/*
 * Standard parabolic subalgebra of sp_2n stabilising the isotropic flag
 * span(f_1..f_{d1}) ⊂ span(f_1..f_{d1+d2}) ⊂ ... in antidiagonal form, for a
 * palindromic composition (d1, ..., dm) of 2n. All matrices are in
 * antidiagonal coordinates.
 */
struct ParabolicData {
    std::vector<std::size_t> flag_type;
    std::vector<QMatrix> levi_basis;
    /// Centre of the Levi. Normalised when possible: one element per pair of
    /// mirrored blocks (k, m-1-k), acting as +1 on block k and -1 on its mirror.
    std::vector<QMatrix> levi_center_basis;
    /// Block sizes d_k matching each levi_center_basis element.
    std::vector<std::size_t> center_block_sizes;
    std::vector<QMatrix> nilradical_basis;
    /// Levi elements that are strictly upper resp. lower triangular.
    std::vector<QMatrix> levi_upper_nilpotent;
    std::vector<QMatrix> levi_lower_nilpotent;
    std::size_t levi_dim = 0;

    /// Index of the diagonal block containing row/column r.
    std::size_t block_of(std::size_t r) const;
};

/// Throws UsageError for a non-palindromic composition, a wrong total, or
/// an algebra not in antidiagonal form.
ParabolicData parabolic(const std::vector<std::size_t>& flag_type, const SpAlgebra& g);

/// The two parabolics of sp_6 used for the deformation families.
inline const std::vector<std::size_t> kFlagP1{1, 2, 2, 1};
inline const std::vector<std::size_t> kFlagP2{2, 1, 1, 2};

} // namespace spslice::lie

#endif
