#ifndef SPSLICE_SLICEGEOM_DEFORMATION_HPP
#define SPSLICE_SLICEGEOM_DEFORMATION_HPP

#include "spslice/liealg/parabolic.hpp"
#include "spslice/random.hpp"
#include "spslice/slicegeom/proof_report.hpp"

#include <cstdint>

namespace spslice::geom {

/// Generic Levi-centre element in antidiagonal form: s on the centre
/// direction of the size-1 blocks, t on the size-2 blocks.
QMatrix center_element(const lie::ParabolicData& p, const GaussRat& s, const GaussRat& t);

/// Coefficients {1, 0, c2, 0, c4, 0, c6} of (λ^2 - s^2)(λ^2 - t^2)^2.
std::vector<GaussRat> expected_charpoly(const GaussRat& s, const GaussRat& t);

/*
 * For `samples` seeded draws of z = center_element(s, t) (s, t nonzero,
 * s != ±t), u ∈ 𝔲 and g = exp(U1) exp(L+) exp(L-) exp(U2):
 * conjugation  exp(n) z exp(-n) - z ∈ 𝔲
 * symplectic   g^T J g = J
 * charpoly     charpoly(g (z + u) g^{-1}) = (λ^2 - s^2)(λ^2 - t^2)^2
 * invariants   adjoint_invariants agree with eta(s, t, t)
 * examples     the fixed z = diag(1,2,2,-1,-2,-2) and z = 0 cases
 */
ProofReport deformation_family_check(const std::vector<std::size_t>& flag_type, std::size_t samples,
                                     std::uint64_t seed);

} // namespace spslice::geom

#endif
