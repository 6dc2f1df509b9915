#ifndef SPSLICE_SLICEGEOM_EQUATIONS_HPP
#define SPSLICE_SLICEGEOM_EQUATIONS_HPP

#include "spslice/slicegeom/proof_report.hpp"

#include <cstdint>

namespace spslice::geom {

/*
 * Symbolic verification of the slice equations on A = slice_matrix_from_au(a, u):
 *   trace-odd      tr(A) and tr(A^3) expand to zero
 *   trace-2        tr(A^2) = 2 (sum u^2 - sum a^2)
 *   trace-4-block  tr(A^4) = 2 tr(Z1^4) + 2 tr(Z2^2) + 12 tr(Z1^2 Z2) on the general slice
 *   trace-4        tr(A^4) = q1 g1 + q2 g2 with (q1, q2) = (2 g1, 4 g2), re-expanded
 *   trace-4-direct tr(A^4) - 2 g1^2 - 4 g2^2 expands to zero (independent of the ideal solve)
 *   rank-minors    all 36 five-by-five minors vanish
 */
ProofReport verify_T_equations();

/// point_in_T(slice_matrix_from_au(a, u)) agrees with g1 = g2 = 0 on seeded
/// on- and off-variety samples.
ProofReport verify_point_in_T_equivalence(std::size_t samples, std::uint64_t seed);

} // namespace spslice::geom

#endif
