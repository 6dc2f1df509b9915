#ifndef SPSLICE_SLICEGEOM_SINGULAR_HPP
#define SPSLICE_SLICEGEOM_SINGULAR_HPP

#include "spslice/random.hpp"
#include "spslice/slicegeom/proof_report.hpp"
#include "spslice/slicegeom/slice_point.hpp"

#include <cstdint>

namespace spslice::geom {

enum class SingularComponent { Origin, Delta, Xi, Smooth };
const char* to_string(SingularComponent c);

/// ORIGIN if a = u = 0; XI if sum a^2 = 0 and u = 0; DELTA if sum a^2 = 0,
/// u != 0 and u^T u = -4 Z1^2; SMOOTH otherwise. DomainError off the variety.
SingularComponent singular_component(const SlicePoint& p);

/// Cone parametrisation a(s, t) = (i (s^2 + t^2), s^2 - t^2, 2 s t).
Triple<GaussRat> cone_point(const GaussRat& s, const GaussRat& t);

/// Seeded on-variety samplers, one per component.
SlicePoint sample_smooth(Rng& rng);
SlicePoint sample_delta(Rng& rng);
SlicePoint sample_xi(Rng& rng);

/// Rows d g1 and d g2 w.r.t. (a1, a2, a3, u1, u2, u3).
QMatrix jacobian(const Triple<GaussRat>& a, const Triple<GaussRat>& u);
/// Rank of the 2x6 Jacobian of (g1, g2) w.r.t. (a1, a2, a3, u1, u2, u3).
std::size_t jacobian_rank(const Triple<GaussRat>& a, const Triple<GaussRat>& u);

/*
 * cone        sum a(s,t)^2 expands to zero
 * xi-family   A^4 == 0 symbolically for u = 0, a = a(s,t)
 * delta-family A^3 == 0 symbolically for u = i a(s,t)
 * jacobian-smooth / jacobian-delta / jacobian-xi
 *             rank 2 at `samples` SMOOTH points, < 2 at `samples` DELTA and XI points
 */
ProofReport verify_singular_loci_symbolic(std::size_t samples, std::uint64_t seed);

/// jordan_type of the slice matrix against singular_component on seeded
/// samples drawn from all four components: SMOOTH -> [4,2], DELTA -> [3,3],
/// XI -> [4,1,1], ORIGIN -> [2,2,2].
ProofReport verify_singular_classification(std::size_t samples, std::uint64_t seed);

} // namespace spslice::geom

#endif
