#ifndef SPSLICE_SLICEGEOM_FIBERS_HPP
#define SPSLICE_SLICEGEOM_FIBERS_HPP

#include "spslice/linalg/subspace.hpp"
#include "spslice/random.hpp"
#include "spslice/slicegeom/proof_report.hpp"
#include "spslice/slicegeom/slice_matrix.hpp"

#include <cstdint>
#include <optional>

namespace spslice::geom {

/// P1: dim F1 = 1 (flag type [1,2,2,1]); P2: dim F1 = 2 (flag type [2,1,1,2]).
enum class Flavor { P1, P2 };
enum class FiberCase { Generic, Special };
const char* to_string(Flavor f);
const char* to_string(FiberCase c);

/// Isotropic flag F1 ⊂ F2 in Q(i)^6 (split coordinates, F2 Lagrangian).
struct FlagPair {
    Subspace f1;
    Subspace f2;
    Flavor flavor = Flavor::P1;
};

/// z F2 ⊆ F1 ⊆ Ker z and F2 = F2^⊥. UsageError if the flag is malformed
/// (wrong dimensions, F1 ⊄ F2, or z not 6x6).
bool springer_fiber_member(const QMatrix& z, const FlagPair& f);

/*
 * Sampler input. `a` (and for P2 also `b`) are vectors of K = span{e1,e2,e3}
 * spanning F1; `choice` picks the line of F2 inside the 2-dimensional
 * quotient M / M^⊥ for GENERIC samples.
 */
struct FiberParams {
    Triple<GaussRat> a{};
    Triple<GaussRat> b{};
    GaussRat choice{};
};

/// NO_COMPLETION certificate: M = F1^⊥ ∩ x0^{-1} F1 equals K, so every
/// admissible F2 lies in K and dim(K ∩ F2) = 3, never 2.
struct NoCompletion {
    Subspace search_space;
    bool verified = false;
    std::string reason;
};

struct FiberSample {
    std::optional<FlagPair> flag;
    std::optional<NoCompletion> no_completion;
    bool ok() const noexcept { return flag.has_value(); }
};

/// The fixed nilpotent x0 = [[0, I], [0, 0]] and K = Ker x0.
QMatrix fiber_x0();
Subspace fiber_kernel();

/// Throws UsageError if F1 would not have the flavor's dimension.
FiberSample fiber_sampler(Flavor flavor, FiberCase fcase, const FiberParams& params);

/// Random GENERIC params: a on the conic sum a^2 = 0 (P1), or
/// (a, b) = (c, c x r) with c on the conic (P2), which satisfies the quadric.
FiberParams random_generic_params(Flavor flavor, Rng& rng);
/// Random params with no conic / quadric constraint.
FiberParams random_free_params(Flavor flavor, Rng& rng);

/// (sum a^2)(sum b^2) - (sum a b)^2.
GaussRat quadric_defect(const Triple<GaussRat>& a, const Triple<GaussRat>& b);

/*
 * sampler-p1 / sampler-p2   seeded GENERIC and SPECIAL samples pass membership
 * no-completion             off-conic P1 and off-quadric P2 params give verified NO_COMPLETION
 * violations                non-isotropic F2 and F1 ⊄ Ker are rejected
 */
ProofReport verify_fiber_sampler(std::size_t samples, std::uint64_t seed);

/*
 * z_t family and its kernel:
 * nilpotent      z_t^3 == 0 over Q(i)[t], z_t in sp_6, z_0 = x0
 * in-T           point_in_T(z_t) at 10 seeded nonzero rational t
 * kernel-t1      Ker z_1 = span{e1 + i e5 + e6, e2 - i e3}
 * family         a polynomial spanning family v_k(t) with z_t v_k(t) == 0
 * specialization the family spans Ker z_t at t = 1/2 and 10 seeded t
 * limit          specialization at t = 0 is span{e1, e2 - i e3}, dim 2, inside K
 */
ProofReport kernel_limit_check(std::uint64_t seed);

/// Polynomial vectors over {t} spanning Ker z_t for generic t, each
/// with z_t v == 0 identically.
std::vector<std::vector<MultiPoly>> kernel_family();
/// The flat limit at t = 0 of the span of a polynomial family.
Subspace specialization_limit(std::vector<std::vector<MultiPoly>> family);

} // namespace spslice::geom

#endif
