#ifndef SPSLICE_LIEALG_SLICE_HPP
#define SPSLICE_LIEALG_SLICE_HPP

#include "spslice/liealg/sp_algebra.hpp"

#include <vector>

namespace spslice::lie {

struct SL2Triple {
    QMatrix x, y, h;
};

/// [x,y] = h, [h,x] = 2x, [h,y] = -2y, exactly.
bool verify_sl2(const SL2Triple& t);

/// The split-form triple for the orbit [2,2,2] in sp_6:
/// x0 = [[0,I],[0,0]], y0 = [[0,0],[I,0]], h0 = [[I,0],[0,-I]].
SL2Triple standard_triple();

/*
 * Affine slice x + g^y, parametrised by `param_names` along
 * `centralizer_basis`. For the standard triple the basis is normalised so
 * that the general element is [[Z1, I], [Z2, Z1]] with
 *   Z1 = 1/2 [[0, a3, -a2], [-a3, 0, a1], [a2, -a1, 0]]
 *   Z2 = [[x1, y1, y2], [y1, x2, y3], [y2, y3, x3]]
 * and parameters (a1, a2, a3, x1, x2, x3, y1, y2, y3). Other triples get
 * the raw kernel basis with parameters c1, c2, ...
 */
struct SlodowySlice {
    SL2Triple triple;
    std::vector<QMatrix> centralizer_basis;
    VarSet param_names;

    std::size_t dim() const noexcept { return centralizer_basis.size(); }
    /// x + sum_k p_k b_k with polynomial entries over param_names.
    PolyMatrix symbolic_element() const;
    /// The same at a numeric parameter point (param_names order).
    QMatrix at(std::span<const GaussRat> params) const;
};

/// Throws DomainError for an invalid triple.
SlodowySlice slodowy_slice(const SL2Triple& t, const SpAlgebra& g);

/// The nine normalised generators of g^{y0} described above.
std::vector<QMatrix> standard_slice_basis();
VarSet standard_slice_params();

} // namespace spslice::lie

#endif
