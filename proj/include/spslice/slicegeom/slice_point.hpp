#ifndef SPSLICE_SLICEGEOM_SLICE_POINT_HPP
#define SPSLICE_SLICEGEOM_SLICE_POINT_HPP

#include "spslice/slicegeom/slice_matrix.hpp"

#include <string>

namespace spslice::geom {

/*
 * A point (a, u) of the transverse slice, modulo u -> -u.
 *
 * Canonical representative: the first coordinate of u with nonzero real part
 * has positive real part; if every real part vanishes, the first nonzero
 * imaginary part is positive. u = 0 is canonical.
 */
struct SlicePoint {
    Triple<GaussRat> a;
    Triple<GaussRat> u;
    bool canonical = false;

    /// Validates both defining equations (DomainError otherwise) and
    /// canonicalises.
    static SlicePoint make(const Triple<GaussRat>& a, const Triple<GaussRat>& u);

    SlicePoint canonicalized() const;
    /// The slice matrix with Z2 = u^T u + Z1^2.
    QMatrix matrix() const { return slice_matrix_from_au(a, u); }

    friend bool operator==(const SlicePoint& p, const SlicePoint& q)
    {
        const SlicePoint cp = p.canonicalized(), cq = q.canonicalized();
        return cp.a == cq.a && cp.u == cq.u;
    }
    std::string str() const;
};

/// sum u_i^2 == sum a_i^2 and sum a_i u_i == 0.
bool on_variety(const Triple<GaussRat>& a, const Triple<GaussRat>& u);
GaussRat dot(const Triple<GaussRat>& x, const Triple<GaussRat>& y);
/// True iff u is already the canonical sign choice.
bool is_canonical_sign(const Triple<GaussRat>& u);

} // namespace spslice::geom

#endif
