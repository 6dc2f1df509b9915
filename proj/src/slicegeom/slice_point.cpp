#include "spslice/slicegeom/slice_point.hpp"

#include <sstream>

namespace spslice::geom {

GaussRat dot(const Triple<GaussRat>& x, const Triple<GaussRat>& y)
{
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

bool on_variety(const Triple<GaussRat>& a, const Triple<GaussRat>& u)
{
    return dot(u, u) == dot(a, a) && dot(a, u).is_zero();
}

bool is_canonical_sign(const Triple<GaussRat>& u)
{
    for (const auto& x : u)
        if (sgn(x.re()) != 0) return sgn(x.re()) > 0;
    for (const auto& x : u)
        if (sgn(x.im()) != 0) return sgn(x.im()) > 0;
    return true;
}

SlicePoint SlicePoint::canonicalized() const
{
    SlicePoint p = *this;
    if (!is_canonical_sign(p.u))
        for (auto& x : p.u) x = -x;
    p.canonical = true;
    return p;
}

SlicePoint SlicePoint::make(const Triple<GaussRat>& a, const Triple<GaussRat>& u)
{
    if (!on_variety(a, u)) throw DomainError("SlicePoint: (a, u) does not satisfy the slice equations");
    return SlicePoint{a, u, false}.canonicalized();
}

std::string SlicePoint::str() const
{
    std::ostringstream os;
    os << "a=(" << a[0] << ", " << a[1] << ", " << a[2] << "), u=(" << u[0] << ", " << u[1] << ", " << u[2] << ")";
    return os.str();
}

} // namespace spslice::geom
