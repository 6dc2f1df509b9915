#ifndef SPSLICE_SLICEGEOM_WREATH_HPP
#define SPSLICE_SLICEGEOM_WREATH_HPP

#include "spslice/slicegeom/proof_report.hpp"
#include "spslice/slicegeom/slice_matrix.hpp"

#include <array>
#include <cstdint>
#include <utility>

namespace spslice::geom {

/// Coordinates (x1, x2, y1, y2) on C^4: (x1, x2) is the first point of
/// C^2, (y1, y2) the second.
using WreathPoint = std::array<GaussRat, 4>;

VarSet wreath_vars();

/// The invariant map mu : C^4 -> (a, u):
///   a1 = -i (x1^2 + y1^2 + x2^2 + y2^2) / 2, a2 = (x1^2 + y1^2 - x2^2 - y2^2) / 2,
///   a3 = x1 x2 + y1 y2, u1 = x1 y1 + x2 y2, u2 = i (x1 y1 - x2 y2), u3 = i (x1 y2 + x2 y1).
std::array<MultiPoly, 6> wreath_mu_symbolic();
std::pair<Triple<GaussRat>, Triple<GaussRat>> wreath_mu(const WreathPoint& q);

/// sigma swaps the two points, tau negates the first; 4x4 matrices acting
/// on column vectors (x1, x2, y1, y2).
QMatrix wreath_sigma();
QMatrix wreath_tau();
/// Gram matrix of dx1 ^ dx2 + dy1 ^ dy2.
QMatrix wreath_form();

WreathPoint apply(const QMatrix& g, const WreathPoint& q);

/// invariants: g1 o mu = g2 o mu = 0; equivariance: mu o sigma = mu,
/// mu o tau = (a, -u); group: <sigma, tau> has order 8, preserves the form,
/// and has the element-order profile of the dihedral group of order 8;
/// orbits: on `samples` seeded points the orbit has 8 points and mu takes
/// exactly the values (a, u), (a, -u).
ProofReport verify_wreath_iso(std::size_t samples, std::uint64_t seed);

} // namespace spslice::geom

#endif
