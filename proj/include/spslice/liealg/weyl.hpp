#ifndef SPSLICE_LIEALG_WEYL_HPP
#define SPSLICE_LIEALG_WEYL_HPP

#include "spslice/linalg/matrix.hpp"
#include "spslice/linalg/subspace.hpp"

#include <array>
#include <utility>
#include <vector>

namespace spslice::lie {

/*
 * Cartan data for sp_6 in split form, h = diag(h1, h2, h3, -h1, -h2, -h3),
 * for the parabolic with Levi gl_1 x gl_2. W(L) swaps h2 and h3; W^P acts on
 * the fixed plane {(h1, h2, h2)} (coordinates (h1, h2)) by the two
 * independent sign changes.
 */
struct CartanData {
    std::vector<QMatrix> wl_generators;  ///< 3x3 acting on (h1, h2, h3)
    Subspace fixed_space;                ///< h^{W(L)} inside Q(i)^3
    std::vector<QMatrix> wp_generators;  ///< 2x2 acting on (h1, h2) of the fixed plane

    static QMatrix cartan_element(const GaussRat& h1, const GaussRat& h2, const GaussRat& h3);
};

CartanData weyl_data();

/// All products of the generators (finite group closure). Throws
/// DomainError if more than `limit` elements appear.
std::vector<QMatrix> group_closure(const std::vector<QMatrix>& generators, std::size_t limit = 10000);

/// Smallest k >= 1 with g^k = I; throws DomainError past `limit`.
std::size_t element_order(const QMatrix& g, std::size_t limit = 1000);

/// eta(s, t, t) = (s^2, t^2); UsageError unless h2 == h3. Asserts
/// (DomainError) that the value is invariant under both W^P generators.
std::pair<GaussRat, GaussRat> eta(const std::array<GaussRat, 3>& z);

} // namespace spslice::lie

#endif
