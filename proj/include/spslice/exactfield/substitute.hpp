#ifndef SPSLICE_EXACTFIELD_SUBSTITUTE_HPP
#define SPSLICE_EXACTFIELD_SUBSTITUTE_HPP

#include "spslice/exactfield/multi_poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spslice {

/// Variable name -> image polynomial. Variables of the source polynomial
/// missing from the map are sent to themselves (which requires them to
/// exist in the target alphabet).
using Assignment = std::map<std::string, MultiPoly>;

/// Composes p with the assignment. All non-constant images must share one
/// VarSet, which becomes the result's alphabet; if every image is constant
/// the result is a constant polynomial over the empty alphabet.
MultiPoly poly_substitute(const MultiPoly& p, const Assignment& assignment);

/// Convenience: evaluate every variable at a constant.
MultiPoly poly_substitute(const MultiPoly& p, const std::map<std::string, GaussRat>& point);

/*
 * Bounded-degree ideal membership: searches cofactors q_j with
 * deg q_j <= degree_bound such that p = sum_j q_j * gens[j], by solving the
 * linear system on monomial coefficients over Q(i). The particular solution
 * is the one with every free unknown set to zero (unknowns ordered by
 * generator, then by graded-lex monomial). A returned solution has always
 * been re-expanded and compared structurally with p. std::nullopt means
 * "not found at this bound", never a proof of non-membership.
 */
std::optional<std::vector<MultiPoly>> poly_express_in_ideal(const MultiPoly& p,
                                                            const std::vector<MultiPoly>& gens,
                                                            unsigned degree_bound);

/// All exponent vectors of total degree <= bound in `nvars` variables, in
/// graded-lex order.
std::vector<Exponents> monomials_up_to(std::size_t nvars, unsigned bound);

} // namespace spslice

#endif
