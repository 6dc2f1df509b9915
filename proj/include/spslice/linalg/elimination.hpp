#ifndef SPSLICE_LINALG_ELIMINATION_HPP
#define SPSLICE_LINALG_ELIMINATION_HPP

#include "spslice/linalg/matrix.hpp"

#include <optional>
#include <vector>

namespace spslice {

struct EchelonForm {
    QMatrix reduced;                 ///< reduced row-echelon form, same shape as input
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination over Q(i). Pivots are the first nonzero entry
/// in each column scanning rows top-down, which makes the output canonical.
EchelonForm rref(QMatrix m);

std::size_t rank(const QMatrix& m);

/// Basis of the right null space {v : M v = 0}, one vector per free column,
/// returned as rows of a matrix (possibly with zero rows).
QMatrix null_space_rows(const QMatrix& m);

/// Solves [A | b] (last column is b) with free unknowns fixed to zero.
/// std::nullopt when inconsistent.
std::optional<std::vector<GaussRat>> solve_particular(const QMatrix& augmented);

/// Exact determinant by elimination.
GaussRat determinant(const QMatrix& m);

/// Exact inverse; throws DomainError if singular.
QMatrix inverse(const QMatrix& m);

} // namespace spslice

#endif
