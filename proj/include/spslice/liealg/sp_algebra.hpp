#ifndef SPSLICE_LIEALG_SP_ALGEBRA_HPP
#define SPSLICE_LIEALG_SP_ALGEBRA_HPP

#include "spslice/linalg/matrix.hpp"
#include "spslice/linalg/subspace.hpp"

#include <array>
#include <vector>

namespace spslice::lie {

/*
 * The symplectic Lie algebra sp_2n = {A : A^T J + J A = 0} for a fixed
 * antisymmetric invertible Gram matrix J.
 *
 * Two conventions are used throughout:
 *   split form        J = [[0, I], [-I, 0]]   (omega = sum e_i^* ^ e_{i+n}^*)
 *   antidiagonal form J_{i, 2n-1-i} = +1 for i < n, -1 for i >= n
 * The standard isotropic flags span(f_1..f_k) are block-triangular only in
 * antidiagonal form; split_to_antidiagonal() converts between the two.
 */
class SpAlgebra {
public:
    explicit SpAlgebra(QMatrix gram);
    static SpAlgebra split(std::size_t n);
    static SpAlgebra antidiagonal(std::size_t n);

    std::size_t n() const noexcept { return gram_.rows() / 2; }
    std::size_t size() const noexcept { return gram_.rows(); }
    const QMatrix& gram() const noexcept { return gram_; }

    /// Linear map A -> A^T J + J A on flattened matrices (rows: output
    /// entries, columns: input entries).
    const QMatrix& membership_system() const noexcept { return membership_; }
    /// Basis of sp_2n, computed as the kernel of the membership system.
    std::vector<QMatrix> basis() const;
    /// Dimension of the membership solution space; n(2n+1).
    std::size_t dimension() const;

private:
    QMatrix gram_;
    QMatrix membership_;
};

QMatrix split_gram(std::size_t n);
QMatrix antidiagonal_gram(std::size_t n);

/// Permutation P whose columns are the antidiagonal basis vectors written in
/// the split basis. A matrix X in antidiagonal coordinates is P X P^{-1} in
/// split coordinates; P^T J_split P = J_antidiagonal.
QMatrix split_to_antidiagonal(std::size_t n);
QMatrix antidiagonal_to_split_matrix(const QMatrix& x_antidiagonal);
QMatrix split_to_antidiagonal_matrix(const QMatrix& x_split);

bool in_sp(const QMatrix& a, const SpAlgebra& g);
bool in_sp(const PolyMatrix& a, const SpAlgebra& g);

QMatrix bracket(const QMatrix& a, const QMatrix& b);

/// Basis of {z in sp : [z, y] = 0} from one joint linear solve.
std::vector<QMatrix> centralizer_sp(const QMatrix& y, const SpAlgebra& g);

/// dim [g, x] = dim g - dim centralizer.
std::size_t orbit_dimension(const QMatrix& x, const SpAlgebra& g);

/// Subspace of flattened size x size matrices spanned by `mats`.
Subspace matrix_span(const std::vector<QMatrix>& mats);

/// Coefficients (c2, c4, c6) of lambda^4, lambda^2, lambda^0 in the
/// characteristic polynomial of a 6x6 element of sp_6. Throws DomainError if
/// an odd coefficient is nonzero (the input cannot be in sp_6).
std::array<GaussRat, 3> adjoint_invariants(const QMatrix& a);

} // namespace spslice::lie

#endif
