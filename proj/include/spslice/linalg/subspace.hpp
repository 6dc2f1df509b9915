#ifndef SPSLICE_LINALG_SUBSPACE_HPP
#define SPSLICE_LINALG_SUBSPACE_HPP

#include "spslice/linalg/matrix.hpp"

#include <vector>

namespace spslice {

/*
 * Subspace of Q(i)^n stored by its unique reduced row-echelon basis (rows
 * are basis vectors, no zero rows). Equal subspaces therefore compare
 * equal structurally.
 */
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0);

    /// Span of the rows of `generators` (any rank, zero rows allowed).
    static Subspace span(const QMatrix& generators);
    static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<GaussRat>>& vectors);
    static Subspace full(std::size_t ambient_dim);
    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    /// Span of standard basis vectors e_k (zero-based indices).
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const QMatrix& basis() const noexcept { return basis_; }
    std::vector<GaussRat> basis_vector(std::size_t k) const { return basis_.row(k); }

    bool contains(std::span<const GaussRat> v) const;
    bool contains(const Subspace& other) const;

    /// Rows spanning the annihilator {w : <v, w> = 0 for v in this}, using
    /// the bilinear dot product; this is the constraint matrix whose kernel
    /// is the subspace.
    QMatrix constraints() const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    std::string str() const;

private:
    std::size_t ambient_;
    QMatrix basis_;
};

/// Right kernel {v : M v = 0} as a canonical Subspace of Q(i)^cols.
Subspace kernel(const QMatrix& m);

/// M V = span{M v : v in V}.
Subspace image(const QMatrix& m, const Subspace& v);
/// Column space of M.
Subspace image(const QMatrix& m);
/// {v : M v in W}.
Subspace preimage(const QMatrix& m, const Subspace& w);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Symplectic orthogonal {w : v^T J w = 0 for all v in V}. J must be
/// antisymmetric and invertible.
Subspace perp_omega(const Subspace& v, const QMatrix& gram);

} // namespace spslice

#endif
