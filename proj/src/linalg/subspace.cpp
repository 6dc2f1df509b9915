#include "spslice/linalg/subspace.hpp"

#include "spslice/linalg/elimination.hpp"

#include <sstream>

namespace spslice {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const QMatrix& generators)
{
    Subspace s(generators.cols());
    const auto ech = rref(generators);
    s.basis_ = ech.rank() ? ech.reduced.block(0, 0, ech.rank(), generators.cols()) : QMatrix(0, generators.cols());
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<GaussRat>>& vectors)
{
    QMatrix g(vectors.size(), ambient_dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient_dim) throw UsageError("Subspace::span: vector has wrong dimension");
        for (std::size_t c = 0; c < ambient_dim; ++c) g(r, c) = vectors[r][c];
    }
    return span(g);
}

Subspace Subspace::full(std::size_t ambient_dim)
{
    return span(QMatrix::identity(ambient_dim));
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices)
{
    QMatrix g(indices.size(), ambient_dim);
    for (std::size_t r = 0; r < indices.size(); ++r) g.at(r, indices[r]) = GaussRat{1};
    return span(g);
}

bool Subspace::contains(std::span<const GaussRat> v) const
{
    if (v.size() != ambient_) throw UsageError("Subspace::contains: dimension mismatch");
    QMatrix g(dim() + 1, ambient_);
    g.set_block(0, 0, basis_);
    for (std::size_t c = 0; c < ambient_; ++c) g(dim(), c) = v[c];
    return rank(g) == dim();
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_) throw UsageError("Subspace::contains: ambient dimension mismatch");
    return sum(*this, other).dim() == dim();
}

QMatrix Subspace::constraints() const
{
    return null_space_rows(basis_);
}

std::string Subspace::str() const
{
    std::ostringstream os;
    os << "span" << basis_;
    return os.str();
}

Subspace kernel(const QMatrix& m)
{
    return Subspace::span(null_space_rows(m));
}

Subspace image(const QMatrix& m, const Subspace& v)
{
    if (m.cols() != v.ambient_dim()) throw UsageError("image: dimension mismatch");
    // Rows of (M B^T)^T = B M^T are the images of the basis vectors.
    return Subspace::span(v.basis() * m.transpose());
}

Subspace image(const QMatrix& m)
{
    return Subspace::span(m.transpose());
}

Subspace preimage(const QMatrix& m, const Subspace& w)
{
    if (m.rows() != w.ambient_dim()) throw UsageError("preimage: dimension mismatch");
    const QMatrix c = w.constraints();
    if (c.rows() == 0) return Subspace::full(m.cols());
    return kernel(c * m);
}

Subspace sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw UsageError("sum: ambient dimension mismatch");
    QMatrix g(a.dim() + b.dim(), a.ambient_dim());
    g.set_block(0, 0, a.basis());
    g.set_block(a.dim(), 0, b.basis());
    return Subspace::span(g);
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw UsageError("intersect: ambient dimension mismatch");
    const QMatrix ca = a.constraints(), cb = b.constraints();
    QMatrix stacked(ca.rows() + cb.rows(), a.ambient_dim());
    stacked.set_block(0, 0, ca);
    stacked.set_block(ca.rows(), 0, cb);
    return kernel(stacked);
}

Subspace perp_omega(const Subspace& v, const QMatrix& gram)
{
    if (!gram.is_square() || gram.rows() != v.ambient_dim())
        throw UsageError("perp_omega: Gram matrix dimension mismatch");
    if (!(gram.transpose() == -gram)) throw UsageError("perp_omega: Gram matrix is not antisymmetric");
    if (rank(gram) != gram.rows()) throw UsageError("perp_omega: Gram matrix is singular");
    if (v.dim() == 0) return Subspace::full(v.ambient_dim());
    return kernel(v.basis() * gram);
}

} // namespace spslice
