#include "spslice/liealg/sp_algebra.hpp"

#include "spslice/linalg/charpoly.hpp"
#include "spslice/linalg/elimination.hpp"

namespace spslice::lie {

namespace {

QMatrix build_membership(const QMatrix& gram)
{
    const std::size_t size = gram.rows();
    QMatrix system(size * size, size * size);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) {
            const QMatrix e = elementary(size, r, c);
            const QMatrix image = e.transpose() * gram + gram * e;
            const std::size_t col = r * size + c;
            for (std::size_t k = 0; k < size * size; ++k) system(k, col) = image.data()[k];
        }
    return system;
}

std::vector<QMatrix> rows_to_matrices(const QMatrix& rows, std::size_t size)
{
    std::vector<QMatrix> out;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        const auto v = rows.row(r);
        out.push_back(unflatten(v, size, size));
    }
    return out;
}

} // namespace

SpAlgebra::SpAlgebra(QMatrix gram) : gram_(std::move(gram))
{
    if (!gram_.is_square() || gram_.rows() % 2 != 0) throw UsageError("SpAlgebra: Gram matrix must be 2n x 2n");
    if (!(gram_.transpose() == -gram_)) throw UsageError("SpAlgebra: Gram matrix is not antisymmetric");
    if (rank(gram_) != gram_.rows()) throw UsageError("SpAlgebra: Gram matrix is singular");
    membership_ = build_membership(gram_);
}

SpAlgebra SpAlgebra::split(std::size_t n)
{
    return SpAlgebra(split_gram(n));
}

SpAlgebra SpAlgebra::antidiagonal(std::size_t n)
{
    return SpAlgebra(antidiagonal_gram(n));
}

std::vector<QMatrix> SpAlgebra::basis() const
{
    return rows_to_matrices(kernel(membership_).basis(), size());
}

std::size_t SpAlgebra::dimension() const
{
    return size() * size() - rank(membership_);
}

QMatrix split_gram(std::size_t n)
{
    QMatrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = GaussRat{1};
        j(n + i, i) = GaussRat{-1};
    }
    return j;
}

QMatrix antidiagonal_gram(std::size_t n)
{
    QMatrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) j(i, 2 * n - 1 - i) = GaussRat{i < n ? 1 : -1};
    return j;
}

QMatrix split_to_antidiagonal(std::size_t n)
{
    QMatrix p(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) p(i, i) = GaussRat{1};
    // f_{n+j} = e_{2n+1-j} (one-based), j = 1..n.
    for (std::size_t j = 1; j <= n; ++j) p(2 * n - j, n + j - 1) = GaussRat{1};
    return p;
}

QMatrix antidiagonal_to_split_matrix(const QMatrix& x)
{
    const QMatrix p = split_to_antidiagonal(x.rows() / 2);
    return p * x * p.transpose(); // P is a permutation: P^{-1} = P^T
}

QMatrix split_to_antidiagonal_matrix(const QMatrix& x)
{
    const QMatrix p = split_to_antidiagonal(x.rows() / 2);
    return p.transpose() * x * p;
}

bool in_sp(const QMatrix& a, const SpAlgebra& g)
{
    if (!a.is_square() || a.rows() != g.size()) throw UsageError("in_sp: size mismatch");
    return (a.transpose() * g.gram() + g.gram() * a).is_zero();
}

bool in_sp(const PolyMatrix& a, const SpAlgebra& g)
{
    if (!a.is_square() || a.rows() != g.size()) throw UsageError("in_sp: size mismatch");
    const VarSet vars = a.zero_like().vars();
    const PolyMatrix j = to_poly(g.gram(), vars);
    return (a.transpose() * j + j * a).is_zero();
}

QMatrix bracket(const QMatrix& a, const QMatrix& b)
{
    return commutator(a, b);
}

std::vector<QMatrix> centralizer_sp(const QMatrix& y, const SpAlgebra& g)
{
    const std::size_t size = g.size();
    if (y.rows() != size || !y.is_square()) throw UsageError("centralizer_sp: size mismatch");
    const std::size_t dim2 = size * size;
    QMatrix system(2 * dim2, dim2);
    system.set_block(0, 0, g.membership_system());
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) {
            const QMatrix e = elementary(size, r, c);
            const QMatrix image = e * y - y * e;
            const std::size_t col = r * size + c;
            for (std::size_t k = 0; k < dim2; ++k) system(dim2 + k, col) = image.data()[k];
        }
    return rows_to_matrices(kernel(system).basis(), size);
}

std::size_t orbit_dimension(const QMatrix& x, const SpAlgebra& g)
{
    return g.dimension() - centralizer_sp(x, g).size();
}

Subspace matrix_span(const std::vector<QMatrix>& mats)
{
    if (mats.empty()) return Subspace(0);
    const std::size_t len = mats.front().rows() * mats.front().cols();
    QMatrix rows(mats.size(), len);
    for (std::size_t k = 0; k < mats.size(); ++k)
        for (std::size_t j = 0; j < len; ++j) rows(k, j) = mats[k].data()[j];
    return Subspace::span(rows);
}

std::array<GaussRat, 3> adjoint_invariants(const QMatrix& a)
{
    if (a.rows() != 6 || !a.is_square()) throw UsageError("adjoint_invariants: expects a 6x6 matrix");
    const auto c = charpoly(a);
    for (std::size_t k = 1; k <= 5; k += 2)
        if (!c[k].is_zero())
            throw DomainError("adjoint_invariants: odd characteristic coefficient is nonzero; input is not in sp_6");
    return {c[2], c[4], c[6]};
}

} // namespace spslice::lie
