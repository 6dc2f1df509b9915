#include "spslice/linalg/matrix.hpp"

namespace spslice {

PolyMatrix to_poly(const QMatrix& m, const VarSet& vars)
{
    PolyMatrix p(m.rows(), m.cols(), MultiPoly(vars));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) p(r, c) = MultiPoly(vars, m(r, c));
    return p;
}

QMatrix evaluate(const PolyMatrix& m, std::span<const GaussRat> point)
{
    QMatrix q(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const MultiPoly& e = m(r, c);
            q(r, c) = e.vars().empty() ? e.constant_term() : e.evaluate(point);
        }
    return q;
}

QMatrix elementary(std::size_t n, std::size_t r, std::size_t c)
{
    QMatrix e(n, n);
    e.at(r, c) = GaussRat{1};
    return e;
}

std::vector<GaussRat> flatten(const QMatrix& m)
{
    return m.data();
}

QMatrix unflatten(std::span<const GaussRat> v, std::size_t rows, std::size_t cols)
{
    if (v.size() != rows * cols) throw UsageError("unflatten: size mismatch");
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
    return m;
}

} // namespace spslice
