#include "spslice/linalg/exp.hpp"

namespace spslice {

bool is_nilpotent(const QMatrix& n)
{
    if (!n.is_square()) throw UsageError("is_nilpotent: non-square");
    return matrix_pow(n, static_cast<unsigned>(n.rows())).is_zero();
}

QMatrix exp_nilpotent(const QMatrix& n)
{
    if (!n.is_square()) throw UsageError("exp_nilpotent: non-square");
    const std::size_t size = n.rows();
    QMatrix result = QMatrix::identity(size);
    QMatrix term = QMatrix::identity(size);
    for (std::size_t k = 1; k <= size; ++k) {
        term = term * n;
        if (term.is_zero()) return result;
        term *= GaussRat(mpq_class(1, static_cast<unsigned long>(k)));
        result += term;
    }
    throw DomainError("exp_nilpotent: matrix is not nilpotent");
}

} // namespace spslice
