#ifndef SPSLICE_SLICEGEOM_SLICE_MATRIX_HPP
#define SPSLICE_SLICEGEOM_SLICE_MATRIX_HPP

#include "spslice/linalg/matrix.hpp"

#include <array>

namespace spslice::geom {

template <typename T>
using Triple = std::array<T, 3>;

/// Z1 = 1/2 [[0, a3, -a2], [-a3, 0, a1], [a2, -a1, 0]].
template <typename T>
Matrix<T> z1_from_a(const Triple<T>& a)
{
    T zero = a[0];
    zero *= T{0};
    const GaussRat half(mpq_class(1, 2));
    auto h = [&](const T& x) {
        T y = x;
        y *= T{half};
        return y;
    };
    Matrix<T> z(3, 3, zero);
    z(0, 1) = h(a[2]);
    z(0, 2) = -h(a[1]);
    z(1, 0) = -h(a[2]);
    z(1, 2) = h(a[0]);
    z(2, 0) = h(a[1]);
    z(2, 1) = -h(a[0]);
    return z;
}

/// Outer product u^T u for a row vector u.
template <typename T>
Matrix<T> outer(const Triple<T>& u)
{
    T zero = u[0];
    zero *= T{0};
    Matrix<T> m(3, 3, zero);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = u[r] * u[c];
    return m;
}

/// [[Z1, I], [Z2, Z1]]; throws UsageError if Z2 is not symmetric.
template <typename T>
Matrix<T> slice_matrix(const Triple<T>& a, const Matrix<T>& z2)
{
    if (z2.rows() != 3 || z2.cols() != 3 || !(z2.transpose() == z2))
        throw UsageError("slice_matrix: Z2 must be a symmetric 3x3 matrix");
    const Matrix<T> z1 = z1_from_a(a);
    return block2x2(z1, Matrix<T>::identity(3, z1.zero_like()), z2, z1);
}

/// slice_matrix with Z2 = u^T u + Z1^2.
template <typename T>
Matrix<T> slice_matrix_from_au(const Triple<T>& a, const Triple<T>& u)
{
    const Matrix<T> z1 = z1_from_a(a);
    return slice_matrix(a, outer(u) + z1 * z1);
}

/// Alphabet (a1, a2, a3, u1, u2, u3).
VarSet au_vars();
Triple<MultiPoly> symbolic_a(const VarSet& vars);
Triple<MultiPoly> symbolic_u(const VarSet& vars);
/// g1 = sum u_i^2 - sum a_i^2.
MultiPoly g1_poly();
/// g2 = sum a_i u_i.
MultiPoly g2_poly();

/// The symbolic slice element over au_vars().
PolyMatrix symbolic_slice_au();

/// True iff A has the slice shape [[Z1, I], [Z2, Z1]] with Z1
/// antisymmetric and Z2 symmetric.
bool has_slice_shape(const QMatrix& a);

/// Recovers (a, Z2) from a matrix of slice shape.
Triple<GaussRat> a_from_slice(const QMatrix& a);

/// rank(A) <= 4 and tr(A^k) = 0 for k = 1..4. UsageError unless A has the
/// slice shape.
bool point_in_T(const QMatrix& a);

/// The fixed matrix B of the z_t family.
QMatrix zt_b();
/// z_t = [[tB, I], [-3t^2 B^2, tB]].
QMatrix deformation_z(const GaussRat& t);
/// z_t over the one-variable alphabet {t}.
PolyMatrix deformation_z_symbolic();

} // namespace spslice::geom

#endif
