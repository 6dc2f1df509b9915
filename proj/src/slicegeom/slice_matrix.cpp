#include "spslice/slicegeom/slice_matrix.hpp"

#include "spslice/linalg/elimination.hpp"

namespace spslice::geom {

VarSet au_vars()
{
    static const VarSet vars{"a1", "a2", "a3", "u1", "u2", "u3"};
    return vars;
}

Triple<MultiPoly> symbolic_a(const VarSet& vars)
{
    return {MultiPoly::variable(vars, "a1"), MultiPoly::variable(vars, "a2"), MultiPoly::variable(vars, "a3")};
}

Triple<MultiPoly> symbolic_u(const VarSet& vars)
{
    return {MultiPoly::variable(vars, "u1"), MultiPoly::variable(vars, "u2"), MultiPoly::variable(vars, "u3")};
}

MultiPoly g1_poly()
{
    const VarSet v = au_vars();
    const auto a = symbolic_a(v), u = symbolic_u(v);
    MultiPoly g(v);
    for (std::size_t k = 0; k < 3; ++k) g += u[k] * u[k] - a[k] * a[k];
    return g;
}

MultiPoly g2_poly()
{
    const VarSet v = au_vars();
    const auto a = symbolic_a(v), u = symbolic_u(v);
    MultiPoly g(v);
    for (std::size_t k = 0; k < 3; ++k) g += a[k] * u[k];
    return g;
}

PolyMatrix symbolic_slice_au()
{
    const VarSet v = au_vars();
    return slice_matrix_from_au(symbolic_a(v), symbolic_u(v));
}

bool has_slice_shape(const QMatrix& a)
{
    if (a.rows() != 6 || a.cols() != 6) return false;
    const QMatrix z1 = a.block(0, 0, 3, 3), top_right = a.block(0, 3, 3, 3);
    const QMatrix z2 = a.block(3, 0, 3, 3), bottom_right = a.block(3, 3, 3, 3);
    return top_right == QMatrix::identity(3) && bottom_right == z1 && z1.transpose() == -z1 && z2.transpose() == z2;
}

Triple<GaussRat> a_from_slice(const QMatrix& a)
{
    if (!has_slice_shape(a)) throw UsageError("a_from_slice: matrix is not of slice shape");
    const GaussRat two{2};
    return {a(1, 2) * two, a(2, 0) * two, a(0, 1) * two};
}

bool point_in_T(const QMatrix& a)
{
    if (!has_slice_shape(a)) throw UsageError("point_in_T: matrix is not of slice shape [[Z1, I], [Z2, Z1]]");
    if (rank(a) > 4) return false;
    QMatrix power = a;
    for (int k = 1; k <= 4; ++k) {
        if (!power.trace().is_zero()) return false;
        power = power * a;
    }
    return true;
}

QMatrix zt_b()
{
    const GaussRat i = GaussRat::i();
    QMatrix b(3, 3);
    b(0, 1) = i;
    b(0, 2) = GaussRat{1};
    b(1, 0) = -i;
    b(2, 0) = GaussRat{-1};
    return b;
}

QMatrix deformation_z(const GaussRat& t)
{
    const QMatrix b = zt_b();
    const QMatrix tb = b * t;
    return block2x2(tb, QMatrix::identity(3), b * b * (GaussRat{-3} * t * t), tb);
}

PolyMatrix deformation_z_symbolic()
{
    const VarSet vars{"t"};
    const MultiPoly t = MultiPoly::variable(vars, 0);
    const PolyMatrix b = to_poly(zt_b(), vars);
    const PolyMatrix tb = b * t;
    return block2x2(tb, PolyMatrix::identity(3, MultiPoly(vars)), b * b * (MultiPoly(vars, GaussRat{-3}) * t * t), tb);
}

} // namespace spslice::geom
