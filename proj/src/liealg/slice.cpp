#include "spslice/liealg/slice.hpp"

namespace spslice::lie {

bool verify_sl2(const SL2Triple& t)
{
    const GaussRat two{2};
    return bracket(t.x, t.y) == t.h && bracket(t.h, t.x) == t.x * two && bracket(t.h, t.y) == t.y * GaussRat{-2};
}

SL2Triple standard_triple()
{
    const QMatrix zero(3, 3), id = QMatrix::identity(3);
    return {block2x2(zero, id, zero, zero), block2x2(zero, zero, id, zero), block2x2(id, zero, zero, -id)};
}

std::vector<QMatrix> standard_slice_basis()
{
    std::vector<QMatrix> basis;
    const GaussRat half(mpq_class(1, 2));
    // Z1 generators: the coefficient of a_k in Z1, placed on both diagonal blocks.
    const std::array<std::array<std::pair<std::size_t, std::size_t>, 2>, 3> a_entries{{
        {{{1, 2}, {2, 1}}}, // a1: Z1[1][2] = a1/2, Z1[2][1] = -a1/2
        {{{2, 0}, {0, 2}}}, // a2: Z1[2][0] = a2/2, Z1[0][2] = -a2/2
        {{{0, 1}, {1, 0}}}, // a3: Z1[0][1] = a3/2, Z1[1][0] = -a3/2
    }};
    for (const auto& [plus, minus] : a_entries) {
        QMatrix z1(3, 3);
        z1(plus.first, plus.second) = half;
        z1(minus.first, minus.second) = -half;
        basis.push_back(block2x2(z1, QMatrix(3, 3), QMatrix(3, 3), z1));
    }
    // Z2 generators: x1, x2, x3 on the diagonal, then y1 (0,1), y2 (0,2), y3 (1,2).
    const std::array<std::pair<std::size_t, std::size_t>, 6> z2_entries{{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};
    for (const auto& [r, c] : z2_entries) {
        QMatrix z2(3, 3);
        z2(r, c) = GaussRat{1};
        z2(c, r) = GaussRat{1};
        basis.push_back(block2x2(QMatrix(3, 3), QMatrix(3, 3), z2, QMatrix(3, 3)));
    }
    return basis;
}

VarSet standard_slice_params()
{
    return VarSet{"a1", "a2", "a3", "x1", "x2", "x3", "y1", "y2", "y3"};
}

SlodowySlice slodowy_slice(const SL2Triple& t, const SpAlgebra& g)
{
    if (!verify_sl2(t) || !in_sp(t.x, g) || !in_sp(t.y, g) || !in_sp(t.h, g))
        throw DomainError("slodowy_slice: not an sl2-triple in this algebra");
    const auto centralizer = centralizer_sp(t.y, g);
    if (g.size() == 6) {
        const auto normalised = standard_slice_basis();
        bool fits = true;
        for (const auto& b : normalised)
            if (!in_sp(b, g)) fits = false;
        if (fits && matrix_span(normalised) == matrix_span(centralizer))
            return {t, normalised, standard_slice_params()};
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < centralizer.size(); ++k) names.push_back("c" + std::to_string(k + 1));
    return {t, centralizer, VarSet(names)};
}

PolyMatrix SlodowySlice::symbolic_element() const
{
    PolyMatrix m = to_poly(triple.x, param_names);
    for (std::size_t k = 0; k < centralizer_basis.size(); ++k) {
        const MultiPoly p = MultiPoly::variable(param_names, k);
        m += to_poly(centralizer_basis[k], param_names) * p;
    }
    return m;
}

QMatrix SlodowySlice::at(std::span<const GaussRat> params) const
{
    if (params.size() != dim()) throw UsageError("SlodowySlice::at: wrong number of parameters");
    QMatrix m = triple.x;
    for (std::size_t k = 0; k < dim(); ++k) m += centralizer_basis[k] * params[k];
    return m;
}

} // namespace spslice::lie
