#include "spslice/errors.hpp"
#include "spslice/liealg/parabolic.hpp"
#include "spslice/liealg/slice.hpp"
#include "spslice/liealg/sp_algebra.hpp"
#include "spslice/liealg/weyl.hpp"
#include "spslice/linalg/subspace.hpp"
#include "spslice/random.hpp"

#include <gtest/gtest.h>

using namespace spslice;
using namespace spslice::lie;

TEST(SpAlgebra, DimensionIsNTimesTwoNPlusOne)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        EXPECT_EQ(SpAlgebra::split(n).dimension(), n * (2 * n + 1));
        EXPECT_EQ(SpAlgebra::antidiagonal(n).dimension(), n * (2 * n + 1));
        EXPECT_EQ(SpAlgebra::split(n).basis().size(), n * (2 * n + 1));
    }
}

TEST(SpAlgebra, RejectsBadGram)
{
    EXPECT_THROW(SpAlgebra(QMatrix::identity(4)), UsageError);
    EXPECT_THROW(SpAlgebra(QMatrix(4, 4)), UsageError);
    EXPECT_THROW(SpAlgebra(QMatrix(3, 3)), UsageError);
}

TEST(SpAlgebra, BracketClosure)
{
    const SpAlgebra g = SpAlgebra::split(3);
    const auto basis = g.basis();
    Rng rng(4);
    for (int k = 0; k < 20; ++k) {
        QMatrix a(6, 6), b(6, 6);
        for (const auto& e : basis) {
            a += e * rng.gauss(3);
            b += e * rng.gauss(3);
        }
        EXPECT_TRUE(in_sp(a, g));
        EXPECT_TRUE(in_sp(bracket(a, b), g));
        EXPECT_EQ(adjoint_invariants(a).size(), 3u);
    }
}

TEST(SpAlgebra, ConventionsIntertwine)
{
    const QMatrix p = split_to_antidiagonal(3);
    EXPECT_EQ(p.transpose() * split_gram(3) * p, antidiagonal_gram(3));
    const SpAlgebra anti = SpAlgebra::antidiagonal(3), split = SpAlgebra::split(3);
    for (const auto& x : anti.basis()) EXPECT_TRUE(in_sp(antidiagonal_to_split_matrix(x), split));
    for (const auto& x : split.basis()) EXPECT_EQ(antidiagonal_to_split_matrix(split_to_antidiagonal_matrix(x)), x);
}

TEST(SpAlgebra, AdjointInvariantsRejectNonSp)
{
    QMatrix a(6, 6);
    a(0, 0) = GaussRat{1};
    EXPECT_THROW(adjoint_invariants(a), DomainError);
}

TEST(Slice, StandardTripleAndCentralizer)
{
    const SL2Triple t = standard_triple();
    EXPECT_TRUE(verify_sl2(t));
    const SpAlgebra g = SpAlgebra::split(3);
    EXPECT_EQ(centralizer_sp(t.y, g).size(), 9u);
    EXPECT_EQ(orbit_dimension(t.x, g), 12u);
    const SlodowySlice s = slodowy_slice(t, g);
    EXPECT_EQ(s.dim(), 9u);
    EXPECT_EQ(s.param_names, standard_slice_params());
    EXPECT_TRUE(in_sp(s.symbolic_element(), g));
    // Every basis direction commutes with y0.
    for (const auto& b : s.centralizer_basis) EXPECT_TRUE(bracket(b, t.y).is_zero());
}

TEST(Slice, InvalidTripleRejected)
{
    SL2Triple t = standard_triple();
    t.h = t.h * GaussRat{2};
    EXPECT_FALSE(verify_sl2(t));
    EXPECT_THROW(slodowy_slice(t, SpAlgebra::split(3)), DomainError);
}

TEST(Slice, AtMatchesShape)
{
    const SlodowySlice s = slodowy_slice(standard_triple(), SpAlgebra::split(3));
    const std::vector<GaussRat> p{2, 4, 6, 1, 2, 3, 5, 7, 9};
    const QMatrix a = s.at(p);
    EXPECT_EQ(a(0, 1), GaussRat{3}); // a3 / 2
    EXPECT_EQ(a(0, 3), GaussRat{1});
    EXPECT_EQ(a(3, 0), GaussRat{1}); // x1
    EXPECT_EQ(a(3, 1), GaussRat{5}); // y1
    EXPECT_EQ(a(3, 4), GaussRat{3}); // lower Z1 block
}

TEST(Parabolic, DimensionsForBothFlags)
{
    const SpAlgebra g = SpAlgebra::antidiagonal(3);
    for (const auto* flag : {&kFlagP1, &kFlagP2}) {
        const ParabolicData p = parabolic(*flag, g);
        EXPECT_EQ(p.levi_dim, 5u);
        EXPECT_EQ(p.nilradical_basis.size(), 8u);
        EXPECT_EQ(p.levi_center_basis.size(), 2u);
        EXPECT_EQ(p.levi_dim + 2 * p.nilradical_basis.size(), 21u);
        for (const auto& u : p.nilradical_basis)
            for (const auto& l : p.levi_basis)
                EXPECT_TRUE(matrix_span(p.nilradical_basis).contains(flatten(bracket(l, u))));
    }
}

TEST(Parabolic, Preconditions)
{
    EXPECT_THROW(parabolic({1, 2, 3}, SpAlgebra::antidiagonal(3)), UsageError);
    EXPECT_THROW(parabolic({1, 2, 2, 2}, SpAlgebra::antidiagonal(3)), UsageError);
    EXPECT_THROW(parabolic(kFlagP1, SpAlgebra::split(3)), UsageError);
}

TEST(Weyl, GroupsAndEta)
{
    const CartanData w = weyl_data();
    EXPECT_EQ(group_closure(w.wl_generators).size(), 2u);
    EXPECT_EQ(group_closure(w.wp_generators).size(), 4u);
    EXPECT_EQ(w.fixed_space.dim(), 2u);
    const auto [s2, t2] = eta({3, 5, 5});
    EXPECT_EQ(s2, GaussRat{9});
    EXPECT_EQ(t2, GaussRat{25});
    EXPECT_THROW(eta({1, 2, 3}), UsageError);
    EXPECT_EQ(element_order(w.wl_generators.front()), 2u);
}
