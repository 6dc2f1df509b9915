#include "oracle.hpp"

#include "spslice/errors.hpp"
#include "spslice/linalg/charpoly.hpp"
#include "spslice/linalg/elimination.hpp"
#include "spslice/linalg/exp.hpp"
#include "spslice/linalg/matrix_io.hpp"
#include "spslice/linalg/subspace.hpp"
#include "spslice/linalg/symbolic.hpp"
#include "spslice/random.hpp"

#include <gtest/gtest.h>

using namespace spslice;

namespace {

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long height = 4)
{
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.coin() ? rng.gauss(height) : GaussRat{0};
    return m;
}

// Product of two random factors, so the rank is at most `r`.
QMatrix random_rank_bounded(Rng& rng, std::size_t n, std::size_t r)
{
    return random_matrix(rng, n, r) * random_matrix(rng, r, n);
}

bool same(const oracle::Q& a, const GaussRat& b)
{
    return a.re == b.re() && a.im == b.im();
}

const QMatrix& frozen4()
{
    const GaussRat i = GaussRat::i();
    static const QMatrix m{{1, 2, 0, i}, {0, 1, 3, 0}, {GaussRat(mpq_class(1, 2)), 0, 0, 1}, {0, -1, i, 2}};
    return m;
}

} // namespace

TEST(Oracle, FrozenCharacteristicPolynomial)
{
    // Coefficients of det(λI - M) for frozen4, computed independently.
    const std::vector<GaussRat> frozen{1, -4, GaussRat(5, -1), GaussRat(mpq_class(-3, 2), 2),
                                       GaussRat(mpq_class(5, 2), mpq_class(1, 2))};
    const auto o = oracle::charpoly(oracle::from(frozen4()));
    ASSERT_EQ(o.size(), frozen.size());
    for (std::size_t k = 0; k < frozen.size(); ++k) EXPECT_TRUE(same(o[k], frozen[k]));
    EXPECT_EQ(charpoly(frozen4()), frozen);
    EXPECT_EQ(determinant(frozen4()), frozen.back());
}

TEST(Charpoly, AgreesWithInterpolationOracle)
{
    Rng rng(101);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int k = 0; k < 10; ++k) {
            const QMatrix m = random_matrix(rng, n, n);
            const auto lib = charpoly(m);
            const auto ref = oracle::charpoly(oracle::from(m));
            ASSERT_EQ(lib.size(), ref.size());
            for (std::size_t j = 0; j < lib.size(); ++j) EXPECT_TRUE(same(ref[j], lib[j]));
        }
}

TEST(Charpoly, ZeroAndDiagonal)
{
    EXPECT_EQ(charpoly_string(charpoly(QMatrix(6, 6))), "λ^6");
    QMatrix d(6, 6);
    const GaussRat diag[6] = {1, 2, 2, -1, -2, -2};
    for (std::size_t k = 0; k < 6; ++k) d(k, k) = diag[k];
    EXPECT_EQ(charpoly_string(charpoly(d)), "λ^6 - 9*λ^4 + 24*λ^2 - 16");
}

TEST(Charpoly, PolynomialEntries)
{
    const VarSet v{"s"};
    const MultiPoly s = MultiPoly::variable(v, "s");
    PolyMatrix m(2, 2, MultiPoly(v));
    m(0, 1) = s;
    m(1, 0) = s;
    const auto c = charpoly(m);
    EXPECT_TRUE(c[1].is_zero());
    EXPECT_EQ(c[2], -(s * s));
}

TEST(Elimination, DeterminantAndRankMatchOracle)
{
    Rng rng(7);
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
        const QMatrix m = random_rank_bounded(rng, n, 1 + static_cast<std::size_t>(k % n));
        EXPECT_EQ(rank(m), oracle::rank(oracle::from(m)));
        EXPECT_TRUE(same(oracle::det(oracle::from(m)), determinant(m)));
        EXPECT_EQ(cofactor_determinant(m), determinant(m));
    }
}

TEST(Elimination, RrefIsCanonical)
{
    Rng rng(8);
    const QMatrix m = random_rank_bounded(rng, 4, 2);
    const QMatrix mixer = random_matrix(rng, 4, 4) + QMatrix::identity(4) * GaussRat{50};
    EXPECT_EQ(rref(m).reduced, rref(mixer * m).reduced);
    EXPECT_EQ(rref(m).rank(), 2u);
}

TEST(Elimination, InverseFrozen)
{
    const GaussRat i = GaussRat::i();
    const QMatrix a{{2, GaussRat{1} + i}, {GaussRat(mpq_class(1, 3)), -i}};
    const QMatrix expect{{GaussRat(mpq_class(21, 50), mpq_class(3, 50)), GaussRat(mpq_class(12, 25), mpq_class(-9, 25))},
                         {GaussRat(mpq_class(1, 50), mpq_class(-7, 50)), GaussRat(mpq_class(-3, 25), mpq_class(21, 25))}};
    EXPECT_EQ(inverse(a), expect);
    EXPECT_THROW(inverse(QMatrix{{1, 2}, {2, 4}}), DomainError);
}

TEST(Elimination, SolveParticular)
{
    const QMatrix aug{{1, 1, 3}, {1, -1, 1}};
    const auto x = solve_particular(aug);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], GaussRat{2});
    EXPECT_EQ((*x)[1], GaussRat{1});
    EXPECT_FALSE(solve_particular(QMatrix{{1, 1, 1}, {1, 1, 2}}).has_value());
}

TEST(Subspace, KernelImageDimensions)
{
    Rng rng(9);
    for (int k = 0; k < 20; ++k) {
        const QMatrix m = random_rank_bounded(rng, 5, 1 + static_cast<std::size_t>(k % 4));
        const Subspace ker = kernel(m), im = image(m);
        EXPECT_EQ(ker.dim() + im.dim(), 5u);
        EXPECT_TRUE((m * ker.basis().transpose()).is_zero());
        EXPECT_EQ(preimage(m, Subspace::zero(5)), ker);
        EXPECT_EQ(image(m, Subspace::full(5)), im);
    }
}

TEST(Subspace, SumIntersectionFormula)
{
    Rng rng(10);
    for (int k = 0; k < 20; ++k) {
        const Subspace a = Subspace::span(random_matrix(rng, 3, 6));
        const Subspace b = Subspace::span(random_matrix(rng, 4, 6));
        EXPECT_EQ(sum(a, b).dim() + intersect(a, b).dim(), a.dim() + b.dim());
        EXPECT_TRUE(a.contains(intersect(a, b)));
        EXPECT_TRUE(sum(a, b).contains(b));
    }
}

TEST(Subspace, SymplecticPerp)
{
    QMatrix j(4, 4);
    j(0, 2) = j(1, 3) = GaussRat{1};
    j(2, 0) = j(3, 1) = GaussRat{-1};
    const Subspace lag = Subspace::coordinate(4, {0, 1});
    EXPECT_EQ(perp_omega(lag, j), lag);
    const Subspace line = Subspace::coordinate(4, {0});
    EXPECT_EQ(perp_omega(line, j), Subspace::coordinate(4, {0, 1, 3}));
    EXPECT_THROW(perp_omega(line, QMatrix::identity(4)), UsageError);
    EXPECT_THROW(perp_omega(line, QMatrix(4, 4)), UsageError);
}

TEST(Subspace, StructuralEquality)
{
    const Subspace a = Subspace::span(4, {{1, 1, 0, 0}, {0, 1, 0, 0}});
    const Subspace b = Subspace::coordinate(4, {0, 1});
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a == Subspace::coordinate(4, {0, 2}));
}

TEST(Minors, VanishingReport)
{
    const VarSet v{"x", "y"};
    const MultiPoly x = MultiPoly::variable(v, "x"), y = MultiPoly::variable(v, "y");
    PolyMatrix m(3, 3, MultiPoly(v));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = (r == 0 ? x : y) * GaussRat{static_cast<long>(c + 1)};
    EXPECT_TRUE(minor_vanishing(m, 2));
    m(2, 2) += x;
    const MinorReport rep = minor_vanishing_report(m, 2);
    EXPECT_FALSE(rep.all_vanish);
    EXPECT_FALSE(rep.witness.is_zero());
    EXPECT_EQ(combinations(6, 5).size(), 6u);
}

TEST(Exp, NilpotentExponential)
{
    QMatrix n(3, 3);
    n(0, 1) = GaussRat{1};
    n(1, 2) = GaussRat{1};
    const QMatrix e = exp_nilpotent(n);
    EXPECT_EQ(e(0, 2), GaussRat(mpq_class(1, 2)));
    EXPECT_EQ(e * exp_nilpotent(-n), QMatrix::identity(3));
    EXPECT_THROW(exp_nilpotent(QMatrix::identity(3)), DomainError);
}

TEST(MatrixIo, RoundTripAndErrors)
{
    const QMatrix m = frozen4();
    EXPECT_EQ(parse_matrix(format_matrix(m)), m);
    EXPECT_EQ(parse_matrix(R"([["1/2+i","0"],["-i","3"]])")(0, 0), GaussRat(mpq_class(1, 2), 1));
    EXPECT_THROW(parse_matrix("[[1,2],[3]]"), ParseError);
    EXPECT_THROW(parse_matrix("not json"), ParseError);
    EXPECT_THROW(parse_matrix(R"([["x"]])"), ParseError);
}
