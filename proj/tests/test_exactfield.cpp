#include "spslice/errors.hpp"
#include "spslice/exactfield/gauss_rat.hpp"
#include "spslice/exactfield/multi_poly.hpp"
#include "spslice/exactfield/substitute.hpp"
#include "spslice/random.hpp"

#include <gtest/gtest.h>

using namespace spslice;

TEST(GaussRat, ArithmeticOfI)
{
    const GaussRat i = GaussRat::i();
    EXPECT_EQ(i * i, GaussRat{-1});
    EXPECT_EQ(GaussRat{1} / i, -i);
    EXPECT_EQ((GaussRat{1} + i) * (GaussRat{1} - i), GaussRat{2});
}

TEST(GaussRat, CanonicalForm)
{
    EXPECT_EQ(GaussRat(mpq_class(2, 4), mpq_class(-3, 6)), GaussRat(1, 2, -1, 2));
    EXPECT_EQ(GaussRat(mpq_class(2, 4)).str(), "1/2");
}

TEST(GaussRat, DivisionByZeroThrows)
{
    EXPECT_THROW(GaussRat{1} / GaussRat{0}, ArithmeticError);
    EXPECT_THROW(GaussRat{0}.inverse(), ArithmeticError);
}

TEST(GaussRat, TextRoundTrip)
{
    EXPECT_EQ(GaussRat(mpq_class(-3, 2), 1).str(), "-3/2+1i");
    EXPECT_EQ(GaussRat(0, 2).str(), "2i");
    EXPECT_EQ(GaussRat{0}.str(), "0");
    EXPECT_EQ(GaussRat::parse("i"), GaussRat::i());
    EXPECT_EQ(GaussRat::parse("-i"), -GaussRat::i());
    EXPECT_EQ(GaussRat::parse(" -1/2i "), GaussRat(0, mpq_class(-1, 2)));
    EXPECT_EQ(GaussRat::parse("3-2i"), GaussRat(3, -2));
    EXPECT_THROW(GaussRat::parse("1/0"), ParseError);
    EXPECT_THROW(GaussRat::parse("abc"), ParseError);
}

TEST(GaussRat, FieldAxiomsOnSeededSamples)
{
    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        const GaussRat a = rng.gauss(), b = rng.gauss(), c = rng.nonzero_gauss();
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a / c) * c, a);
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ(GaussRat::parse(a.str()), a);
        EXPECT_EQ(field_arith(FieldOp::Sub, a, b), a - b);
    }
}

TEST(Rng, SameSeedSameStream)
{
    Rng a(5), b(5), c(6);
    bool differs = false;
    for (int k = 0; k < 50; ++k) {
        const GaussRat x = a.gauss();
        EXPECT_EQ(x, b.gauss());
        differs = differs || !(x == c.gauss());
    }
    EXPECT_TRUE(differs);
}

TEST(Rng, HeightIsBounded)
{
    Rng rng(3);
    for (int k = 0; k < 500; ++k) {
        const mpq_class q = rng.rational(5);
        EXPECT_LE(abs(q.get_num()), 5);
        EXPECT_LE(q.get_den(), 5);
        EXPECT_NE(rng.nonzero_rational(2), 0);
    }
}

TEST(MultiPoly, ExpansionIdentity)
{
    const VarSet v{"s", "t"};
    const MultiPoly s = MultiPoly::variable(v, "s"), t = MultiPoly::variable(v, "t");
    const GaussRat i = GaussRat::i();
    const MultiPoly a1 = (s * s + t * t) * i, a2 = s * s - t * t, a3 = s * t * GaussRat{2};
    EXPECT_TRUE((a1 * a1 + a2 * a2 + a3 * a3).is_zero());
    EXPECT_EQ(pow(s + t, 2), s * s + s * t * GaussRat{2} + t * t);
}

TEST(MultiPoly, ConstantsPromoteAndAlphabetsMustAgree)
{
    const VarSet v{"x"}, w{"y"};
    const MultiPoly x = MultiPoly::variable(v, "x");
    EXPECT_EQ((x + MultiPoly(3)).constant_term(), GaussRat{3});
    EXPECT_THROW(x + MultiPoly::variable(w, "y"), UsageError);
}

TEST(MultiPoly, DegreesDerivativesEvaluation)
{
    const VarSet v{"x", "y"};
    const MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1);
    const MultiPoly p = x * x * y + y * GaussRat{3} + MultiPoly(v, GaussRat{1});
    EXPECT_EQ(p.total_degree(), 3);
    EXPECT_EQ(p.degree_in(0), 2u);
    EXPECT_EQ(p.derivative(0), x * y * GaussRat{2});
    const std::vector<GaussRat> pt{GaussRat{2}, GaussRat::i()};
    EXPECT_EQ(p.evaluate(pt), GaussRat{1} + GaussRat::i() * GaussRat{7});
    EXPECT_EQ(MultiPoly(v).str(), "0");
    EXPECT_EQ(MultiPoly(v).total_degree(), -1);
}

TEST(MultiPoly, RingLawsOnRandomPolynomials)
{
    Rng rng(21);
    const VarSet v{"x", "y", "z"};
    auto random_poly = [&] {
        MultiPoly p(v);
        for (const auto& e : monomials_up_to(3, 2))
            if (rng.coin()) p.add_term(e, rng.gauss(3));
        return p;
    };
    for (int k = 0; k < 30; ++k) {
        const MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        const std::vector<GaussRat> pt{rng.gauss(), rng.gauss(), rng.gauss()};
        EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    }
}

TEST(Substitute, ComposesAndEvaluates)
{
    const VarSet v{"x", "y"}, w{"t"};
    const MultiPoly x = MultiPoly::variable(v, "x"), y = MultiPoly::variable(v, "y");
    const MultiPoly t = MultiPoly::variable(w, "t");
    const MultiPoly p = x * x - y;
    EXPECT_TRUE(poly_substitute(p, Assignment{{"x", t}, {"y", t * t}}).is_zero());
    EXPECT_EQ(poly_substitute(p, std::map<std::string, GaussRat>{{"x", 3}, {"y", 4}}).constant_term(), GaussRat{5});
}

TEST(Substitute, IdealMembershipFindsCofactors)
{
    const VarSet v{"x", "y"};
    const MultiPoly x = MultiPoly::variable(v, "x"), y = MultiPoly::variable(v, "y");
    const MultiPoly g1 = x * x - y, g2 = x * y;
    const MultiPoly p = g1 * x + g2 * GaussRat{2};
    const auto q = poly_express_in_ideal(p, {g1, g2}, 1);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ((*q)[0] * g1 + (*q)[1] * g2, p);
    EXPECT_FALSE(poly_express_in_ideal(x, {g1, g2}, 2).has_value());
}

TEST(Substitute, MonomialCount)
{
    EXPECT_EQ(monomials_up_to(6, 2).size(), 28u);
    EXPECT_EQ(monomials_up_to(2, 3).size(), 10u);
}
