#include "oracle.hpp"

#include "spslice/errors.hpp"
#include "spslice/liealg/slice.hpp"
#include "spslice/liealg/sp_algebra.hpp"
#include "spslice/orbits/jordan.hpp"

#include <gtest/gtest.h>

using namespace spslice;
using namespace spslice::orbits;

TEST(Jordan, StandardRepresentatives)
{
    EXPECT_EQ(jordan_type(lie::standard_triple().x).str(), "[2,2,2]");
    EXPECT_EQ(jordan_type(representative_42()).str(), "[4,2]");
    EXPECT_TRUE(lie::in_sp(representative_42(), lie::SpAlgebra::split(3)));
    EXPECT_EQ(lie::orbit_dimension(representative_42(), lie::SpAlgebra::split(3)), 16u);
}

TEST(Jordan, RepresentativesMatchOracleForEverySymplecticType)
{
    const lie::SpAlgebra g = lie::SpAlgebra::split(3);
    const auto types = symplectic_partitions(6);
    EXPECT_EQ(types.size(), 8u);
    for (const auto& t : types) {
        const QMatrix x = orbit_representative(t);
        EXPECT_TRUE(lie::in_sp(x, g)) << t.str();
        EXPECT_EQ(jordan_type(x), t);
        EXPECT_EQ(JordanType(oracle::jordan_blocks(oracle::from(x))), t);
    }
}

TEST(Jordan, NonNilpotentRejected)
{
    EXPECT_THROW(jordan_type(QMatrix::identity(2)), DomainError);
}

TEST(Jordan, PartitionCounts)
{
    EXPECT_EQ(partitions(6).size(), 11u);
    EXPECT_EQ(partitions(4).size(), 5u);
    EXPECT_TRUE(JordanType({3, 3}).is_symplectic());
    EXPECT_FALSE(JordanType({3, 2, 1}).is_symplectic());
    EXPECT_EQ(JordanType::parse("[4,1,1]"), JordanType({1, 4, 1}));
    EXPECT_THROW(JordanType({2, 0}), UsageError);
}

TEST(Jordan, DominanceOrder)
{
    const JordanType a({4, 2}), b({3, 3}), c({2, 2, 2}), d({4, 1, 1});
    EXPECT_TRUE(dominance_leq(b, a));
    EXPECT_TRUE(dominance_leq(c, b));
    EXPECT_TRUE(dominance_leq(d, a));
    EXPECT_FALSE(dominance_leq(d, b));
    EXPECT_FALSE(dominance_leq(b, d));
    EXPECT_THROW(dominance_leq(a, JordanType({2})), UsageError);
}

TEST(Jordan, ClosureMatchesPowerVanishing)
{
    for (const auto& t : symplectic_partitions(6)) {
        const QMatrix x = orbit_representative(t);
        const QMatrix x2 = x * x;
        EXPECT_EQ((x2 * x2).is_zero(), in_closure(x, JordanType({4, 2}))) << t.str();
        EXPECT_EQ(x2.is_zero(), in_closure(x, JordanType({2, 2, 2}))) << t.str();
        EXPECT_TRUE(in_orbit(x, t));
    }
}

TEST(Jordan, RankSequence)
{
    const auto r = rank_sequence(representative_42());
    EXPECT_EQ(r, (std::vector<std::size_t>{6, 4, 2, 1, 0}));
}
