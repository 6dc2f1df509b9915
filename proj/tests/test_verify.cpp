#include "spslice/errors.hpp"
#include "spslice/verify/report.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace spslice;
using namespace spslice::verify;

TEST(Registry, IdsAreUniqueSortedAndWellFormed)
{
    const auto& reg = claim_registry();
    std::set<std::string> ids;
    std::string prev;
    for (const auto& c : reg) {
        EXPECT_TRUE(ids.insert(c.id).second) << c.id;
        EXPECT_LT(prev, c.id);
        prev = c.id;
        ASSERT_GE(c.id.size(), 4u);
        EXPECT_EQ(c.id[0], 'S');
        EXPECT_EQ(c.id[1] - '0', c.section);
        EXPECT_EQ(c.id[2], '.');
    }
    for (const char* id : {"S1.trace-identities", "S3.kernel-limit", "S3.fiber-sampler", "S2.wreath-isomorphism"})
        EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Sections, Parsing)
{
    EXPECT_EQ(parse_sections("1,3"), (std::set<int>{1, 3}));
    EXPECT_EQ(parse_sections(""), std::set<int>{});
    EXPECT_EQ(parse_sections(" 2 , 5 "), (std::set<int>{2, 5}));
    EXPECT_THROW(parse_sections("6"), UsageError);
    EXPECT_THROW(parse_sections("1,,2"), UsageError);
    EXPECT_THROW(parse_sections("x"), UsageError);
}

TEST(RunVerify, EmptySelectionPasses)
{
    VerifyConfig c;
    c.sections = {};
    const VerificationReport r = run_verify(c);
    EXPECT_TRUE(r.claims.empty());
    EXPECT_EQ(exit_code(r), 0);
}

TEST(RunVerify, SectionOneTraceIdentities)
{
    VerifyConfig c;
    c.sections = {1};
    const VerificationReport r = run_verify(c);
    auto it = std::find_if(r.claims.begin(), r.claims.end(), [](const Claim& x) { return x.id == "S1.trace-identities"; });
    ASSERT_NE(it, r.claims.end());
    EXPECT_EQ(it->status, Status::Pass);
    ASSERT_TRUE(it->witness.has_value());
    EXPECT_NE(it->witness->find("tr(A^4) - 2g1^2 - 4g2^2 = 0"), std::string::npos);
    for (const auto& claim : r.claims) EXPECT_EQ(claim.section, "1");
}

TEST(RunVerify, SectionThreeAllPass)
{
    VerifyConfig c;
    c.sections = {3};
    c.seed = 7;
    c.samples = 50;
    const VerificationReport r = run_verify(c);
    std::set<std::string> ids;
    for (const auto& claim : r.claims) {
        ids.insert(claim.id);
        EXPECT_EQ(claim.status, Status::Pass) << claim.id << ": " << claim.witness.value_or("");
    }
    EXPECT_TRUE(ids.count("S3.fiber-sampler"));
    EXPECT_TRUE(ids.count("S3.kernel-limit"));
    EXPECT_EQ(exit_code(r), 0);
}

TEST(RunVerify, InjectedFailureFlipsExitCode)
{
    VerifyConfig c;
    c.sections = {};
    c.inject_failure = true;
    const VerificationReport r = run_verify(c);
    ASSERT_EQ(r.claims.size(), 1u);
    EXPECT_EQ(r.claims[0].status, Status::Fail);
    EXPECT_EQ(exit_code(r), 1);
}

TEST(RunVerify, UsageErrors)
{
    VerifyConfig c;
    c.samples = 0;
    EXPECT_THROW(run_verify(c), UsageError);
    c.samples = 1;
    c.sections = {9};
    EXPECT_THROW(run_verify(c), UsageError);
}

TEST(RunVerify, DeterministicModuloTiming)
{
    VerifyConfig c;
    c.sections = {2, 4, 5};
    c.seed = 99;
    c.samples = 10;
    const std::string a = to_json(run_verify(c), false);
    const std::string b = to_json(run_verify(c), false);
    EXPECT_EQ(a, b);
    c.seed = 100;
    EXPECT_NE(a, to_json(run_verify(c), false));
}

TEST(Report, JsonRoundTripAndSchema)
{
    VerifyConfig c;
    c.sections = {5};
    c.samples = 3;
    const VerificationReport r = run_verify(c);
    const std::string text = to_json(r);
    for (const char* key : {"\"claims\"", "\"seed\"", "\"samples\"", "\"version\"", "\"runtime_ms\"", "\"witness\""})
        EXPECT_NE(text.find(key), std::string::npos) << key;
    const VerificationReport back = from_json(text);
    EXPECT_EQ(to_json(back), text);
    EXPECT_EQ(back.version, "1.0.0");
    EXPECT_THROW(from_json("{}"), ParseError);
}

TEST(Report, MarkdownListsClaims)
{
    VerifyConfig c;
    c.sections = {5};
    c.samples = 3;
    const std::string md = to_markdown(run_verify(c));
    EXPECT_NE(md.find("| S5.weyl-eta | 5 |"), std::string::npos);
    EXPECT_NE(md.find("result: PASS"), std::string::npos);
}
