#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shirshov/error.hpp"
#include "shirshov/graded_words.hpp"

namespace shirshov {
namespace {

std::shared_ptr<const FiniteGroup> group_of(const GroupSpec& spec) {
    return std::make_shared<const FiniteGroup>(build_group(spec));
}

GradedAlphabet xy_over_z2() {
    return GradedAlphabet(group_of(GroupSpec::cyclic(2)), {{"x", Element{1}}, {"y", Element{0}}});
}

TEST(GradedAlphabet, RejectsBadGenerators) {
    auto z2 = group_of(GroupSpec::cyclic(2));
    EXPECT_THROW(GradedAlphabet(z2, {{"x", Element{0}}, {"x", Element{1}}}), InputError);
    EXPECT_THROW(GradedAlphabet(z2, {{"", Element{0}}}), InputError);
    EXPECT_THROW(GradedAlphabet(z2, {{"x", Element{2}}}), InputError);
}

TEST(GradedAlphabet, ParseAndRender) {
    const auto a = xy_over_z2();
    const Word w = a.parse({"x", "y", "y"});
    EXPECT_EQ(w, (Word{0, 1, 1}));
    EXPECT_EQ(a.render(w), "x y y");
    EXPECT_EQ(a.render({}), "1");
    try {
        a.parse({"x", "z"});
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("unknown symbol"), std::string::npos);
    }
}

TEST(GradeOf, Examples) {
    const auto a = xy_over_z2();
    EXPECT_EQ(grade_of(a, a.parse({"x", "x", "y"})), Element{0});
    EXPECT_EQ(grade_of(a, {}), kIdentity);
    EXPECT_EQ(grade_of(a, a.parse({"x", "y"})), Element{1});
    EXPECT_THROW(grade_of(a, Word{0, 7}), InputError);
}

TEST(GradeOf, RespectsNonAbelianOrder) {
    auto s3 = group_of(GroupSpec::symmetric(3));
    const GradedAlphabet a(s3, {{"a", Element{1}}, {"b", Element{2}}});
    ASSERT_NE(s3->mul(Element{1}, Element{2}), s3->mul(Element{2}, Element{1}));
    EXPECT_EQ(grade_of(a, a.parse({"a", "b"})), s3->mul(Element{1}, Element{2}));
    EXPECT_EQ(grade_of(a, a.parse({"b", "a"})), s3->mul(Element{2}, Element{1}));
}

TEST(Factorize, WorkedExample) {
    const auto a = xy_over_z2();
    const Word w = a.parse({"x", "x", "x", "y"});
    const Factorization f = factorize(a, w);
    EXPECT_EQ(f.segments, (std::vector<Segment>{{SegmentTag::Y, {1, 1}}, {SegmentTag::A, {2, 4}}}));
    EXPECT_EQ(f.k, 1u);
    EXPECT_EQ(f.leftover_length(), 1u);
    EXPECT_EQ(power_count(f, 2), 3u);
    EXPECT_TRUE(verify_factorization(a, w, f).clean());
}

TEST(Factorize, AllNeutralLetters) {
    const auto a = xy_over_z2();
    const Word w = a.parse({"y", "y", "y", "y"});
    const Factorization f = factorize(a, w);
    EXPECT_EQ(f.segments, (std::vector<Segment>{{SegmentTag::A, {1, 4}}}));
    EXPECT_EQ(f.k, 1u);
    EXPECT_EQ(power_count(f, 5), 5u);
}

TEST(Factorize, NoIdentityInterval) {
    const GradedAlphabet a(group_of(GroupSpec::cyclic(3)), {{"u", Element{1}}});
    const Word w = a.parse({"u", "u"});
    const Factorization f = factorize(a, w);
    EXPECT_EQ(f.segments, (std::vector<Segment>{{SegmentTag::Y, {1, 2}}}));
    EXPECT_EQ(f.k, 0u);
    EXPECT_EQ(f.leftover_length(), 2u);
    EXPECT_EQ(power_count(f, 2), 2u);
    EXPECT_TRUE(verify_factorization(a, w, f).clean());
}

TEST(Factorize, EmptyWord) {
    const Factorization f = factorize(xy_over_z2(), {});
    EXPECT_TRUE(f.segments.empty());
    EXPECT_EQ(f.k, 0u);
}

TEST(Factorize, MergesTouchingIntervals) {
    // Grades 1,1,1,1 over Z/2: the optimum is [1,4] or [1,2][3,4]; either way one A-segment.
    const GradedAlphabet a(group_of(GroupSpec::cyclic(2)), {{"x", Element{1}}});
    const Factorization f = factorize(a, a.parse({"x", "x", "x", "x"}));
    EXPECT_EQ(f.segments, (std::vector<Segment>{{SegmentTag::A, {1, 4}}}));
}

TEST(HeightBound, Examples) {
    EXPECT_EQ(height_bound(2, 2), 5u);
    EXPECT_EQ(height_bound(7, 1), 7u);
    EXPECT_EQ(height_bound(1, 6), 11u);
    EXPECT_THROW(height_bound(0, 3), InputError);
    EXPECT_THROW(power_count(Factorization{}, 0), InputError);
}

TEST(VerifyFactorization, FlagsBadGradeAndUnmergedSegments) {
    const auto a = xy_over_z2();
    const Word w = a.parse({"x", "y", "x", "x"});
    Factorization bad_grade{{{SegmentTag::A, {1, 2}}, {SegmentTag::Y, {3, 4}}}, 1};
    auto r = verify_factorization(a, w, bad_grade);
    ASSERT_FALSE(r.clean());
    EXPECT_NE(r.violations.front().find("grade != e"), std::string::npos);

    const Word v = a.parse({"y", "y", "x", "x"});
    Factorization unmerged{{{SegmentTag::A, {1, 2}}, {SegmentTag::A, {3, 4}}}, 2};
    r = verify_factorization(a, v, unmerged);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_NE(r.violations.front().find("unmerged A-segments"), std::string::npos);
}

TEST(VerifyFactorization, FlagsPartitionAndLeftoverBounds) {
    const auto a = xy_over_z2();
    const Word w = a.parse({"x", "y", "x"});
    Factorization gap{{{SegmentTag::Y, {1, 1}}, {SegmentTag::Y, {3, 3}}}, 0};
    auto r = verify_factorization(a, w, gap);
    EXPECT_FALSE(r.clean());
    // Y total 3 > |G|-1 = 1.
    Factorization all_y{{{SegmentTag::Y, {1, 3}}}, 0};
    r = verify_factorization(a, w, all_y);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_NE(r.violations.front().find("exceeds |G|-1"), std::string::npos);
    Factorization wrong_k{{{SegmentTag::Y, {1, 1}}, {SegmentTag::A, {2, 3}}}, 3};
    EXPECT_FALSE(verify_factorization(a, w, wrong_k).clean());
}

// Random alphabets over groups of order <= 8.
TEST(FactorizationProperties, InvariantsAndHeightBound) {
    testing::Gen gen(2024);
    const std::vector<GroupSpec> specs = {
        GroupSpec::cyclic(1),   GroupSpec::cyclic(2),    GroupSpec::cyclic(5),
        GroupSpec::cyclic(8),   GroupSpec::symmetric(3), GroupSpec::dihedral(4),
        GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(4))};
    for (int trial = 0; trial < 2000; ++trial) {
        auto group = group_of(specs[gen.below(specs.size())]);
        std::vector<Generator> gens;
        const std::size_t letters = gen.between(1, 4);
        for (std::size_t l = 0; l < letters; ++l)
            gens.push_back({"s" + std::to_string(l),
                            Element{static_cast<std::uint32_t>(gen.below(group->order()))}});
        const GradedAlphabet a(group, gens);
        Word w(gen.between(0, 100));
        for (auto& l : w) l = static_cast<Letter>(gen.below(letters));

        const Factorization f = factorize(a, w);
        const auto report = verify_factorization(a, w, f);
        ASSERT_TRUE(report.clean()) << report.violations.front();

        // Round trip: spans reproduce w.
        Word rebuilt;
        for (const Segment& s : f.segments)
            rebuilt.insert(rebuilt.end(), w.begin() + static_cast<std::ptrdiff_t>(s.span.start - 1),
                           w.begin() + static_cast<std::ptrdiff_t>(s.span.end));
        ASSERT_EQ(rebuilt, w);
        for (std::size_t h = 1; h <= 3; ++h)
            ASSERT_LE(power_count(f, h), height_bound(h, group->order()));
    }
}

TEST(FactorizationProperties, DependsOnlyOnGrades) {
    testing::Gen gen(5);
    auto group = group_of(GroupSpec::symmetric(3));
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Generator> g1, g2;
        for (std::uint32_t e = 0; e < 6; ++e) {
            g1.push_back({"a" + std::to_string(e), Element{e}});
            g2.push_back({"zz" + std::to_string(5 - e), Element{e}});
        }
        const GradedAlphabet a1(group, g1), a2(group, g2);
        Word w(gen.between(0, 60));
        for (auto& l : w) l = static_cast<Letter>(gen.below(6));
        ASSERT_EQ(factorize(a1, w), factorize(a2, w));
    }
}

TEST(FactorizationProperties, NeutralWordsGiveOneSegment) {
    testing::Gen gen(9);
    auto group = group_of(GroupSpec::dihedral(3));
    const GradedAlphabet a(group, {{"p", kIdentity}, {"q", kIdentity}});
    for (int trial = 0; trial < 100; ++trial) {
        Word w(gen.between(1, 50));
        for (auto& l : w) l = static_cast<Letter>(gen.below(2));
        const Factorization f = factorize(a, w);
        ASSERT_EQ(f.k, 1u);
        ASSERT_EQ(power_count(f, 4), 4u);
    }
}

}  // namespace
}  // namespace shirshov
