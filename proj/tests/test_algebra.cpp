#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shirshov/algebra.hpp"
#include "shirshov/error.hpp"

namespace shirshov {
namespace {

// Generators: x = 0, y = 1.
AlgebraSpec yx_algebra(Field field = Field::prime(Field::kDefaultPrime), bool graded = true) {
    auto group = std::make_shared<const FiniteGroup>(build_group(GroupSpec::cyclic(graded ? 2 : 1)));
    GradedAlphabet a(group, {{"x", Element{graded ? 1u : 0u}}, {"y", kIdentity}});
    return AlgebraSpec(a, {{Word{0, 1}, LinComb::monomial(Word{1, 1, 0})}}, field);
}

AlgebraSpec free_algebra(Field field = Field::prime(Field::kDefaultPrime)) {
    return AlgebraSpec(GradedAlphabet::ungraded({"x", "y"}), {}, field);
}

TEST(Field, PrimeArithmetic) {
    const Field f = Field::prime(7);
    EXPECT_EQ(f.reduce(Rational(10)), Rational(3));
    EXPECT_EQ(f.reduce(Rational(-1)), Rational(6));
    EXPECT_EQ(f.reduce(Rational(1, 2)), Rational(4));  // 2 * 4 = 8 = 1
    EXPECT_EQ(f.div(Rational(3), Rational(5)), Rational(2));  // 5 * 2 = 10 = 3
    EXPECT_TRUE(f.is_zero(Rational(14)));
    EXPECT_THROW(f.reduce(Rational(1, 7)), InputError);
    EXPECT_THROW(f.div(Rational(1), Rational(7)), std::domain_error);
    EXPECT_THROW(Field::prime(12), InputError);
    EXPECT_EQ(f.describe(), "F_7");
}

TEST(Field, RationalsAreExact) {
    const Field q = Field::rationals();
    EXPECT_EQ(q.add(Rational(1, 3), Rational(1, 6)), Rational(1, 2));
    EXPECT_EQ(q.div(Rational(1), Rational(3)), Rational(1, 3));
    EXPECT_EQ(q.describe(), "Q");
}

TEST(Field, ParseAndFormat) {
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(parse_rational("+12"), Rational(12));
    EXPECT_EQ(format_rational(Rational(-3, 2)), "-3/2");
    EXPECT_EQ(format_rational(Rational(5)), "5");
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("abc"), InputError);
    EXPECT_THROW(parse_rational("1/"), InputError);
}

TEST(LinComb, CollectsAndDropsZeros) {
    const Field f = Field::prime(5);
    LinComb c;
    c.add(f, Word{0}, 2);
    c.add(f, Word{1}, 1);
    c.add(f, Word{0}, 3);  // 2 + 3 = 0 mod 5
    EXPECT_EQ(c.size(), 1u);
    EXPECT_EQ(c.coefficient(Word{1}), Rational(1));
    EXPECT_EQ(c.coefficient(Word{0}), Rational(0));
    EXPECT_EQ(c.leading(), (Word{1}));
    EXPECT_TRUE(LinComb::monomial(Word{0}, 0).is_zero());
}

TEST(AlgebraSpec, RejectsBadRules) {
    const auto a = GradedAlphabet::ungraded({"x", "y"});
    const Field f = Field::prime(Field::kDefaultPrime);
    EXPECT_THROW(AlgebraSpec(a, {{Word{}, LinComb::monomial(Word{0})}}, f), InputError);
    // lhs inside its own rhs.
    EXPECT_THROW(AlgebraSpec(a, {{Word{0}, LinComb::monomial(Word{1, 0})}}, f), InputError);
    EXPECT_THROW(AlgebraSpec(a, {{Word{0, 5}, LinComb{}}}, f), InputError);

    auto z2 = std::make_shared<const FiniteGroup>(build_group(GroupSpec::cyclic(2)));
    GradedAlphabet graded(z2, {{"x", Element{1}}, {"y", kIdentity}});
    // x y has grade 1 but y y has grade 0.
    EXPECT_THROW(AlgebraSpec(graded, {{Word{0, 1}, LinComb::monomial(Word{1, 1})}}, f), InputError);
}

TEST(AlgebraSpec, CoefficientsReducedIntoField) {
    const auto a = GradedAlphabet::ungraded({"x", "y"});
    LinComb rhs;
    rhs.add(Field::rationals(), Word{1, 0}, 7);
    rhs.add(Field::rationals(), Word{1}, 3);
    const AlgebraSpec spec(a, {{Word{0, 1}, rhs}}, Field::prime(7));
    EXPECT_EQ(spec.rules().front().rhs, LinComb::monomial(Word{1}, 3));
}

TEST(Normalize, DefiningRelation) {
    const auto spec = yx_algebra();
    EXPECT_EQ(normalize(spec, Word{0, 1}), LinComb::monomial(Word{1, 1, 0}));
}

TEST(Normalize, TwoXsOneY) {
    const auto spec = yx_algebra();
    std::size_t steps = 0;
    const auto nf = normalize(spec, Word{0, 0, 1}, kDefaultStepBudget,
                              [&](const Word&) { ++steps; });
    EXPECT_EQ(nf, LinComb::monomial(testing::yx_word(4, 2)));
    EXPECT_EQ(steps, 3u);
}

TEST(Normalize, FreeAlgebraIsIdentity) {
    const auto spec = free_algebra();
    const Word w{0, 1, 1, 0, 1};
    EXPECT_EQ(normalize(spec, w), LinComb::monomial(w));
    EXPECT_EQ(normalize(spec, Word{}), LinComb::monomial(Word{}));
}

TEST(Normalize, MatchesClosedFormOnAllShortWords) {
    const auto spec = yx_algebra();
    for (std::size_t len = 0; len <= 10; ++len)
        for (const auto& s : testing::all_sequences(2, len)) {
            const Word w(s.begin(), s.end());
            const auto oracle = testing::yx_normal_form(w);
            ASSERT_EQ(normalize(spec, w), LinComb::monomial(testing::yx_word(oracle.y, oracle.x)));
        }
}

TEST(Normalize, StepBudget) {
    const auto spec = yx_algebra();
    // x^15 y needs 2^15 - 1 = 32767 rewrites.
    Word w(15, Letter{0});
    w.push_back(1);
    EXPECT_NO_THROW(normalize(spec, w));
    EXPECT_THROW(normalize(spec, w, 32766), StepBudgetExceeded);
    // x^17 y needs 131071 rewrites, over the default budget.
    Word big(17, Letter{0});
    big.push_back(1);
    try {
        normalize(spec, big);
        FAIL();
    } catch (const StepBudgetExceeded& e) {
        EXPECT_NE(std::string(e.what()).find("possibly non-terminating"), std::string::npos);
    }
}

TEST(Normalize, NonTerminatingPresentationHitsBudget) {
    // x y -> y x and y x -> x y loop forever.
    const AlgebraSpec spec(GradedAlphabet::ungraded({"x", "y"}),
                           {{Word{0, 1}, LinComb::monomial(Word{1, 0})},
                            {Word{1, 0}, LinComb::monomial(Word{0, 1})}},
                           Field::rationals());
    EXPECT_THROW(normalize(spec, Word{0, 1}, 1000), StepBudgetExceeded);
}

TEST(Normalize, DistributesOverLinearCombinations) {
    // Commutator presentation of the polynomial-like algebra: y x -> x y + x.
    const Field q = Field::rationals();
    LinComb rhs;
    rhs.add(q, Word{0, 1}, 1);
    rhs.add(q, Word{0}, 1);
    const AlgebraSpec spec(GradedAlphabet::ungraded({"x", "y"}), {{Word{1, 0}, rhs}}, q);
    // y y x = y (x y + x) = (x y + x) y + (x y + x) = x y y + 2 x y + x
    LinComb expected;
    expected.add(q, Word{0, 1, 1}, 1);
    expected.add(q, Word{0, 1}, 2);
    expected.add(q, Word{0}, 1);
    EXPECT_EQ(normalize(spec, Word{1, 1, 0}), expected);

    // Over F_2 the middle term vanishes.
    const auto f2 = spec.with_field(Field::prime(2));
    LinComb expected2;
    expected2.add(f2.field(), Word{0, 1, 1}, 1);
    expected2.add(f2.field(), Word{0}, 1);
    EXPECT_EQ(normalize(f2, Word{1, 1, 0}), expected2);
}

TEST(Normalize, ZeroRhsKillsMonomials) {
    const Field q = Field::rationals();
    const AlgebraSpec spec(GradedAlphabet::ungraded({"x", "y"}), {{Word{0, 0}, LinComb{}}}, q);
    EXPECT_TRUE(normalize(spec, Word{1, 0, 0, 1}).is_zero());
    LinComb c;
    c.add(q, Word{1, 0, 0}, 2);
    c.add(q, Word{0, 1}, Rational(1, 2));
    EXPECT_EQ(normalize(spec, c), LinComb::monomial(Word{0, 1}, Rational(1, 2)));
}

TEST(Normalize, LeftmostLongestStrategy) {
    // Non-confluent rules make the strategy observable.
    //   a b c -> d, b c -> e, c -> f: in "a b c" the leftmost occurrence starts at a.
    const Field q = Field::rationals();
    const auto alpha = GradedAlphabet::ungraded({"a", "b", "c", "d", "e", "f"});
    const AlgebraSpec spec(alpha,
                           {{Word{1, 2}, LinComb::monomial(Word{4})},
                            {Word{2}, LinComb::monomial(Word{5})},
                            {Word{0, 1, 2}, LinComb::monomial(Word{3})}},
                           q);
    EXPECT_EQ(normalize(spec, Word{0, 1, 2}), LinComb::monomial(Word{3}));
    EXPECT_EQ(normalize(spec, Word{1, 2}), LinComb::monomial(Word{4}));
    EXPECT_EQ(normalize(spec, Word{2, 0}), LinComb::monomial(Word{5, 0}));

    // Same start, different lengths: the longer lhs wins.
    const AlgebraSpec longest(alpha,
                              {{Word{0}, LinComb::monomial(Word{4})},
                               {Word{0, 1}, LinComb::monomial(Word{3})}},
                              q);
    EXPECT_EQ(normalize(longest, Word{0, 1}), LinComb::monomial(Word{3}));
    EXPECT_EQ(normalize(longest, Word{0, 2}), LinComb::monomial(Word{4, 2}));
}

TEST(NormalizeProperties, PreservesGradePerStep) {
    // Graded presentation over Z/3 with a two-term rhs.
    auto z3 = std::make_shared<const FiniteGroup>(build_group(GroupSpec::cyclic(3)));
    const GradedAlphabet a(z3, {{"u", Element{1}}, {"v", Element{2}}, {"w", kIdentity}});
    const Field f = Field::prime(Field::kDefaultPrime);
    LinComb rhs;
    rhs.add(f, Word{0, 1}, 2);  // u v, grade 0
    rhs.add(f, Word{2}, 1);     // w, grade 0
    const AlgebraSpec spec(a, {{Word{1, 0}, rhs}, {Word{0, 0, 0}, LinComb::monomial(Word{2})}}, f);

    testing::Gen gen(31);
    for (int trial = 0; trial < 300; ++trial) {
        Word w(gen.between(0, 9));
        for (auto& l : w) l = static_cast<Letter>(gen.below(3));
        const Element g = grade_of(a, w);
        const auto nf = normalize(spec, w, kDefaultStepBudget,
                                  [&](const Word& step) { ASSERT_EQ(grade_of(a, step), g); });
        for (const auto& [m, c] : nf.terms()) {
            ASSERT_EQ(grade_of(a, m), g);
            ASSERT_FALSE(is_reducible(spec, m));
        }
    }
}

}  // namespace
}  // namespace shirshov
