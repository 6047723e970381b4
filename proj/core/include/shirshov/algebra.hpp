#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "shirshov/field.hpp"
#include "shirshov/graded_words.hpp"

namespace shirshov {

/// Degree-then-lexicographic order on words.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Finite linear combination of monomials. Zero coefficients are never stored;
/// the empty map is the zero element.
class LinComb {
public:
    using Terms = std::map<Word, Rational, ShortLex>;

    LinComb() = default;
    static LinComb monomial(Word w, Rational coef = 1) {
        LinComb c;
        if (coef != 0) c.terms_.emplace(std::move(w), std::move(coef));
        return c;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds coef * w, reducing in the field and dropping a vanishing term.
    void add(const Field& field, const Word& w, const Rational& coef);
    void add(const Field& field, const LinComb& other, const Rational& scale = 1);

    /// The largest monomial in ShortLex order; requires !is_zero().
    const Word& leading() const { return terms_.rbegin()->first; }
    const Rational& coefficient(const Word& w) const;

    friend bool operator==(const LinComb&, const LinComb&) = default;

private:
    Terms terms_;
};

/// lhs -> rhs, applied left to right during normalization.
struct RewriteRule {
    Word lhs;
    LinComb rhs;
};

/// A finitely presented algebra: generators with an optional grading,
/// rewriting rules, and a coefficient field.
class AlgebraSpec {
public:
    /// Validates the rules: non-empty lhs; lhs not a subword of its own rhs
    /// monomials; coefficients reduced into the field with zeros dropped; and,
    /// when the group is nontrivial, grade(lhs) = grade of every rhs monomial.
    AlgebraSpec(GradedAlphabet alphabet, std::vector<RewriteRule> rules, Field field);

    const GradedAlphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
    const Field& field() const noexcept { return field_; }
    std::size_t max_lhs_length() const noexcept { return max_lhs_; }
    bool graded() const noexcept { return alphabet_.group().order() > 1; }

    /// Same presentation over another field.
    AlgebraSpec with_field(Field field) const;

private:
    GradedAlphabet alphabet_;
    std::vector<RewriteRule> rules_;
    Field field_;
    std::size_t max_lhs_ = 0;
};

inline constexpr std::size_t kDefaultStepBudget = 100'000;

/// Called after every single rewrite with the full rewritten monomial.
using RewriteObserver = std::function<void(const Word&)>;

/// Rewrites to normal form. Each step replaces the leftmost lhs occurrence
/// (longest lhs at that position) in some monomial, distributing over the
/// rhs and collecting like terms. The result is the unique normal form only
/// if the rules are convergent; that is not checked.
///
/// Throws StepBudgetExceeded once more than `step_budget` rewrites are needed.
LinComb normalize(const AlgebraSpec& spec, const Word& w,
                  std::size_t step_budget = kDefaultStepBudget,
                  const RewriteObserver& observer = {});

LinComb normalize(const AlgebraSpec& spec, const LinComb& c,
                  std::size_t step_budget = kDefaultStepBudget);

/// True when some rule lhs occurs in w.
bool is_reducible(const AlgebraSpec& spec, const Word& w);

}  // namespace shirshov
