#include "shirshov/algebra.hpp"

#include <algorithm>

#include "shirshov/error.hpp"

namespace shirshov {

void LinComb::add(const Field& field, const Word& w, const Rational& coef) {
    const Rational c = field.reduce(coef);
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second = field.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

void LinComb::add(const Field& field, const LinComb& other, const Rational& scale) {
    for (const auto& [w, c] : other.terms_) add(field, w, c * scale);
}

const Rational& LinComb::coefficient(const Word& w) const {
    static const Rational zero(0);
    const auto it = terms_.find(w);
    return it == terms_.end() ? zero : it->second;
}

namespace {

bool occurs_in(const Word& needle, const Word& hay) {
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

}  // namespace

AlgebraSpec::AlgebraSpec(GradedAlphabet alphabet, std::vector<RewriteRule> rules, Field field)
    : alphabet_(std::move(alphabet)), field_(field) {
    rules_.reserve(rules.size());
    for (std::size_t r = 0; r < rules.size(); ++r) {
        RewriteRule& rule = rules[r];
        const std::string where = "rule " + std::to_string(r + 1);
        if (rule.lhs.empty()) throw InputError(where + ": lhs must be non-empty");
        alphabet_.check(rule.lhs);
        LinComb rhs;
        for (const auto& [w, c] : rule.rhs.terms()) {
            alphabet_.check(w);
            if (occurs_in(rule.lhs, w))
                throw InputError(where + ": lhs " + alphabet_.render(rule.lhs) +
                                 " occurs in its own rhs monomial " + alphabet_.render(w));
            rhs.add(field_, w, c);
        }
        if (graded()) {
            const Element g = grade_of(alphabet_, rule.lhs);
            for (const auto& [w, c] : rhs.terms())
                if (grade_of(alphabet_, w) != g)
                    throw InputError(where + ": not grade-homogeneous, " +
                                     alphabet_.render(rule.lhs) + " and " + alphabet_.render(w) +
                                     " have different grades");
        }
        max_lhs_ = std::max(max_lhs_, rule.lhs.size());
        rules_.push_back({std::move(rule.lhs), std::move(rhs)});
    }
}

AlgebraSpec AlgebraSpec::with_field(Field field) const {
    return AlgebraSpec(alphabet_, rules_, field);
}

namespace {

// A monomial being normalized: `stack` is an irreducible prefix, `pending`
// holds the unread suffix reversed (next letter at the back).
struct Branch {
    Rational coef;
    Word stack;
    Word pending;
};

class Normalizer {
public:
    Normalizer(const AlgebraSpec& spec, std::size_t budget, const RewriteObserver& observer)
        : spec_(spec), budget_(budget), observer_(observer) {
        const Rational one(1);
        for (const RewriteRule& r : spec.rules())
            unit_rhs_.push_back(r.rhs.size() == 1 && r.rhs.terms().begin()->second == one);
    }

    LinComb run(const Word& w, const Rational& coef) {
        LinComb result;
        std::vector<Branch> work;
        work.push_back({coef, {}, Word(w.rbegin(), w.rend())});
        while (!work.empty()) {
            Branch b = std::move(work.back());
            work.pop_back();
            if (advance(b, work)) result.add(spec_.field(), b.stack, b.coef);
        }
        return result;
    }

private:
    // Letter at offset `i` from the start of the unread part.
    static Letter lookahead(const Branch& b, std::size_t i) {
        return b.pending[b.pending.size() - 1 - i];
    }

    // Does `lhs` occur starting at stack position p, reading past the stack
    // into pending as needed?
    static bool matches_at(const Branch& b, std::size_t p, const Word& lhs) {
        const std::size_t in_stack = b.stack.size() - p;
        if (lhs.size() > in_stack + b.pending.size()) return false;
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            const Letter c = i < in_stack ? b.stack[p + i] : lookahead(b, i - in_stack);
            if (c != lhs[i]) return false;
        }
        return true;
    }

    bool suffix_match(const Branch& b) const {
        for (const RewriteRule& rule : spec_.rules()) {
            const Word& lhs = rule.lhs;
            if (lhs.size() <= b.stack.size() &&
                std::equal(lhs.rbegin(), lhs.rend(), b.stack.rbegin()))
                return true;
        }
        return false;
    }

    // Runs the branch to an irreducible monomial (returns true) or until it
    // vanishes (returns false). Extra rhs terms are pushed onto `work`.
    bool advance(Branch& b, std::vector<Branch>& work) {
        while (!b.pending.empty()) {
            b.stack.push_back(b.pending.back());
            b.pending.pop_back();
            if (!suffix_match(b)) continue;

            // The stack was irreducible before this letter, so every
            // occurrence ends at or after the top; find the leftmost start.
            const std::size_t top = b.stack.size();
            const std::size_t lo = top > spec_.max_lhs_length() ? top - spec_.max_lhs_length() : 0;
            const RewriteRule* rule = nullptr;
            std::size_t at = top;
            for (std::size_t p = lo; p < top && !rule; ++p) {
                for (const RewriteRule& r : spec_.rules()) {
                    if (p + r.lhs.size() < top) continue;
                    if ((!rule || r.lhs.size() > rule->lhs.size()) && matches_at(b, p, r.lhs)) {
                        rule = &r;
                        at = p;
                    }
                }
            }

            if (++steps_ > budget_)
                throw StepBudgetExceeded("possibly non-terminating presentation: more than " +
                                         std::to_string(budget_) + " rewrites");

            const std::size_t from_pending = at + rule->lhs.size() - top;
            b.stack.resize(at);
            b.pending.resize(b.pending.size() - from_pending);
            if (rule->rhs.is_zero()) return false;
            if (unit_rhs_[static_cast<std::size_t>(rule - spec_.rules().data())]) {
                const Word& rhs = rule->rhs.terms().begin()->first;
                b.pending.insert(b.pending.end(), rhs.rbegin(), rhs.rend());
                notify(b);
                continue;
            }

            auto term = rule->rhs.terms().begin();
            for (auto it = std::next(term); it != rule->rhs.terms().end(); ++it) {
                Branch other{spec_.field().mul(b.coef, it->second), b.stack, b.pending};
                other.pending.insert(other.pending.end(), it->first.rbegin(), it->first.rend());
                notify(other);
                work.push_back(std::move(other));
            }
            b.coef = spec_.field().mul(b.coef, term->second);
            b.pending.insert(b.pending.end(), term->first.rbegin(), term->first.rend());
            notify(b);
        }
        return true;
    }

    void notify(const Branch& b) const {
        if (!observer_) return;
        Word full = b.stack;
        full.insert(full.end(), b.pending.rbegin(), b.pending.rend());
        observer_(full);
    }

    const AlgebraSpec& spec_;
    std::size_t budget_;
    const RewriteObserver& observer_;
    std::vector<bool> unit_rhs_;  // rhs is a single monomial with coefficient 1
    std::size_t steps_ = 0;
};

}  // namespace

LinComb normalize(const AlgebraSpec& spec, const Word& w, std::size_t step_budget,
                  const RewriteObserver& observer) {
    spec.alphabet().check(w);
    return Normalizer(spec, step_budget, observer).run(w, 1);
}

LinComb normalize(const AlgebraSpec& spec, const LinComb& c, std::size_t step_budget) {
    LinComb result;
    for (const auto& [w, coef] : c.terms()) {
        spec.alphabet().check(w);
        result.add(spec.field(), Normalizer(spec, step_budget, {}).run(w, coef));
    }
    return result;
}

bool is_reducible(const AlgebraSpec& spec, const Word& w) {
    for (const RewriteRule& rule : spec.rules())
        if (occurs_in(rule.lhs, w)) return true;
    return false;
}

}  // namespace shirshov
