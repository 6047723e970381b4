#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shirshov/group.hpp"
#include "shirshov/intervals.hpp"

namespace shirshov {

/// Index of a generator in its alphabet.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = w.size();
        for (const Letter l : w) h = h * 1'000'003u ^ l;
        return h;
    }
};

struct Generator {
    std::string symbol;
    Element grade;
};

/// Homogeneous generating set X = union of X_g over a finite group.
class GradedAlphabet {
public:
    GradedAlphabet(std::shared_ptr<const FiniteGroup> group, std::vector<Generator> generators);

    /// Alphabet over the trivial group: every generator has grade e.
    static GradedAlphabet ungraded(std::vector<std::string> symbols);

    const FiniteGroup& group() const noexcept { return *group_; }
    const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }
    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }

    std::optional<Letter> find(std::string_view symbol) const;
    const std::string& symbol(Letter l) const;
    Element grade(Letter l) const;

    /// Throws InputError("unknown symbol ...") on a symbol not in the alphabet.
    Word parse(const std::vector<std::string>& symbols) const;
    std::vector<std::string> symbols(const Word& w) const;
    /// Space-separated symbols, "1" for the empty word.
    std::string render(const Word& w) const;

    /// Throws InputError if some letter is not a generator index.
    void check(const Word& w) const;

    /// Letter-by-letter grades of w.
    GradeSequence grades(const Word& w) const;

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<Generator> generators_;
};

/// Product of the letter grades in order; the empty word has grade e.
Element grade_of(const GradedAlphabet& alphabet, const Word& w);

enum class SegmentTag { Y, A };

struct Segment {
    SegmentTag tag;
    Interval span;  // 1-based inclusive into the source word

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Alternating form y_1 a_1 y_2 a_2 ... y_k a_k of a word: A-segments have
/// grade e, Y-segments carry the leftover letters. A leading Y and a trailing
/// A may be absent.
struct Factorization {
    std::vector<Segment> segments;
    std::size_t k = 0;  // number of A-segments

    std::size_t leftover_length() const;
    std::size_t leftover_count() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Covered positions of an optimal interval decomposition of the grade
/// sequence become A-segments (touching intervals merged); maximal uncovered
/// runs become Y-segments.
Factorization factorize(const GradedAlphabet& alphabet, const Word& w);

/// h*k + sum of Y lengths: how many powers of S u X the word needs when
/// S is a height-h Shirshov base of the neutral component.
std::size_t power_count(const Factorization& f, std::size_t h);

/// (h+1)*m - 1, the height guaranteed for the whole algebra.
std::size_t height_bound(std::size_t h, std::size_t group_order);

struct FactorizationReport {
    std::vector<std::string> violations;
    bool clean() const noexcept { return violations.empty(); }
};

FactorizationReport verify_factorization(const GradedAlphabet& alphabet, const Word& w,
                                         const Factorization& f);

}  // namespace shirshov
