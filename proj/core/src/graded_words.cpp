#include "shirshov/graded_words.hpp"

#include <limits>
#include <set>

#include "shirshov/error.hpp"

namespace shirshov {

GradedAlphabet::GradedAlphabet(std::shared_ptr<const FiniteGroup> group,
                               std::vector<Generator> generators)
    : group_(std::move(group)), generators_(std::move(generators)) {
    if (!group_) throw InputError("alphabet has no group");
    if (generators_.size() > std::numeric_limits<Letter>::max())
        throw InputError("too many generators");
    std::set<std::string_view> seen;
    for (const Generator& g : generators_) {
        if (g.symbol.empty()) throw InputError("generator symbol must be non-empty");
        if (!seen.insert(g.symbol).second)
            throw InputError("duplicate generator symbol \"" + g.symbol + "\"");
        if (!group_->contains(g.grade))
            throw InputError("element out of range: grade " + std::to_string(g.grade.index) +
                             " of generator \"" + g.symbol + "\"");
    }
}

GradedAlphabet GradedAlphabet::ungraded(std::vector<std::string> symbols) {
    auto trivial = std::make_shared<const FiniteGroup>(build_group(GroupSpec::cyclic(1)));
    std::vector<Generator> gens;
    gens.reserve(symbols.size());
    for (auto& s : symbols) gens.push_back({std::move(s), kIdentity});
    return GradedAlphabet(std::move(trivial), std::move(gens));
}

std::optional<Letter> GradedAlphabet::find(std::string_view symbol) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].symbol == symbol) return static_cast<Letter>(i);
    return std::nullopt;
}

const std::string& GradedAlphabet::symbol(Letter l) const {
    if (l >= generators_.size()) throw InputError("unknown symbol index " + std::to_string(l));
    return generators_[l].symbol;
}

Element GradedAlphabet::grade(Letter l) const {
    if (l >= generators_.size()) throw InputError("unknown symbol index " + std::to_string(l));
    return generators_[l].grade;
}

Word GradedAlphabet::parse(const std::vector<std::string>& symbols) const {
    Word w;
    w.reserve(symbols.size());
    for (const auto& s : symbols) {
        const auto l = find(s);
        if (!l) throw InputError("unknown symbol \"" + s + "\"");
        w.push_back(*l);
    }
    return w;
}

std::vector<std::string> GradedAlphabet::symbols(const Word& w) const {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (const Letter l : w) out.push_back(symbol(l));
    return out;
}

std::string GradedAlphabet::render(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (const Letter l : w) {
        if (!out.empty()) out += ' ';
        out += symbol(l);
    }
    return out;
}

void GradedAlphabet::check(const Word& w) const {
    for (const Letter l : w)
        if (l >= generators_.size()) throw InputError("unknown symbol index " + std::to_string(l));
}

GradeSequence GradedAlphabet::grades(const Word& w) const {
    check(w);
    GradeSequence seq{group_, {}};
    seq.elems.reserve(w.size());
    for (const Letter l : w) seq.elems.push_back(generators_[l].grade);
    return seq;
}

Element grade_of(const GradedAlphabet& alphabet, const Word& w) {
    const GradeSequence seq = alphabet.grades(w);
    return alphabet.group().product(seq.elems);
}

std::size_t Factorization::leftover_length() const {
    std::size_t total = 0;
    for (const Segment& s : segments)
        if (s.tag == SegmentTag::Y) total += s.span.length();
    return total;
}

std::size_t Factorization::leftover_count() const {
    std::size_t count = 0;
    for (const Segment& s : segments)
        if (s.tag == SegmentTag::Y) ++count;
    return count;
}

Factorization factorize(const GradedAlphabet& alphabet, const Word& w) {
    const Decomposition d = decompose_optimal(alphabet.grades(w));
    Factorization f;
    std::size_t next = 1;  // first position not yet assigned to a segment
    for (const Interval& iv : d.intervals) {
        if (iv.start > next) {
            f.segments.push_back({SegmentTag::Y, {next, iv.start - 1}});
        } else if (!f.segments.empty() && f.segments.back().tag == SegmentTag::A) {
            f.segments.back().span.end = iv.end;
            next = iv.end + 1;
            continue;
        }
        f.segments.push_back({SegmentTag::A, iv});
        ++f.k;
        next = iv.end + 1;
    }
    if (next <= w.size()) f.segments.push_back({SegmentTag::Y, {next, w.size()}});
    return f;
}

std::size_t power_count(const Factorization& f, std::size_t h) {
    if (h < 1) throw InputError("height must be at least 1");
    return h * f.k + f.leftover_length();
}

std::size_t height_bound(std::size_t h, std::size_t group_order) {
    if (h < 1) throw InputError("height must be at least 1");
    if (group_order < 1) throw InputError("group order must be positive");
    return (h + 1) * group_order - 1;
}

FactorizationReport verify_factorization(const GradedAlphabet& alphabet, const Word& w,
                                         const Factorization& f) {
    FactorizationReport report;
    auto& v = report.violations;
    try {
        alphabet.check(w);
    } catch (const InputError& e) {
        v.emplace_back(e.what());
        return report;
    }
    const FiniteGroup& group = alphabet.group();
    const std::size_t m = group.order();

    std::size_t next = 1;
    std::size_t a_count = 0;
    for (std::size_t i = 0; i < f.segments.size(); ++i) {
        const Segment& s = f.segments[i];
        const std::string label =
            "[" + std::to_string(s.span.start) + "," + std::to_string(s.span.end) + "]";
        if (s.span.start != next || s.span.end < s.span.start || s.span.end > w.size()) {
            v.push_back("segments do not partition the word at " + label);
            if (s.span.end < s.span.start || s.span.end > w.size() || s.span.start < 1) continue;
        }
        next = s.span.end + 1;
        if (s.tag == SegmentTag::A) {
            ++a_count;
            Element acc = kIdentity;
            for (std::size_t p = s.span.start; p <= s.span.end; ++p)
                acc = group.mul_unchecked(acc, alphabet.grade(w[p - 1]));
            if (acc != kIdentity) v.push_back("A-segment " + label + " has grade != e");
        }
        if (i > 0 && f.segments[i - 1].tag == s.tag)
            v.push_back(s.tag == SegmentTag::A ? "unmerged A-segments at " + label
                                               : "adjacent Y-segments at " + label);
    }
    if (next != w.size() + 1) v.emplace_back("segments do not cover the whole word");
    if (a_count != f.k)
        v.push_back("k = " + std::to_string(f.k) + " but " + std::to_string(a_count) +
                    " A-segments present");

    const std::size_t y_len = f.leftover_length();
    const std::size_t y_count = f.leftover_count();
    if (y_len > m - 1)
        v.push_back("sum of Y lengths " + std::to_string(y_len) + " exceeds |G|-1 = " +
                    std::to_string(m - 1));
    if (y_count > m - 1)
        v.push_back("Y-segment count " + std::to_string(y_count) + " exceeds |G|-1 = " +
                    std::to_string(m - 1));
    if (a_count > m)
        v.push_back("A-segment count " + std::to_string(a_count) + " exceeds |G| = " +
                    std::to_string(m));
    return report;
}

}  // namespace shirshov
