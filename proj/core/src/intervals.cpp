#include "shirshov/intervals.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "shirshov/error.hpp"

namespace shirshov {

void GradeSequence::validate() const {
    if (!group) throw InputError("grade sequence has no group");
    for (std::size_t k = 0; k < elems.size(); ++k)
        if (!group->contains(elems[k]))
            throw InputError("element out of range: " + std::to_string(elems[k].index) +
                             " at position " + std::to_string(k + 1) + " not in group of order " +
                             std::to_string(group->order()));
}

std::vector<Element> prefix_products(const GradeSequence& seq) {
    seq.validate();
    std::vector<Element> f;
    f.reserve(seq.size() + 1);
    f.push_back(kIdentity);
    for (const Element g : seq.elems) f.push_back(seq.group->mul_unchecked(f.back(), g));
    return f;
}

Decomposition make_decomposition(std::vector<Interval> intervals, std::size_t n) {
    Decomposition d;
    d.intervals = std::move(intervals);
    std::size_t next = 1;
    for (const Interval& iv : d.intervals) {
        for (; next < iv.start; ++next) d.uncovered.push_back(next);
        d.coverage += iv.length();
        next = iv.end + 1;
    }
    for (; next <= n; ++next) d.uncovered.push_back(next);
    return d;
}

Decomposition decompose_optimal(const GradeSequence& seq) {
    seq.validate();
    const FiniteGroup& group = *seq.group;
    const std::size_t n = seq.size();
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    constexpr auto kUnseen = std::numeric_limits<std::int64_t>::min();

    // best[v] = max dp[j] - j over j with f(j) = v, best_at[v] the smallest such j.
    std::vector<std::int64_t> best(group.order(), kUnseen);
    std::vector<std::size_t> best_at(group.order(), kNone);
    best[kIdentity.index] = 0;
    best_at[kIdentity.index] = 0;

    // chosen[i] = j when the optimum for g_1..g_i ends with interval [j+1, i].
    std::vector<std::size_t> chosen(n + 1, kNone);
    std::int64_t dp = 0;
    Element f = kIdentity;
    for (std::size_t i = 1; i <= n; ++i) {
        f = group.mul_unchecked(f, seq.elems[i - 1]);
        const auto ii = static_cast<std::int64_t>(i);
        if (best[f.index] != kUnseen && ii + best[f.index] >= dp) {
            dp = ii + best[f.index];
            chosen[i] = best_at[f.index];
        }
        if (dp - ii > best[f.index]) {
            best[f.index] = dp - ii;
            best_at[f.index] = i;
        }
    }

    std::vector<Interval> intervals;
    for (std::size_t i = n; i > 0;) {
        if (chosen[i] == kNone) {
            --i;
        } else {
            intervals.push_back({chosen[i] + 1, i});
            i = chosen[i];
        }
    }
    std::reverse(intervals.begin(), intervals.end());
    return make_decomposition(std::move(intervals), n);
}

namespace {

struct Search {
    const FiniteGroup& group;
    const std::vector<Element>& elems;
    std::vector<Interval> current;
    std::vector<Interval> best;
    std::size_t current_cover = 0;
    std::size_t best_cover = 0;
    bool found = false;

    // Positions before `pos` (0-based) are decided.
    void run(std::size_t pos) {
        if (pos == elems.size()) {
            if (!found || current_cover > best_cover) {
                found = true;
                best_cover = current_cover;
                best = current;
            }
            return;
        }
        Element acc = kIdentity;
        for (std::size_t end = pos; end < elems.size(); ++end) {
            acc = group.mul(acc, elems[end]);
            if (acc != kIdentity) continue;
            current.push_back({pos + 1, end + 1});
            current_cover += end - pos + 1;
            run(end + 1);
            current_cover -= end - pos + 1;
            current.pop_back();
        }
        run(pos + 1);
    }
};

}  // namespace

Decomposition decompose_bruteforce(const GradeSequence& seq) {
    seq.validate();
    if (seq.size() > kBruteforceLimit)
        throw LimitExceeded("oracle limit exceeded: n = " + std::to_string(seq.size()) + " > " +
                            std::to_string(kBruteforceLimit));
    Search search{*seq.group, seq.elems, {}, {}, 0, 0, false};
    search.run(0);
    return make_decomposition(std::move(search.best), seq.size());
}

DecompositionReport verify_decomposition(const GradeSequence& seq, const Decomposition& d) {
    DecompositionReport report;
    const std::size_t n = seq.size();
    report.bound = seq.group ? lemma_bound(n, seq.group->order()) : 0;
    try {
        seq.validate();
    } catch (const InputError& e) {
        report.violations.emplace_back(e.what());
        return report;
    }

    std::vector<int> owner(n + 2, 0);
    std::size_t counted = 0;
    for (std::size_t k = 0; k < d.intervals.size(); ++k) {
        const Interval& iv = d.intervals[k];
        const std::string label =
            "[" + std::to_string(iv.start) + "," + std::to_string(iv.end) + "]";
        if (iv.start < 1 || iv.end > n || iv.start > iv.end) {
            report.violations.push_back("interval " + label + " out of range for n = " +
                                        std::to_string(n));
            continue;
        }
        if (k > 0 && d.intervals[k - 1].start > iv.start)
            report.violations.push_back("intervals not sorted by start at " + label);
        Element acc = kIdentity;
        for (std::size_t p = iv.start; p <= iv.end; ++p) {
            acc = seq.group->mul_unchecked(acc, seq.elems[p - 1]);
            if (owner[p] != 0)
                report.violations.push_back("overlap at position " + std::to_string(p));
            ++owner[p];
        }
        if (acc != kIdentity)
            report.violations.push_back("interval product != e on " + label);
        counted += iv.length();
    }

    std::vector<std::size_t> expected_uncovered;
    for (std::size_t p = 1; p <= n; ++p)
        if (owner[p] == 0) expected_uncovered.push_back(p);
    if (expected_uncovered != d.uncovered)
        report.violations.emplace_back("uncovered set does not match complement of intervals");
    if (counted != d.coverage)
        report.violations.push_back("coverage miscount: claimed " + std::to_string(d.coverage) +
                                    ", intervals sum to " + std::to_string(counted));
    if (d.coverage + d.uncovered.size() != n)
        report.violations.emplace_back("coverage + |uncovered| != n");

    report.bound_holds = counted >= report.bound;
    return report;
}

std::size_t lemma_bound(std::size_t n, std::size_t group_order) {
    if (group_order == 0) throw InputError("group order must be positive");
    return n + 1 > group_order ? n + 1 - group_order : 0;
}

}  // namespace shirshov
