#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "shirshov/group.hpp"

namespace shirshov {

/// A sequence g_1..g_n of elements of a finite group. Positions are 1-based
/// in every interval computation.
struct GradeSequence {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<Element> elems;

    std::size_t size() const noexcept { return elems.size(); }
    /// Throws InputError if the group is missing or an element is out of range.
    void validate() const;
};

/// Inclusive 1-based interval [start, end].
struct Interval {
    std::size_t start = 1;
    std::size_t end = 1;

    std::size_t length() const noexcept { return end - start + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Non-overlapping identity-product intervals plus the uncovered positions.
struct Decomposition {
    std::vector<Interval> intervals;     // sorted by start
    std::vector<std::size_t> uncovered;  // sorted
    std::size_t coverage = 0;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// f(0) = e, f(k) = f(k-1) * g_k. Result has length n + 1.
std::vector<Element> prefix_products(const GradeSequence& seq);

/// Maximum-coverage decomposition in O(n + |G|) time.
///
/// dp[i] is the best coverage of g_1..g_i. An interval [j+1, i] has product e
/// exactly when f(j) = f(i), so
///   dp[i] = max(dp[i-1], i + best[f(i)]),  best[v] = max_{j<i, f(j)=v} dp[j] - j.
/// Ties prefer closing an interval at i, and among equal best[v] the earliest
/// j is kept, which gives the longest interval.
Decomposition decompose_optimal(const GradeSequence& seq);

/// Exhaustive search over all sets of non-overlapping identity-product
/// intervals. Test oracle only; throws LimitExceeded when n > kBruteforceLimit.
Decomposition decompose_bruteforce(const GradeSequence& seq);
inline constexpr std::size_t kBruteforceLimit = 16;

struct DecompositionReport {
    std::vector<std::string> violations;
    std::size_t bound = 0;     // lemma_bound(n, |G|)
    bool bound_holds = false;  // coverage >= bound

    bool clean() const noexcept { return violations.empty(); }
};

/// Checks a claimed decomposition against the sequence. Never throws for bad
/// decompositions; every problem is listed in the report.
DecompositionReport verify_decomposition(const GradeSequence& seq, const Decomposition& d);

/// Integer form of the guarantee coverage > n - m, i.e. max(0, n - m + 1).
std::size_t lemma_bound(std::size_t n, std::size_t group_order);

/// Builds intervals' complement and coverage for a sorted interval list.
Decomposition make_decomposition(std::vector<Interval> intervals, std::size_t n);

}  // namespace shirshov
