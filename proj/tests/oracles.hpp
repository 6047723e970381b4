#pragma once

// Test-only oracles. Nothing here calls the code paths it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "shirshov/graded_words.hpp"
#include "shirshov/group.hpp"

namespace shirshov::testing {

/// Exhaustive maximum coverage over every subset of identity-product
/// intervals, computed from raw sums mod m (cyclic groups only, n <= 7).
inline std::size_t max_coverage_by_subsets(const std::vector<std::uint32_t>& seq, std::uint32_t m) {
    const std::size_t n = seq.size();
    std::vector<std::pair<std::size_t, std::size_t>> valid;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t sum = 0;
        for (std::size_t j = i; j < n; ++j) {
            sum = (sum + seq[j]) % m;
            if (sum == 0) valid.emplace_back(i, j);
        }
    }
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << valid.size()); ++mask) {
        std::vector<bool> used(n, false);
        std::size_t cover = 0;
        bool ok = true;
        for (std::size_t k = 0; k < valid.size() && ok; ++k) {
            if (!(mask >> k & 1)) continue;
            for (std::size_t p = valid[k].first; p <= valid[k].second; ++p) {
                if (used[p]) {
                    ok = false;
                    break;
                }
                used[p] = true;
                ++cover;
            }
        }
        if (ok) best = std::max(best, cover);
    }
    return best;
}

/// Normal form of a word in <x,y | xy -> yyx> via x^m y^k = y^(2^m k) x^m:
/// returns (power of y, power of x). Letters: 0 = x, 1 = y.
struct YxForm {
    std::uint64_t y = 0;
    std::uint64_t x = 0;
    friend bool operator==(const YxForm&, const YxForm&) = default;
};

inline YxForm yx_normal_form(const Word& w) {
    YxForm f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it == 1) {
            ++f.y;
        } else {
            f.y *= 2;
            ++f.x;
        }
    }
    return f;
}

inline Word yx_word(std::uint64_t y, std::uint64_t x) {
    Word w(y, Letter{1});
    w.insert(w.end(), x, Letter{0});
    return w;
}

/// Deterministic generator for hand-rolled property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t bound) { return bound ? rng_() % bound : 0; }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

    std::vector<Element> elements(const FiniteGroup& g, std::size_t n) {
        std::vector<Element> out(n);
        for (auto& e : out) e = Element{static_cast<std::uint32_t>(below(g.order()))};
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// All sequences of length n over {0..m-1}, as index vectors.
inline std::vector<std::vector<std::uint32_t>> all_sequences(std::uint32_t m, std::size_t n) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> s(n, 0);
    while (true) {
        out.push_back(s);
        std::size_t i = n;
        while (i > 0 && s[i - 1] + 1 == m) s[--i] = 0;
        if (i == 0) break;
        ++s[i - 1];
    }
    return out;
}

inline std::vector<Element> to_elements(const std::vector<std::uint32_t>& v) {
    std::vector<Element> out;
    for (auto x : v) out.push_back(Element{x});
    return out;
}

}  // namespace shirshov::testing
