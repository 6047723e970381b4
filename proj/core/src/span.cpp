#include "shirshov/span.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <unordered_set>

#include "shirshov/error.hpp"

namespace shirshov {

namespace {

LinComb scaled(const Field& field, const LinComb& row, const Rational& factor) {
    LinComb out;
    out.add(field, row, factor);
    return out;
}

// Clears denominators and divides out the content; leading coefficient > 0.
LinComb primitive(const LinComb& row) {
    BigInt lcm = 1, gcd = 0;
    for (const auto& [w, c] : row.terms()) {
        const BigInt den = boost::multiprecision::denominator(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    for (const auto& [w, c] : row.terms())
        gcd = boost::multiprecision::gcd(gcd, BigInt(boost::multiprecision::numerator(c) * lcm /
                                                     boost::multiprecision::denominator(c)));
    Rational factor(lcm, gcd);
    if (row.terms().rbegin()->second < 0) factor = -factor;
    return scaled(Field::rationals(), row, factor);
}

}  // namespace

LinComb EchelonBasis::normalize_row(LinComb row) const {
    if (row.is_zero()) return row;
    if (field_.is_prime()) {
        const Rational lead = row.terms().rbegin()->second;
        return scaled(field_, row, field_.div(1, lead));
    }
    return primitive(row);
}

LinComb EchelonBasis::reduce(LinComb row) const {
    if (rows_.empty() || row.is_zero()) return row;
    if (!field_.is_prime()) row = primitive(row);
    // Walk the monomials from the largest down; eliminating with a pivot row
    // only introduces monomials below its pivot.
    bool have_cursor = false;
    Word cursor;
    while (!row.is_zero()) {
        const auto& terms = row.terms();
        auto it = have_cursor ? terms.lower_bound(cursor) : terms.end();
        const LinComb* pivot_row = nullptr;
        while (it != terms.begin()) {
            --it;
            const auto p = pivots_.find(it->first);
            if (p != pivots_.end()) {
                pivot_row = &rows_[p->second];
                break;
            }
        }
        if (!pivot_row) break;
        const Word m = it->first;
        const Rational coef = it->second;
        if (field_.is_prime()) {
            row.add(field_, *pivot_row, field_.neg(coef));  // pivot rows are monic
        } else {
            const Rational lead = pivot_row->terms().rbegin()->second;
            LinComb next = scaled(field_, row, lead);
            next.add(field_, *pivot_row, -coef);
            row = next.is_zero() ? next : primitive(next);
        }
        cursor = m;
        have_cursor = true;
    }
    return row;
}

bool EchelonBasis::insert(LinComb row) {
    LinComb r = normalize_row(reduce(std::move(row)));
    if (r.is_zero()) return false;
    pivots_.emplace(r.leading(), rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

namespace {

std::vector<LinComb> normalize_all(const AlgebraSpec& spec, const std::vector<Word>& words,
                                   const SpanOptions& options) {
    std::vector<LinComb> out(words.size());
    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(words.size() / 64 + 1)));
    const std::size_t chunk = (words.size() + threads - 1) / threads;
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk, hi = std::min(words.size(), lo + chunk);
        if (lo >= hi) break;
        jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i)
                out[i] = normalize(spec, words[i], options.step_budget);
        }));
    }
    for (auto& job : jobs) job.wait();
    for (auto& job : jobs) job.get();  // rethrows the first failure in worker order
    return out;
}

std::size_t count_words(std::size_t letters, std::size_t d) {
    std::size_t total = 0, layer = 1;
    for (std::size_t len = 1; len <= d; ++len) {
        if (letters != 0 && layer > kMaxEnumerated / letters) return kMaxEnumerated + 1;
        layer *= letters;
        total += layer;
        if (total > kMaxEnumerated) return total;
    }
    return total;
}

std::vector<Word> unique_bases(const GradedAlphabet& alphabet, const std::vector<Word>& bases) {
    std::vector<Word> out;
    for (const Word& b : bases) {
        if (b.empty()) throw InputError("base elements must be non-empty words");
        alphabet.check(b);
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    return out;
}

void check_caps(std::size_t h, std::size_t d, std::size_t D) {
    if (h < 1) throw InputError("height must be at least 1");
    if (D < d)
        throw InputError("expansion cap D = " + std::to_string(D) + " must be >= degree cap d = " +
                         std::to_string(d));
}

// Core of both spanning checks: do the normal forms of `products` span those
// of `targets`?
SpanReport span_check(const AlgebraSpec& spec, const std::vector<Word>& targets,
                      const std::vector<Word>& bases, std::size_t h, std::size_t d,
                      std::size_t D, const SpanOptions& options) {
    SpanReport report;
    report.height = h;
    report.degree_cap = d;
    report.expansion_cap = D;
    report.words_checked = targets.size();

    const auto products = enumerate_products(bases, h, D);
    report.products_enumerated = products.size();
    std::vector<Word> expansions;
    {
        std::unordered_set<Word, WordHash> seen;
        for (const auto& p : products) {
            Word e = p.expand();
            if (seen.insert(e).second) expansions.push_back(std::move(e));
        }
    }

    const Field& field = spec.field();
    EchelonBasis product_span(field);
    for (auto& nf : normalize_all(spec, expansions, options)) product_span.insert(std::move(nf));
    report.rank_products = product_span.rank();

    EchelonBasis word_span(field);
    EchelonBasis joint = product_span;
    for (auto& nf : normalize_all(spec, targets, options)) {
        word_span.insert(nf);
        if (product_span.contains(nf) ||
            std::find(report.missing.begin(), report.missing.end(), nf) != report.missing.end())
            continue;
        joint.insert(nf);
        report.missing.push_back(std::move(nf));
    }
    report.rank_words = word_span.rank();
    report.rank_joint = joint.rank();
    report.verdict = report.rank_joint == report.rank_products ? Verdict::WitnessedSpanning
                                                               : Verdict::NotWitnessed;
    return report;
}

}  // namespace

std::size_t span_rank(const AlgebraSpec& spec, const std::vector<Word>& words,
                      std::size_t step_budget) {
    EchelonBasis basis(spec.field());
    for (const Word& w : words) basis.insert(normalize(spec, w, step_budget));
    return basis.rank();
}

std::size_t PoweredProduct::expansion_length() const {
    std::size_t total = 0;
    for (const auto& f : factors) total += f.base.size() * f.exponent;
    return total;
}

Word PoweredProduct::expand() const {
    Word w;
    w.reserve(expansion_length());
    for (const auto& f : factors)
        for (std::size_t e = 0; e < f.exponent; ++e) w.insert(w.end(), f.base.begin(), f.base.end());
    return w;
}

std::vector<PoweredProduct> enumerate_products(const std::vector<Word>& bases, std::size_t h,
                                               std::size_t max_length) {
    if (bases.empty()) throw InputError("base set must be non-empty");
    std::vector<Word> unique;
    for (const Word& b : bases) {
        if (b.empty()) throw InputError("base elements must be non-empty words");
        if (std::find(unique.begin(), unique.end(), b) == unique.end()) unique.push_back(b);
    }

    std::vector<PoweredProduct> out;
    PoweredProduct current;
    // Emits every product with exactly `count` factors extending `current`.
    auto extend = [&](auto& self, std::size_t count, std::size_t last, std::size_t length) -> void {
        if (current.count() == count) {
            if (out.size() == kMaxEnumerated)
                throw LimitExceeded("more than " + std::to_string(kMaxEnumerated) +
                                    " powered products; lower h or D");
            out.push_back(current);
            return;
        }
        for (std::size_t b = 0; b < unique.size(); ++b) {
            if (b == last) continue;
            const std::size_t len = unique[b].size();
            for (std::size_t e = 1; length + len * e <= max_length; ++e) {
                current.factors.push_back({unique[b], e});
                self(self, count, b, length + len * e);
                current.factors.pop_back();
            }
        }
    };
    for (std::size_t count = 1; count <= h; ++count) {
        const std::size_t before = out.size();
        extend(extend, count, unique.size(), 0);
        if (out.size() == before) break;  // no room for more factors
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::WitnessedSpanning: return "witnessed-spanning";
        case Verdict::NotWitnessed: return "not-witnessed";
        case Verdict::ViolatedInvariant: return "violated-invariant";
    }
    return "unknown";
}

std::vector<Word> enumerate_words(const GradedAlphabet& alphabet, std::size_t d) {
    const std::size_t n = alphabet.size();
    if (count_words(n, d) > kMaxEnumerated)
        throw LimitExceeded("degree cap too large: more than " + std::to_string(kMaxEnumerated) +
                            " words of length <= " + std::to_string(d));
    std::vector<Word> out;
    if (n == 0) return out;
    for (std::size_t len = 1; len <= d; ++len) {
        Word w(len, 0);
        while (true) {
            out.push_back(w);
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1u == n) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
    return out;
}

SpanReport is_shirshov_base(const AlgebraSpec& spec, const std::vector<Word>& bases,
                            std::size_t h, std::size_t d, std::size_t D,
                            const SpanOptions& options) {
    check_caps(h, d, D);
    const auto unique = unique_bases(spec.alphabet(), bases);
    if (unique.empty()) throw InputError("base set must be non-empty");
    return span_check(spec, enumerate_words(spec.alphabet(), d), unique, h, d, D, options);
}

GradedTheoremReport check_graded_theorem(const AlgebraSpec& spec,
                                         const std::vector<Word>& neutral_bases, std::size_t h,
                                         std::size_t d, std::size_t D,
                                         const SpanOptions& options) {
    check_caps(h, d, D);
    const GradedAlphabet& alphabet = spec.alphabet();
    const auto neutral = unique_bases(alphabet, neutral_bases);
    if (neutral.empty()) throw InputError("base set must be non-empty");
    for (const Word& b : neutral)
        if (grade_of(alphabet, b) != kIdentity)
            throw InputError("base word " + alphabet.render(b) + " is not of grade e");

    GradedTheoremReport report;
    report.height_bound = height_bound(h, alphabet.group().order());

    const auto words = enumerate_words(alphabet, d);
    std::vector<Word> neutral_words;
    for (const Word& w : words)
        if (grade_of(alphabet, w) == kIdentity) neutral_words.push_back(w);
    report.neutral = span_check(spec, neutral_words, neutral, h, d, D, options);

    std::vector<Word> with_generators = neutral;
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
        Word g{static_cast<Letter>(l)};
        if (std::find(with_generators.begin(), with_generators.end(), g) == with_generators.end())
            with_generators.push_back(std::move(g));
    }
    report.whole = span_check(spec, words, with_generators, report.height_bound, d, D, options);

    if (report.neutral.verdict == Verdict::WitnessedSpanning) {
        for (const Word& w : words) {
            const Factorization f = factorize(alphabet, w);
            for (const auto& v : verify_factorization(alphabet, w, f).violations)
                report.consistency_violations.push_back(alphabet.render(w) + ": " + v);
            const std::size_t needed = power_count(f, h);
            if (needed > report.height_bound)
                report.consistency_violations.push_back(
                    alphabet.render(w) + ": power count " + std::to_string(needed) +
                    " exceeds height bound " + std::to_string(report.height_bound));
        }
    }

    if (!report.consistency_violations.empty())
        report.verdict = Verdict::ViolatedInvariant;
    else if (report.neutral.verdict == Verdict::WitnessedSpanning &&
             report.whole.verdict == Verdict::WitnessedSpanning)
        report.verdict = Verdict::WitnessedSpanning;
    else
        report.verdict = Verdict::NotWitnessed;
    return report;
}

}  // namespace shirshov
