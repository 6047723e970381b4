#include "shirshov/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "shirshov/error.hpp"

namespace shirshov {

GroupSpec GroupSpec::product(GroupSpec left, GroupSpec right) {
    return {ProductSpec{std::make_shared<const GroupSpec>(std::move(left)),
                        std::make_shared<const GroupSpec>(std::move(right))}};
}

GroupSpec GroupSpec::table(std::vector<std::vector<std::uint32_t>> rows,
                           std::vector<std::string> names) {
    const auto order = static_cast<std::uint32_t>(rows.size());
    return {TableSpec{order, std::move(rows), std::move(names)}};
}

namespace {

std::string triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

std::vector<std::string> default_names(std::uint32_t order) {
    std::vector<std::string> names;
    names.reserve(order);
    for (std::uint32_t k = 0; k < order; ++k) names.push_back("g" + std::to_string(k));
    return names;
}

FiniteGroup cyclic_group(std::uint32_t n) {
    if (n == 0) throw InputError("cyclic group order must be positive");
    std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
    std::vector<std::string> names;
    names.reserve(n);
    for (std::uint32_t k = 0; k < n; ++k) names.push_back(std::to_string(k));
    return FiniteGroup::from_table(std::move(rows), std::move(names));
}

// Index f*n + k encodes s^f r^k; r s = s r^{-1}.
FiniteGroup dihedral_group(std::uint32_t n) {
    if (n < 2) throw InputError("dihedral group needs n >= 2");
    const std::uint32_t m = 2 * n;
    std::vector<std::vector<std::uint32_t>> rows(m, std::vector<std::uint32_t>(m));
    for (std::uint32_t a = 0; a < m; ++a) {
        const std::uint32_t fa = a / n, ka = a % n;
        for (std::uint32_t b = 0; b < m; ++b) {
            const std::uint32_t fb = b / n, kb = b % n;
            const std::uint32_t k = (fb == 0 ? ka + kb : (n - ka) + kb) % n;
            rows[a][b] = ((fa + fb) % 2) * n + k;
        }
    }
    return FiniteGroup::from_table(std::move(rows));
}

// Permutations in lexicographic one-line order; (a*b)(i) = a(b(i)).
FiniteGroup symmetric_group(std::uint32_t n) {
    if (n == 0) throw InputError("symmetric group needs n >= 1");
    if (n > 6) throw InputError("symmetric group limited to n <= 6, got " + std::to_string(n));
    std::vector<std::vector<std::uint8_t>> perms;
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<std::uint8_t>, std::uint32_t> rank;
    for (std::uint32_t i = 0; i < perms.size(); ++i) rank.emplace(perms[i], i);

    const auto m = static_cast<std::uint32_t>(perms.size());
    std::vector<std::vector<std::uint32_t>> rows(m, std::vector<std::uint32_t>(m));
    std::vector<std::uint8_t> composed(n);
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b) {
            for (std::uint32_t i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
            rows[a][b] = rank.at(composed);
        }
    return FiniteGroup::from_table(std::move(rows));
}

FiniteGroup product_group(const FiniteGroup& left, const FiniteGroup& right) {
    const std::uint32_t lm = left.order(), rm = right.order();
    const std::uint32_t m = lm * rm;
    std::vector<std::vector<std::uint32_t>> rows(m, std::vector<std::uint32_t>(m));
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b) {
            const auto l = left.mul_unchecked(Element{a / rm}, Element{b / rm});
            const auto r = right.mul_unchecked(Element{a % rm}, Element{b % rm});
            rows[a][b] = l.index * rm + r.index;
        }
    return FiniteGroup::from_table(std::move(rows));
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::uint32_t>> rows,
                                    std::vector<std::string> names) {
    const auto m = static_cast<std::uint32_t>(rows.size());
    if (m == 0) throw InputError("group table must be non-empty");
    if (m > kMaxOrder)
        throw InputError("group order " + std::to_string(m) + " exceeds limit " +
                         std::to_string(kMaxOrder));
    for (std::uint32_t a = 0; a < m; ++a) {
        if (rows[a].size() != m)
            throw InputError("group table row " + std::to_string(a) + " has length " +
                             std::to_string(rows[a].size()) + ", expected " + std::to_string(m));
        for (std::uint32_t b = 0; b < m; ++b)
            if (rows[a][b] >= m)
                throw InputError("closure violated: table[" + std::to_string(a) + "][" +
                                 std::to_string(b) + "] = " + std::to_string(rows[a][b]));
    }
    if (!names.empty() && names.size() != m)
        throw InputError("group names list has " + std::to_string(names.size()) +
                         " entries, expected " + std::to_string(m));

    FiniteGroup g;
    g.order_ = m;
    g.table_.reserve(static_cast<std::size_t>(m) * m);
    for (const auto& row : rows) g.table_.insert(g.table_.end(), row.begin(), row.end());
    const auto at = [&](std::uint32_t a, std::uint32_t b) {
        return g.table_[static_cast<std::size_t>(a) * m + b];
    };

    for (std::uint32_t a = 0; a < m; ++a)
        if (at(0, a) != a || at(a, 0) != a)
            throw InputError("identity violated: index 0 is not neutral for element " +
                             std::to_string(a));

    const auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (at(at(a, b), c) != at(a, at(b, c)))
            throw InputError("associativity violated at " + triple(a, b, c));
    };
    if (m <= kExhaustiveAssocLimit) {
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t b = 0; b < m; ++b)
                for (std::uint32_t c = 0; c < m; ++c) check_triple(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eedULL);
        for (std::uint32_t i = 0; i < kAssocSamples; ++i) {
            const auto a = static_cast<std::uint32_t>(rng() % m);
            const auto b = static_cast<std::uint32_t>(rng() % m);
            const auto c = static_cast<std::uint32_t>(rng() % m);
            check_triple(a, b, c);
        }
    }

    g.inverse_.assign(m, m);
    for (std::uint32_t a = 0; a < m; ++a) {
        for (std::uint32_t b = 0; b < m; ++b)
            if (at(a, b) == 0 && at(b, a) == 0) {
                g.inverse_[a] = b;
                break;
            }
        if (g.inverse_[a] == m)
            throw InputError("inverse violated: element " + std::to_string(a) + " has no inverse");
    }

    g.names_ = names.empty() ? default_names(m) : std::move(names);
    return g;
}

void FiniteGroup::check(Element a) const {
    if (a.index >= order_)
        throw InputError("element out of range: " + std::to_string(a.index) +
                         " not in group of order " + std::to_string(order_));
}

Element FiniteGroup::mul(Element a, Element b) const {
    check(a);
    check(b);
    return mul_unchecked(a, b);
}

Element FiniteGroup::inverse(Element a) const {
    check(a);
    return Element{inverse_[a.index]};
}

Element FiniteGroup::product(std::span<const Element> elems) const {
    Element acc = kIdentity;
    for (const Element e : elems) acc = mul(acc, e);
    return acc;
}

const std::string& FiniteGroup::name(Element a) const {
    check(a);
    return names_[a.index];
}

std::vector<std::vector<std::uint32_t>> FiniteGroup::table() const {
    std::vector<std::vector<std::uint32_t>> rows(order_);
    for (std::uint32_t a = 0; a < order_; ++a)
        rows[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a) * order_,
                       table_.begin() + static_cast<std::ptrdiff_t>(a + 1) * order_);
    return rows;
}

bool FiniteGroup::is_abelian() const {
    for (std::uint32_t a = 0; a < order_; ++a)
        for (std::uint32_t b = a + 1; b < order_; ++b)
            if (mul_unchecked(Element{a}, Element{b}) != mul_unchecked(Element{b}, Element{a}))
                return false;
    return true;
}

FiniteGroup build_group(const GroupSpec& spec) {
    struct Visitor {
        FiniteGroup operator()(const CyclicSpec& s) const { return cyclic_group(s.n); }
        FiniteGroup operator()(const DihedralSpec& s) const { return dihedral_group(s.n); }
        FiniteGroup operator()(const SymmetricSpec& s) const { return symmetric_group(s.n); }
        FiniteGroup operator()(const ProductSpec& s) const {
            if (!s.left || !s.right) throw InputError("product group needs two factors");
            return product_group(build_group(*s.left), build_group(*s.right));
        }
        FiniteGroup operator()(const TableSpec& s) const {
            if (s.order != s.table.size())
                throw InputError("table order " + std::to_string(s.order) + " does not match " +
                                 std::to_string(s.table.size()) + " rows");
            return FiniteGroup::from_table(s.table, s.names);
        }
    };
    return std::visit(Visitor{}, spec.kind);
}

}  // namespace shirshov
