#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace shirshov {

/// An element of a FiniteGroup, referenced by its index in the Cayley table.
/// Index 0 is always the identity.
struct Element {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(Element, Element) = default;
};

inline constexpr Element kIdentity{0};

struct GroupSpec;

struct CyclicSpec {
    std::uint32_t n;
};
struct DihedralSpec {
    std::uint32_t n;  // order 2n
};
struct SymmetricSpec {
    std::uint32_t n;  // 1..6
};
struct ProductSpec {
    std::shared_ptr<const GroupSpec> left;
    std::shared_ptr<const GroupSpec> right;
};
struct TableSpec {
    std::uint32_t order;
    std::vector<std::vector<std::uint32_t>> table;
    std::vector<std::string> names;  // optional; empty means default names
};

struct GroupSpec {
    std::variant<CyclicSpec, DihedralSpec, SymmetricSpec, ProductSpec, TableSpec> kind;

    static GroupSpec cyclic(std::uint32_t n) { return {CyclicSpec{n}}; }
    static GroupSpec dihedral(std::uint32_t n) { return {DihedralSpec{n}}; }
    static GroupSpec symmetric(std::uint32_t n) { return {SymmetricSpec{n}}; }
    static GroupSpec product(GroupSpec left, GroupSpec right);
    static GroupSpec table(std::vector<std::vector<std::uint32_t>> rows,
                           std::vector<std::string> names = {});
};

/// A finite group stored as a validated multiplication table. Immutable once
/// built; all member functions are safe to call concurrently.
class FiniteGroup {
public:
    /// Validates closure, identity at index 0, inverses and associativity.
    /// Associativity is exhaustive up to order kExhaustiveAssocLimit and
    /// sampled (kAssocSamples random triples) above it.
    static FiniteGroup from_table(std::vector<std::vector<std::uint32_t>> table,
                                  std::vector<std::string> names = {});

    static constexpr std::uint32_t kExhaustiveAssocLimit = 48;
    static constexpr std::uint32_t kAssocSamples = 100'000;
    static constexpr std::uint32_t kMaxOrder = 4096;

    std::uint32_t order() const noexcept { return order_; }

    Element mul(Element a, Element b) const;
    Element inverse(Element a) const;

    /// Unchecked lookup for hot loops; caller guarantees valid indices.
    Element mul_unchecked(Element a, Element b) const noexcept {
        return Element{table_[static_cast<std::size_t>(a.index) * order_ + b.index]};
    }

    bool contains(Element a) const noexcept { return a.index < order_; }
    void check(Element a) const;

    /// Ordered product of a sequence; the empty product is the identity.
    Element product(std::span<const Element> elems) const;

    const std::string& name(Element a) const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Copy of the multiplication table as rows.
    std::vector<std::vector<std::uint32_t>> table() const;

    bool is_abelian() const;

private:
    FiniteGroup() = default;

    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> table_;  // row-major order_ x order_
    std::vector<std::uint32_t> inverse_;
    std::vector<std::string> names_;
};

/// Builds a group from its spec with the canonical element orderings:
/// cyclic residues 0..n-1; dihedral rotations then reflections; symmetric
/// permutations in lexicographic one-line order; products as lexicographic
/// pairs (left major).
FiniteGroup build_group(const GroupSpec& spec);

}  // namespace shirshov
