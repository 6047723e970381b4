#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace shirshov {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: a prime field F_p or the exact rationals. Elements are
/// carried as Rational; over F_p every value is kept as its residue in [0, p).
class Field {
public:
    static constexpr std::uint64_t kDefaultPrime = 1'000'003;

    static Field prime(std::uint64_t p);
    static Field rationals() { return Field(0); }

    bool is_prime() const noexcept { return modulus_ != 0; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    /// Canonical representative. Over F_p, throws InputError when the
    /// denominator vanishes mod p.
    Rational reduce(const Rational& q) const;

    Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
    Rational neg(const Rational& a) const { return reduce(-a); }
    /// Throws std::domain_error on division by zero.
    Rational div(const Rational& a, const Rational& b) const;

    bool is_zero(const Rational& a) const { return reduce(a) == 0; }

    std::string describe() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t modulus) : modulus_(modulus) {}

    std::uint64_t modulus_;  // 0 for the rationals
};

/// Parses "3", "-2", "7/4". Throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

}  // namespace shirshov
