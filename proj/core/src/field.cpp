#include "shirshov/field.hpp"

#include <cctype>
#include <stdexcept>

#include "shirshov/error.hpp"

namespace shirshov {

namespace {

bool is_prime_number(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

// Inverse of a in Z/m for m prime and a != 0 mod m, by extended Euclid.
BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = mod_floor(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        const BigInt quot = old_r / r;
        BigInt tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    return mod_floor(old_s, m);
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw InputError("malformed coefficient \"" + std::string(whole) + "\"");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw InputError("malformed coefficient \"" + std::string(whole) + "\"");
    BigInt value(std::string(text.substr(i)));
    return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p > (std::uint64_t{1} << 62) || !is_prime_number(p))
        throw InputError("field modulus " + std::to_string(p) + " is not a supported prime");
    return Field(p);
}

Rational Field::reduce(const Rational& q) const {
    if (!is_prime()) return q;
    const BigInt p(modulus_);
    const BigInt num = mod_floor(boost::multiprecision::numerator(q), p);
    const BigInt den = mod_floor(boost::multiprecision::denominator(q), p);
    if (den == 0)
        throw InputError("coefficient " + format_rational(q) + " is undefined modulo " +
                         std::to_string(modulus_));
    if (den == 1) return Rational(num);
    return Rational(mod_floor(num * mod_inverse(den, p), p));
}

Rational Field::div(const Rational& a, const Rational& b) const {
    const Rational rb = reduce(b);
    if (rb == 0) throw std::domain_error("division by zero in " + describe());
    if (!is_prime()) return a / rb;
    const BigInt p(modulus_);
    return reduce(Rational(mod_floor(boost::multiprecision::numerator(reduce(a)) *
                                         mod_inverse(boost::multiprecision::numerator(rb), p),
                                     p)));
}

std::string Field::describe() const {
    return is_prime() ? "F_" + std::to_string(modulus_) : "Q";
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in coefficient \"" + std::string(text) + "\"");
    return Rational(num, den);
}

std::string format_rational(const Rational& q) {
    const BigInt& den = boost::multiprecision::denominator(q);
    if (den == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

}  // namespace shirshov
