#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace zeon {

/// Exact rational number. Integers that fit in 64 bits are held inline and
/// arithmetic on them stays on machine words until it would overflow; every
/// other value is held as a normalized GMP rational.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by intent
    Rational(int value) : value_(static_cast<std::int64_t>(value)) {}  // NOLINT
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);
    explicit Rational(const mpz_class& value);

    /// Accepts "17", "-3", "5/6".
    static Rational parse(std::string_view text);

    bool is_zero() const;
    bool is_integer() const;
    int sign() const;
    bool is_small() const { return std::holds_alternative<std::int64_t>(value_); }

    std::optional<std::int64_t> to_int64() const;
    mpq_class to_mpq() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    void demote();

    std::variant<std::int64_t, mpq_class> value_{std::int64_t{0}};
};

/// n! as an exact integer.
Rational factorial(unsigned n);

}  // namespace zeon
