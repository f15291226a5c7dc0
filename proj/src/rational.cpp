#include "zeon/rational.hpp"

#include <stdexcept>

namespace zeon {

namespace {

mpq_class as_mpq(const std::variant<std::int64_t, mpq_class>& v) {
    if (const auto* small = std::get_if<std::int64_t>(&v)) {
        mpq_class q;
        mpz_set_si(q.get_num_mpz_t(), *small);
        return q;
    }
    return std::get<mpq_class>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), num);
    mpz_set_si(q.get_den_mpz_t(), den);
    q.canonicalize();
    value_ = std::move(q);
    demote();
}

Rational::Rational(const mpq_class& value) : value_(value) {
    std::get<mpq_class>(value_).canonicalize();
    demote();
}

Rational::Rational(const mpz_class& value) : value_(mpq_class(value)) { demote(); }

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    return Rational(q);
}

void Rational::demote() {
    auto* big = std::get_if<mpq_class>(&value_);
    if (big == nullptr) {
        return;
    }
    if (big->get_den() == 1 && mpz_fits_slong_p(big->get_num_mpz_t())) {
        static_assert(sizeof(long) == sizeof(std::int64_t));
        value_ = static_cast<std::int64_t>(mpz_get_si(big->get_num_mpz_t()));
    }
}

bool Rational::is_zero() const { return sign() == 0; }

bool Rational::is_integer() const {
    if (is_small()) {
        return true;
    }
    return std::get<mpq_class>(value_).get_den() == 1;
}

int Rational::sign() const {
    if (const auto* small = std::get_if<std::int64_t>(&value_)) {
        return (*small > 0) - (*small < 0);
    }
    return sgn(std::get<mpq_class>(value_));
}

std::optional<std::int64_t> Rational::to_int64() const {
    if (const auto* small = std::get_if<std::int64_t>(&value_)) {
        return *small;
    }
    return std::nullopt;
}

mpq_class Rational::to_mpq() const { return as_mpq(value_); }

std::string Rational::to_string() const {
    if (const auto* small = std::get_if<std::int64_t>(&value_)) {
        return std::to_string(*small);
    }
    return std::get<mpq_class>(value_).get_str();
}

Rational Rational::operator-() const {
    Rational out;
    out -= *this;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (is_small() && rhs.is_small()) {
        std::int64_t r = 0;
        if (!__builtin_add_overflow(std::get<std::int64_t>(value_),
                                    std::get<std::int64_t>(rhs.value_), &r)) {
            value_ = r;
            return *this;
        }
    }
    value_ = mpq_class(as_mpq(value_) + as_mpq(rhs.value_));
    demote();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (is_small() && rhs.is_small()) {
        std::int64_t r = 0;
        if (!__builtin_sub_overflow(std::get<std::int64_t>(value_),
                                    std::get<std::int64_t>(rhs.value_), &r)) {
            value_ = r;
            return *this;
        }
    }
    value_ = mpq_class(as_mpq(value_) - as_mpq(rhs.value_));
    demote();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    if (is_small() && rhs.is_small()) {
        std::int64_t r = 0;
        if (!__builtin_mul_overflow(std::get<std::int64_t>(value_),
                                    std::get<std::int64_t>(rhs.value_), &r)) {
            value_ = r;
            return *this;
        }
    }
    value_ = mpq_class(as_mpq(value_) * as_mpq(rhs.value_));
    demote();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (is_small() && rhs.is_small()) {
        const auto a = std::get<std::int64_t>(value_);
        const auto b = std::get<std::int64_t>(rhs.value_);
        // INT64_MIN / -1 overflows; the big path handles it.
        if (b != -1 && a % b == 0) {
            value_ = a / b;
            return *this;
        }
    }
    value_ = mpq_class(as_mpq(value_) / as_mpq(rhs.value_));
    demote();
    return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
    if (lhs.is_small() && rhs.is_small()) {
        return std::get<std::int64_t>(lhs.value_) == std::get<std::int64_t>(rhs.value_);
    }
    // Normalized representations are unique, so a small and a big value never coincide.
    if (lhs.is_small() != rhs.is_small()) {
        return false;
    }
    return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (lhs.is_small() && rhs.is_small()) {
        return std::get<std::int64_t>(lhs.value_) <=> std::get<std::int64_t>(rhs.value_);
    }
    const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace zeon
