#pragma once

// Exact sparse arithmetic in commutative algebras whose generators are either
// nilpotent of a given index (index 2: zeons, higher: generalized zeons) or
// idempotent (idem-Clifford). Tensor products of such algebras are one flat
// generator id-space with a rule per id.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "zeon/rational.hpp"

namespace zeon {

using GenId = std::uint32_t;

class GeneratorRule {
public:
    enum class Kind { Nilpotent, Idempotent };

    /// g^index = 0 and g^(index-1) != 0. Throws ContractViolation for index < 2.
    static GeneratorRule nilpotent(unsigned index);
    static GeneratorRule idempotent() { return GeneratorRule(Kind::Idempotent, 0); }

    Kind kind() const { return kind_; }
    bool is_idempotent() const { return kind_ == Kind::Idempotent; }
    /// Nilpotency index; 0 for idempotent generators.
    unsigned index() const { return index_; }

    friend bool operator==(const GeneratorRule&, const GeneratorRule&) = default;

private:
    GeneratorRule(Kind kind, unsigned index) : kind_(kind), index_(index) {}

    Kind kind_;
    unsigned index_;
};

class Signature;
using Context = std::shared_ptr<const Signature>;

/// Ordered list of generator rules, one per dense id 0..size()-1, plus a
/// display name for each generator. Immutable once built.
class Signature {
public:
    struct Generator {
        GeneratorRule rule;
        std::string name;
    };

    explicit Signature(std::vector<Generator> generators);

    std::size_t size() const { return generators_.size(); }
    const GeneratorRule& rule(GenId g) const { return generators_.at(g).rule; }
    const std::string& name(GenId g) const { return generators_.at(g).name; }

    /// Number of 64-bit words needed for a support bitset over all generators.
    std::size_t words() const { return square_free_.size(); }
    /// Bits of the index-2 nilpotent generators.
    std::span<const std::uint64_t> square_free_mask() const { return square_free_; }
    /// Bits of nilpotent generators with index >= 3.
    std::span<const std::uint64_t> higher_mask() const { return higher_; }
    bool has_higher() const { return has_higher_; }

    /// Rules compare equal; names are presentation only.
    bool same_rules(const Signature& other) const;

private:
    std::vector<Generator> generators_;
    std::vector<std::uint64_t> square_free_;
    std::vector<std::uint64_t> higher_;
    bool has_higher_ = false;
};

/// Incremental construction of a Signature from blocks of generators.
class SignatureBuilder {
public:
    /// Appends `count` generators named prefix1..prefixN; returns the first id.
    GenId add_block(std::size_t count, const GeneratorRule& rule, const std::string& prefix);
    GenId add(const GeneratorRule& rule, std::string name);

    Context build() const;

private:
    std::vector<Signature::Generator> generators_;
};

/// A product of generators with positive exponents, in canonical form.
///
/// The support is a bitset of generator ids with trailing zero words
/// trimmed; exponents greater than one are stored separately, sorted by id.
/// A monomial is canonical for a signature when every idempotent generator has
/// exponent 1 and every nilpotent generator has exponent below its index.
class Monomial {
public:
    using Words = boost::container::small_vector<std::uint64_t, 2>;
    using Powers = boost::container::small_vector<std::pair<GenId, std::uint32_t>, 2>;

    /// The unit monomial.
    Monomial() = default;

    static Monomial generator(GenId g);
    /// Square-free product of the given generators (duplicates ignored).
    static Monomial blade(std::span<const GenId> ids);
    static Monomial blade(std::initializer_list<GenId> ids);
    /// Canonical product g1^e1 * g2^e2 ... under `sig`, or nullopt if it vanishes.
    static std::optional<Monomial> from_exponents(
        const Signature& sig, std::span<const std::pair<GenId, std::uint32_t>> factors);

    bool is_unit() const { return support_.empty(); }
    /// Number of distinct generators present.
    std::size_t grade() const;
    bool contains(GenId g) const;
    std::uint32_t exponent(GenId g) const;
    /// (id, exponent) pairs in increasing id order.
    std::vector<std::pair<GenId, std::uint32_t>> factors() const;
    std::vector<GenId> generators() const;

    std::span<const std::uint64_t> words() const { return {support_.data(), support_.size()}; }
    std::uint64_t word(std::size_t w) const { return w < support_.size() ? support_[w] : 0; }
    const Powers& powers() const { return powers_; }

    /// Builds a monomial directly from support words and powers; trims and
    /// performs no canonicalization against a signature.
    static Monomial from_parts(Words support, Powers powers);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs);

private:
    void trim();

    Words support_;
    Powers powers_;
};

/// Canonical product of two monomials under `sig`, or nullopt if it vanishes.
std::optional<Monomial> multiply(const Signature& sig, const Monomial& a, const Monomial& b);

/// True when `m` is canonical for `sig` (exponent bounds and ids in range).
bool is_canonical(const Signature& sig, const Monomial& m);

/// Optional bound on the number of terms an operation may produce.
struct Limits {
    std::size_t max_terms = 1'000'000;
};

/// A sparse linear combination of canonical monomials with exact rational
/// coefficients. Terms are kept sorted by monomial with no zero coefficients.
/// Elements are immutable values once constructed.
class Element {
public:
    using Term = std::pair<Monomial, Rational>;

    /// The zero element of `ctx`.
    explicit Element(Context ctx);

    static Element scalar(Context ctx, const Rational& c);
    static Element one(Context ctx) { return scalar(std::move(ctx), Rational(1)); }
    static Element generator(Context ctx, GenId g);
    /// c * m after canonicalizing m (zero if m vanishes in ctx).
    static Element monomial(Context ctx, const Monomial& m, const Rational& c = Rational(1));
    /// Canonicalizes each monomial, merges duplicates and drops zeros.
    static Element from_terms(Context ctx, std::vector<Term> terms);

    const Context& context() const { return ctx_; }
    const Signature& signature() const { return *ctx_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of `m` (zero when absent).
    Rational coefficient(const Monomial& m) const;

    friend bool operator==(const Element& lhs, const Element& rhs);

private:
    struct Sorted {};
    Element(Context ctx, std::vector<Term> sorted_terms, Sorted);

    friend struct ElementAccess;

    Context ctx_;
    std::vector<Term> terms_;
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Rational& c, const Element& a);
/// Exact product. Throws ContextError on mismatched contexts and
/// BudgetExceeded if the product would hold more than limits.max_terms terms.
Element mul(const Element& a, const Element& b, const Limits& limits = {});
/// Term-by-term product through multiply(); no batching or vector kernels.
Element mul_reference(const Element& a, const Element& b);
/// a^k by iterated multiplication; pow(a, 0) = 1.
Element pow(const Element& a, unsigned k, const Limits& limits = {});

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
inline Element operator*(const Rational& c, const Element& a) { return scale(c, a); }

Rational scalar_part(const Element& u);
Element dual_part(const Element& u);
/// Terms whose monomial has exactly k distinct generators.
Element grade_part(const Element& u, std::size_t k);
/// Sum of all coefficients.
Rational scalar_sum(const Element& u);
/// 0 if u is purely scalar (including 0), else the least grade in its dual part.
std::size_t min_grade(const Element& u);
/// Least k in [1, cap] with u^k = 0, or nullopt.
std::optional<unsigned> nilpotency_index(const Element& u, unsigned cap,
                                         const Limits& limits = {});
/// True iff blade * u = 0. The blade must consist of index-2 generators.
bool annihilates(const Monomial& blade, const Element& u);

/// Deterministic rendering, e.g. "3 - 8*e2*e6 + z1*z2^2". Terms are ordered
/// by grade, then by generator ids and exponents.
std::string to_string(const Element& u);
std::string to_string(const Signature& sig, const Monomial& m);

/// Ordering used by to_string().
bool display_less(const Monomial& a, const Monomial& b);

}  // namespace zeon
