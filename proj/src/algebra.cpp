#include "zeon/algebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "zeon/errors.hpp"
#include "zeon/simd.hpp"

namespace zeon {

// ---------------------------------------------------------------------------
// GeneratorRule / Signature

GeneratorRule GeneratorRule::nilpotent(unsigned index) {
    if (index < 2) {
        throw ContractViolation("nilpotent generator index must be >= 2, got " +
                                std::to_string(index));
    }
    return GeneratorRule(Kind::Nilpotent, index);
}

Signature::Signature(std::vector<Generator> generators) : generators_(std::move(generators)) {
    const std::size_t words = (generators_.size() + 63) / 64;
    square_free_.assign(words, 0);
    higher_.assign(words, 0);
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        const auto& rule = generators_[g].rule;
        const std::uint64_t bit = std::uint64_t{1} << (g % 64);
        if (rule.is_idempotent()) {
            continue;
        }
        if (rule.index() == 2) {
            square_free_[g / 64] |= bit;
        } else {
            higher_[g / 64] |= bit;
            has_higher_ = true;
        }
    }
}

bool Signature::same_rules(const Signature& other) const {
    if (this == &other) {
        return true;
    }
    if (size() != other.size()) {
        return false;
    }
    for (std::size_t g = 0; g < size(); ++g) {
        if (!(generators_[g].rule == other.generators_[g].rule)) {
            return false;
        }
    }
    return true;
}

GenId SignatureBuilder::add_block(std::size_t count, const GeneratorRule& rule,
                                  const std::string& prefix) {
    const auto first = static_cast<GenId>(generators_.size());
    for (std::size_t i = 0; i < count; ++i) {
        generators_.push_back({rule, prefix + std::to_string(i + 1)});
    }
    return first;
}

GenId SignatureBuilder::add(const GeneratorRule& rule, std::string name) {
    const auto id = static_cast<GenId>(generators_.size());
    generators_.push_back({rule, std::move(name)});
    return id;
}

Context SignatureBuilder::build() const { return std::make_shared<const Signature>(generators_); }

// ---------------------------------------------------------------------------
// Monomial

void Monomial::trim() {
    while (!support_.empty() && support_.back() == 0) {
        support_.pop_back();
    }
}

Monomial Monomial::generator(GenId g) {
    Monomial m;
    m.support_.assign(g / 64 + 1, 0);
    m.support_[g / 64] |= std::uint64_t{1} << (g % 64);
    return m;
}

Monomial Monomial::blade(std::span<const GenId> ids) {
    Monomial m;
    for (GenId g : ids) {
        if (m.support_.size() <= g / 64) {
            m.support_.resize(g / 64 + 1, 0);
        }
        m.support_[g / 64] |= std::uint64_t{1} << (g % 64);
    }
    return m;
}

Monomial Monomial::blade(std::initializer_list<GenId> ids) {
    return blade(std::span<const GenId>(ids.begin(), ids.size()));
}

Monomial Monomial::from_parts(Words support, Powers powers) {
    Monomial m;
    m.support_ = std::move(support);
    m.powers_ = std::move(powers);
    m.trim();
    return m;
}

std::optional<Monomial> Monomial::from_exponents(
    const Signature& sig, std::span<const std::pair<GenId, std::uint32_t>> factors) {
    std::vector<std::pair<GenId, std::uint32_t>> merged(factors.begin(), factors.end());
    std::sort(merged.begin(), merged.end());
    Monomial m;
    for (std::size_t i = 0; i < merged.size();) {
        const GenId g = merged[i].first;
        if (g >= sig.size()) {
            throw ContractViolation("generator id " + std::to_string(g) +
                                    " outside signature of size " + std::to_string(sig.size()));
        }
        std::uint64_t e = 0;
        for (; i < merged.size() && merged[i].first == g; ++i) {
            e += merged[i].second;
        }
        if (e == 0) {
            continue;
        }
        const auto& rule = sig.rule(g);
        if (rule.is_idempotent()) {
            e = 1;
        } else if (e >= rule.index()) {
            return std::nullopt;
        }
        if (m.support_.size() <= g / 64) {
            m.support_.resize(g / 64 + 1, 0);
        }
        m.support_[g / 64] |= std::uint64_t{1} << (g % 64);
        if (e > 1) {
            m.powers_.emplace_back(g, static_cast<std::uint32_t>(e));
        }
    }
    return m;
}

std::size_t Monomial::grade() const {
    std::size_t n = 0;
    for (auto w : support_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

bool Monomial::contains(GenId g) const { return (word(g / 64) >> (g % 64)) & 1U; }

std::uint32_t Monomial::exponent(GenId g) const {
    if (!contains(g)) {
        return 0;
    }
    for (const auto& [id, e] : powers_) {
        if (id == g) {
            return e;
        }
    }
    return 1;
}

std::vector<GenId> Monomial::generators() const {
    std::vector<GenId> out;
    for (std::size_t w = 0; w < support_.size(); ++w) {
        std::uint64_t bits = support_[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            out.push_back(static_cast<GenId>(w * 64 + static_cast<std::size_t>(b)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<GenId, std::uint32_t>> Monomial::factors() const {
    std::vector<std::pair<GenId, std::uint32_t>> out;
    auto p = powers_.begin();
    for (GenId g : generators()) {
        std::uint32_t e = 1;
        if (p != powers_.end() && p->first == g) {
            e = p->second;
            ++p;
        }
        out.emplace_back(g, e);
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
    if (auto c = std::lexicographical_compare_three_way(lhs.support_.begin(), lhs.support_.end(),
                                                        rhs.support_.begin(),
                                                        rhs.support_.end());
        c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(lhs.powers_.begin(), lhs.powers_.end(),
                                                  rhs.powers_.begin(), rhs.powers_.end());
}

bool is_canonical(const Signature& sig, const Monomial& m) {
    for (const auto& [g, e] : m.factors()) {
        if (g >= sig.size()) {
            return false;
        }
        const auto& rule = sig.rule(g);
        if (rule.is_idempotent() ? e != 1 : e >= rule.index()) {
            return false;
        }
    }
    return true;
}

namespace {

// Exponent bookkeeping for generators of index >= 3, shared by both product
// paths. The square-free conflict test and the support union have already
// been done by the caller.
bool merge_powers(const Signature& sig, const Monomial& a, const Monomial& b,
                  Monomial::Powers& out) {
    out.clear();
    const auto higher = sig.higher_mask();
    for (std::size_t w = 0; w < higher.size(); ++w) {
        std::uint64_t overlap = a.word(w) & b.word(w) & higher[w];
        while (overlap != 0) {
            const auto g = static_cast<GenId>(w * 64 + static_cast<std::size_t>(std::countr_zero(overlap)));
            overlap &= overlap - 1;
            const std::uint32_t e = a.exponent(g) + b.exponent(g);
            if (e >= sig.rule(g).index()) {
                return false;
            }
            out.emplace_back(g, e);
        }
    }
    for (const auto& p : a.powers()) {
        if (!b.contains(p.first)) {
            out.push_back(p);
        }
    }
    for (const auto& p : b.powers()) {
        if (!a.contains(p.first)) {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    return true;
}

bool needs_power_merge(const Signature& sig, const Monomial& a, const Monomial& b) {
    if (!sig.has_higher()) {
        return false;
    }
    if (!a.powers().empty() || !b.powers().empty()) {
        return true;
    }
    const auto higher = sig.higher_mask();
    for (std::size_t w = 0; w < higher.size(); ++w) {
        if ((a.word(w) & b.word(w) & higher[w]) != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<Monomial> multiply(const Signature& sig, const Monomial& a, const Monomial& b) {
    const std::size_t words = std::max(a.words().size(), b.words().size());
    const auto square_free = sig.square_free_mask();
    Monomial::Words support(words, 0);
    for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t sf = w < square_free.size() ? square_free[w] : 0;
        if ((a.word(w) & b.word(w) & sf) != 0) {
            return std::nullopt;
        }
        support[w] = a.word(w) | b.word(w);
    }
    Monomial::Powers powers;
    if (needs_power_merge(sig, a, b) && !merge_powers(sig, a, b, powers)) {
        return std::nullopt;
    }
    return Monomial::from_parts(std::move(support), std::move(powers));
}

// ---------------------------------------------------------------------------
// Element

struct ElementAccess {
    static Element make_sorted(Context ctx, std::vector<Element::Term> terms) {
        return Element(std::move(ctx), std::move(terms), Element::Sorted{});
    }
    static std::vector<Element::Term>& terms(Element& e) { return e.terms_; }
};

namespace {

void require_same_context(const Element& a, const Element& b) {
    if (a.context() != b.context() && !a.signature().same_rules(b.signature())) {
        throw ContextError("operands belong to different algebra contexts");
    }
}

// Sorts by monomial, sums equal monomials, drops zero coefficients.
void sort_and_merge(std::vector<Element::Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].first == terms[i].first) {
            terms[i].second += terms[j].second;
            ++j;
        }
        if (!terms[i].second.is_zero()) {
            if (out != i) {
                terms[out] = std::move(terms[i]);
            }
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

Element::Element(Context ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) {
        throw ContractViolation("element requires a signature");
    }
}

Element::Element(Context ctx, std::vector<Term> sorted_terms, Sorted)
    : ctx_(std::move(ctx)), terms_(std::move(sorted_terms)) {}

Element Element::scalar(Context ctx, const Rational& c) {
    Element e(std::move(ctx));
    if (!c.is_zero()) {
        e.terms_.emplace_back(Monomial(), c);
    }
    return e;
}

Element Element::generator(Context ctx, GenId g) {
    return monomial(std::move(ctx), Monomial::generator(g));
}

Element Element::monomial(Context ctx, const Monomial& m, const Rational& c) {
    std::vector<Term> terms;
    terms.emplace_back(m, c);
    return from_terms(std::move(ctx), std::move(terms));
}

Element Element::from_terms(Context ctx, std::vector<Term> terms) {
    Element e(std::move(ctx));
    e.terms_.reserve(terms.size());
    for (auto& [m, c] : terms) {
        if (auto canon = Monomial::from_exponents(*e.ctx_, m.factors())) {
            e.terms_.emplace_back(std::move(*canon), std::move(c));
        }
    }
    sort_and_merge(e.terms_);
    return e;
}

Rational Element::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) {
        return it->second;
    }
    return Rational(0);
}

bool operator==(const Element& lhs, const Element& rhs) {
    return lhs.signature().same_rules(rhs.signature()) && lhs.terms_ == rhs.terms_;
}

Element add(const Element& a, const Element& b) {
    require_same_context(a, b);
    std::vector<Element::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.terms().begin();
    auto j = b.terms().begin();
    while (i != a.terms().end() || j != b.terms().end()) {
        if (j == b.terms().end() || (i != a.terms().end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.terms().end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            Rational c = i->second + j->second;
            if (!c.is_zero()) {
                out.emplace_back(i->first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    return ElementAccess::make_sorted(a.context(), std::move(out));
}

Element sub(const Element& a, const Element& b) { return add(a, scale(Rational(-1), b)); }

Element scale(const Rational& c, const Element& a) {
    if (c.is_zero()) {
        return Element(a.context());
    }
    std::vector<Element::Term> out(a.terms().begin(), a.terms().end());
    for (auto& t : out) {
        t.second *= c;
    }
    return ElementAccess::make_sorted(a.context(), std::move(out));
}

Element mul_reference(const Element& a, const Element& b) {
    require_same_context(a, b);
    std::vector<Element::Term> out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (auto m = multiply(a.signature(), ma, mb)) {
                out.emplace_back(std::move(*m), ca * cb);
            }
        }
    }
    sort_and_merge(out);
    return ElementAccess::make_sorted(a.context(), std::move(out));
}

Element mul(const Element& a, const Element& b, const Limits& limits) {
    require_same_context(a, b);
    if (a.is_zero() || b.is_zero()) {
        return Element(a.context());
    }
    const Signature& sig = a.signature();
    const std::size_t words = sig.words();
    const std::size_t nb = b.size();
    const auto square_free = sig.square_free_mask();

    // Column-major copy of b's support words: column w holds word w of every term.
    std::vector<std::uint64_t> columns(words * nb, 0);
    for (std::size_t t = 0; t < nb; ++t) {
        const Monomial& m = b.terms()[t].first;
        for (std::size_t w = 0; w < m.words().size(); ++w) {
            columns[w * nb + t] = m.words()[w];
        }
    }
    std::vector<std::uint64_t> unions(words * nb, 0);
    std::vector<std::uint8_t> dead(nb, 0);

    const std::size_t compact_at = std::max<std::size_t>(limits.max_terms * 2, 1U << 16);
    std::vector<Element::Term> out;
    Monomial::Powers powers;
    for (const auto& [ma, ca] : a.terms()) {
        std::fill(dead.begin(), dead.end(), 0);
        for (std::size_t w = 0; w < words; ++w) {
            simd::combine(ma.word(w), square_free[w],
                          std::span<const std::uint64_t>(columns.data() + w * nb, nb),
                          std::span<std::uint64_t>(unions.data() + w * nb, nb), dead);
        }
        for (std::size_t t = 0; t < nb; ++t) {
            if (dead[t] != 0) {
                continue;
            }
            const auto& [mb, cb] = b.terms()[t];
            powers.clear();
            if (needs_power_merge(sig, ma, mb) && !merge_powers(sig, ma, mb, powers)) {
                continue;
            }
            Monomial::Words support(words, 0);
            for (std::size_t w = 0; w < words; ++w) {
                support[w] = unions[w * nb + t];
            }
            out.emplace_back(Monomial::from_parts(std::move(support), powers), ca * cb);
        }
        if (out.size() > compact_at) {
            sort_and_merge(out);
            if (out.size() > limits.max_terms) {
                throw BudgetExceeded("product exceeds " + std::to_string(limits.max_terms) +
                                     " terms");
            }
        }
    }
    sort_and_merge(out);
    if (out.size() > limits.max_terms) {
        throw BudgetExceeded("product exceeds " + std::to_string(limits.max_terms) + " terms");
    }
    return ElementAccess::make_sorted(a.context(), std::move(out));
}

Element pow(const Element& a, unsigned k, const Limits& limits) {
    Element result = Element::one(a.context());
    for (unsigned i = 0; i < k && !result.is_zero(); ++i) {
        result = mul(result, a, limits);
    }
    return result;
}

Rational scalar_part(const Element& u) { return u.coefficient(Monomial()); }

Element dual_part(const Element& u) {
    std::vector<Element::Term> out;
    for (const auto& t : u.terms()) {
        if (!t.first.is_unit()) {
            out.push_back(t);
        }
    }
    return ElementAccess::make_sorted(u.context(), std::move(out));
}

Element grade_part(const Element& u, std::size_t k) {
    std::vector<Element::Term> out;
    for (const auto& t : u.terms()) {
        if (t.first.grade() == k) {
            out.push_back(t);
        }
    }
    return ElementAccess::make_sorted(u.context(), std::move(out));
}

Rational scalar_sum(const Element& u) {
    Rational sum;
    for (const auto& t : u.terms()) {
        sum += t.second;
    }
    return sum;
}

std::size_t min_grade(const Element& u) {
    std::size_t best = 0;
    for (const auto& t : u.terms()) {
        const std::size_t g = t.first.grade();
        if (g > 0 && (best == 0 || g < best)) {
            best = g;
        }
    }
    return best;
}

std::optional<unsigned> nilpotency_index(const Element& u, unsigned cap, const Limits& limits) {
    if (cap < 1) {
        throw ContractViolation("nilpotency_index cap must be >= 1");
    }
    Element power = u;
    for (unsigned k = 1; k <= cap; ++k) {
        if (power.is_zero()) {
            return k;
        }
        if (k < cap) {
            power = mul(power, u, limits);
        }
    }
    return std::nullopt;
}

bool annihilates(const Monomial& blade, const Element& u) {
    const Signature& sig = u.signature();
    for (const auto& [g, e] : blade.factors()) {
        if (g >= sig.size() || sig.rule(g).is_idempotent() || sig.rule(g).index() != 2 || e != 1) {
            throw ContractViolation("annihilator blades must be square-free in index-2 generators");
        }
    }
    return mul(Element::monomial(u.context(), blade), u).is_zero();
}

bool display_less(const Monomial& a, const Monomial& b) {
    const auto ga = a.grade();
    const auto gb = b.grade();
    if (ga != gb) {
        return ga < gb;
    }
    return a.factors() < b.factors();
}

std::string to_string(const Signature& sig, const Monomial& m) {
    std::string out;
    for (const auto& [g, e] : m.factors()) {
        if (!out.empty()) {
            out += '*';
        }
        out += g < sig.size() ? sig.name(g) : "g" + std::to_string(g + 1);
        if (e > 1) {
            out += '^' + std::to_string(e);
        }
    }
    return out;
}

std::string to_string(const Element& u) {
    if (u.is_zero()) {
        return "0";
    }
    std::vector<const Element::Term*> order;
    for (const auto& t : u.terms()) {
        order.push_back(&t);
    }
    std::sort(order.begin(), order.end(),
              [](const auto* x, const auto* y) { return display_less(x->first, y->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const Rational& c = t->second;
        const bool negative = c.sign() < 0;
        const Rational magnitude = negative ? -c : c;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const std::string mono = to_string(u.signature(), t->first);
        if (mono.empty()) {
            os << magnitude;
        } else if (magnitude == Rational(1)) {
            os << mono;
        } else {
            os << magnitude << '*' << mono;
        }
    }
    return os.str();
}

}  // namespace zeon
