#include "zeon/matchings.hpp"

#include <numeric>

#include "zeon/errors.hpp"
#include "zeon/independent_sets.hpp"

namespace zeon {

Context zeon_context(std::size_t n) {
    SignatureBuilder b;
    b.add_block(n, GeneratorRule::nilpotent(2), "z");
    return b.build();
}

Element incidence_representation(const Hypergraph& h, const Context& ctx) {
    std::vector<Element::Term> terms;
    for (const auto& e : h.edges()) {
        terms.emplace_back(Monomial::blade(std::span<const GenId>(e)), Rational(1));
    }
    return Element::from_terms(ctx, std::move(terms));
}

Element incidence_representation(const Hypergraph& h) {
    return incidence_representation(h, zeon_context(h.vertex_count()));
}

namespace {

void require_distinct_edges(const Hypergraph& h) {
    if (has_duplicate_edges(h)) {
        throw ContractViolation("matching enumeration needs distinct hyperedges");
    }
}

}  // namespace

std::vector<Record> k_matchings(const Hypergraph& h, unsigned k, const Limits& limits) {
    if (k < 1) {
        throw ContractViolation("k_matchings needs k >= 1");
    }
    require_distinct_edges(h);
    const Element power = pow(incidence_representation(h), k, limits);
    const Rational k_factorial = factorial(k);
    std::vector<Record> out;
    for (const auto& [m, c] : power.terms()) {
        Rational alpha = c / k_factorial;
        if (!alpha.is_integer()) {
            throw InvariantViolation("coefficient of Gamma^k not divisible by k!");
        }
        const auto gens = m.generators();
        out.push_back({VertexSet(gens.begin(), gens.end()), {}, std::move(alpha)});
    }
    sort_records(out);
    return out;
}

unsigned matching_number(const Hypergraph& h, const Limits& limits) {
    require_distinct_edges(h);
    const Element gamma = incidence_representation(h);
    // a matching has at most min(m, n) edges
    const auto cap = static_cast<unsigned>(std::min(h.edge_count(), h.vertex_count()) + 1);
    const auto kappa = nilpotency_index(gamma, std::max(cap, 1U), limits);
    if (!kappa) {
        throw InvariantViolation("incidence representation is not nilpotent within its bound");
    }
    return *kappa - 1;
}

PerfectMatchings perfect_matchings(const Hypergraph& h, const Limits& limits) {
    require_distinct_edges(h);
    const std::size_t n = h.vertex_count();
    if (h.edge_count() == 0 || n == 0) {
        return {Rational(0), false, "perfect matchings need a nonempty hypergraph"};
    }
    const std::size_t r = h.edge(0).size();
    if (!is_r_uniform(h, r) || n % r != 0) {
        return {Rational(0), false,
                "hypergraph is not r-uniform on a multiple of r vertices; reporting 0"};
    }
    const auto k = static_cast<unsigned>(n / r);
    const Element power = pow(incidence_representation(h), k, limits);
    std::vector<GenId> all(n);
    std::iota(all.begin(), all.end(), GenId{0});
    const Rational alpha = power.coefficient(Monomial::blade(std::span<const GenId>(all)));
    return {alpha / factorial(k), true, ""};
}

std::map<unsigned, Rational> spanning_matching_counts(const Hypergraph& h, const Limits& limits) {
    require_distinct_edges(h);
    std::map<unsigned, Rational> out;
    const std::size_t n = h.vertex_count();
    if (n == 0) {
        return out;
    }
    std::vector<GenId> all(n);
    std::iota(all.begin(), all.end(), GenId{0});
    const Monomial full = Monomial::blade(std::span<const GenId>(all));
    const Element gamma = incidence_representation(h);
    Element power = Element::one(gamma.context());
    for (unsigned k = 1; k <= n && k <= h.edge_count(); ++k) {
        power = mul(power, gamma, limits);
        if (power.is_zero()) {
            break;
        }
        const Rational alpha = power.coefficient(full);
        if (!alpha.is_zero()) {
            out.emplace(k, alpha / factorial(k));
        }
    }
    return out;
}

std::vector<EdgeSet> j_intersecting_matchings(const Hypergraph& h, std::size_t j, unsigned k,
                                              const Limits& limits) {
    std::vector<EdgeSet> out;
    for (const auto& r : graph_independent_sets(intersection_graph(h, j), k, limits)) {
        out.emplace_back(r.vertices.begin(), r.vertices.end());
    }
    return out;
}

}  // namespace zeon
