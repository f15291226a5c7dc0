#include "zeon/independent_sets.hpp"

#include <algorithm>
#include <set>

#include "zeon/errors.hpp"

namespace zeon {

namespace {

// Phi = sum_v psi(v) x_v over edge labels [0, L) and vertex labels [L, L+n).
IndependentSetRepresentation build(std::size_t n, const std::vector<VertexSet>& labelled_edges,
                                   const std::vector<GeneratorRule>& rules,
                                   const std::vector<bool>& skip_vertex) {
    SignatureBuilder b;
    for (std::size_t l = 0; l < labelled_edges.size(); ++l) {
        b.add(rules[l], (rules[l].index() == 2 ? "z" : "u") + std::to_string(l + 1));
    }
    const GenId first_vertex = b.add_block(n, GeneratorRule::idempotent(), "x");
    const Context ctx = b.build();

    std::vector<std::vector<std::pair<GenId, std::uint32_t>>> psi(n);
    for (std::size_t l = 0; l < labelled_edges.size(); ++l) {
        for (Vertex v : labelled_edges[l]) {
            psi[v].emplace_back(static_cast<GenId>(l), 1);
        }
    }
    std::vector<Element::Term> terms;
    for (Vertex v = 0; v < n; ++v) {
        if (skip_vertex[v]) {
            continue;
        }
        auto factors = psi[v];
        factors.emplace_back(first_vertex + v, 1);
        auto m = Monomial::from_exponents(*ctx, factors);
        if (m) {
            terms.emplace_back(std::move(*m), Rational(1));
        }
    }
    return {Element::from_terms(ctx, std::move(terms)), first_vertex, labelled_edges};
}

void require_no_isolated(const Hypergraph& h) {
    if (!isolated_vertices(h).empty()) {
        throw ContractViolation(
            "hypergraph independent-set representations need a hypergraph without isolated "
            "vertices");
    }
}

// Index sets of the vertex labels of each term of u, with coefficients.
std::vector<Record> read_vertex_sets(const Element& u, GenId first_vertex) {
    std::vector<Record> out;
    for (const auto& [m, c] : u.terms()) {
        Record r;
        for (GenId g : m.generators()) {
            if (g >= first_vertex) {
                r.vertices.push_back(g - first_vertex);
            }
        }
        r.count = c;
        out.push_back(std::move(r));
    }
    return out;
}

IndependentSets partition_by_size(const std::vector<Record>& records, unsigned k) {
    std::set<VertexSet> exact;
    std::set<VertexSet> smaller;
    for (const auto& r : records) {
        (r.vertices.size() == k ? exact : smaller).insert(r.vertices);
    }
    return {{exact.begin(), exact.end()}, {smaller.begin(), smaller.end()}};
}

}  // namespace

IndependentSetRepresentation clique_representation(const Graph& g) {
    if (!is_graph(g)) {
        throw ContractViolation("clique representation needs an ordinary graph");
    }
    std::vector<VertexSet> labelled = g.edges();
    for (Vertex v : isolated_vertices(g)) {
        labelled.push_back({v});
    }
    const std::vector<GeneratorRule> rules(labelled.size(), GeneratorRule::nilpotent(2));
    return build(g.vertex_count(), labelled, rules, std::vector<bool>(g.vertex_count(), false));
}

IndependentSetRepresentation weak_independent_set_representation(const Hypergraph& h) {
    require_no_isolated(h);
    std::vector<VertexSet> labelled;
    std::vector<GeneratorRule> rules;
    std::vector<bool> skip(h.vertex_count(), false);
    for (const auto& e : h.edges()) {
        if (e.size() == 1) {
            // a label of index 1 is zero: the vertex cannot be chosen at all
            skip[e.front()] = true;
            continue;
        }
        labelled.push_back(e);
        rules.push_back(GeneratorRule::nilpotent(static_cast<unsigned>(e.size())));
    }
    return build(h.vertex_count(), labelled, rules, skip);
}

IndependentSetRepresentation k_independent_set_representation(const Hypergraph& h, unsigned k) {
    if (k < 1) {
        throw ContractViolation("k-independent sets need k >= 1");
    }
    require_no_isolated(h);
    const std::vector<GeneratorRule> rules(h.edge_count(), GeneratorRule::nilpotent(k + 1));
    return build(h.vertex_count(), h.edges(), rules, std::vector<bool>(h.vertex_count(), false));
}

std::vector<Record> graph_independent_sets(const Graph& g, unsigned k, const Limits& limits) {
    if (k < 1) {
        throw ContractViolation("independent-set size must be >= 1");
    }
    const auto rep = clique_representation(g);
    const Element power = pow(rep.element, k, limits);
    const Rational k_factorial = factorial(k);
    auto records = read_vertex_sets(power, rep.first_vertex_label);
    for (auto& r : records) {
        if (r.vertices.size() != k || r.count != k_factorial) {
            throw InvariantViolation("graph independent-set term is not k! on a k-set");
        }
        r.count = Rational(1);
    }
    sort_records(records);
    return records;
}

std::vector<Record> graph_cliques(const Graph& g, unsigned k, const Limits& limits) {
    return graph_independent_sets(complement_graph(g), k, limits);
}

std::vector<VertexSet> vertex_sets(const std::vector<Record>& records) {
    std::vector<VertexSet> out;
    for (const auto& r : records) {
        out.push_back(r.vertices);
    }
    return out;
}

IndependentSets weak_independent_sets(const Hypergraph& h, unsigned k, const Limits& limits) {
    if (k < 1) {
        throw ContractViolation("independent-set size must be >= 1");
    }
    const auto rep = weak_independent_set_representation(h);
    return partition_by_size(read_vertex_sets(pow(rep.element, k, limits), rep.first_vertex_label),
                             k);
}

IndependentSets k_independent_sets(const Hypergraph& h, unsigned size, unsigned k,
                                   const Limits& limits) {
    if (size < 1) {
        throw ContractViolation("independent-set size must be >= 1");
    }
    const auto rep = k_independent_set_representation(h, k);
    return partition_by_size(
        read_vertex_sets(pow(rep.element, size, limits), rep.first_vertex_label), size);
}

std::vector<VertexSet> pairwise_adjacent_sets(const Hypergraph& h, unsigned k,
                                              const Limits& limits) {
    return vertex_sets(graph_independent_sets(non_adjacency_graph(h), k, limits));
}

}  // namespace zeon
