#include "zeon/walks.hpp"

#include "zeon/errors.hpp"

namespace zeon {

namespace {

void check_vertex(const Hypergraph& h, Vertex v) {
    if (v >= h.vertex_count()) {
        throw ContractViolation("vertex " + std::to_string(v + 1) + " out of range");
    }
}

// Split each term into vertex ids [0, n) and edge ids [n, n+m).
std::vector<WalkRecord> decode(const Element& u, std::size_t n) {
    std::vector<WalkRecord> out;
    for (const auto& [m, c] : u.terms()) {
        WalkRecord r;
        for (GenId g : m.generators()) {
            if (g < n) {
                r.vertices.push_back(g);
            } else {
                r.edges.push_back(static_cast<EdgeId>(g - n));
            }
        }
        r.count = c;
        out.push_back(std::move(r));
    }
    sort_records(out);
    return out;
}

// Entry `target` of  start * M^k, with `start` a single nonzero entry at `from`.
Element contract(const AlgebraMatrix& m, const Element& start, Vertex from, Vertex target,
                 unsigned k, const Limits& limits, Contraction mode) {
    const std::size_t n = m.rows();
    if (mode == Contraction::FullPower) {
        return mul(start, power(m, k, limits)(from, target), limits);
    }
    std::vector<Element> row(n, Element(m.context()));
    row[from] = start;
    for (unsigned step = 0; step < k; ++step) {
        row = multiply(row, m, limits);
    }
    return row[target];
}

}  // namespace

Context walk_context(const Hypergraph& h) {
    SignatureBuilder b;
    b.add_block(h.vertex_count(), GeneratorRule::nilpotent(2), "z");
    b.add_block(h.edge_count(), GeneratorRule::idempotent(), "e");
    return b.build();
}

Context trail_context(const Hypergraph& h) {
    SignatureBuilder b;
    b.add_block(h.vertex_count(), GeneratorRule::idempotent(), "x");
    b.add_block(h.edge_count(), GeneratorRule::nilpotent(2), "y");
    return b.build();
}

AlgebraMatrix build_x(const Hypergraph& h, const Context& ctx) {
    const auto n = h.vertex_count();
    AlgebraMatrix x(ctx, n, h.edge_count());
    for (std::size_t l = 0; l < h.edge_count(); ++l) {
        for (Vertex v : h.edge(static_cast<EdgeId>(l))) {
            x(v, l) = Element::generator(ctx, static_cast<GenId>(n + l));
        }
    }
    return x;
}

AlgebraMatrix build_z(const Hypergraph& h, const Context& ctx) {
    AlgebraMatrix z(ctx, h.edge_count(), h.vertex_count());
    for (std::size_t l = 0; l < h.edge_count(); ++l) {
        for (Vertex v : h.edge(static_cast<EdgeId>(l))) {
            z(l, v) = Element::generator(ctx, v);
        }
    }
    return z;
}

AlgebraMatrix build_bipartite(const Hypergraph& h, const Context& ctx) {
    const auto n = h.vertex_count();
    const auto m = h.edge_count();
    const AlgebraMatrix x = build_x(h, ctx);
    const AlgebraMatrix z = build_z(h, ctx);
    AlgebraMatrix b(ctx, n + m, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < m; ++l) {
            b(i, n + l) = x(i, l);
            b(n + l, i) = z(l, i);
        }
    }
    return b;
}

namespace {

// entry (i, j) = label(v_j) * sum of label(e_l) over e_l holding v_i and v_j
AlgebraMatrix omega_in(const Hypergraph& h, const Context& ctx) {
    const auto n = h.vertex_count();
    AlgebraMatrix omega(ctx, n, n);
    for (std::size_t l = 0; l < h.edge_count(); ++l) {
        const Element edge = Element::generator(ctx, static_cast<GenId>(n + l));
        const auto& e = h.edge(static_cast<EdgeId>(l));
        for (Vertex i : e) {
            for (Vertex j : e) {
                omega(i, j) = add(omega(i, j), mul(Element::generator(ctx, j), edge));
            }
        }
    }
    return omega;
}

}  // namespace

AlgebraMatrix build_omega(const Hypergraph& h) { return omega_in(h, walk_context(h)); }

AlgebraMatrix build_trail_omega(const Hypergraph& h) { return omega_in(h, trail_context(h)); }

std::vector<WalkRecord> k_paths(const Hypergraph& h, Vertex i, Vertex j, unsigned k,
                                const Limits& limits, Contraction mode) {
    check_vertex(h, i);
    check_vertex(h, j);
    if (i == j) {
        throw ContractViolation("k_paths needs distinct endpoints; use k_cycles for i == j");
    }
    if (k < 1) {
        throw ContractViolation("k_paths needs k >= 1");
    }
    const AlgebraMatrix omega = build_omega(h);
    const Element start = Element::generator(omega.context(), i);
    auto records = decode(contract(omega, start, i, j, k, limits, mode), h.vertex_count());
    for (const auto& r : records) {
        if (r.vertices.size() != k + 1) {
            throw InvariantViolation("path record with " + std::to_string(r.vertices.size()) +
                                     " vertices for k = " + std::to_string(k));
        }
    }
    return records;
}

std::vector<WalkRecord> k_cycles(const Hypergraph& h, Vertex i, unsigned k, const Limits& limits,
                                 Contraction mode) {
    check_vertex(h, i);
    if (k < 2) {
        throw ContractViolation("k_cycles needs k >= 2");
    }
    const AlgebraMatrix omega = build_omega(h);
    const Element start = Element::one(omega.context());
    auto records = decode(contract(omega, start, i, i, k, limits, mode), h.vertex_count());
    for (const auto& r : records) {
        if (r.vertices.size() != k) {
            throw InvariantViolation("cycle record with " + std::to_string(r.vertices.size()) +
                                     " vertices for k = " + std::to_string(k));
        }
    }
    return records;
}

std::vector<WalkRecord> k_trails(const Hypergraph& h, Vertex i, Vertex j, unsigned k,
                                 const Limits& limits) {
    check_vertex(h, i);
    check_vertex(h, j);
    if (k < 1) {
        throw ContractViolation("k_trails needs k >= 1");
    }
    const AlgebraMatrix omega = build_trail_omega(h);
    const Element start = Element::generator(omega.context(), i);
    auto records = decode(contract(omega, start, i, j, k, limits, Contraction::Early),
                          h.vertex_count());
    for (const auto& r : records) {
        if (r.edges.size() != k) {
            throw InvariantViolation("trail record with " + std::to_string(r.edges.size()) +
                                     " hyperedges for k = " + std::to_string(k));
        }
    }
    return records;
}

}  // namespace zeon
