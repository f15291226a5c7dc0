#include "zeon/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "zeon/errors.hpp"

namespace zeon {

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges)
    : n_(n), edges_(std::move(edges)) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto& edge = edges_[e];
        if (edge.empty()) {
            throw ContractViolation("hyperedge " + std::to_string(e + 1) + " is empty");
        }
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
            throw ContractViolation("hyperedge " + std::to_string(e + 1) +
                                    " repeats a vertex");
        }
        if (edge.back() >= n_) {
            throw ContractViolation("hyperedge " + std::to_string(e + 1) + " uses vertex " +
                                    std::to_string(edge.back() + 1) + " outside 1.." +
                                    std::to_string(n_));
        }
    }
}

namespace {

void check_vertex(const Hypergraph& h, Vertex v) {
    if (v >= h.vertex_count()) {
        throw ContractViolation("vertex " + std::to_string(v + 1) + " out of range");
    }
}

bool edge_contains(const VertexSet& e, Vertex v) { return std::binary_search(e.begin(), e.end(), v); }

std::size_t intersection_size(const VertexSet& a, const VertexSet& b) {
    std::size_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

}  // namespace

IncidenceMatrix incidence_matrix(const Hypergraph& h) {
    IncidenceMatrix c{h.vertex_count(), h.edge_count(),
                      std::vector<std::uint8_t>(h.vertex_count() * h.edge_count(), 0)};
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        for (Vertex v : h.edge(static_cast<EdgeId>(e))) {
            c.entries[v * c.cols + e] = 1;
        }
    }
    return c;
}

std::size_t degree(const Hypergraph& h, Vertex v) {
    check_vertex(h, v);
    return static_cast<std::size_t>(std::count_if(
        h.edges().begin(), h.edges().end(), [v](const VertexSet& e) { return edge_contains(e, v); }));
}

bool adjacent(const Hypergraph& h, Vertex u, Vertex v) {
    check_vertex(h, u);
    check_vertex(h, v);
    return std::any_of(h.edges().begin(), h.edges().end(), [u, v](const VertexSet& e) {
        return edge_contains(e, u) && edge_contains(e, v);
    });
}

bool is_r_uniform(const Hypergraph& h, std::size_t r) {
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [r](const VertexSet& e) { return e.size() == r; });
}

bool is_r_partite(const Hypergraph& h, std::size_t r, const std::vector<std::size_t>& partition) {
    if (partition.size() != h.vertex_count()) {
        throw ContractViolation("partition must assign a class to every vertex");
    }
    if (std::any_of(partition.begin(), partition.end(), [r](std::size_t c) { return c >= r; })) {
        return false;
    }
    for (const auto& e : h.edges()) {
        std::vector<bool> seen(r, false);
        for (Vertex v : e) {
            if (seen[partition[v]]) {
                return false;
            }
            seen[partition[v]] = true;
        }
    }
    return true;
}

VertexSet isolated_vertices(const Hypergraph& h) {
    std::vector<bool> used(h.vertex_count(), false);
    for (const auto& e : h.edges()) {
        for (Vertex v : e) {
            used[v] = true;
        }
    }
    VertexSet out;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (!used[v]) {
            out.push_back(v);
        }
    }
    return out;
}

bool has_duplicate_edges(const Hypergraph& h) {
    std::set<VertexSet> seen;
    for (const auto& e : h.edges()) {
        if (!seen.insert(e).second) {
            return true;
        }
    }
    return false;
}

bool is_graph(const Hypergraph& h) { return is_r_uniform(h, 2); }

Graph intersection_graph(const Hypergraph& h, std::size_t j) {
    std::vector<VertexSet> edges;
    for (std::size_t a = 0; a < h.edge_count(); ++a) {
        for (std::size_t b = a + 1; b < h.edge_count(); ++b) {
            if (intersection_size(h.edges()[a], h.edges()[b]) >= j + 1) {
                edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
            }
        }
    }
    return Graph(h.edge_count(), std::move(edges));
}

Graph non_adjacency_graph(const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : h.edges()) {
        for (Vertex u : e) {
            for (Vertex v : e) {
                adj[u][v] = true;
            }
        }
    }
    std::vector<VertexSet> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!adj[u][v]) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph complement_graph(const Graph& g) {
    if (!std::all_of(g.edges().begin(), g.edges().end(),
                     [](const VertexSet& e) { return e.size() <= 2; })) {
        throw ContractViolation("complement_graph needs an ordinary graph");
    }
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) {
        if (e.size() == 2) {
            adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
        }
    }
    std::vector<VertexSet> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!adj[u][v]) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(n, std::move(edges));
}

bool is_union_closed(const Hypergraph& h) {
    std::set<VertexSet> present(h.edges().begin(), h.edges().end());
    for (std::size_t a = 0; a < h.edge_count(); ++a) {
        for (std::size_t b = a + 1; b < h.edge_count(); ++b) {
            VertexSet u;
            std::set_union(h.edges()[a].begin(), h.edges()[a].end(), h.edges()[b].begin(),
                           h.edges()[b].end(), std::back_inserter(u));
            if (!present.contains(u)) {
                return false;
            }
        }
    }
    return true;
}

Hypergraph remove_vertices(const Hypergraph& h, const VertexSet& drop, VertexSet* kept) {
    std::vector<bool> gone(h.vertex_count(), false);
    for (Vertex v : drop) {
        check_vertex(h, v);
        gone[v] = true;
    }
    std::vector<Vertex> relabel(h.vertex_count(), 0);
    VertexSet original;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (!gone[v]) {
            relabel[v] = static_cast<Vertex>(original.size());
            original.push_back(v);
        }
    }
    std::vector<VertexSet> edges;
    for (const auto& e : h.edges()) {
        VertexSet ne;
        for (Vertex v : e) {
            if (!gone[v]) {
                ne.push_back(relabel[v]);
            }
        }
        if (ne.empty()) {
            throw ContractViolation("removing vertices would empty a hyperedge");
        }
        edges.push_back(std::move(ne));
    }
    if (kept != nullptr) {
        *kept = std::move(original);
    }
    return Hypergraph(h.vertex_count() - static_cast<std::size_t>(std::count(gone.begin(), gone.end(), true)),
                      std::move(edges));
}

}  // namespace zeon
