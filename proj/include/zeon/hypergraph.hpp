#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zeon {

/// 0-based vertex id. Text, JSON and reports use 1-based ids.
using Vertex = std::uint32_t;
/// 0-based hyperedge id (position in the edge list).
using EdgeId = std::uint32_t;
using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<EdgeId>;

/// Finite hypergraph: n vertices and an ordered list of nonempty hyperedges.
/// Each hyperedge is stored as a sorted list of distinct vertices. Duplicate
/// hyperedges are allowed and keep distinct ids.
class Hypergraph {
public:
    Hypergraph() = default;
    /// Throws ContractViolation on an empty edge, an out-of-range vertex or a
    /// vertex repeated inside one edge.
    Hypergraph(std::size_t n, std::vector<VertexSet> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const VertexSet& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<VertexSet>& edges() const { return edges_; }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<VertexSet> edges_;
};

/// A hypergraph whose edges all have two vertices (loops are singletons).
using Graph = Hypergraph;

/// n x m 0/1 matrix, row-major.
struct IncidenceMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> entries;

    std::uint8_t at(std::size_t r, std::size_t c) const { return entries.at(r * cols + c); }
    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

// -- parsing / emitting -----------------------------------------------------

/// Text format: "n m" then m lines of 1-based vertex ids. Blank lines and
/// lines starting with '#' are skipped. Throws ParseError with a line number.
Hypergraph parse_text(std::string_view text);
/// {"n": int, "edges": [[int, ...], ...]} with 1-based ids. Throws ParseError.
Hypergraph parse_json(std::string_view text);
/// JSON when the first non-blank character is '{', text otherwise.
Hypergraph parse_hypergraph(std::string_view text);

std::string emit_text(const Hypergraph& h);
nlohmann::json to_json(const Hypergraph& h);

// -- structure ----------------------------------------------------------------

IncidenceMatrix incidence_matrix(const Hypergraph& h);
/// Number of hyperedges containing v. Throws ContractViolation if v is out of range.
std::size_t degree(const Hypergraph& h, Vertex v);
/// Some hyperedge contains both u and v.
bool adjacent(const Hypergraph& h, Vertex u, Vertex v);
bool is_r_uniform(const Hypergraph& h, std::size_t r);
/// `partition[v]` is the class of v, in [0, r). Every edge meets every class
/// at most once.
bool is_r_partite(const Hypergraph& h, std::size_t r, const std::vector<std::size_t>& partition);
VertexSet isolated_vertices(const Hypergraph& h);
bool has_duplicate_edges(const Hypergraph& h);
bool is_graph(const Hypergraph& h);

/// Graph on the hyperedges: e ~ f iff |e ∩ f| >= j + 1.
Graph intersection_graph(const Hypergraph& h, std::size_t j);
/// Graph on the vertices: u ~ v iff u != v and no hyperedge holds both.
Graph non_adjacency_graph(const Hypergraph& h);
/// Simple-graph complement (loops dropped).
Graph complement_graph(const Graph& g);
/// Every pairwise union of hyperedges is itself a hyperedge.
bool is_union_closed(const Hypergraph& h);

/// Removes the given vertices and relabels the rest in increasing order.
/// `kept[i]` receives the original id of new vertex i.
Hypergraph remove_vertices(const Hypergraph& h, const VertexSet& drop, VertexSet* kept = nullptr);

}  // namespace zeon
