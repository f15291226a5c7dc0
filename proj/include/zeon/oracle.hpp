#pragma once

// Brute-force reference enumerators. They work straight from the
// definitions (sequence search and subset scans) and use nothing from the
// algebra layer; only the Hypergraph type is shared.
//
// Walk conventions match walks.hpp: a step may reuse the previous hyperedge,
// a 2-cycle may go out and back over one hyperedge, and a trail step may stay
// on its vertex inside a hyperedge that holds it.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zeon/hypergraph.hpp"

namespace zeon::oracle {

/// Subset scans refuse hypergraphs above these sizes (BudgetExceeded).
inline constexpr std::size_t kMaxVertices = 10;
inline constexpr std::size_t kMaxEdges = 10;

struct Group {
    VertexSet vertices;
    EdgeSet edges;
    std::uint64_t count = 0;

    friend bool operator==(const Group&, const Group&) = default;
};

/// Groups sorted by (vertices, edges).
std::vector<Group> brute_paths(const Hypergraph& h, Vertex i, Vertex j, unsigned k);
std::vector<Group> brute_cycles(const Hypergraph& h, Vertex i, unsigned k);
std::vector<Group> brute_trails(const Hypergraph& h, Vertex i, Vertex j, unsigned k);

enum class IndependenceMode { Graph, Weak, Strong, KIndependent, PairwiseAdjacent };

/// All vertex sets of exactly `size` vertices satisfying the mode's predicate
/// (`k` only matters for KIndependent). Sorted.
std::vector<VertexSet> brute_independent(const Hypergraph& h, IndependenceMode mode,
                                         std::size_t size, std::size_t k = 1);
std::vector<VertexSet> brute_cliques(const Hypergraph& g, std::size_t size);

/// k-subsets of pairwise disjoint hyperedges.
std::vector<EdgeSet> brute_matchings(const Hypergraph& h, std::size_t k);
/// k-matchings grouped by the union of their vertices.
std::vector<Group> brute_matchings_by_vertex_set(const Hypergraph& h, std::size_t k);
std::size_t brute_max_matching(const Hypergraph& h);
/// Matchings that cover every vertex.
std::uint64_t brute_perfect_matchings(const Hypergraph& h);
std::vector<EdgeSet> brute_j_intersecting(const Hypergraph& h, std::size_t j, std::size_t k);

struct Transversals {
    std::size_t tau = 0;
    std::vector<VertexSet> sets;
};
bool is_transversal(const Hypergraph& h, const VertexSet& t);
Transversals brute_transversals(const Hypergraph& h);

}  // namespace zeon::oracle
