#pragma once

// Independent-set enumeration through powers of a labelled vertex sum
//   Phi = sum_v psi(v) x_v,
// where x_v is an idempotent vertex label and psi(v) is the product of the
// nilpotent labels of the edges at v. A term of Phi^k survives only if no
// edge label reaches its nilpotency index, so the idempotent part of each
// surviving term names an independent vertex set.

#include <cstddef>
#include <vector>

#include "zeon/algebra.hpp"
#include "zeon/hypergraph.hpp"
#include "zeon/report.hpp"

namespace zeon {

struct IndependentSetRepresentation {
    Element element;
    /// Generator id of the label of vertex 0; vertex v is first_vertex_label + v.
    GenId first_vertex_label = 0;
    /// edge_of_label[g] is the edge (vertex set) labelled by generator g.
    std::vector<VertexSet> edge_of_label;
};

/// Eq.-(1)-style representation built on `g` itself: loops are added at the
/// isolated vertices of g, every edge gets an index-2 label.
IndependentSetRepresentation clique_representation(const Graph& g);
/// Hyperedge e gets a label of nilpotency index |e|; vertices lying in a
/// singleton hyperedge have no term. Requires no isolated vertices.
IndependentSetRepresentation weak_independent_set_representation(const Hypergraph& h);
/// Every hyperedge gets a label of index k + 1. Requires no isolated vertices.
IndependentSetRepresentation k_independent_set_representation(const Hypergraph& h, unsigned k);

/// Independent sets of size k in an ordinary graph (every edge has two
/// vertices), each with count 1.
std::vector<Record> graph_independent_sets(const Graph& g, unsigned k, const Limits& limits = {});
/// Cliques of size k: independent sets of the complement.
std::vector<Record> graph_cliques(const Graph& g, unsigned k, const Limits& limits = {});

/// Sets read off Phi^k: those of size exactly k are complete; smaller ones
/// are whatever the expansion happened to surface.
struct IndependentSets {
    std::vector<VertexSet> exact;
    std::vector<VertexSet> smaller;
};

std::vector<VertexSet> vertex_sets(const std::vector<Record>& records);

IndependentSets weak_independent_sets(const Hypergraph& h, unsigned k, const Limits& limits = {});
/// Sets I with |I ∩ e| <= k for every hyperedge e, read off Phi^size.
IndependentSets k_independent_sets(const Hypergraph& h, unsigned size, unsigned k,
                                   const Limits& limits = {});
inline IndependentSets strong_independent_sets(const Hypergraph& h, unsigned size,
                                               const Limits& limits = {}) {
    return k_independent_sets(h, size, 1, limits);
}
/// Size-k sets of pairwise adjacent vertices of h.
std::vector<VertexSet> pairwise_adjacent_sets(const Hypergraph& h, unsigned k,
                                              const Limits& limits = {});

}  // namespace zeon
