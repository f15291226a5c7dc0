#pragma once

// Minimum-cardinality transversals from powers of
//   sigma = sum_v psi(v) x_v  in  I_m (x) I_n,
// where psi(v) is the product of the idempotent labels e_l of the hyperedges
// at v. The edge part of a term of sigma^k is the set of hyperedges its vertex
// part covers; the first power with a term carrying every e_l gives tau.
//
// Note: this finds transversals of minimum size. Inclusion-minimal
// transversals that are larger than tau are not enumerated.

#include <cstddef>
#include <vector>

#include "zeon/algebra.hpp"
#include "zeon/hypergraph.hpp"

namespace zeon {

struct TransversalRepresentation {
    /// Over ids [0, m) for hyperedge labels e1..em, then [m, m+n) for x1..xn.
    Element sigma;
    VertexSet removed_isolated;
};

/// I_m (x) I_n context used by sigma.
Context transversal_context(const Hypergraph& h);

TransversalRepresentation transversal_representation(const Hypergraph& h);

struct TransversalOptions {
    /// Drop a term when another term covers at least the same hyperedges with
    /// a subset of its vertices. Does not change the result.
    bool dominance_prune = false;
    Limits limits;
};

struct MinimumTransversals {
    std::size_t tau = 0;
    std::vector<VertexSet> transversals;
    VertexSet removed_isolated;
};

/// For m = 0 returns tau = 0 and the single empty transversal.
MinimumTransversals minimum_transversals(const Hypergraph& h, const TransversalOptions& options = {});
std::size_t transversal_number(const Hypergraph& h, const TransversalOptions& options = {});

/// The pruning step on its own, exposed for tests. `edge_count` is m.
Element dominance_prune(const Element& u, std::size_t edge_count);

}  // namespace zeon
