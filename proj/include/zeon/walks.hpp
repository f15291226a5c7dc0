#pragma once

// Nilpotent hypergraph adjacency matrix and walk enumeration.
//
// Vertices are labelled with index-2 generators z1..zn and hyperedges with
// idempotent generators e1..em in one context (ids 0..n-1, then n..n+m-1).
// Entry (i, j) of Omega = X Z is z_j times the sum of e_l over the hyperedges
// holding both v_i and v_j. Walk steps pick up the label of the vertex they
// enter and of the hyperedge they use, so vertex repeats cancel while
// hyperedge repeats merge.
//
// Conventions (shared with the brute-force oracle):
//  * a step may reuse the hyperedge of the previous step;
//  * a 2-cycle goes out and back, over the same hyperedge or two different ones;
//  * the diagonal of Omega is kept; its "stay" steps cancel in paths and
//    cycles but survive in trails, where vertex labels are idempotent.

#include <cstddef>
#include <vector>

#include "zeon/algebra.hpp"
#include "zeon/hypergraph.hpp"
#include "zeon/matrix.hpp"
#include "zeon/report.hpp"

namespace zeon {

using WalkRecord = Record;

/// Z_n (x) I_m context used by Omega.
Context walk_context(const Hypergraph& h);
/// I_n (x) Z_m context used for trails: vertices idempotent (x1..xn),
/// hyperedges index-2 (y1..ym).
Context trail_context(const Hypergraph& h);

/// n x m, X(i, l) = e_l when v_i is in e_l.
AlgebraMatrix build_x(const Hypergraph& h, const Context& ctx);
/// m x n, Z(l, j) = z_j when v_j is in e_l.
AlgebraMatrix build_z(const Hypergraph& h, const Context& ctx);
/// (n+m) x (n+m) bipartite matrix [[0, X], [Z, 0]].
AlgebraMatrix build_bipartite(const Hypergraph& h, const Context& ctx);
/// Omega over walk_context(h).
AlgebraMatrix build_omega(const Hypergraph& h);
/// Omega with the label roles exchanged, over trail_context(h).
AlgebraMatrix build_trail_omega(const Hypergraph& h);

enum class Contraction {
    /// Row vector times Omega, k times.
    Early,
    /// Full matrix power, then contract.
    FullPower,
};

/// k-paths from i to j (i != j, k >= 1): one record per (vertex set, edge set),
/// count = number of paths with exactly those sets.
std::vector<WalkRecord> k_paths(const Hypergraph& h, Vertex i, Vertex j, unsigned k,
                                const Limits& limits = {},
                                Contraction mode = Contraction::Early);
/// k-cycles based at i (k >= 2).
std::vector<WalkRecord> k_cycles(const Hypergraph& h, Vertex i, unsigned k,
                                 const Limits& limits = {},
                                 Contraction mode = Contraction::Early);
/// k-trails from i to j (k >= 1, i == j allowed). Vertex sets include i.
std::vector<WalkRecord> k_trails(const Hypergraph& h, Vertex i, Vertex j, unsigned k,
                                 const Limits& limits = {});

}  // namespace zeon
