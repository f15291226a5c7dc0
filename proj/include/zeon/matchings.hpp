#pragma once

#include <map>
#include <string>
#include <vector>

#include "zeon/algebra.hpp"
#include "zeon/hypergraph.hpp"
#include "zeon/report.hpp"

namespace zeon {

/// Z_n context with generators z1..zn, one per vertex.
Context zeon_context(std::size_t n);

/// Gamma_H = sum over hyperedges J of z_J.
Element incidence_representation(const Hypergraph& h);
Element incidence_representation(const Hypergraph& h, const Context& ctx);

/// (vertex set, number of k-matchings on it), read off Gamma^k / k!.
/// Throws ContractViolation when h has duplicate hyperedges.
std::vector<Record> k_matchings(const Hypergraph& h, unsigned k, const Limits& limits = {});

/// Largest matching size, as nilpotency_index(Gamma) - 1.
unsigned matching_number(const Hypergraph& h, const Limits& limits = {});

struct PerfectMatchings {
    Rational count;
    /// False when h is not r-uniform on a multiple of r vertices; count is 0.
    bool formula_applies = false;
    std::string warning;
};

/// Coefficient of the full blade in Gamma^(n/r), divided by (n/r)!.
PerfectMatchings perfect_matchings(const Hypergraph& h, const Limits& limits = {});
inline Rational perfect_matching_count(const Hypergraph& h, const Limits& limits = {}) {
    return perfect_matchings(h, limits).count;
}
/// For every k with a spanning k-matching: the number of such matchings.
/// Works without uniformity.
std::map<unsigned, Rational> spanning_matching_counts(const Hypergraph& h,
                                                      const Limits& limits = {});

/// Sets of k hyperedges whose pairwise intersections have at most j vertices,
/// as independent k-sets of intersection_graph(h, j).
std::vector<EdgeSet> j_intersecting_matchings(const Hypergraph& h, std::size_t j, unsigned k,
                                              const Limits& limits = {});

}  // namespace zeon
