#pragma once

// Empirical checkers for the zeon formulations of Ryser's conjecture
// (tau <= (r-1) * matching number for r-uniform r-partite hypergraphs) and
// Frankl's union-closed sets conjecture. These search for counterexamples;
// they prove nothing.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "zeon/algebra.hpp"
#include "zeon/hypergraph.hpp"

namespace zeon {

/// Sum of the square-free blades z_I with z_I * Gamma_H = 0, found by a
/// 2^n scan. Throws BudgetExceeded when n > max_vertices.
Element gamma_element(const Hypergraph& h, std::size_t max_vertices = 20);

/// Least grade among the blades of gamma; 0 when gamma holds the unit blade.
std::size_t gamma_min_grade(const Element& gamma);

struct RyserReport {
    std::size_t r = 0;
    unsigned matching_number = 0;
    std::size_t transversal_number = 0;
    bool bound_ok = false;
    std::optional<std::size_t> gamma_min_grade;
};

struct RyserOptions {
    /// gamma is computed (and checked against tau) only up to this many vertices.
    std::size_t gamma_max_vertices = 10;
    Limits limits;
};

/// Throws ContractViolation unless h is r-uniform and r-partite under `partition`.
RyserReport check_ryser(const Hypergraph& h, std::size_t r,
                        const std::vector<std::size_t>& partition,
                        const RyserOptions& options = {});

struct FranklReport {
    bool condition_f = false;
    std::size_t m = 0;
    Vertex best_vertex = 0;
    /// Hyperedges containing best_vertex.
    std::size_t best_count = 0;
    /// <<z_best Gamma>> computed in the algebra.
    Rational best_scalar_sum;
    bool holds = false;
};

/// Throws ContractViolation unless h is union-closed with at least one edge.
/// Throws InvariantViolation if the algebraic scalar sums disagree with
/// m - deg(v).
FranklReport check_frankl(const Hypergraph& h);

/// r * part_size vertices, class c = [c * part_size, (c+1) * part_size);
/// edge_count distinct edges each taking one vertex per class.
Hypergraph generate_ryser_instance(std::size_t r, std::size_t part_size, std::size_t edge_count,
                                   std::uint64_t seed);
std::vector<std::size_t> ryser_partition(std::size_t r, std::size_t part_size);

/// Closure under unions of seed_count random nonempty subsets of a ground set.
/// Throws BudgetExceeded if the closure has more than max_edges members.
Hypergraph generate_union_closed(std::size_t ground_size, std::size_t seed_count,
                                 std::uint64_t seed, std::size_t max_edges = 4096);

struct HarnessSummary {
    std::size_t trials = 0;
    std::size_t violations = 0;
};

/// Random r in {2, 3} instances with at most max_n vertices. Each trial uses
/// seed + trial as its own seed. Violations are appended to `log` as one JSON
/// object per line.
HarnessSummary run_ryser_trials(std::size_t trials, std::uint64_t seed, std::size_t max_n,
                                std::ostream* log);
/// Union-closed families over ground sets of at most max_n (<= 8 recommended).
HarnessSummary run_frankl_trials(std::size_t trials, std::uint64_t seed, std::size_t max_n,
                                 std::ostream* log);

nlohmann::json to_json(const RyserReport& r);
nlohmann::json to_json(const FranklReport& r);

}  // namespace zeon
