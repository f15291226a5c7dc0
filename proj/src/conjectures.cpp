#include "zeon/conjectures.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "zeon/errors.hpp"
#include "zeon/matchings.hpp"
#include "zeon/report.hpp"
#include "zeon/transversals.hpp"

namespace zeon {

namespace {

// Modulo draw on a fixed engine; keeps instances identical across standard
// libraries, unlike std::uniform_int_distribution.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

}  // namespace

Element gamma_element(const Hypergraph& h, std::size_t max_vertices) {
    const std::size_t n = h.vertex_count();
    if (n > max_vertices || n >= 63) {
        throw BudgetExceeded("gamma scan over 2^" + std::to_string(n) + " blades exceeds budget 2^" +
                             std::to_string(max_vertices));
    }
    const Element gamma_h = incidence_representation(h);
    std::vector<Element::Term> terms;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::vector<GenId> ids;
        for (GenId g = 0; g < n; ++g) {
            if ((bits >> g) & 1U) {
                ids.push_back(g);
            }
        }
        const Monomial blade = Monomial::blade(std::span<const GenId>(ids));
        if (annihilates(blade, gamma_h)) {
            terms.emplace_back(blade, Rational(1));
        }
    }
    return Element::from_terms(gamma_h.context(), std::move(terms));
}

std::size_t gamma_min_grade(const Element& gamma) {
    if (!scalar_part(gamma).is_zero()) {
        return 0;
    }
    return min_grade(gamma);
}

RyserReport check_ryser(const Hypergraph& h, std::size_t r,
                        const std::vector<std::size_t>& partition, const RyserOptions& options) {
    if (r < 1 || !is_r_uniform(h, r) || !is_r_partite(h, r, partition)) {
        throw ContractViolation("Ryser check needs an r-uniform r-partite hypergraph");
    }
    RyserReport rep;
    rep.r = r;
    const Element gamma_h = incidence_representation(h);
    const auto kappa = nilpotency_index(gamma_h, static_cast<unsigned>(h.vertex_count() + 1),
                                        options.limits);
    if (!kappa) {
        throw InvariantViolation("Gamma not nilpotent within n + 1");
    }
    rep.matching_number = *kappa - 1;
    TransversalOptions topt;
    topt.dominance_prune = true;
    topt.limits = options.limits;
    rep.transversal_number = transversal_number(h, topt);
    rep.bound_ok = rep.transversal_number <= (r - 1) * rep.matching_number;
    if (h.vertex_count() <= options.gamma_max_vertices) {
        rep.gamma_min_grade = gamma_min_grade(gamma_element(h, options.gamma_max_vertices));
    }
    return rep;
}

FranklReport check_frankl(const Hypergraph& h) {
    if (h.edge_count() == 0 || !is_union_closed(h)) {
        throw ContractViolation("Frankl check needs a nonempty union-closed family");
    }
    FranklReport rep;
    rep.condition_f = true;
    rep.m = h.edge_count();
    const Element gamma_h = incidence_representation(h);
    const Rational total = scalar_sum(gamma_h);
    bool first = true;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        const Rational s = scalar_sum(mul(Element::generator(gamma_h.context(), v), gamma_h));
        const auto deg = degree(h, v);
        if (s != Rational(static_cast<std::int64_t>(rep.m - deg))) {
            throw InvariantViolation("scalar sum of z_i Gamma disagrees with m - deg(v_i)");
        }
        if (first || s < rep.best_scalar_sum) {
            rep.best_vertex = v;
            rep.best_scalar_sum = s;
            rep.best_count = deg;
            first = false;
        }
    }
    // <<z_i Gamma>> <= <<Gamma>> / 2
    rep.holds = !first && rep.best_scalar_sum * Rational(2) <= total;
    return rep;
}

std::vector<std::size_t> ryser_partition(std::size_t r, std::size_t part_size) {
    std::vector<std::size_t> p(r * part_size);
    for (std::size_t v = 0; v < p.size(); ++v) {
        p[v] = v / part_size;
    }
    return p;
}

Hypergraph generate_ryser_instance(std::size_t r, std::size_t part_size, std::size_t edge_count,
                                   std::uint64_t seed) {
    if (r < 1 || part_size < 1 || edge_count < 1) {
        throw ContractViolation("Ryser instance parameters must be positive");
    }
    double possible = 1;
    for (std::size_t c = 0; c < r; ++c) {
        possible *= static_cast<double>(part_size);
    }
    if (static_cast<double>(edge_count) > possible) {
        throw BudgetExceeded("more edges requested than distinct transversal edges exist");
    }
    std::mt19937_64 rng(seed);
    std::set<VertexSet> seen;
    std::vector<VertexSet> edges;
    while (edges.size() < edge_count) {
        VertexSet e;
        for (std::size_t c = 0; c < r; ++c) {
            e.push_back(static_cast<Vertex>(c * part_size + draw(rng, part_size)));
        }
        if (seen.insert(e).second) {
            edges.push_back(std::move(e));
        }
    }
    return Hypergraph(r * part_size, std::move(edges));
}

Hypergraph generate_union_closed(std::size_t ground_size, std::size_t seed_count,
                                 std::uint64_t seed, std::size_t max_edges) {
    if (ground_size < 1 || seed_count < 1 || ground_size >= 63) {
        throw ContractViolation("union-closed generator needs 1 <= ground_size < 63 and seeds");
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t universe = (std::uint64_t{1} << ground_size) - 1;
    std::set<std::uint64_t> family;
    for (std::size_t s = 0; s < seed_count; ++s) {
        std::uint64_t bits = 0;
        while (bits == 0) {
            bits = rng() & universe;
        }
        family.insert(bits);
    }
    // close to a fixed point
    std::vector<std::uint64_t> members(family.begin(), family.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const std::uint64_t u = members[i] | members[j];
            if (family.insert(u).second) {
                members.push_back(u);
                if (members.size() > max_edges) {
                    throw BudgetExceeded("union closure exceeds " + std::to_string(max_edges) +
                                         " members");
                }
            }
        }
    }
    std::vector<VertexSet> edges;
    for (std::uint64_t bits : family) {
        VertexSet e;
        for (Vertex v = 0; v < ground_size; ++v) {
            if ((bits >> v) & 1U) {
                e.push_back(v);
            }
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(ground_size, std::move(edges));
}

nlohmann::json to_json(const RyserReport& r) {
    nlohmann::json j = {{"r", r.r},
                        {"matching_number", r.matching_number},
                        {"transversal_number", r.transversal_number},
                        {"bound_ok", r.bound_ok}};
    j["gamma_min_grade"] = r.gamma_min_grade ? nlohmann::json(*r.gamma_min_grade) : nlohmann::json();
    return j;
}

nlohmann::json to_json(const FranklReport& r) {
    return {{"condition_f", r.condition_f},
            {"m", r.m},
            {"best_vertex", r.best_vertex + 1},
            {"best_count", r.best_count},
            {"best_scalar_sum", zeon::to_json(r.best_scalar_sum)},
            {"holds", r.holds}};
}

HarnessSummary run_ryser_trials(std::size_t trials, std::uint64_t seed, std::size_t max_n,
                                std::ostream* log) {
    if (max_n < 2) {
        throw ContractViolation("Ryser trials need max_n >= 2");
    }
    HarnessSummary summary;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = seed + t;
        std::mt19937_64 rng(trial_seed);
        const std::size_t r = max_n >= 3 ? 2 + draw(rng, 2) : 2;
        const std::size_t max_part = std::max<std::size_t>(1, max_n / r);
        const std::size_t part_size = 1 + draw(rng, max_part);
        std::size_t possible = 1;
        for (std::size_t c = 0; c < r; ++c) {
            possible *= part_size;
        }
        const std::size_t edge_count = 1 + draw(rng, std::min<std::size_t>(possible, 3 * part_size));
        const Hypergraph h = generate_ryser_instance(r, part_size, edge_count, rng());
        RyserOptions opt;
        opt.gamma_max_vertices = 0;
        const RyserReport rep = check_ryser(h, r, ryser_partition(r, part_size), opt);
        ++summary.trials;
        if (!rep.bound_ok) {
            ++summary.violations;
            if (log != nullptr) {
                *log << nlohmann::json{{"conjecture", "ryser"},
                                       {"seed", trial_seed},
                                       {"r", r},
                                       {"instance", to_json(h)},
                                       {"report", to_json(rep)}}
                            .dump()
                     << '\n';
                log->flush();
            }
        }
    }
    return summary;
}

HarnessSummary run_frankl_trials(std::size_t trials, std::uint64_t seed, std::size_t max_n,
                                 std::ostream* log) {
    if (max_n < 1) {
        throw ContractViolation("Frankl trials need max_n >= 1");
    }
    HarnessSummary summary;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = seed + t;
        std::mt19937_64 rng(trial_seed);
        const std::size_t ground = 1 + draw(rng, max_n);
        const std::size_t seeds = 1 + draw(rng, ground + 2);
        const Hypergraph h = generate_union_closed(ground, seeds, rng());
        const FranklReport rep = check_frankl(h);
        ++summary.trials;
        if (!rep.holds) {
            ++summary.violations;
            if (log != nullptr) {
                *log << nlohmann::json{{"conjecture", "frankl"},
                                       {"seed", trial_seed},
                                       {"instance", to_json(h)},
                                       {"report", to_json(rep)}}
                            .dump()
                     << '\n';
                log->flush();
            }
        }
    }
    return summary;
}

}  // namespace zeon
