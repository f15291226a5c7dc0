#include "zeon/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zeon/errors.hpp"

namespace zeon::oracle {

namespace {

void budget(const Hypergraph& h) {
    if (h.vertex_count() > kMaxVertices || h.edge_count() > kMaxEdges) {
        throw BudgetExceeded("oracle limited to " + std::to_string(kMaxVertices) +
                             " vertices and " + std::to_string(kMaxEdges) + " hyperedges");
    }
}

bool holds(const VertexSet& e, Vertex v) { return std::find(e.begin(), e.end(), v) != e.end(); }

std::size_t overlap(const VertexSet& a, const VertexSet& b) {
    std::size_t n = 0;
    for (Vertex v : a) {
        n += holds(b, v) ? 1 : 0;
    }
    return n;
}

using GroupKey = std::pair<VertexSet, EdgeSet>;

std::vector<Group> flatten(const std::map<GroupKey, std::uint64_t>& groups) {
    std::vector<Group> out;
    for (const auto& [key, count] : groups) {
        out.push_back({key.first, key.second, count});
    }
    return out;
}

GroupKey key_of(std::vector<Vertex> vs, std::vector<EdgeId> es) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return {vs, es};
}

// Walk search. `accept_step(next, seq)` decides whether a step onto `next`
// is allowed given the vertices visited so far.
struct WalkSearch {
    const Hypergraph& h;
    unsigned k;
    Vertex target;
    bool distinct_edges;
    bool (*vertex_ok)(const std::vector<Vertex>& seq, Vertex next, unsigned step, unsigned k,
                      Vertex target);
    std::vector<Vertex> seq;
    std::vector<EdgeId> used;
    std::map<GroupKey, std::uint64_t> groups;

    void run(Vertex from) {
        seq = {from};
        used.clear();
        extend();
    }

    void extend() {
        const auto step = static_cast<unsigned>(used.size());
        if (step == k) {
            if (seq.back() == target) {
                ++groups[key_of(seq, used)];
            }
            return;
        }
        const Vertex here = seq.back();
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            const auto& edge = h.edges()[e];
            if (!holds(edge, here)) {
                continue;
            }
            if (distinct_edges && std::find(used.begin(), used.end(), e) != used.end()) {
                continue;
            }
            for (Vertex next : edge) {
                if (!vertex_ok(seq, next, step + 1, k, target)) {
                    continue;
                }
                seq.push_back(next);
                used.push_back(e);
                extend();
                seq.pop_back();
                used.pop_back();
            }
        }
    }
};

bool path_vertex_ok(const std::vector<Vertex>& seq, Vertex next, unsigned, unsigned, Vertex) {
    return std::find(seq.begin(), seq.end(), next) == seq.end();
}

bool cycle_vertex_ok(const std::vector<Vertex>& seq, Vertex next, unsigned step, unsigned k,
                     Vertex) {
    // v_1..v_k distinct; v_k is the base, which appears nowhere in between
    if (step == k) {
        return next == seq.front() &&
               std::find(seq.begin() + 1, seq.end(), next) == seq.end();
    }
    return std::find(seq.begin(), seq.end(), next) == seq.end();
}

bool trail_vertex_ok(const std::vector<Vertex>&, Vertex, unsigned, unsigned, Vertex) {
    return true;
}

template <typename Visit>
void for_each_subset(std::size_t universe, std::size_t size, Visit&& visit) {
    if (size > universe) {
        return;
    }
    std::vector<std::uint32_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) {
        pick[i] = static_cast<std::uint32_t>(i);
    }
    while (true) {
        visit(pick);
        // next combination in lexicographic order
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == universe - size + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

bool pairwise_disjoint(const Hypergraph& h, const std::vector<std::uint32_t>& es, std::size_t j) {
    for (std::size_t a = 0; a < es.size(); ++a) {
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            if (overlap(h.edges()[es[a]], h.edges()[es[b]]) > j) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<Group> brute_paths(const Hypergraph& h, Vertex i, Vertex j, unsigned k) {
    budget(h);
    if (k == 0 || i == j) {
        return {};
    }
    WalkSearch s{h, k, j, false, path_vertex_ok, {}, {}, {}};
    s.run(i);
    return flatten(s.groups);
}

std::vector<Group> brute_cycles(const Hypergraph& h, Vertex i, unsigned k) {
    budget(h);
    if (k < 2) {
        return {};
    }
    WalkSearch s{h, k, i, false, cycle_vertex_ok, {}, {}, {}};
    s.seq = {i};
    s.extend();
    // vertex set of a cycle is {v_1..v_k}; v_0 = v_k is already among them
    return flatten(s.groups);
}

std::vector<Group> brute_trails(const Hypergraph& h, Vertex i, Vertex j, unsigned k) {
    budget(h);
    if (k == 0) {
        return {};
    }
    WalkSearch s{h, k, j, true, trail_vertex_ok, {}, {}, {}};
    s.run(i);
    return flatten(s.groups);
}

std::vector<VertexSet> brute_independent(const Hypergraph& h, IndependenceMode mode,
                                         std::size_t size, std::size_t k) {
    budget(h);
    std::vector<VertexSet> out;
    for_each_subset(h.vertex_count(), size, [&](const std::vector<std::uint32_t>& pick) {
        const VertexSet set(pick.begin(), pick.end());
        bool ok = true;
        switch (mode) {
        case IndependenceMode::Graph:
        case IndependenceMode::Weak:
            // contains no edge
            for (const auto& e : h.edges()) {
                ok = ok && overlap(e, set) < e.size();
            }
            break;
        case IndependenceMode::Strong:
            for (const auto& e : h.edges()) {
                ok = ok && overlap(e, set) <= 1;
            }
            break;
        case IndependenceMode::KIndependent:
            for (const auto& e : h.edges()) {
                ok = ok && overlap(e, set) <= k;
            }
            break;
        case IndependenceMode::PairwiseAdjacent:
            for (std::size_t a = 0; a < set.size() && ok; ++a) {
                for (std::size_t b = a + 1; b < set.size() && ok; ++b) {
                    ok = std::any_of(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) {
                        return holds(e, set[a]) && holds(e, set[b]);
                    });
                }
            }
            break;
        }
        if (ok) {
            out.push_back(set);
        }
    });
    return out;
}

std::vector<VertexSet> brute_cliques(const Hypergraph& g, std::size_t size) {
    return brute_independent(g, IndependenceMode::PairwiseAdjacent, size);
}

std::vector<EdgeSet> brute_j_intersecting(const Hypergraph& h, std::size_t j, std::size_t k) {
    budget(h);
    std::vector<EdgeSet> out;
    for_each_subset(h.edge_count(), k, [&](const std::vector<std::uint32_t>& pick) {
        if (pairwise_disjoint(h, pick, j)) {
            out.emplace_back(pick.begin(), pick.end());
        }
    });
    return out;
}

std::vector<EdgeSet> brute_matchings(const Hypergraph& h, std::size_t k) {
    return brute_j_intersecting(h, 0, k);
}

std::vector<Group> brute_matchings_by_vertex_set(const Hypergraph& h, std::size_t k) {
    std::map<GroupKey, std::uint64_t> groups;
    for (const auto& es : brute_matchings(h, k)) {
        VertexSet vs;
        for (EdgeId e : es) {
            vs.insert(vs.end(), h.edges()[e].begin(), h.edges()[e].end());
        }
        ++groups[key_of(vs, {})];
    }
    return flatten(groups);
}

std::size_t brute_max_matching(const Hypergraph& h) {
    std::size_t best = 0;
    for (std::size_t k = 1; k <= h.edge_count(); ++k) {
        if (!brute_matchings(h, k).empty()) {
            best = k;
        }
    }
    return best;
}

std::uint64_t brute_perfect_matchings(const Hypergraph& h) {
    std::uint64_t count = 0;
    for (std::size_t k = 1; k <= h.edge_count(); ++k) {
        for (const auto& es : brute_matchings(h, k)) {
            std::size_t covered = 0;
            for (EdgeId e : es) {
                covered += h.edges()[e].size();
            }
            count += covered == h.vertex_count() ? 1 : 0;
        }
    }
    return count;
}

bool is_transversal(const Hypergraph& h, const VertexSet& t) {
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [&](const VertexSet& e) { return overlap(e, t) > 0; });
}

Transversals brute_transversals(const Hypergraph& h) {
    budget(h);
    for (std::size_t size = 0; size <= h.vertex_count(); ++size) {
        Transversals out{size, {}};
        for_each_subset(h.vertex_count(), size, [&](const std::vector<std::uint32_t>& pick) {
            const VertexSet t(pick.begin(), pick.end());
            if (is_transversal(h, t)) {
                out.sets.push_back(t);
            }
        });
        if (!out.sets.empty()) {
            return out;
        }
    }
    throw InvariantViolation("hypergraph without any transversal");
}

}  // namespace zeon::oracle
