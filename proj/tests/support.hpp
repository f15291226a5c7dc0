#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "zeon/hypergraph.hpp"
#include "zeon/oracle.hpp"
#include "zeon/report.hpp"

namespace testing {

using zeon::Hypergraph;
using zeon::VertexSet;

// The 7-vertex, 6-edge running example, 0-based.
inline Hypergraph running_example() {
    return Hypergraph(7, {{0, 1, 2}, {0, 3, 6}, {0, 3, 4}, {2, 5}, {3, 5}, {4, 5}});
}

// 1-based vertex list to 0-based.
inline VertexSet vs(std::initializer_list<unsigned> ids) {
    VertexSet out;
    for (unsigned v : ids) {
        out.push_back(v - 1);
    }
    return out;
}

struct RandomShape {
    std::size_t max_n = 7;
    std::size_t max_m = 7;
    std::size_t max_edge = 4;
    bool distinct = true;
    bool allow_isolated = true;
};

inline Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomShape& shape) {
    std::uniform_int_distribution<std::size_t> pick_n(1, shape.max_n);
    const std::size_t n = pick_n(rng);
    std::uniform_int_distribution<std::size_t> pick_m(1, shape.max_m);
    const std::size_t m = pick_m(rng);
    std::uniform_int_distribution<std::size_t> pick_size(1, std::min(shape.max_edge, n));
    std::set<VertexSet> seen;
    std::vector<VertexSet> edges;
    std::vector<zeon::Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) {
        all[v] = static_cast<zeon::Vertex>(v);
    }
    for (std::size_t attempt = 0; attempt < 4 * m && edges.size() < m; ++attempt) {
        std::shuffle(all.begin(), all.end(), rng);
        VertexSet e(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(pick_size(rng)));
        std::sort(e.begin(), e.end());
        if (shape.distinct && !seen.insert(e).second) {
            continue;
        }
        edges.push_back(e);
    }
    if (!shape.allow_isolated) {
        for (zeon::Vertex v = 0; v < n; ++v) {
            const bool covered = std::any_of(edges.begin(), edges.end(), [&](const VertexSet& e) {
                return std::find(e.begin(), e.end(), v) != e.end();
            });
            if (!covered) {
                VertexSet e{v};
                if (!shape.distinct || seen.insert(e).second) {
                    edges.push_back(e);
                }
            }
        }
    }
    return Hypergraph(n, std::move(edges));
}

inline Hypergraph random_graph(std::mt19937_64& rng, std::size_t max_n, double p) {
    std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
    std::bernoulli_distribution coin(p);
    const std::size_t n = pick_n(rng);
    std::vector<VertexSet> edges;
    for (zeon::Vertex a = 0; a < n; ++a) {
        for (zeon::Vertex b = a + 1; b < n; ++b) {
            if (coin(rng)) {
                edges.push_back({a, b});
            }
        }
    }
    return Hypergraph(n, std::move(edges));
}

inline std::vector<zeon::oracle::Group> as_groups(const std::vector<zeon::Record>& records) {
    std::vector<zeon::oracle::Group> out;
    for (const auto& r : records) {
        out.push_back({r.vertices, r.edges, static_cast<std::uint64_t>(*r.count.to_int64())});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.vertices, a.edges) < std::tie(b.vertices, b.edges);
    });
    return out;
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace testing
