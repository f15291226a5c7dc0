#include "zeon/transversals.hpp"

#include <algorithm>

#include "zeon/errors.hpp"
#include "zeon/simd.hpp"

namespace zeon {

Context transversal_context(const Hypergraph& h) {
    SignatureBuilder b;
    b.add_block(h.edge_count(), GeneratorRule::idempotent(), "e");
    b.add_block(h.vertex_count(), GeneratorRule::idempotent(), "x");
    return b.build();
}

TransversalRepresentation transversal_representation(const Hypergraph& h) {
    const Context ctx = transversal_context(h);
    const auto m = static_cast<GenId>(h.edge_count());
    std::vector<std::vector<GenId>> psi(h.vertex_count());
    for (GenId l = 0; l < m; ++l) {
        for (Vertex v : h.edge(l)) {
            psi[v].push_back(l);
        }
    }
    TransversalRepresentation rep{Element(ctx), {}};
    std::vector<Element::Term> terms;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (psi[v].empty()) {
            rep.removed_isolated.push_back(v);
            continue;
        }
        auto ids = psi[v];
        ids.push_back(m + v);
        terms.emplace_back(Monomial::blade(std::span<const GenId>(ids)), Rational(1));
    }
    rep.sigma = Element::from_terms(ctx, std::move(terms));
    return rep;
}

Element dominance_prune(const Element& u, std::size_t edge_count) {
    const std::size_t words = u.signature().words();
    const std::size_t nt = u.size();
    if (nt < 2) {
        return u;
    }
    std::vector<std::uint64_t> edge_mask(words, 0);
    for (std::size_t g = 0; g < edge_count; ++g) {
        edge_mask[g / 64] |= std::uint64_t{1} << (g % 64);
    }
    std::vector<std::uint64_t> columns(words * nt, 0);
    for (std::size_t t = 0; t < nt; ++t) {
        for (std::size_t w = 0; w < words; ++w) {
            columns[w * nt + t] = u.terms()[t].first.word(w);
        }
    }
    std::vector<std::uint8_t> miss(nt);
    std::vector<Element::Term> kept;
    for (std::size_t t = 0; t < nt; ++t) {
        const Monomial& mt = u.terms()[t].first;
        std::fill(miss.begin(), miss.end(), 0);
        miss[t] = 1;
        for (std::size_t w = 0; w < words; ++w) {
            const auto column = std::span<const std::uint64_t>(columns.data() + w * nt, nt);
            // dominator's edge part is a superset of ours ...
            simd::mark_not_superset(mt.word(w) & edge_mask[w], column, miss);
            // ... and its vertex part a subset of ours
            simd::mark_not_subset(mt.word(w) | edge_mask[w], column, miss);
        }
        if (std::find(miss.begin(), miss.end(), std::uint8_t{0}) == miss.end()) {
            kept.push_back(u.terms()[t]);
        }
    }
    return Element::from_terms(u.context(), std::move(kept));
}

MinimumTransversals minimum_transversals(const Hypergraph& h, const TransversalOptions& options) {
    const std::size_t m = h.edge_count();
    const auto rep = transversal_representation(h);
    MinimumTransversals out;
    out.removed_isolated = rep.removed_isolated;
    if (m == 0) {
        out.transversals.push_back({});
        return out;
    }
    const std::size_t words = rep.sigma.signature().words();
    std::vector<std::uint64_t> full(words, 0);
    for (std::size_t g = 0; g < m; ++g) {
        full[g / 64] |= std::uint64_t{1} << (g % 64);
    }
    auto covers_all = [&](const Monomial& mono) {
        for (std::size_t w = 0; w < words; ++w) {
            if ((mono.word(w) & full[w]) != full[w]) {
                return false;
            }
        }
        return true;
    };

    Element power = rep.sigma;
    for (std::size_t k = 1; k <= h.vertex_count(); ++k) {
        for (const auto& [mono, c] : power.terms()) {
            if (!covers_all(mono)) {
                continue;
            }
            VertexSet t;
            for (GenId g : mono.generators()) {
                if (g >= m) {
                    t.push_back(static_cast<Vertex>(g - m));
                }
            }
            if (t.size() != k) {
                throw InvariantViolation("full-blade term at the first covering power has " +
                                         std::to_string(t.size()) + " vertices, expected " +
                                         std::to_string(k));
            }
            out.transversals.push_back(std::move(t));
        }
        if (!out.transversals.empty()) {
            out.tau = k;
            std::sort(out.transversals.begin(), out.transversals.end());
            return out;
        }
        power = mul(power, rep.sigma, options.limits);
        if (options.dominance_prune) {
            power = dominance_prune(power, m);
        }
    }
    throw InvariantViolation("no power of sigma up to n covers every hyperedge");
}

std::size_t transversal_number(const Hypergraph& h, const TransversalOptions& options) {
    return minimum_transversals(h, options).tau;
}

}  // namespace zeon
