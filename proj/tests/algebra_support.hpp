#pragma once

#include <random>
#include <vector>

#include "zeon/algebra.hpp"

namespace testing {

// Twelve generators: four zeons, three of index 3, one of index 4, four idempotents.
inline zeon::Context mixed_context() {
    zeon::SignatureBuilder b;
    b.add_block(4, zeon::GeneratorRule::nilpotent(2), "z");
    b.add_block(3, zeon::GeneratorRule::nilpotent(3), "u");
    b.add_block(1, zeon::GeneratorRule::nilpotent(4), "w");
    b.add_block(4, zeon::GeneratorRule::idempotent(), "e");
    return b.build();
}

inline zeon::Element random_element(const zeon::Context& ctx, std::mt19937_64& rng,
                                    std::size_t max_terms = 5) {
    const auto& sig = *ctx;
    std::vector<zeon::Element::Term> terms;
    const std::size_t count = rng() % (max_terms + 1);
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<std::pair<zeon::GenId, std::uint32_t>> factors;
        for (zeon::GenId g = 0; g < sig.size(); ++g) {
            if (rng() % 4 != 0) {
                continue;
            }
            const auto& rule = sig.rule(g);
            const std::uint32_t top = rule.is_idempotent() ? 1 : rule.index() - 1;
            factors.emplace_back(g, 1 + static_cast<std::uint32_t>(rng() % top));
        }
        auto m = zeon::Monomial::from_exponents(sig, factors);
        if (!m) {
            continue;
        }
        const auto num = static_cast<std::int64_t>(rng() % 11) - 5;
        const auto den = static_cast<std::int64_t>(rng() % 3) + 1;
        terms.emplace_back(*m, zeon::Rational(num, den));
    }
    return zeon::Element::from_terms(ctx, std::move(terms));
}

}  // namespace testing
