#include <doctest.h>

#include <random>

#include "running_example.hpp"
#include "support.hpp"
#include "zeon/oracle.hpp"
#include "zeon/transversals.hpp"

using namespace zeon;
using testing::running_example;
using testing::vs;

TEST_SUITE("transversals") {

TEST_CASE("representation of the running example matches the reference sigma and its square") {
    const auto rep = transversal_representation(running_example());
    CHECK(rep.removed_isolated.empty());
    const Context& ctx = rep.sigma.context();
    CHECK(rep.sigma == golden::from_block_terms(ctx, 6, golden::kSigma));
    CHECK(pow(rep.sigma, 2) == golden::from_block_terms(ctx, 6, golden::kSigmaSquared));
}

TEST_CASE("minimum transversal of the running example") {
    const auto t = minimum_transversals(running_example());
    CHECK(t.tau == 2);
    CHECK(t.transversals == std::vector<VertexSet>{vs({1, 6})});
    CHECK(transversal_number(running_example()) == 2);
    TransversalOptions pruned;
    pruned.dominance_prune = true;
    CHECK(minimum_transversals(running_example(), pruned).transversals == t.transversals);
}

TEST_CASE("isolated vertices are removed and reported") {
    const Hypergraph h(4, {{0, 2}, {2, 3}});
    const auto t = minimum_transversals(h);
    CHECK(t.removed_isolated == VertexSet{1});
    CHECK(t.tau == 1);
    CHECK(t.transversals == std::vector<VertexSet>{{2}});
}

TEST_CASE("edgeless hypergraphs need the empty transversal") {
    const auto t = minimum_transversals(Hypergraph(3, {}));
    CHECK(t.tau == 0);
    CHECK(t.transversals == std::vector<VertexSet>{{}});
}

TEST_CASE("dominance pruning keeps minimal sets only") {
    SignatureBuilder b;
    b.add_block(2, GeneratorRule::idempotent(), "e");
    b.add_block(3, GeneratorRule::idempotent(), "x");
    const auto ctx = b.build();
    // e1 x1 is dominated by e1 e2 x1 (same vertices, more edges covered)
    const Element u = Element::monomial(ctx, Monomial::blade({0, 2})) +
                      Element::monomial(ctx, Monomial::blade({0, 1, 2})) +
                      Element::monomial(ctx, Monomial::blade({1, 3}));
    const Element pruned = dominance_prune(u, 2);
    CHECK(pruned.size() == 2);
    CHECK(pruned.coefficient(Monomial::blade({0, 2})).is_zero());
}

TEST_CASE("agreement with brute force, with and without pruning") {
    std::mt19937_64 rng(41);
    TransversalOptions pruned;
    pruned.dominance_prune = true;
    for (int rep = 0; rep < 150; ++rep) {
        const Hypergraph h = testing::random_hypergraph(rng, {8, 8, 4, false});
        const auto expected = oracle::brute_transversals(h);
        const auto plain = minimum_transversals(h);
        CHECK(plain.tau == expected.tau);
        CHECK(plain.transversals == expected.sets);
        const auto fast = minimum_transversals(h, pruned);
        CHECK(fast.tau == expected.tau);
        CHECK(fast.transversals == expected.sets);
    }
}

}
