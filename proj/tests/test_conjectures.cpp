#include <doctest.h>

#include <random>
#include <sstream>

#include "support.hpp"
#include "zeon/conjectures.hpp"
#include "zeon/errors.hpp"
#include "zeon/matchings.hpp"
#include "zeon/oracle.hpp"

using namespace zeon;
using testing::running_example;

TEST_SUITE("conjectures") {

TEST_CASE("degree identity for the scalar sum of z_i Gamma") {
    std::mt19937_64 rng(43);
    std::vector<Hypergraph> cases{running_example()};
    for (int rep = 0; rep < 60; ++rep) {
        cases.push_back(testing::random_hypergraph(rng, {8, 8, 4}));
    }
    for (const auto& h : cases) {
        const Element gamma = incidence_representation(h);
        CHECK(scalar_sum(gamma) == Rational(static_cast<std::int64_t>(h.edge_count())));
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            std::size_t deg = 0;
            for (const auto& e : h.edges()) {
                deg += std::count(e.begin(), e.end(), v);
            }
            const Element zg = Element::generator(gamma.context(), v) * gamma;
            CHECK(scalar_sum(zg) == Rational(static_cast<std::int64_t>(h.edge_count() - deg)));
        }
    }
}

TEST_CASE("gamma element lists the transversals") {
    const Element g = gamma_element(running_example());
    // {1,6} is the unique minimum transversal
    CHECK(gamma_min_grade(g) == 2);
    CHECK(grade_part(g, 2) == Element::monomial(g.context(), Monomial::blade({0, 5})));
    CHECK(g.coefficient(Monomial::blade({0, 1, 2, 3, 4, 5, 6})) == Rational(1));
    CHECK(gamma_min_grade(gamma_element(Hypergraph(3, {}))) == 0);
    CHECK_THROWS_AS(gamma_element(Hypergraph(12, {}), 10), BudgetExceeded);
}

TEST_CASE("minimal grade of gamma equals the transversal number") {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 80; ++rep) {
        const Hypergraph h = testing::random_hypergraph(rng, {10, 8, 4});
        CHECK(gamma_min_grade(gamma_element(h)) == oracle::brute_transversals(h).tau);
    }
}

TEST_CASE("nilpotency index of Gamma tracks the maximum matching") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 80; ++rep) {
        const Hypergraph h = testing::random_hypergraph(rng, {9, 9, 4});
        const auto kappa = nilpotency_index(incidence_representation(h),
                                            static_cast<unsigned>(h.vertex_count() + 1));
        REQUIRE(kappa.has_value());
        CHECK(*kappa - 1 == oracle::brute_max_matching(h));
    }
}

TEST_CASE("Ryser check on small instances") {
    const Hypergraph single(4, {{0, 2}});
    const auto rep = check_ryser(single, 2, {0, 0, 1, 1});
    CHECK(rep.matching_number == 1);
    CHECK(rep.transversal_number == 1);
    CHECK(rep.bound_ok);
    CHECK(rep.gamma_min_grade == std::optional<std::size_t>(1));

    CHECK_THROWS_AS(check_ryser(running_example(), 3, {0, 0, 0, 1, 1, 1, 2}), ContractViolation);
    CHECK_THROWS_AS(check_ryser(single, 2, {0, 0, 0, 1}), ContractViolation);
}

TEST_CASE("bipartite graphs meet the bound with equality") {
    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t part = 1 + rng() % 5;
        const std::size_t edges = 1 + rng() % std::min<std::size_t>(part * part, 10);
        const Hypergraph g = generate_ryser_instance(2, part, edges, rng());
        const auto report = check_ryser(g, 2, ryser_partition(2, part));
        CHECK(report.bound_ok);
        CHECK(report.transversal_number == report.matching_number);
        CHECK(report.matching_number == oracle::brute_max_matching(g));
        REQUIRE(report.gamma_min_grade.has_value());
        CHECK(*report.gamma_min_grade == report.transversal_number);
    }
}

TEST_CASE("instance generators") {
    const Hypergraph a = generate_ryser_instance(3, 3, 5, 77);
    CHECK(a == generate_ryser_instance(3, 3, 5, 77));
    CHECK(is_r_uniform(a, 3));
    CHECK(is_r_partite(a, 3, ryser_partition(3, 3)));
    CHECK(a.edge_count() == 5);
    CHECK(is_r_partite(generate_ryser_instance(2, 3, 4, 1), 2, ryser_partition(2, 3)));
    CHECK_THROWS_AS(generate_ryser_instance(2, 2, 5, 1), BudgetExceeded);

    const Hypergraph u = generate_union_closed(4, 2, 5);
    CHECK(is_union_closed(u));
    CHECK(u == generate_union_closed(4, 2, 5));
    CHECK_THROWS_AS(generate_union_closed(8, 8, 5, 3), BudgetExceeded);
}

TEST_CASE("Frankl check") {
    const auto small = check_frankl(Hypergraph(2, {{0}, {0, 1}}));
    CHECK(small.holds);
    CHECK(small.best_vertex == 0);
    CHECK(small.best_count == 2);
    CHECK(small.best_scalar_sum == Rational(0));

    std::vector<VertexSet> power;
    for (unsigned bits = 1; bits < 8; ++bits) {
        VertexSet s;
        for (Vertex v = 0; v < 3; ++v) {
            if ((bits >> v) & 1U) {
                s.push_back(v);
            }
        }
        power.push_back(s);
    }
    const auto cube = check_frankl(Hypergraph(3, power));
    CHECK(cube.holds);
    CHECK(cube.best_count == 4);
    CHECK(cube.m == 7);
    CHECK_THROWS_AS(check_frankl(Hypergraph(3, {{0}, {1}})), ContractViolation);
    CHECK_THROWS_AS(check_frankl(Hypergraph(3, {})), ContractViolation);
}

TEST_CASE("randomized harness runs clean and is reproducible") {
    std::ostringstream log;
    const auto ryser = run_ryser_trials(50, 1000, 9, &log);
    CHECK(ryser.trials == 50);
    CHECK(ryser.violations == 0);
    const auto frankl = run_frankl_trials(50, 2000, 6, &log);
    CHECK(frankl.trials == 50);
    CHECK(frankl.violations == 0);
    CHECK(log.str().empty());
    CHECK_THROWS_AS(run_ryser_trials(1, 1, 1, nullptr), ContractViolation);
}

TEST_CASE("report serialization") {
    const auto j = to_json(check_frankl(Hypergraph(2, {{0}, {0, 1}})));
    CHECK(j["best_vertex"] == 1);
    CHECK(j["holds"] == true);
    const auto r = to_json(check_ryser(Hypergraph(4, {{0, 2}}), 2, {0, 0, 1, 1}));
    CHECK(r["bound_ok"] == true);
    CHECK(r["gamma_min_grade"] == 1);
}

}
