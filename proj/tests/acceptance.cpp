// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algebra_support.hpp"
#include "running_example.hpp"
#include "support.hpp"
#include "zeon/conjectures.hpp"
#include "zeon/independent_sets.hpp"
#include "zeon/matchings.hpp"
#include "zeon/oracle.hpp"
#include "zeon/transversals.hpp"
#include "zeon/walks.hpp"

using namespace zeon;
using testing::running_example;
using testing::vs;

namespace {

class Checks {
public:
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (!ok && failures_.size() < 10) {
            failures_.push_back(what);
        }
        failed_ = failed_ || !ok;
    }
    bool failed() const { return failed_; }
    std::size_t count() const { return count_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    bool failed_ = false;
    std::size_t count_ = 0;
    std::vector<std::string> failures_;
};

Record rec(std::initializer_list<unsigned> v, std::initializer_list<unsigned> e) {
    EdgeSet edges;
    for (unsigned x : e) {
        edges.push_back(x - 1);
    }
    return {vs(v), edges, Rational(1)};
}

void golden_suite(Checks& c, double& limit_ms) {
    limit_ms = 1000;
    const Hypergraph h = running_example();

    const std::vector<Record> paths = {
        rec({1, 2, 3, 4}, {1, 2}), rec({1, 2, 3, 4}, {1, 3}), rec({1, 3, 4, 5}, {1, 3}),
        rec({1, 3, 4, 7}, {1, 2}), rec({3, 4, 5, 6}, {3, 4, 6})};
    c.expect(k_paths(h, 2, 3, 3) == paths, "five 3-paths from v3 to v4");

    const auto weak = weak_independent_sets(h, 5);
    c.expect(weak.exact == std::vector<VertexSet>{vs({2, 3, 4, 5, 7})}, "weak independent 5-set");
    c.expect(testing::sorted(weak.smaller) ==
                 testing::sorted(std::vector<VertexSet>{vs({2, 5, 7}), vs({2, 3, 5, 7}),
                                                        vs({2, 4, 5, 7}), vs({2, 6, 7})}),
             "companions of size below five");
    const auto phi = weak_independent_set_representation(h);
    c.expect(pow(phi.element, 5) == golden::phi_fifth(phi.element.context(), 6),
             "fifth power of the weak representation");

    std::vector<VertexSet> two;
    bool counts_one = true;
    for (const auto& r : k_matchings(h, 2)) {
        two.push_back(r.vertices);
        counts_one = counts_one && r.count == Rational(1);
    }
    c.expect(two == std::vector<VertexSet>{vs({1, 2, 3, 4, 6}), vs({1, 2, 3, 5, 6}),
                                           vs({1, 3, 4, 5, 6}), vs({1, 3, 4, 6, 7}),
                                           vs({1, 4, 5, 6, 7})} &&
                 counts_one,
             "five 2-matchings");
    c.expect(k_matchings(h, 3).empty(), "no 3-matchings");
    c.expect(nilpotency_index(incidence_representation(h), 8) == 3u, "nilpotency index of Gamma");

    const auto t = minimum_transversals(h);
    c.expect(t.tau == 2 && t.transversals == std::vector<VertexSet>{vs({1, 6})},
             "minimum transversal {1,6}");
    const auto sigma = transversal_representation(h).sigma;
    c.expect(sigma == golden::from_block_terms(sigma.context(), 6, golden::kSigma),
             "transversal representation");
    c.expect(pow(sigma, 2) == golden::from_block_terms(sigma.context(), 6, golden::kSigmaSquared),
             "square of the transversal representation");

    const AlgebraMatrix omega = build_omega(h);
    c.expect(omega.rows() == 7 && omega.cols() == 7, "adjacency matrix is 7x7");
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) {
            c.expect(omega(i, j) == golden::omega_entry(omega.context(), 7, i, j),
                     "adjacency entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
}

void kernel_suite(Checks& c, double&) {
    for (unsigned k = 1; k <= 8; ++k) {
        SignatureBuilder b;
        b.add_block(k, GeneratorRule::nilpotent(2), "z");
        const auto ctx = b.build();
        Element s(ctx);
        std::vector<GenId> all;
        for (GenId g = 0; g < k; ++g) {
            s = s + Element::generator(ctx, g);
            all.push_back(g);
        }
        c.expect(pow(s, k) == Element::monomial(ctx, Monomial::blade(all), factorial(k)),
                 "multinomial law k=" + std::to_string(k));
        c.expect(pow(s, k + 1).is_zero(), "vanishing power k=" + std::to_string(k));
    }

    {
        SignatureBuilder b;
        b.add(GeneratorRule::nilpotent(2), "v1");
        b.add(GeneratorRule::nilpotent(3), "v2");
        b.add(GeneratorRule::nilpotent(5), "v3");
        const auto ctx = b.build();
        const Element v1 = Element::generator(ctx, 0), v2 = Element::generator(ctx, 1),
                      v3 = Element::generator(ctx, 2);
        c.expect(to_string(pow(v2 + Rational(2) * v1, 2)) == "v2^2 + 4*v1*v2",
                 "generalized zeon square");
        c.expect(to_string((Element::one(ctx) - v1 + pow(v3, 2)) * pow(v3, 3)) ==
                     "v3^3 - v1*v3^3",
                 "generalized zeon product");
    }
    {
        SignatureBuilder b;
        b.add_block(6, GeneratorRule::idempotent(), "e");
        const auto ctx = b.build();
        auto e = [&](std::initializer_list<GenId> ids) {
            std::vector<GenId> zb;
            for (GenId i : ids) {
                zb.push_back(i - 1);
            }
            return Element::monomial(ctx, Monomial::blade(zb));
        };
        c.expect(to_string(pow(e({2}) - Rational(4) * e({6}), 2)) == "e2 + 16*e6 - 8*e2*e6",
                 "idempotent square");
        c.expect(to_string((Rational(3) * e({1, 2}) + e({3})) * (e({1}) - Rational(2) * e({4}))) ==
                     "3*e1*e2 + e1*e3 - 2*e3*e4 - 6*e1*e2*e4",
                 "idempotent product");
    }

    const auto ctx = testing::mixed_context();
    std::mt19937_64 rng(20240601);
    for (int rep = 0; rep < 10000; ++rep) {
        const Element a = testing::random_element(ctx, rng);
        const Element b = testing::random_element(ctx, rng);
        const Element d = testing::random_element(ctx, rng);
        const std::string tag = " (triple " + std::to_string(rep) + ")";
        c.expect(a * b == b * a, "commutativity" + tag);
        c.expect((a * b) * d == a * (b * d), "associativity" + tag);
        c.expect(a * (b + d) == a * b + a * d, "distributivity" + tag);
        const Element p = a * b;
        std::vector<Element::Term> terms(p.terms().begin(), p.terms().end());
        c.expect(Element::from_terms(ctx, terms) == p, "canonical idempotence" + tag);
    }
}

void oracle_suite(Checks& c, double& limit_ms) {
    limit_ms = 60000;
    std::mt19937_64 rng(777);
    const testing::RandomShape shape{7, 7, 4, true, true};
    for (int rep = 0; rep < 500; ++rep) {
        const Hypergraph h = testing::random_hypergraph(rng, shape);
        const std::string tag = " (instance " + std::to_string(rep) + ")";
        const auto n = static_cast<Vertex>(h.vertex_count());
        for (unsigned k = 1; k <= 4; ++k) {
            for (Vertex i = 0; i < n; ++i) {
                for (Vertex j = 0; j < n; ++j) {
                    if (i != j) {
                        c.expect(testing::as_groups(k_paths(h, i, j, k)) == oracle::brute_paths(h, i, j, k),
                                 "paths" + tag);
                    } else if (k >= 2) {
                        c.expect(testing::as_groups(k_cycles(h, i, k)) == oracle::brute_cycles(h, i, k),
                                 "cycles" + tag);
                    }
                }
            }
        }

        VertexSet kept;
        const Hypergraph core = remove_vertices(h, isolated_vertices(h), &kept);
        for (unsigned size = 1; size <= std::min<std::size_t>(5, core.vertex_count()); ++size) {
            using M = oracle::IndependenceMode;
            c.expect(weak_independent_sets(core, size).exact == oracle::brute_independent(core, M::Weak, size),
                     "weak independent sets" + tag);
            c.expect(k_independent_sets(core, size, 1).exact ==
                         oracle::brute_independent(core, M::KIndependent, size, 1),
                     "1-independent sets" + tag);
            c.expect(strong_independent_sets(core, size).exact ==
                         oracle::brute_independent(core, M::Strong, size),
                     "strong independent sets" + tag);
            c.expect(k_independent_sets(core, size, 2).exact ==
                         oracle::brute_independent(core, M::KIndependent, size, 2),
                     "2-independent sets" + tag);
        }

        for (unsigned k = 1; k <= 3; ++k) {
            const auto matchings = k_matchings(h, k);
            c.expect(testing::as_groups(matchings) == oracle::brute_matchings_by_vertex_set(h, k),
                     "k-matchings" + tag);
            // the two pipelines at j = 0 describe the same matchings
            const auto zero = j_intersecting_matchings(h, 0, k);
            std::vector<VertexSet> unions;
            for (const auto& es : zero) {
                VertexSet u;
                for (EdgeId e : es) {
                    u.insert(u.end(), h.edge(e).begin(), h.edge(e).end());
                }
                std::sort(u.begin(), u.end());
                unions.push_back(u);
            }
            std::vector<VertexSet> from_matchings;
            for (const auto& r : matchings) {
                for (std::int64_t t = 0; t < *r.count.to_int64(); ++t) {
                    from_matchings.push_back(r.vertices);
                }
            }
            c.expect(testing::sorted(unions) == testing::sorted(from_matchings),
                     "0-intersecting matchings vs k-matchings" + tag);
            for (std::size_t j = 0; j <= 2; ++j) {
                c.expect(testing::sorted(j_intersecting_matchings(h, j, k)) ==
                             oracle::brute_j_intersecting(h, j, k),
                         "j-intersecting matchings" + tag);
            }
        }

        const auto expected = oracle::brute_transversals(h);
        const auto got = minimum_transversals(h);
        c.expect(got.tau == expected.tau && got.transversals == expected.sets, "transversals" + tag);
    }
}

void identity_suite(Checks& c, double&) {
    std::vector<Hypergraph> cases{running_example()};
    std::mt19937_64 rng(4242);
    for (int rep = 0; rep < 300; ++rep) {
        cases.push_back(testing::random_hypergraph(rng, {10, 10, 4}));
    }
    for (std::size_t idx = 0; idx < cases.size(); ++idx) {
        const Hypergraph& h = cases[idx];
        const std::string tag = " (instance " + std::to_string(idx) + ")";
        const Element gamma = incidence_representation(h);
        const auto m = static_cast<std::int64_t>(h.edge_count());
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            const Element zg = Element::generator(gamma.context(), v) * gamma;
            c.expect(scalar_sum(zg) == Rational(m - static_cast<std::int64_t>(degree(h, v))),
                     "degree identity" + tag);
        }
        c.expect(gamma_min_grade(gamma_element(h, 10)) == transversal_number(h),
                 "minimal grade of gamma" + tag);
        const auto kappa = nilpotency_index(gamma, static_cast<unsigned>(h.vertex_count() + 1));
        c.expect(kappa && *kappa - 1 == oracle::brute_max_matching(h), "matching number" + tag);
    }
}

void conjecture_suite(Checks& c, double&) {
    const auto log_path = std::filesystem::temp_directory_path() / "zeonhg_acceptance_violations.ndjson";
    std::filesystem::remove(log_path);
    std::size_t violations = 0;
    {
        std::ofstream log(log_path);
        const auto ryser = run_ryser_trials(1000, 1, 12, &log);
        const auto frankl = run_frankl_trials(1000, 1, 8, &log);
        c.expect(ryser.trials == 1000 && frankl.trials == 1000, "1000 trials each");
        c.expect(ryser.violations == 0, "Ryser bound holds on every instance");
        c.expect(frankl.violations == 0, "Frankl condition holds on every family");
        violations = ryser.violations + frankl.violations;
    }
    std::ifstream in(log_path);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        ++lines;
    }
    c.expect(lines == violations, "every violation is persisted");
}

void perfect_suite(Checks& c, double&) {
    const Hypergraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    c.expect(perfect_matching_count(k4) == Rational(3), "K4 has three perfect matchings");
    c.expect(oracle::brute_perfect_matchings(k4) == 3, "K4 brute force");
    const Hypergraph three(6, {{0, 1, 2}, {3, 4, 5}, {0, 3, 4}});
    c.expect(perfect_matching_count(three) == Rational(1), "3-uniform example has one");
    c.expect(oracle::brute_perfect_matchings(three) == 1, "3-uniform brute force");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Checks&, double&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"running-example golden suite", golden_suite},
        {"kernel algebra suite", kernel_suite},
        {"oracle equivalence suite", oracle_suite},
        {"identity suite", identity_suite},
        {"conjecture harness", conjecture_suite},
        {"perfect matchings", perfect_suite},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checks checks;
        double limit_ms = 0;
        std::string error;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].run(checks, limit_ms);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        const bool too_slow = limit_ms > 0 && ms > limit_ms;
        const bool pass = error.empty() && !checks.failed() && !too_slow;
        std::ostringstream line;
        line << "criterion " << i + 1 << ": " << (pass ? "PASS" : "FAIL") << "  " << criteria[i].name
             << "  (" << checks.count() << " checks, " << static_cast<long>(ms) << " ms";
        if (limit_ms > 0) {
            line << ", limit " << static_cast<long>(limit_ms) << " ms";
        }
        line << ")";
        std::cout << line.str() << '\n';
        if (!error.empty()) {
            std::cout << "    exception: " << error << '\n';
        }
        for (const auto& f : checks.failures()) {
            std::cout << "    failed: " << f << '\n';
        }
        if (too_slow) {
            std::cout << "    over the time limit\n";
        }
        failures += pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
