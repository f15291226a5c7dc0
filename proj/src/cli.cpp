#include "zeon/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "zeon/conjectures.hpp"
#include "zeon/errors.hpp"
#include "zeon/hypergraph.hpp"
#include "zeon/independent_sets.hpp"
#include "zeon/matchings.hpp"
#include "zeon/matrix.hpp"
#include "zeon/oracle.hpp"
#include "zeon/report.hpp"
#include "zeon/simd.hpp"
#include "zeon/transversals.hpp"
#include "zeon/walks.hpp"

namespace zeon {

namespace {

using nlohmann::json;

// An input problem that is not a parse error, e.g. an unreadable file.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Io {
    std::ostream& out;
    std::ostream& err;
    std::istream& in;
    std::string file;

    Hypergraph load() const {
        std::string text;
        if (file.empty() || file == "-") {
            text.assign(std::istreambuf_iterator<char>(in), {});
        } else {
            std::ifstream f(file, std::ios::binary);
            if (!f) {
                throw InputError("cannot open " + file);
            }
            text.assign(std::istreambuf_iterator<char>(f), {});
        }
        return parse_hypergraph(text);
    }

    void emit(const json& j) const { out << j.dump() << '\n'; }
};

Vertex internal_vertex(const Hypergraph& h, unsigned external, const char* flag) {
    if (external < 1 || external > h.vertex_count()) {
        throw ContractViolation(std::string(flag) + " must be a vertex id in 1.." +
                                std::to_string(h.vertex_count()));
    }
    return external - 1;
}

json sets_to_json(const std::vector<std::vector<std::uint32_t>>& sets) {
    json arr = json::array();
    for (const auto& s : sets) {
        arr.push_back(ids_to_json(s));
    }
    return arr;
}

std::vector<Record> from_groups(const std::vector<oracle::Group>& groups) {
    std::vector<Record> out;
    for (const auto& g : groups) {
        out.push_back({g.vertices, g.edges, Rational(static_cast<std::int64_t>(g.count))});
    }
    return out;
}

std::vector<Record> edge_records(const std::vector<EdgeSet>& sets) {
    std::vector<Record> out;
    for (const auto& s : sets) {
        out.push_back({{}, s, Rational(1)});
    }
    return out;
}

VertexSet lift(const VertexSet& s, const VertexSet& kept) {
    VertexSet out;
    for (Vertex v : s) {
        out.push_back(kept[v]);
    }
    return out;
}

// ---- walks ---------------------------------------------------------------

struct WalkArgs {
    unsigned from = 0;
    unsigned to = 0;
    unsigned k = 1;
    bool full_power = false;
};

void add_walk_commands(CLI::App& parent, WalkArgs& a, std::function<void(std::string)>& action,
                       bool oracle) {
    for (const char* kind : {"paths", "cycles", "trails"}) {
        const std::string name = kind;
        auto* sub = parent.add_subcommand(name, oracle ? "brute-force " + name : "enumerate k-" + name);
        if (name == "cycles") {
            sub->add_option("--at", a.from, "base vertex (1-based)")->required();
        } else {
            sub->add_option("--from", a.from, "start vertex (1-based)")->required();
            sub->add_option("--to", a.to, "end vertex (1-based)")->required();
        }
        sub->add_option("--k", a.k, "walk length")->required();
        if (!oracle && name != "trails") {
            sub->add_flag("--full-power", a.full_power, "contract after the full matrix power");
        }
        sub->callback([&action, name] { action(name); });
    }
}

json run_walks(const Io& io, const std::string& kind, const WalkArgs& a, bool oracle) {
    const Hypergraph h = io.load();
    const Vertex i = internal_vertex(h, a.from, kind == "cycles" ? "--at" : "--from");
    std::vector<Record> records;
    const auto mode = a.full_power ? Contraction::FullPower : Contraction::Early;
    if (kind == "cycles") {
        records = oracle ? from_groups(oracle::brute_cycles(h, i, a.k)) : k_cycles(h, i, a.k, {}, mode);
    } else {
        const Vertex j = internal_vertex(h, a.to, "--to");
        if (kind == "paths") {
            records = oracle ? from_groups(oracle::brute_paths(h, i, j, a.k))
                             : k_paths(h, i, j, a.k, {}, mode);
        } else {
            records = oracle ? from_groups(oracle::brute_trails(h, i, j, a.k)) : k_trails(h, i, j, a.k);
        }
    }
    return structure_report(kind, a.k, std::move(records));
}

// ---- independent sets ----------------------------------------------------

struct IndependentArgs {
    std::string mode = "weak";
    unsigned size = 1;
    unsigned k = 1;
};

void add_independent_command(CLI::App& parent, IndependentArgs& a,
                             std::function<void(std::string)>& action) {
    auto* sub = parent.add_subcommand("independent-sets", "enumerate independent sets");
    sub->add_option("--mode", a.mode, "graph, weak, strong, k-independent or pairwise-adjacent")
        ->check(CLI::IsMember({"graph", "weak", "strong", "k-independent", "pairwise-adjacent"}));
    sub->add_option("--size", a.size, "set size (power of the representation)")->required();
    sub->add_option("--k", a.k, "intersection bound for k-independent mode");
    sub->callback([&action] { action("independent-sets"); });
}

json run_independent(const Io& io, const IndependentArgs& a) {
    const Hypergraph h = io.load();
    json report = {{"kind", "independent-sets"}, {"mode", a.mode}, {"size", a.size}};
    if (a.mode == "k-independent") {
        report["k"] = a.k;
    }
    if (a.mode == "graph") {
        if (!is_graph(h)) {
            throw ContractViolation("graph mode needs every edge to have exactly two vertices");
        }
        report["sets"] = sets_to_json(vertex_sets(graph_independent_sets(h, a.size)));
        return report;
    }
    if (a.mode == "pairwise-adjacent") {
        report["sets"] = sets_to_json(pairwise_adjacent_sets(h, a.size));
        return report;
    }

    const VertexSet isolated = isolated_vertices(h);
    VertexSet kept;
    const Hypergraph core = remove_vertices(h, isolated, &kept);
    if (!isolated.empty()) {
        io.err << "warning: removed " << isolated.size()
               << " isolated vertices; they can join any independent set\n";
    }
    IndependentSets found;
    if (core.vertex_count() > 0) {
        if (a.mode == "weak") {
            found = weak_independent_sets(core, a.size);
        } else {
            const unsigned bound = a.mode == "strong" ? 1U : a.k;
            found = k_independent_sets(core, a.size, bound);
        }
    }
    for (auto* list : {&found.exact, &found.smaller}) {
        for (auto& s : *list) {
            s = lift(s, kept);
        }
    }
    report["sets"] = sets_to_json(found.exact);
    report["smaller"] = sets_to_json(found.smaller);
    report["removed_isolated"] = ids_to_json(isolated);
    return report;
}

json run_oracle_independent(const Io& io, const IndependentArgs& a) {
    const Hypergraph h = io.load();
    using M = oracle::IndependenceMode;
    M mode = M::Weak;
    if (a.mode == "graph") {
        mode = M::Graph;
    } else if (a.mode == "strong") {
        mode = M::Strong;
    } else if (a.mode == "k-independent") {
        mode = M::KIndependent;
    } else if (a.mode == "pairwise-adjacent") {
        mode = M::PairwiseAdjacent;
    }
    json report = {{"kind", "independent-sets"}, {"mode", a.mode}, {"size", a.size}};
    report["sets"] = sets_to_json(oracle::brute_independent(h, mode, a.size, a.k));
    return report;
}

// ---- matchings -----------------------------------------------------------

struct MatchingArgs {
    std::optional<unsigned> k;
    std::optional<unsigned> j;
    bool perfect = false;
};

void add_matching_command(CLI::App& parent, MatchingArgs& a,
                          std::function<void(std::string)>& action, bool oracle) {
    auto* sub = parent.add_subcommand("matchings", "enumerate matchings");
    sub->add_option("--k", a.k, "number of hyperedges");
    sub->add_option("--j", a.j, "allowed pairwise intersection size");
    sub->add_flag("--perfect", a.perfect, "count perfect matchings");
    sub->callback([&action] { action("matchings"); });
    (void)oracle;
}

json run_matchings(const Io& io, const MatchingArgs& a, bool oracle) {
    const Hypergraph h = io.load();
    if (has_duplicate_edges(h)) {
        throw InputError("matchings need distinct hyperedges");
    }
    if (a.perfect) {
        if (oracle) {
            return {{"kind", "perfect-matchings"},
                    {"count", oracle::brute_perfect_matchings(h)}};
        }
        const auto pm = perfect_matchings(h);
        if (!pm.warning.empty()) {
            io.err << "warning: " << pm.warning << '\n';
        }
        json spanning = json::object();
        for (const auto& [k, c] : spanning_matching_counts(h)) {
            spanning[std::to_string(k)] = to_json(c);
        }
        return {{"kind", "perfect-matchings"},
                {"count", to_json(pm.count)},
                {"formula_applies", pm.formula_applies},
                {"spanning", spanning}};
    }
    if (!a.k) {
        const std::size_t nu = oracle ? oracle::brute_max_matching(h) : matching_number(h);
        return {{"kind", "matching-number"}, {"matching_number", nu}};
    }
    if (a.j) {
        auto sets = oracle ? oracle::brute_j_intersecting(h, *a.j, *a.k)
                           : j_intersecting_matchings(h, *a.j, *a.k);
        json report = structure_report("j-intersecting-matchings", *a.k, edge_records(sets));
        report["j"] = *a.j;
        return report;
    }
    auto records = oracle ? from_groups(oracle::brute_matchings_by_vertex_set(h, *a.k))
                          : k_matchings(h, *a.k);
    return structure_report("matchings", *a.k, std::move(records));
}

// ---- transversals --------------------------------------------------------

json run_transversals(const Io& io, bool prune, bool oracle) {
    const Hypergraph h = io.load();
    if (oracle) {
        const auto t = oracle::brute_transversals(h);
        return {{"tau", t.tau}, {"transversals", sets_to_json(t.sets)}};
    }
    TransversalOptions opt;
    opt.dominance_prune = prune;
    const auto t = minimum_transversals(h, opt);
    if (!t.removed_isolated.empty()) {
        io.err << "warning: isolated vertices ignored\n";
    }
    return {{"tau", t.tau},
            {"transversals", sets_to_json(t.transversals)},
            {"removed_isolated", ids_to_json(t.removed_isolated)}};
}

// ---- conjectures ---------------------------------------------------------

struct ConjectureArgs {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t max_n = 8;
    std::string log;
    std::size_t r = 0;
    std::vector<unsigned> partition;
};

json run_conjecture(const Io& io, const std::string& which, const ConjectureArgs& a) {
    if (!io.file.empty()) {
        const Hypergraph h = io.load();
        if (which == "frankl") {
            return to_json(check_frankl(h));
        }
        if (a.r < 2 || a.partition.size() != h.vertex_count()) {
            throw ContractViolation("checking one instance needs --r and a --partition entry per vertex");
        }
        std::vector<std::size_t> part;
        for (unsigned p : a.partition) {
            if (p < 1 || p > a.r) {
                throw ContractViolation("--partition entries must lie in 1..r");
            }
            part.push_back(p - 1);
        }
        return to_json(check_ryser(h, a.r, part));
    }
    std::ofstream log_file;
    std::ostream* log = nullptr;
    if (!a.log.empty()) {
        log_file.open(a.log, std::ios::app);
        if (!log_file) {
            throw InputError("cannot open log " + a.log);
        }
        log = &log_file;
    }
    const auto summary = which == "ryser" ? run_ryser_trials(a.trials, a.seed, a.max_n, log)
                                          : run_frankl_trials(a.trials, a.seed, a.max_n, log);
    if (summary.violations > 0) {
        io.err << "warning: " << summary.violations << " violation candidates"
               << (log ? " logged to " + a.log : std::string(" (no --log given)")) << '\n';
    }
    return {{"kind", which},
            {"trials", summary.trials},
            {"violations", summary.violations},
            {"seed", a.seed}};
}

// ---- bench ---------------------------------------------------------------

struct BenchArgs {
    std::size_t max_n = 16;
    unsigned max_k = 4;
    std::size_t max_terms = 1'000'000;
    std::uint64_t seed = 1;
    std::string isa;
};

Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_edge,
                             std::mt19937_64& rng) {
    std::vector<VertexSet> edges;
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) {
        all[v] = static_cast<Vertex>(v);
    }
    for (std::size_t e = 0; e < m; ++e) {
        std::shuffle(all.begin(), all.end(), rng);
        const std::size_t size = 2 + rng() % (std::min(max_edge, n) - 1);
        edges.emplace_back(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    }
    return Hypergraph(n, std::move(edges));
}

json run_bench(const Io& io, const BenchArgs& a) {
    if (a.max_n < 4 || a.max_n > 64) {
        throw ContractViolation("--max-n must lie in 4..64");
    }
    if (a.max_k < 1) {
        throw ContractViolation("--max-k must be >= 1");
    }
    std::vector<simd::Isa> isas = simd::available_isas();
    if (!a.isa.empty()) {
        auto it = std::find_if(isas.begin(), isas.end(),
                               [&](simd::Isa i) { return simd::isa_name(i) == a.isa; });
        if (it == isas.end()) {
            throw ContractViolation("instruction set " + a.isa + " is not available here");
        }
        isas = {*it};
    }
    Limits limits;
    limits.max_terms = a.max_terms;

    json rows = json::array();
    auto time_it = [&](const std::string& workload, std::size_t n, unsigned k, simd::Isa isa,
                       const std::function<std::size_t()>& body) {
        simd::set_isa(isa);
        json row = {{"workload", workload}, {"n", n}, {"k", k}, {"isa", simd::isa_name(isa)}};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            row["terms"] = body();
            row["status"] = "ok";
        } catch (const BudgetExceeded&) {
            row["terms"] = nullptr;
            row["status"] = "budget";
        }
        const auto t1 = std::chrono::steady_clock::now();
        row["ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rows.push_back(row);
    };

    for (std::size_t n = 4; n <= a.max_n; n += 4) {
        std::mt19937_64 rng(a.seed + n);
        const Hypergraph h = random_hypergraph(n, n, 3, rng);
        const Element gamma = incidence_representation(h);
        const AlgebraMatrix omega = build_omega(h);
        for (simd::Isa isa : isas) {
            for (unsigned k = 2; k <= a.max_k; ++k) {
                time_it("gamma-power", n, k, isa, [&] { return pow(gamma, k, limits).size(); });
            }
            if (n <= 8) {
                const unsigned k = std::min<unsigned>(a.max_k, 3);
                time_it("omega-power", n, k, isa, [&] {
                    const AlgebraMatrix p = power(omega, k, limits);
                    std::size_t terms = 0;
                    for (std::size_t r = 0; r < p.rows(); ++r) {
                        for (std::size_t c = 0; c < p.cols(); ++c) {
                            terms += p(r, c).size();
                        }
                    }
                    return terms;
                });
            }
        }
    }
    simd::reset_isa();

    io.err << std::left << std::setw(13) << "workload" << std::setw(5) << "n" << std::setw(4)
           << "k" << std::setw(8) << "isa" << std::setw(10) << "terms" << "ms\n";
    for (const auto& row : rows) {
        io.err << std::left << std::setw(13) << row["workload"].get<std::string>() << std::setw(5)
               << row["n"].get<std::size_t>() << std::setw(4) << row["k"].get<unsigned>()
               << std::setw(8) << row["isa"].get<std::string>() << std::setw(10)
               << (row["terms"].is_null() ? std::string("budget") : row["terms"].dump())
               << std::fixed << std::setprecision(3) << row["ms"].get<double>() << '\n';
    }
    return {{"kind", "bench"}, {"max_terms", a.max_terms}, {"results", rows}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            std::istream& in) {
    CLI::App app{"Zeon and idem-Clifford enumeration of hypergraph structures", "zeonhg"};
    app.require_subcommand(1);
    Io io{out, err, in, {}};
    app.add_option("--file", io.file, "hypergraph file (text or JSON); standard input if absent");

    std::function<json()> job;
    WalkArgs walk;
    IndependentArgs indep;
    MatchingArgs match;
    ConjectureArgs conj;
    BenchArgs bench;
    bool prune = false;

    std::function<void(std::string)> main_action = [&](const std::string& name) {
        if (name == "independent-sets") {
            job = [&] { return run_independent(io, indep); };
        } else if (name == "matchings") {
            job = [&] { return run_matchings(io, match, false); };
        } else {
            job = [&, name] { return run_walks(io, name, walk, false); };
        }
    };
    add_walk_commands(app, walk, main_action, false);
    add_independent_command(app, indep, main_action);
    add_matching_command(app, match, main_action, false);

    auto* trans = app.add_subcommand("transversals", "minimum transversals");
    trans->add_flag("--prune", prune, "drop dominated terms between multiplications");
    trans->callback([&] { job = [&] { return run_transversals(io, prune, false); }; });

    auto* conjecture = app.add_subcommand("conjecture", "randomized conjecture checks");
    conjecture->require_subcommand(1);
    for (const char* which : {"ryser", "frankl"}) {
        const std::string name = which;
        auto* sub = conjecture->add_subcommand(name, name + " conjecture harness");
        sub->add_option("--trials", conj.trials, "number of random instances");
        sub->add_option("--seed", conj.seed, "base seed");
        sub->add_option("--max-n", conj.max_n, "largest vertex count");
        sub->add_option("--log", conj.log, "append violation candidates to this NDJSON file");
        sub->add_option("--file", io.file, "check this instance instead of random ones");
        if (name == "ryser") {
            sub->add_option("--r", conj.r, "uniformity of the instance in --file");
            sub->add_option("--partition", conj.partition, "part (1..r) of each vertex")
                ->delimiter(',');
        }
        sub->callback([&, name] { job = [&, name] { return run_conjecture(io, name, conj); }; });
    }

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-checks");
    oracle_cmd->require_subcommand(1);
    WalkArgs owalk;
    IndependentArgs oindep;
    MatchingArgs omatch;
    std::function<void(std::string)> oracle_action = [&](const std::string& name) {
        if (name == "independent-sets") {
            job = [&] { return run_oracle_independent(io, oindep); };
        } else if (name == "matchings") {
            job = [&] { return run_matchings(io, omatch, true); };
        } else {
            job = [&, name] { return run_walks(io, name, owalk, true); };
        }
    };
    add_walk_commands(*oracle_cmd, owalk, oracle_action, true);
    add_independent_command(*oracle_cmd, oindep, oracle_action);
    add_matching_command(*oracle_cmd, omatch, oracle_action, true);
    auto* otrans = oracle_cmd->add_subcommand("transversals", "brute-force transversals");
    otrans->callback([&] { job = [&] { return run_transversals(io, false, true); }; });

    auto* bench_cmd = app.add_subcommand("bench", "time kernel and matrix-power workloads");
    bench_cmd->add_option("--max-n", bench.max_n, "largest generated vertex count");
    bench_cmd->add_option("--max-k", bench.max_k, "largest power");
    bench_cmd->add_option("--max-terms", bench.max_terms, "term budget per product");
    bench_cmd->add_option("--seed", bench.seed, "generator seed");
    bench_cmd->add_option("--isa", bench.isa, "pin one instruction set (scalar, avx2, neon)");
    bench_cmd->callback([&] { job = [&] { return run_bench(io, bench); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        io.emit(job());
        return kExitOk;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace zeon
