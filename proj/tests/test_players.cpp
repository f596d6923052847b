#include "doctest.h"

#include "isc/players.hpp"

#include <set>

using namespace isc;

namespace {

struct Instance {
    FamilySpec spec;
    Graph graph;
};

Instance load(const std::string& s)
{
    Instance in{parse_family_spec(s), {}};
    in.graph = generate(in.spec);
    return in;
}

Graph bowtie()
{
    const std::vector<Edge> e = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
    return Graph(5, e);
}

// Worst observed rounds over the deterministic adversaries and some seeds.
int heuristic_worst(const Graph& g, const Strategy& alice, int seeds = 300)
{
    std::vector<std::string> kinds = {"sequential", "fresh", "staircase", "evencycle"};
    for (int s = 0; s < seeds; ++s) kinds.push_back("random:" + std::to_string(s));
    int worst = 0;
    for (const auto& k : kinds) {
        auto bob = make_adversary(k, g);
        const GameRecord r = run_game(g, alice, *bob);
        REQUIRE(r.terminal());
        worst = std::max(worst, r.rounds);
    }
    return worst;
}

int rounds(const Graph& g, const Strategy& alice, const std::string& bob_kind,
           std::shared_ptr<GameSolver> solver = nullptr)
{
    auto bob = make_adversary(bob_kind, g, std::move(solver));
    return run_game(g, alice, *bob).rounds;
}

} // namespace

TEST_CASE("greedy fallback")
{
    const Graph k23 = load("kpq:2x3").graph;
    CHECK(strategy_worst_case(k23, *greedy_fallback(k23), 12) <= 11);
    const Graph k1 = load("complete:1").graph;
    CHECK(rounds(k1, *greedy_fallback(k1), "sequential") == 1);
    const Graph c5 = load("cycle:5").graph;
    CHECK(rounds(c5, *greedy_fallback(c5), "sequential") <= 10);
}

TEST_CASE("complete graphs")
{
    const Graph k3 = load("complete:3").graph;
    CHECK(rounds(k3, *complete_sequential(k3), "sequential") == 6);
    const Graph k4 = load("complete:4").graph;
    CHECK(rounds(k4, *complete_sequential(k4), "fresh") == 4);
    const Graph k5 = load("complete:5").graph;
    CHECK(heuristic_worst(k5, *complete_sequential(k5)) <= 15);
    for (int n = 1; n <= 8; ++n) {
        const Graph g = load("complete:" + std::to_string(n)).graph;
        CHECK(rounds(g, *complete_sequential(g), "sequential") == n * (n + 1) / 2);
    }
}

TEST_CASE("sc-greedy")
{
    const Graph p3 = load("path:3").graph;
    CHECK(strategy_worst_case(p3, *scgreedy_general(p3), 6) <= 4);
    const Graph k3 = load("complete:3").graph;
    CHECK(strategy_worst_case(k3, *scgreedy_general(k3), 8) <= 6);
    // every tree up to six vertices, against every Bob
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& t : connected_graphs(n)) {
            if (!t.is_tree()) continue;
            CHECK(strategy_worst_case(t, *scgreedy_general(t), 3 * n / 2 + 1) <= 3 * n / 2);
            CHECK(strategy_bound("scgreedy", t).bound == 3 * n / 2);
        }
    }
    for (int n = 7; n <= 12; ++n) {
        for (int seed = 0; seed < 4; ++seed) {
            const Graph t = load("tree:" + std::to_string(n) + ":" + std::to_string(seed)).graph;
            CHECK(heuristic_worst(t, *scgreedy_general(t), 200) <= 3 * n / 2);
        }
    }
}

TEST_CASE("stars")
{
    const Graph s3 = load("star:3").graph;
    CHECK(strategy_worst_case(s3, *star_strategy(s3), 8) <= 6);
    const Graph s1 = load("star:1").graph;
    CHECK(strategy_worst_case(s1, *star_strategy(s1), 5) <= 3);
    const Graph s10 = load("star:10").graph;
    CHECK(heuristic_worst(s10, *star_strategy(s10)) <= 15);
    for (int p = 1; p <= 10; ++p) {
        const Graph g = load("star:" + std::to_string(p)).graph;
        CHECK(rounds(g, *star_strategy(g), "staircase") == p + triangular_root(p) + 1);
    }
}

TEST_CASE("cycles")
{
    for (int n : {3, 4, 5, 6}) {
        const Graph g = load("cycle:" + std::to_string(n)).graph;
        const int want = 3 * (n + 1) / 2;
        CHECK(strategy_worst_case(g, *cycle_strategy(g), want + 1) <= want);
    }
    for (int n = 3; n <= 10; ++n) {
        const Graph g = load("cycle:" + std::to_string(n)).graph;
        CHECK(rounds(g, *cycle_strategy(g), n % 2 == 0 ? "evencycle" : "sequential") == 3 * (n + 1) / 2);
    }
}

TEST_CASE("clique minus an edge")
{
    for (auto [p, bound] : {std::pair{10, 53}, std::pair{11, 63}, std::pair{14, 101}}) {
        const Instance in = load("kminus:" + std::to_string(p));
        CHECK(strategy_bound("kminus", in.graph, in.spec).bound == bound);
        std::string warning;
        const StrategyPtr s = clique_minus_edge_strategy(in.graph, &warning);
        CHECK(warning.empty());
        CHECK(heuristic_worst(in.graph, *s, 100) <= bound);
    }
    std::string warning;
    const Graph small = load("kminus:6").graph;
    const StrategyPtr s = clique_minus_edge_strategy(small, &warning);
    CHECK_FALSE(warning.empty());
    SolverOptions forced;
    forced.force = true;
    auto solver = std::make_shared<GameSolver>(small, forced);
    CHECK(rounds(small, *s, "optimal", solver) <= small.order() + small.size());
}

TEST_CASE("complete bipartite")
{
    const Instance k28 = load("kpq:2x8");
    CHECK(strategy_bound("kpq", k28.graph, k28.spec).bound == 22);
    CHECK(heuristic_worst(k28.graph, *kpq_strategy(k28.graph)) <= 22);
    CHECK(closed_form(k28.spec)->isc->value == 26);
    const Instance k14 = load("kpq:1x4");
    CHECK(strategy_bound("kpq", k14.graph, k14.spec).bound == 7);
    CHECK(strategy_worst_case(k14.graph, *kpq_strategy(k14.graph), 9) <= 7);
    const Graph k23 = load("kpq:2x3").graph;
    CHECK(strategy_worst_case(k23, *kpq_strategy(k23), strategy_bound("kpq", k23).bound + 1) <=
          strategy_bound("kpq", k23).bound);
}

TEST_CASE("complete joins")
{
    const Instance fan = load("fan:19");
    const int bound = strategy_bound("join", fan.graph, fan.spec).bound;
    CHECK(bound == 37);
    CHECK(bound < 2 * fan.graph.order());
    CHECK(heuristic_worst(fan.graph, *complete_join_strategy(fan.graph), 200) <= 37);
    const Instance k28 = load("kpq:2x8");
    CHECK(strategy_bound("join", k28.graph, k28.spec).bound == 26);
    CHECK_THROWS_AS(complete_join_strategy(load("path:4").graph), PlayerRejected);
}

TEST_CASE("good 2-degenerate")
{
    const Graph c4 = load("cycle:4").graph;
    CHECK(strategy_bound("good2deg", c4).bound == 7);
    CHECK(strategy_worst_case(c4, *good2deg_strategy(c4), 8) <= 7);
    const Graph bt = bowtie();
    CHECK(strategy_bound("good2deg", bt).bound == 10);
    CHECK(strategy_worst_case(bt, *good2deg_strategy(bt), 11) <= 10);
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& t : connected_graphs(n)) {
            if (!t.is_tree()) continue;
            CHECK(strategy_worst_case(t, *good2deg_strategy(t), 3 * n / 2 + 1) <= 3 * n / 2);
        }
    }
    // small cacti against every Bob
    for (int seed = 0; seed < 10; ++seed) {
        const Instance in = load("cactus:" + std::to_string(5 + seed % 2) + ":" + std::to_string(seed));
        const int b = strategy_bound("good2deg", in.graph, in.spec).bound;
        CHECK(strategy_worst_case(in.graph, *good2deg_strategy(in.graph), b + 1) <= b);
    }
    for (int seed = 0; seed < 10; ++seed) {
        const Instance in = load("cactus:" + std::to_string(8 + seed) + ":" + std::to_string(seed));
        const int b = strategy_bound("good2deg", in.graph, in.spec).bound;
        CHECK(heuristic_worst(in.graph, *good2deg_strategy(in.graph), 100) <= b);
    }
    CHECK_THROWS_AS(good2deg_strategy(load("complete:4").graph), PlayerRejected);
}

TEST_CASE("grids")
{
    for (auto [k, l, bound] : {std::tuple{3, 3, 18}, std::tuple{4, 4, 34}, std::tuple{2, 4, 16}, std::tuple{3, 4, 25}}) {
        const Instance in = load("grid:" + std::to_string(k) + "x" + std::to_string(l));
        CHECK(strategy_bound("grid", in.graph, in.spec).bound == bound);
        CHECK(heuristic_worst(in.graph, *grid_strategy(in.graph, k, l)) <= bound);
    }
    const Graph g22 = load("grid:2x2").graph;
    CHECK(strategy_worst_case(g22, *grid_strategy(g22, 2, 2), 9) <= 8);
}

TEST_CASE("lower-bound adversaries against the optimal Alice")
{
    {
        const Graph k3 = load("complete:3").graph;
        auto solver = std::make_shared<GameSolver>(k3);
        CHECK(rounds(k3, *optimal_strategy(solver), "sequential") == 6);
    }
    {
        const Graph s6 = load("star:6").graph;
        auto solver = std::make_shared<GameSolver>(s6);
        CHECK(rounds(s6, *optimal_strategy(solver), "staircase") == 10);
    }
    {
        const Graph c4 = load("cycle:4").graph;
        auto solver = std::make_shared<GameSolver>(c4);
        CHECK(rounds(c4, *optimal_strategy(solver), "evencycle") == 7);
    }
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            auto bob = make_adversary("sequential", g);
            CHECK(best_response_rounds(g, *bob, g.order() + g.size()) >= 2 * n - max_independent_set_size(g));
        }
    }
}

TEST_CASE("built-in adversaries stay legal")
{
    // run_game disqualifies an adversary that repeats a colour in a list
    for (std::string s : {"path:5", "cycle:6", "star:6", "complete:4", "grid:3x3", "kpq:2x4", "fan:7"}) {
        const Instance in = load(s);
        const StrategyPtr alice = make_strategy(default_strategy_name(in.graph, in.spec), in.graph, in.spec);
        std::vector<std::string> kinds = {"sequential", "fresh", "staircase", "evencycle"};
        for (int seed = 0; seed < 100; ++seed) kinds.push_back("random:" + std::to_string(seed));
        for (const auto& k : kinds) {
            auto bob = make_adversary(k, in.graph);
            CHECK(run_game(in.graph, *alice, *bob).status != GameStatus::adversary_disqualified);
        }
    }
}

TEST_CASE("stable identifiers and rejections")
{
    CHECK(strategy_names() == std::vector<std::string>{"greedy", "complete", "scgreedy", "star", "cycle", "kminus",
                                                       "kpq", "join", "good2deg", "grid"});
    CHECK(adversary_names() ==
          std::vector<std::string>{"sequential", "fresh", "staircase", "evencycle", "random:SEED", "optimal"});
    const Graph c5 = load("cycle:5").graph;
    CHECK_THROWS_AS(star_strategy(c5), PlayerRejected);
    CHECK_THROWS_AS(kpq_strategy(c5), PlayerRejected);
    CHECK_THROWS_AS(complete_sequential(c5), PlayerRejected);
    CHECK_THROWS_AS(cycle_strategy(load("path:5").graph), PlayerRejected);
    CHECK_THROWS_AS(make_strategy("grid", c5), PlayerRejected);
    CHECK_THROWS_AS(make_strategy("nosuch", c5), PlayerRejected);
    CHECK_THROWS_AS(make_adversary("random", c5), PlayerRejected);
    CHECK_THROWS_AS(make_adversary("random:x", c5), PlayerRejected);
    CHECK_THROWS_AS(make_adversary("optimal", c5), PlayerRejected);
    CHECK_THROWS_AS(make_adversary("nosuch", c5), PlayerRejected);
    CHECK(make_adversary("random:7", c5)->name() == "random:7");
}

TEST_CASE("seeded random adversary is reproducible")
{
    const Instance in = load("grid:3x3");
    const StrategyPtr alice = grid_strategy(in.graph, 3, 3);
    auto a = make_adversary("random:42", in.graph);
    auto b = make_adversary("random:42", in.graph);
    const GameRecord ra = run_game(in.graph, *alice, *a);
    const GameRecord rb = run_game(in.graph, *alice, *b);
    CHECK(ra.trace == rb.trace);
}

TEST_CASE("default strategy names")
{
    CHECK(default_strategy_name(load("star:5").graph, load("star:5").spec) == "star");
    CHECK(default_strategy_name(load("cycle:5").graph, load("cycle:5").spec) == "cycle");
    CHECK(default_strategy_name(load("grid:3x4").graph, load("grid:3x4").spec) == "grid");
    CHECK(default_strategy_name(load("complete:4").graph, load("complete:4").spec) == "complete");
}
