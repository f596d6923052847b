#include "doctest.h"

#include "isc/players.hpp"
#include "isc/solver.hpp"

#include <cmath>
#include <random>

using namespace isc;

namespace {

Graph spec(const std::string& s)
{
    return generate(parse_family_spec(s));
}

std::vector<Graph> connected_up_to(int n)
{
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k)
        for (Graph& g : connected_graphs(k)) out.push_back(std::move(g));
    return out;
}

ListAssignment lists(std::vector<std::vector<Color>> l)
{
    return ListAssignment(std::move(l));
}

XscOptions forced_xsc()
{
    XscOptions o;
    o.force = true;
    return o;
}

} // namespace

TEST_CASE("isc_exact examples")
{
    CHECK(isc_exact(spec("complete:4")).value == 10);
    CHECK(isc_exact(spec("cycle:4")).value == 7);
    CHECK(isc_exact(spec("path:4")).value == 6);
    CHECK(isc_exact(spec("path:4")).value == isc_exact_naive(spec("path:4"), 7));
    CHECK(isc_exact(spec("complete:5")).value == 15);
    CHECK(isc_exact(spec("kpq:2x3")).value == 8);
    CHECK(isc_exact(Graph(0)).value == 0);
}

TEST_CASE("game_value examples")
{
    CHECK(game_value(spec("path:3"), lists({{1}, {1}, {1}})) == 1);
    CHECK(game_value(spec("path:3"), lists({{1}, {2}, {1}})) == 0);
    CHECK(game_value(spec("cycle:4"), lists({{1}, {1}, {2}, {2}})) == 3);
}

TEST_CASE("naive oracle examples")
{
    CHECK(isc_exact_naive(spec("path:3"), 5) == 4);
    CHECK(isc_exact_naive(spec("complete:3"), 6) == 6);
    CHECK(isc_exact_naive(spec("path:2"), 3) == 3);
    CHECK_THROWS_AS(isc_exact_naive(spec("path:3"), 4), std::invalid_argument);
    CHECK_THROWS_AS(isc_exact_naive(spec("path:6"), 11), InstanceTooLarge);
}

TEST_CASE("naive oracle with the whole palette agrees on tiny graphs")
{
    NaiveOptions full;
    full.full_palette = true;
    for (std::string s : {"path:2", "path:3", "complete:3", "cycle:4"}) {
        const Graph g = spec(s);
        CHECK(isc_exact_naive(g, g.order() + g.size(), full) == isc_exact(g).value);
    }
}

TEST_CASE("oracle equivalence on every connected graph up to five vertices")
{
    for (const Graph& g : connected_up_to(5)) {
        CHECK(isc_exact(g).value == isc_exact_naive(g, g.order() + g.size()));
    }
}

TEST_CASE("sandwich")
{
    for (const Graph& g : connected_up_to(5)) {
        const int isc = isc_exact(g).value;
        const BoundsReport b = bounds(g);
        CHECK(b.stable_lower <= isc);
        CHECK(isc <= b.greedy);
        CHECK(isc <= xsc_exact(g, forced_xsc()).value);
    }
}

TEST_CASE("xsc examples")
{
    CHECK(xsc_exact(spec("kpq:2x3")).value == 10);
    CHECK(xsc_exact(spec("path:3")).value == 5);
    CHECK(xsc_exact(spec("cycle:4")).value == 8);
    const SolveResult r = xsc_exact(spec("cycle:4"));
    int sum = 0;
    for (int f : r.choice_function) sum += f;
    CHECK(sum == 8);
    CHECK(is_choice_function(spec("cycle:4"), r.choice_function).ok);
}

TEST_CASE("choice functions")
{
    CHECK(is_choice_function(spec("kpq:2x3"), std::vector<int>(5, 2)).ok);
    const ChoiceCheck k3 = is_choice_function(spec("complete:3"), std::vector<int>(3, 2));
    CHECK_FALSE(k3.ok);
    REQUIRE(k3.witness.has_value());
    const ListAssignment& w = *k3.witness;
    CHECK(w[0].size() == 2);
    CHECK(std::vector<Color>(w[0].begin(), w[0].end()) == std::vector<Color>(w[1].begin(), w[1].end()));
    CHECK(std::vector<Color>(w[1].begin(), w[1].end()) == std::vector<Color>(w[2].begin(), w[2].end()));
    CHECK_FALSE(find_list_coloring(spec("complete:3"), w).has_value());
    CHECK(is_choice_function(spec("path:2"), {1, 2}).ok);
    CHECK_FALSE(is_choice_function(spec("path:2"), {1, 1}).ok);
}

TEST_CASE("choice functions are monotone")
{
    std::mt19937_64 rng(13);
    const auto pool = connected_up_to(4);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph& g = pool[trial % pool.size()];
        std::vector<int> f(g.order());
        for (Vertex v = 0; v < g.order(); ++v) f[v] = std::uniform_int_distribution<int>(1, g.degree(v) + 1)(rng);
        if (!is_choice_function(g, f).ok) continue;
        std::vector<int> bigger = f;
        bigger[std::uniform_int_distribution<int>(0, g.order() - 1)(rng)] += 1;
        CHECK(is_choice_function(g, bigger, forced_xsc()).ok);
    }
}

TEST_CASE("size guards need an explicit override")
{
    CHECK_THROWS_AS(isc_exact(spec("path:8")), InstanceTooLarge);
    CHECK_THROWS_AS(xsc_exact(spec("path:7")), InstanceTooLarge);
    CHECK_THROWS_AS(xsc_exact(spec("cycle:6"), XscOptions{6, 10, false}), InstanceTooLarge);
    SolverOptions forced;
    forced.force = true;
    CHECK(isc_exact(spec("star:7"), false, forced).value == 7 + 3 + 1);
}

TEST_CASE("policy self-play reproduces the value")
{
    for (const Graph& g : connected_up_to(5)) {
        const SolveResult r = isc_exact(g, true);
        REQUIRE(r.policy);
        auto bob = make_adversary("optimal", g, r.policy);
        const GameRecord rec = run_game(g, *optimal_strategy(r.policy), *bob);
        CHECK(rec.terminal());
        CHECK(rec.rounds == r.value);
    }
}

TEST_CASE("parallel and single-threaded solves agree")
{
    for (std::string s : {"complete:4", "cycle:5", "kpq:2x3", "star:5", "kminus:5"}) {
        SolverOptions parallel;
        parallel.threads = 3;
        CHECK(isc_exact(spec(s), false, parallel).value == isc_exact(spec(s)).value);
    }
}

TEST_CASE("solver json has no wall time")
{
    const auto j = isc_exact(spec("path:3")).to_json("path:3");
    CHECK(j["value"] == 4);
    CHECK(j["quantity"] == "isc");
    CHECK_FALSE(j.contains("elapsed_ms"));
}

TEST_CASE("bounds examples")
{
    const BoundsReport k23 = bounds(spec("kpq:2x3"));
    CHECK(k23.greedy == 11);
    CHECK(k23.stable_lower == 7);
    CHECK(k23.nontree_xsc_lower == 10);
    const BoundsReport p4 = bounds(spec("path:4"));
    CHECK(p4.greedy == 7);
    CHECK(p4.stable_lower == 6);
    CHECK_FALSE(p4.nontree_xsc_lower.has_value());
    const BoundsReport c5 = bounds(spec("cycle:5"));
    CHECK(c5.greedy == 10);
    CHECK(c5.stable_lower == 8);
    CHECK(c5.nontree_xsc_lower == 10);
}

TEST_CASE("closed forms")
{
    auto isc_of = [](const std::string& s) { return closed_form(parse_family_spec(s))->isc; };
    CHECK(isc_of("cycle:5")->value == 9);
    CHECK(isc_of("cycle:5")->kind == BoundKind::exact);
    CHECK(isc_of("star:10")->value == 15);
    CHECK(isc_of("complete:6")->value == 21);
    CHECK(isc_of("kminus:11")->value == 63);
    CHECK(isc_of("kminus:14")->value == 101);
    CHECK(isc_of("kpq:2x8")->value == 26);
    CHECK(isc_of("fan:19")->value == 37);
    CHECK(isc_of("grid:2x4")->value == 16);
    CHECK(isc_of("grid:3x3")->value == 18);
    CHECK(closed_form(parse_family_spec("kpq:2x3"))->xsc->value == 10);
    for (auto [n, want] : {std::pair{3, 20}, std::pair{6, 43}, std::pair{9, 66}}) {
        CHECK(closed_form(parse_family_spec("grid:3x" + std::to_string(n)))->xsc->value == want);
    }
    // bowtie has no family
    CHECK_FALSE(closed_form(parse_family_spec("file:/nonexistent")).has_value());
}

TEST_CASE("closed forms agree with the solver where both exist")
{
    for (std::string s : {"path:2", "path:5", "cycle:3", "cycle:5", "complete:3", "star:3", "star:5", "kpq:1x4"}) {
        const auto cf = closed_form(parse_family_spec(s));
        REQUIRE(cf);
        REQUIRE(cf->isc);
        REQUIRE(cf->isc->kind == BoundKind::exact);
        CHECK(cf->isc->value == isc_exact(spec(s)).value);
    }
    const auto k23 = closed_form(parse_family_spec("kpq:2x3"));
    CHECK(k23->isc->kind == BoundKind::upper);
    CHECK(isc_exact(spec("kpq:2x3")).value <= k23->isc->value);
}

TEST_CASE("grid formulas")
{
    const GridBounds g33 = grid_bound_formulas(3, 3);
    CHECK(g33.isc_upper == Rational(18));
    // three rows form one band of three: equals xsc(P3 x P3) = 20
    CHECK(g33.xsc_lower == Rational(20));
    CHECK(g33.gap_lower >= Rational(9, 18));
    CHECK(grid_bound_formulas(3, 4).isc_upper == Rational(25));
    CHECK(grid_bound_formulas(4, 4).isc_upper == Rational(34));
    // k = 5: one band of three and one of two
    const GridBounds g55 = grid_bound_formulas(5, 5);
    CHECK(g55.r == 1);
    CHECK(g55.s == 1);
    CHECK(g55.xsc_lower == Rational(23, 3) * 5 + 25 - 3 - 2);
    for (int k = 3; k <= 20; ++k)
        for (int l = k; l <= 20; ++l) CHECK(grid_bound_formulas(k, l).gap_lower >= Rational(k * l, 18));
    CHECK_THROWS_AS(grid_bound_formulas(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(grid_bound_formulas(5, 4), std::invalid_argument);
}

TEST_CASE("numeric helpers")
{
    for (long long p = 0; p <= 500; ++p) {
        int q = 0;
        while ((q + 1) * (q + 2) / 2 <= p) ++q;
        CHECK(triangular_root(p) == q);
    }
    for (long long c = 0; c <= 40; ++c)
        for (long long x = 0; x <= 60; ++x) {
            const long long want = static_cast<long long>(std::floor(c * std::sqrt(static_cast<long double>(x)) + 1e-12L));
            CHECK(floor_mul_sqrt(c, x) == want);
        }
    CHECK(floor_mul_sqrt(4, 16) == 16);
    CHECK(floor_mul_sqrt(3, 36) == 18);
    CHECK(floor_mul_sqrt(1000000, 2) == 1414213);
}
