#include "doctest.h"

#include "isc/coloring.hpp"
#include "isc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace isc;

namespace {

Graph spec(const std::string& s)
{
    return generate(parse_family_spec(s));
}

ListAssignment lists(std::vector<std::vector<Color>> l)
{
    return ListAssignment(std::move(l));
}

// Tries every element of the product of the lists.
bool brute_colorable(const Graph& g, const ListAssignment& l)
{
    const int n = g.order();
    std::vector<std::size_t> pick(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (l[v].empty()) return false;
    while (true) {
        bool ok = true;
        for (const Edge& e : g.edges())
            if (l[e.u][pick[e.u]] == l[e.v][pick[e.v]]) ok = false;
        if (ok) return true;
        int i = 0;
        while (i < n && ++pick[i] == l[i].size()) pick[i++] = 0;
        if (i == n) return false;
    }
}

ListAssignment random_lists(int n, int palette, int max_len, std::mt19937_64& rng)
{
    ListAssignment out(n);
    for (Vertex v = 0; v < n; ++v) {
        const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
        for (int i = 0; i < len; ++i) {
            const Color c = std::uniform_int_distribution<int>(1, palette)(rng);
            if (!out.contains(v, c)) out.append(v, c);
        }
    }
    return out;
}

ListAssignment rename(const ListAssignment& l, const std::vector<Color>& sigma)
{
    std::vector<std::vector<Color>> out(l.order());
    for (Vertex v = 0; v < l.order(); ++v)
        for (Color c : l[v]) out[v].push_back(sigma[c]);
    return ListAssignment(out);
}

} // namespace

TEST_CASE("find_list_coloring examples")
{
    const auto c4 = find_list_coloring(spec("cycle:4"), lists({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
    REQUIRE(c4.has_value());
    CHECK(*c4 == Coloring{1, 2, 1, 2});
    CHECK_FALSE(find_list_coloring(spec("complete:3"), lists({{1, 2}, {1, 2}, {1, 2}})).has_value());
    CHECK_FALSE(find_list_coloring(spec("path:3"), lists({{1}, {}, {1}})).has_value());
}

TEST_CASE("verify_coloring examples")
{
    CHECK(verify_coloring(spec("cycle:4"), lists({{1, 2}, {1, 2}, {1, 2}, {1, 2}}), {1, 2, 1, 2}));
    CHECK_FALSE(verify_coloring(spec("path:2"), lists({{1}, {1}}), {1, 1}));
    CHECK_FALSE(verify_coloring(spec("path:2"), lists({{1}, {2}}), {1, 3}));
}

TEST_CASE("list colouring agrees with product enumeration")
{
    std::mt19937_64 rng(11);
    int colourable = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + trial % 5;
        const auto all = connected_graphs(n);
        const Graph& g = all[trial % all.size()];
        const ListAssignment l = random_lists(n, 4, 3, rng);
        const auto found = find_list_coloring(g, l);
        CHECK(found.has_value() == brute_colorable(g, l));
        if (found) {
            CHECK(verify_coloring(g, l, *found));
            ++colourable;
        }
    }
    // both outcomes were exercised
    CHECK(colourable > 20);
    CHECK(colourable < 380);
}

TEST_CASE("region colouring ignores outside vertices")
{
    const Graph g = spec("path:3");
    const auto c = find_list_coloring(g, lists({{1}, {1}, {}}), VertexSet(0b001));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    CHECK((*c)[2] == kNoColor);
}

TEST_CASE("canonical states")
{
    const Graph g = spec("path:2");
    const auto shared = canonicalize_state(g, lists({{1}, {1}}));
    CHECK(shared.occurrences() == std::vector<std::uint64_t>{0b11});
    const auto apart = canonicalize_state(g, lists({{1}, {2}}));
    CHECK(apart.occurrences().size() == 2);
    CHECK(canonicalize_state(g, lists({{7}, {9}})) == apart);
    CHECK(shared.key() != apart.key());
}

TEST_CASE("renaming invariance of canonical states and colourability")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 5;
        const auto all = connected_graphs(n);
        const Graph& g = all[(trial / 5) % all.size()];
        // a state reachable within 6 rounds
        ListAssignment l(n);
        for (int round = 0; round < 6; ++round) {
            const Vertex v = std::uniform_int_distribution<int>(0, n - 1)(rng);
            const Color c = std::uniform_int_distribution<int>(1, 5)(rng);
            if (!l.contains(v, c)) l.append(v, c);
        }
        std::vector<Color> sigma(6);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin() + 1, sigma.end(), rng);
        for (auto& s : sigma) s = s * 3 + 100;
        const ListAssignment r = rename(l, sigma);
        CHECK(canonicalize_state(g, l) == canonicalize_state(g, r));
        CHECK(is_colorable(g, l, g.vertices()) == is_colorable(g, r, g.vertices()));
    }
}

TEST_CASE("bob move classes")
{
    const Graph p3 = spec("path:3");
    const auto classes = bob_move_classes(p3, lists({{1}, {}, {2}}), 1);
    CHECK(classes.size() == 3);
    CHECK(std::count(classes.begin(), classes.end(), 1) == 1);
    CHECK(std::count(classes.begin(), classes.end(), 2) == 1);
    CHECK(classes.back() == 3);
    CHECK(bob_move_classes(p3, ListAssignment(3), 0).size() == 1);
    const auto k2 = bob_move_classes(spec("path:2"), lists({{1}, {}}), 0);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == 2);
}

TEST_CASE("apply_request")
{
    const ListAssignment l = lists({{1}, {}});
    CHECK(apply_request(l, 1, 1) == lists({{1}, {1}}));
    CHECK_THROWS_AS(apply_request(l, 0, 1), IllegalMove);
    CHECK(apply_request(ListAssignment(2), 0, 5) == lists({{5}, {}}));
    CHECK_THROWS_AS(apply_request(l, 0, -2), IllegalMove);
    CHECK_THROWS_AS(apply_request(l, 2, 3), IllegalMove);
    CHECK(ListAssignment(2).fresh_color() == 1);
    CHECK(lists({{1, 2}, {4}}).fresh_color() == 3);
}

TEST_CASE("forbidden colours are filtered")
{
    const ListAssignment l = lists({{1, 2, 3}, {2}});
    const ForbiddenMap f = {{2}, {}};
    CHECK(l.without(f) == lists({{1, 3}, {2}}));
}
