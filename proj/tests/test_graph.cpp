#include "doctest.h"

#include "isc/graph.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace isc;

namespace {

Graph spec(const std::string& s)
{
    return generate(parse_family_spec(s));
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, edges);
}

// Subset enumeration, the obvious way.
int brute_alpha(const Graph& g)
{
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << g.order()); ++s) {
        bool ok = true;
        for (const Edge& e : g.edges())
            if ((s >> e.u & 1) && (s >> e.v & 1)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

int brute_omega(const Graph& g)
{
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << g.order()); ++s) {
        bool ok = true;
        for (int u = 0; u < g.order() && ok; ++u)
            for (int v = u + 1; v < g.order() && ok; ++v)
                if ((s >> u & 1) && (s >> v & 1) && !g.adjacent(u, v)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

} // namespace

TEST_CASE("family sizes")
{
    for (int n = 1; n <= 12; ++n) {
        CHECK(spec("path:" + std::to_string(n)).size() == n - 1);
        if (n >= 3) CHECK(spec("cycle:" + std::to_string(n)).size() == n);
    }
    for (int k = 1; k <= 6; ++k)
        for (int l = 1; l <= 6; ++l) {
            const Graph g = spec("grid:" + std::to_string(k) + "x" + std::to_string(l));
            CHECK(g.order() == k * l);
            CHECK(g.size() == k * (l - 1) + l * (k - 1));
        }
    CHECK(spec("complete:5").size() == 10);
    CHECK(spec("kminus:6").size() == 14);
    CHECK(spec("star:7").order() == 8);
    CHECK(spec("star:7").size() == 7);
    CHECK(spec("kpq:2x8").size() == 16);
    // hub plus a path on n-1 vertices
    CHECK(spec("fan:19").size() == 18 + 17);
    CHECK(spec("tree:9:4").is_tree());
    CHECK(spec("tree:9:4") == spec("tree:9:4"));
}

TEST_CASE("spec grammar round trip and errors")
{
    for (std::string s : {"path:5", "cycle:6", "grid:3x4", "kpq:2x8", "star:7", "complete:4", "kminus:10", "fan:19"}) {
        CHECK(format_family_spec(parse_family_spec(s)) == s);
    }
    CHECK_THROWS_AS(parse_family_spec("wheel:5"), GraphError);
    CHECK_THROWS_AS(parse_family_spec("path"), GraphError);
    CHECK_THROWS_AS(parse_family_spec("path:x"), GraphError);
    CHECK_THROWS_AS(generate(parse_family_spec("cycle:2")), GraphError);
    CHECK_THROWS_AS(generate(parse_family_spec("grid:3")), GraphError);
}

TEST_CASE("edge list text")
{
    const Graph g = parse_edge_list("# bowtie\n5\n0 1\n0 2\n1 2\n# second triangle\n2 3\n2 4\n3 4\n");
    CHECK(g.order() == 5);
    CHECK(g.size() == 6);
    CHECK(parse_edge_list(format_edge_list(g)) == g);
    CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1\n0 1\n"), GraphError);
}

TEST_CASE("canonical hash")
{
    CHECK(canonical_hash(spec("path:3")) == canonical_hash(spec("path:3")));
    CHECK(canonical_hash(spec("path:3")) != canonical_hash(spec("complete:3")));
    const std::vector<Edge> a = {{0, 1}, {1, 2}, {2, 3}};
    const std::vector<Edge> b = {{2, 3}, {0, 1}, {1, 2}};
    CHECK(canonical_hash(Graph(4, a)) == canonical_hash(Graph(4, b)));
    // same edges, extra isolated vertex
    CHECK(canonical_hash(Graph(4, a)) != canonical_hash(Graph(5, a)));
}

TEST_CASE("connected graphs up to isomorphism")
{
    // 1, 1, 2, 6, 21, 112
    const int counts[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        const auto all = connected_graphs(n);
        CHECK(static_cast<int>(all.size()) == counts[n - 1]);
        for (const Graph& g : all) CHECK(g.is_connected());
    }
}

TEST_CASE("stable sets and cliques against subset enumeration")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 8;
        const Graph g = random_graph(n, 0.15 + 0.1 * (trial % 7), rng);
        CHECK(max_independent_set_size(g) == brute_alpha(g));
        CHECK(clique_number(g) == brute_omega(g));
    }
    CHECK(max_independent_set_size(spec("cycle:5")) == 2);
    CHECK(max_independent_set_size(spec("kpq:2x3")) == 3);
    CHECK(clique_number(spec("kminus:6")) == 5);
}

TEST_CASE("induced P3")
{
    CHECK_FALSE(find_induced_p3(spec("complete:4")).has_value());
    const auto p = find_induced_p3(spec("path:3"));
    REQUIRE(p.has_value());
    CHECK(p->y == 1);
    CHECK_FALSE(spec("path:3").adjacent(p->x, p->z));
    // two disjoint triangles: cliques only
    const std::vector<Edge> e = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    CHECK_FALSE(find_induced_p3(Graph(6, e)).has_value());
}

TEST_CASE("good 2-degenerate orderings satisfy their invariants")
{
    for (int seed = 0; seed < 30; ++seed) {
        const Graph g = spec("cactus:" + std::to_string(4 + seed % 9) + ":" + std::to_string(seed));
        const auto o = good_2deg_ordering(g);
        REQUIRE(o.has_value());
        CHECK(is_valid_2deg_ordering(g, *o));
    }
    const auto tree = good_2deg_ordering(spec("tree:10:2"));
    REQUIRE(tree.has_value());
    CHECK(tree->q == 0);
    const auto c4 = good_2deg_ordering(spec("cycle:4"));
    REQUIRE(c4.has_value());
    CHECK(c4->q == 1);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(6, 0.4, rng);
        if (auto o = good_2deg_ordering(g)) CHECK(is_valid_2deg_ordering(g, *o));
    }
    CHECK_FALSE(good_2deg_ordering(spec("complete:4")).has_value());
}

TEST_CASE("grid path decomposition")
{
    auto lengths = [](const PathDecomposition& d) {
        std::vector<int> out;
        for (const auto& p : d.paths) out.push_back(static_cast<int>(p.size()));
        return out;
    };
    const auto d44 = grid_path_decomposition(4, 4);
    CHECK(lengths(d44) == std::vector<int>{7, 5, 3, 1});
    CHECK(d44.leftover_edges.size() == 12);
    const auto d34 = grid_path_decomposition(3, 4);
    CHECK(lengths(d34) == std::vector<int>{3, 3, 3, 3});
    CHECK(d34.leftover_edges.size() == 9);
    const auto d15 = grid_path_decomposition(1, 5);
    CHECK(lengths(d15) == std::vector<int>{5});
    CHECK(d15.leftover_edges.empty());

    for (int k = 1; k <= 8; ++k) {
        for (int l = k; l <= 8; ++l) {
            const Graph g = spec("grid:" + std::to_string(k) + "x" + std::to_string(l));
            const auto d = grid_path_decomposition(k, l);
            std::multiset<Edge> covered(d.leftover_edges.begin(), d.leftover_edges.end());
            std::set<Vertex> seen;
            for (const auto& path : d.paths) {
                for (std::size_t i = 0; i < path.size(); ++i) {
                    CHECK(seen.insert(path[i]).second);
                    if (i > 0) covered.insert({std::min(path[i - 1], path[i]), std::max(path[i - 1], path[i])});
                }
            }
            CHECK(static_cast<int>(seen.size()) == k * l);
            const auto edges = g.edges();
            CHECK(std::vector<Edge>(covered.begin(), covered.end()) == edges);
        }
    }
}

TEST_CASE("components and induced subgraphs")
{
    const Graph g = disjoint_union(spec("path:3"), spec("complete:2"));
    CHECK(g.order() == 5);
    CHECK(g.components(g.vertices()).size() == 2);
    const auto sub = induced_subgraph(spec("cycle:5"), VertexSet(0b00111));
    CHECK(sub.graph.size() == 2);
    CHECK(sub.to_parent == std::vector<Vertex>{0, 1, 2});
}
