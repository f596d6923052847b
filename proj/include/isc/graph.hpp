#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isc {

using Vertex = int;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Set of vertices of a graph with at most 64 vertices, stored as a bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet first(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr Vertex lowest() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

    std::vector<Vertex> to_vector() const;

private:
    std::uint64_t bits_ = 0;
};

struct Edge {
    Vertex u;
    Vertex v;
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);
    /// Throws GraphError on loops, duplicate edges or out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adjacency_.size()); }
    int size() const { return edge_count_; }
    VertexSet vertices() const { return VertexSet::first(order()); }

    const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_[v]; }
    VertexSet neighbour_set(Vertex v) const { return masks_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const { return masks_[u].contains(v); }
    int max_degree() const;

    /// Edges with u < v, sorted.
    std::vector<Edge> edges() const;
    int edges_within(VertexSet s) const;
    int edges_between(VertexSet a, VertexSet b) const;

    bool is_connected() const;
    bool is_forest() const;
    bool is_tree() const { return is_connected() && edge_count_ == order() - 1; }
    bool is_complete() const { return 2 * edge_count_ == order() * (order() - 1); }
    bool is_clique(VertexSet s) const;
    /// Connected components of G[region], ordered by lowest vertex.
    std::vector<VertexSet> components(VertexSet region) const;

    bool operator==(const Graph& o) const { return adjacency_ == o.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> masks_;
    int edge_count_ = 0;
};

/// G[region] relabelled onto 0..k-1 in increasing vertex order.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
    std::vector<Vertex> from_parent; // -1 outside the region
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet region);

/// Disjoint union; the vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// --- families -------------------------------------------------------------

enum class Family {
    path,
    cycle,
    complete,
    complete_minus_edge,
    star,
    complete_bipartite,
    grid,
    tree_random,
    cactus_random,
    fan,
    edge_list,
};

struct FamilySpec {
    Family family = Family::path;
    std::vector<int> params;
    std::string source; // edge_list file path

    bool operator==(const FamilySpec&) const = default;
};

std::string_view family_name(Family f);

/// Parses the CLI grammar: "path:5", "grid:3x4", "kpq:2x8", "tree:9:SEED", "file:PATH", ...
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

/// Deterministic given params and seed; throws GraphError on invalid params.
Graph generate(const FamilySpec& spec);

/// Edge-list text: first non-comment line "n", then lines "u v" with u < v.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// Stable key of the labelled edge set (not isomorphism invariant).
std::string canonical_hash(const Graph& g);

/// All connected graphs on n vertices up to isomorphism (n <= 6), brute force.
std::vector<Graph> connected_graphs(int n);

// --- structure ------------------------------------------------------------

int max_independent_set_size(const Graph& g);
int clique_number(const Graph& g);

struct InducedP3 {
    Vertex x; // endpoint
    Vertex y; // midpoint
    Vertex z; // endpoint, not adjacent to x
};

/// Lowest-index induced P3 inside region; none iff G[region] is a disjoint union of cliques.
std::optional<InducedP3> find_induced_p3(const Graph& g, VertexSet region);
std::optional<InducedP3> find_induced_p3(const Graph& g);

struct DegenerateOrdering {
    std::vector<Vertex> order;
    int q = 0; // vertices with two later neighbours (each closing a later cycle)
};

std::optional<DegenerateOrdering> good_2deg_ordering(const Graph& g, VertexSet region);
std::optional<DegenerateOrdering> good_2deg_ordering(const Graph& g);
/// Checks the two ordering invariants directly.
bool is_valid_2deg_ordering(const Graph& g, const DegenerateOrdering& ordering);

struct PathDecomposition {
    std::vector<std::vector<Vertex>> paths;
    std::vector<Edge> leftover_edges;
};

/// Grid vertices are numbered row-major: (i, j) -> i * cols + j, with k rows.
PathDecomposition grid_path_decomposition(int k, int l);

} // namespace isc
