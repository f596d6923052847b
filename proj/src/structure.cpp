#include "isc/graph.hpp"

#include <algorithm>

namespace isc {

namespace {

// Branch and bound on bitmasks: take or drop the lowest-degree vertex of the candidate set.
class IndependentSetSearch {
public:
    explicit IndependentSetSearch(std::vector<VertexSet> adjacency) : adjacency_(std::move(adjacency)) {}

    int run(VertexSet candidates)
    {
        best_ = 0;
        expand(candidates, 0);
        return best_;
    }

private:
    void expand(VertexSet candidates, int chosen)
    {
        if (candidates.empty()) {
            best_ = std::max(best_, chosen);
            return;
        }
        if (chosen + candidates.size() <= best_) return;

        Vertex pick = -1;
        int pick_degree = 65;
        for (Vertex v : candidates.to_vector()) {
            int d = (adjacency_[v] & candidates).size();
            if (d < pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        // A vertex of degree <= 1 within the candidates is always in some maximum set.
        expand(candidates - adjacency_[pick] - VertexSet::single(pick), chosen + 1);
        if (pick_degree > 1) {
            expand(candidates - VertexSet::single(pick), chosen);
        }
    }

    std::vector<VertexSet> adjacency_;
    int best_ = 0;
};

bool connected_avoiding(const Graph& g, VertexSet region, Vertex from, Vertex to)
{
    for (VertexSet comp : g.components(region)) {
        if (comp.contains(from)) return comp.contains(to);
    }
    return false;
}

} // namespace

int max_independent_set_size(const Graph& g)
{
    std::vector<VertexSet> adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbour_set(v);
    return IndependentSetSearch(std::move(adj)).run(g.vertices());
}

int clique_number(const Graph& g)
{
    std::vector<VertexSet> complement(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        complement[v] = g.vertices() - g.neighbour_set(v) - VertexSet::single(v);
    }
    return IndependentSetSearch(std::move(complement)).run(g.vertices());
}

std::optional<InducedP3> find_induced_p3(const Graph& g, VertexSet region)
{
    for (Vertex x : region.to_vector()) {
        for (Vertex y : (g.neighbour_set(x) & region).to_vector()) {
            VertexSet far = g.neighbour_set(y) & region;
            far -= g.neighbour_set(x);
            far.erase(x);
            far -= VertexSet::first(x + 1);
            if (!far.empty()) return InducedP3{x, y, far.lowest()};
        }
    }
    return std::nullopt;
}

std::optional<InducedP3> find_induced_p3(const Graph& g)
{
    return find_induced_p3(g, g.vertices());
}

std::optional<DegenerateOrdering> good_2deg_ordering(const Graph& g, VertexSet region)
{
    DegenerateOrdering result;
    VertexSet remaining = region;
    while (!remaining.empty()) {
        std::optional<Vertex> pick;
        for (Vertex v : remaining.to_vector()) {
            if ((g.neighbour_set(v) & remaining).size() <= 1) {
                pick = v;
                break;
            }
        }
        bool closes_cycle = false;
        if (!pick) {
            for (Vertex v : remaining.to_vector()) {
                VertexSet nb = g.neighbour_set(v) & remaining;
                if (nb.size() != 2) continue;
                auto ends = nb.to_vector();
                if (connected_avoiding(g, remaining - VertexSet::single(v), ends[0], ends[1])) {
                    pick = v;
                    closes_cycle = true;
                    break;
                }
            }
        }
        if (!pick) return std::nullopt;
        result.order.push_back(*pick);
        result.q += closes_cycle ? 1 : 0;
        remaining.erase(*pick);
    }
    return result;
}

std::optional<DegenerateOrdering> good_2deg_ordering(const Graph& g)
{
    return good_2deg_ordering(g, g.vertices());
}

bool is_valid_2deg_ordering(const Graph& g, const DegenerateOrdering& ordering)
{
    VertexSet suffix;
    for (Vertex v : ordering.order) suffix.insert(v);
    if (suffix.size() != static_cast<int>(ordering.order.size())) return false;
    int q = 0;
    for (Vertex v : ordering.order) {
        VertexSet later = g.neighbour_set(v) & suffix;
        later.erase(v);
        suffix.erase(v);
        if (later.size() > 2) return false;
        if (later.size() == 2) {
            auto ends = later.to_vector();
            if (!connected_avoiding(g, suffix, ends[0], ends[1])) return false;
            ++q;
        }
    }
    return q == ordering.q;
}

PathDecomposition grid_path_decomposition(int k, int l)
{
    if (k < 1 || l < 1) {
        throw GraphError("grid decomposition needs k, l >= 1");
    }
    auto id = [l](int row, int col) { return row * l + col; };
    PathDecomposition out;
    if (l % 2 == 1) {
        for (int i = 0; i < k; ++i) {
            auto& path = out.paths.emplace_back();
            for (int j = 0; j < l; ++j) path.push_back(id(i, j));
        }
    } else if (k % 2 == 1) {
        for (int j = 0; j < l; ++j) {
            auto& path = out.paths.emplace_back();
            for (int i = 0; i < k; ++i) path.push_back(id(i, j));
        }
    } else if (k <= l) {
        // Nested L shapes anchored at the top-right corner: row i leftwards part, then down column l-1-i.
        for (int i = 0; i < k; ++i) {
            auto& path = out.paths.emplace_back();
            for (int j = 0; j <= l - 1 - i; ++j) path.push_back(id(i, j));
            for (int r = i + 1; r < k; ++r) path.push_back(id(r, l - 1 - i));
        }
    } else {
        for (int j = 0; j < l; ++j) {
            auto& path = out.paths.emplace_back();
            for (int i = 0; i <= k - 1 - j; ++i) path.push_back(id(i, j));
            for (int c = j + 1; c < l; ++c) path.push_back(id(k - 1 - j, c));
        }
    }

    std::vector<Edge> covered;
    for (int p = 0; p < static_cast<int>(out.paths.size()); ++p) {
        const auto& path = out.paths[p];
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (i + 1 < path.size()) {
                covered.push_back({std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])});
            }
        }
    }
    std::sort(covered.begin(), covered.end());
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < l; ++j) {
            auto consider = [&](Edge e) {
                if (!std::binary_search(covered.begin(), covered.end(), e)) out.leftover_edges.push_back(e);
            };
            if (j + 1 < l) consider({id(i, j), id(i, j + 1)});
            if (i + 1 < k) consider({id(i, j), id(i + 1, j)});
        }
    }
    return out;
}

} // namespace isc
