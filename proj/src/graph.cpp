#include "isc/graph.hpp"

#include <algorithm>
#include <string>

namespace isc {

std::vector<Vertex> VertexSet::to_vector() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
        out.push_back(std::countr_zero(b));
    }
    return out;
}

Graph::Graph(int n)
{
    if (n < 0 || n > kMaxVertices) {
        throw GraphError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    }
    adjacency_.resize(n);
    masks_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " out of range");
        }
        if (e.u == e.v) {
            throw GraphError("loop at vertex " + std::to_string(e.u));
        }
        if (masks_[e.u].contains(e.v)) {
            throw GraphError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        }
        masks_[e.u].insert(e.v);
        masks_[e.v].insert(e.u);
        ++edge_count_;
    }
    for (int v = 0; v < n; ++v) {
        adjacency_[v] = masks_[v].to_vector();
    }
}

int Graph::max_degree() const
{
    int best = 0;
    for (int v = 0; v < order(); ++v) {
        best = std::max(best, degree(v));
    }
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

int Graph::edges_within(VertexSet s) const
{
    int twice = 0;
    for (Vertex v : s.to_vector()) {
        twice += (masks_[v] & s).size();
    }
    return twice / 2;
}

int Graph::edges_between(VertexSet a, VertexSet b) const
{
    int count = 0;
    for (Vertex v : a.to_vector()) {
        count += (masks_[v] & b).size();
    }
    return count;
}

std::vector<VertexSet> Graph::components(VertexSet region) const
{
    std::vector<VertexSet> out;
    VertexSet left = region;
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.lowest());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            Vertex v = frontier.lowest();
            frontier.erase(v);
            VertexSet fresh = (masks_[v] & region) - comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

bool Graph::is_connected() const
{
    return order() <= 1 || components(vertices()).size() == 1;
}

bool Graph::is_forest() const
{
    return edge_count_ == order() - static_cast<int>(components(vertices()).size());
}

bool Graph::is_clique(VertexSet s) const
{
    for (Vertex v : s.to_vector()) {
        if ((masks_[v] & s) != s - VertexSet::single(v)) {
            return false;
        }
    }
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet region)
{
    InducedSubgraph out;
    out.to_parent = region.to_vector();
    out.from_parent.assign(g.order(), -1);
    for (int i = 0; i < static_cast<int>(out.to_parent.size()); ++i) {
        out.from_parent[out.to_parent[i]] = i;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (region.contains(e.u) && region.contains(e.v)) {
            edges.push_back({out.from_parent[e.u], out.from_parent[e.v]});
        }
    }
    out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) {
        edges.push_back({e.u + a.order(), e.v + a.order()});
    }
    return Graph(a.order() + b.order(), edges);
}

} // namespace isc
