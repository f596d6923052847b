#include "isc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace isc {

namespace {

struct FamilyAlias {
    std::string_view name;
    Family family;
};

constexpr FamilyAlias kAliases[] = {
    {"path", Family::path},
    {"cycle", Family::cycle},
    {"complete", Family::complete},
    {"kminus", Family::complete_minus_edge},
    {"star", Family::star},
    {"kpq", Family::complete_bipartite},
    {"grid", Family::grid},
    {"tree", Family::tree_random},
    {"cactus", Family::cactus_random},
    {"fan", Family::fan},
    {"file", Family::edge_list},
};

int parse_int(std::string_view text, std::string_view context)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw GraphError("expected an integer in '" + std::string(context) + "', got '" + std::string(text) + "'");
    }
    return value;
}

void require(bool ok, const FamilySpec& spec, std::string_view what)
{
    if (!ok) {
        throw GraphError("invalid parameters for '" + format_family_spec(spec) + "': " + std::string(what));
    }
}

std::vector<Edge> path_edges(int first, int count)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < count; ++i) {
        edges.push_back({first + i, first + i + 1});
    }
    return edges;
}

// Bounded draw that does not depend on the standard library's distribution implementation.
int draw(std::mt19937_64& rng, int bound)
{
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

Graph random_tree(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        edges.push_back({draw(rng, v), v});
    }
    return Graph(n, edges);
}

// Random tree skeleton where some attachments are cycles through an existing vertex.
Graph random_cactus(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    int next = 1;
    while (next < n) {
        int anchor = draw(rng, next);
        int room = n - next;
        if (room >= 2 && draw(rng, 2) == 0) {
            int len = 3 + draw(rng, std::min(room + 1, 6) - 2); // cycle length 3..min(room+1, 6)
            int prev = anchor;
            for (int i = 0; i < len - 1; ++i) {
                edges.push_back({prev, next});
                prev = next++;
            }
            edges.push_back({anchor, prev});
        } else {
            edges.push_back({anchor, next++});
        }
    }
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    return Graph(n, edges);
}

} // namespace

std::string_view family_name(Family f)
{
    for (const auto& alias : kAliases) {
        if (alias.family == f) return alias.name;
    }
    return "edges";
}

FamilySpec parse_family_spec(std::string_view text)
{
    auto colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    FamilySpec spec;
    auto it = std::find_if(std::begin(kAliases), std::end(kAliases), [&](const FamilyAlias& a) { return a.name == head; });
    if (it == std::end(kAliases)) {
        throw GraphError("unknown graph family '" + std::string(head) + "'");
    }
    spec.family = it->family;
    if (colon == std::string_view::npos) {
        throw GraphError("graph spec '" + std::string(text) + "' is missing parameters");
    }
    std::string_view rest = text.substr(colon + 1);
    if (spec.family == Family::edge_list) {
        spec.source = std::string(rest);
        return spec;
    }
    std::size_t start = 0;
    for (std::size_t i = 0; i <= rest.size(); ++i) {
        if (i == rest.size() || rest[i] == 'x' || rest[i] == ':') {
            spec.params.push_back(parse_int(rest.substr(start, i - start), text));
            start = i + 1;
        }
    }
    return spec;
}

std::string format_family_spec(const FamilySpec& spec)
{
    std::string out(family_name(spec.family));
    out += ':';
    if (spec.family == Family::edge_list) {
        return out + spec.source;
    }
    const char sep = (spec.family == Family::grid || spec.family == Family::complete_bipartite) ? 'x' : ':';
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(spec.params[i]);
    }
    return out;
}

Graph generate(const FamilySpec& spec)
{
    const auto& p = spec.params;
    auto arity = [&](std::size_t lo, std::size_t hi) {
        require(p.size() >= lo && p.size() <= hi, spec, "wrong number of parameters");
    };
    switch (spec.family) {
    case Family::path: {
        arity(1, 1);
        require(p[0] >= 1, spec, "path needs n >= 1");
        return Graph(p[0], path_edges(0, p[0]));
    }
    case Family::cycle: {
        arity(1, 1);
        require(p[0] >= 3, spec, "cycle needs n >= 3");
        auto edges = path_edges(0, p[0]);
        edges.push_back({0, p[0] - 1});
        return Graph(p[0], edges);
    }
    case Family::complete:
    case Family::complete_minus_edge: {
        arity(1, 1);
        const bool minus = spec.family == Family::complete_minus_edge;
        require(p[0] >= (minus ? 2 : 1), spec, minus ? "K_p - e needs p >= 2" : "complete graph needs p >= 1");
        std::vector<Edge> edges;
        for (int u = 0; u < p[0]; ++u) {
            for (int v = u + 1; v < p[0]; ++v) {
                if (!(minus && u == 0 && v == 1)) edges.push_back({u, v});
            }
        }
        return Graph(p[0], edges);
    }
    case Family::star: {
        arity(1, 1);
        require(p[0] >= 1, spec, "star needs p >= 1 leaves");
        std::vector<Edge> edges;
        for (int v = 1; v <= p[0]; ++v) edges.push_back({0, v});
        return Graph(p[0] + 1, edges);
    }
    case Family::complete_bipartite: {
        arity(2, 2);
        require(p[0] >= 1 && p[1] >= 1, spec, "K_{p,q} needs p, q >= 1");
        std::vector<Edge> edges;
        for (int u = 0; u < p[0]; ++u) {
            for (int v = 0; v < p[1]; ++v) edges.push_back({u, p[0] + v});
        }
        return Graph(p[0] + p[1], edges);
    }
    case Family::grid: {
        arity(2, 2);
        require(p[0] >= 1 && p[1] >= 1, spec, "grid needs k, l >= 1");
        const int rows = p[0];
        const int cols = p[1];
        require(rows * cols <= Graph::kMaxVertices, spec, "grid too large");
        std::vector<Edge> edges;
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                int v = i * cols + j;
                if (j + 1 < cols) edges.push_back({v, v + 1});
                if (i + 1 < rows) edges.push_back({v, v + cols});
            }
        }
        return Graph(rows * cols, edges);
    }
    case Family::tree_random:
    case Family::cactus_random: {
        arity(1, 2);
        require(p[0] >= 1, spec, "needs n >= 1");
        const std::uint64_t seed = p.size() > 1 ? static_cast<std::uint64_t>(p[1]) : 0;
        return spec.family == Family::tree_random ? random_tree(p[0], seed) : random_cactus(p[0], seed);
    }
    case Family::fan: {
        arity(1, 1);
        require(p[0] >= 2, spec, "fan needs n >= 2");
        auto edges = path_edges(1, p[0] - 1);
        for (int v = 1; v < p[0]; ++v) edges.push_back({0, v});
        return Graph(p[0], edges);
    }
    case Family::edge_list: {
        std::ifstream in(spec.source);
        if (!in) {
            throw GraphError("cannot read edge list '" + spec.source + "'");
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_edge_list(buffer.str());
    }
    }
    throw GraphError("unhandled family");
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    auto fail = [&](const std::string& why) {
        throw GraphError("edge list line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 0 || n > Graph::kMaxVertices) fail("expected a vertex count");
            continue;
        }
        int u = 0;
        int v = 0;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra)) fail("expected 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
        if (u == v) fail("loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) fail("duplicate edge");
        edges.push_back({u, v});
    }
    if (n < 0) {
        throw GraphError("edge list has no vertex count");
    }
    return Graph(n, edges);
}

std::string format_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

std::string canonical_hash(const Graph& g)
{
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out = "g" + std::to_string(g.order()) + "-";
    int nibble = 0;
    int filled = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            nibble = (nibble << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 4) {
                out += kHex[nibble];
                nibble = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += kHex[nibble << (4 - filled)];
    return out;
}

std::vector<Graph> connected_graphs(int n)
{
    if (n < 1 || n > 6) {
        throw GraphError("connected_graphs supports 1 <= n <= 6");
    }
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<int> slot_index(n * n);
    for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
        slot_index[slots[i].u * n + slots[i].v] = i;
        slot_index[slots[i].v * n + slots[i].u] = i;
    }
    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
            if ((mask >> i) & 1U) edges.push_back(slots[i]);
        }
        Graph g(n, edges);
        if (!g.is_connected()) continue;
        std::uint32_t canon = UINT32_MAX;
        for (const auto& p : perms) {
            std::uint32_t image = 0;
            for (const Edge& e : edges) image |= 1U << slot_index[p[e.u] * n + p[e.v]];
            canon = std::min(canon, image);
        }
        if (seen.insert(canon).second) out.push_back(std::move(g));
    }
    return out;
}

} // namespace isc
