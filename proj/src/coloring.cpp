#include "isc/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace isc {

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists))
{
    for (const auto& list : lists_) {
        std::set<Color> seen(list.begin(), list.end());
        if (seen.size() != list.size()) {
            throw IllegalMove("list contains a repeated colour");
        }
        if (!list.empty() && *seen.begin() < 0) {
            throw IllegalMove("colour ids must be non-negative");
        }
    }
}

bool ListAssignment::contains(Vertex v, Color c) const
{
    return std::find(lists_[v].begin(), lists_[v].end(), c) != lists_[v].end();
}

int ListAssignment::total_size() const
{
    int total = 0;
    for (const auto& list : lists_) total += static_cast<int>(list.size());
    return total;
}

std::vector<Color> ListAssignment::colors() const
{
    std::set<Color> all;
    for (const auto& list : lists_) all.insert(list.begin(), list.end());
    return {all.begin(), all.end()};
}

Color ListAssignment::fresh_color() const
{
    Color c = 1;
    for (Color used : colors()) {
        if (used == c) ++c;
        else if (used > c) break;
    }
    return c;
}

void ListAssignment::append(Vertex v, Color c)
{
    if (v < 0 || v >= order()) {
        throw IllegalMove("vertex " + std::to_string(v) + " out of range");
    }
    if (c < 0) {
        throw IllegalMove("colour ids must be non-negative");
    }
    if (contains(v, c)) {
        throw IllegalMove("colour " + std::to_string(c) + " already in the list of vertex " + std::to_string(v));
    }
    lists_[v].push_back(c);
}

ListAssignment ListAssignment::with_request(Vertex v, Color c) const
{
    ListAssignment next = *this;
    next.append(v, c);
    return next;
}

ListAssignment ListAssignment::without(std::span<const std::vector<Color>> forbidden) const
{
    ListAssignment out = *this;
    for (std::size_t v = 0; v < forbidden.size() && v < out.lists_.size(); ++v) {
        if (forbidden[v].empty()) continue;
        auto& list = out.lists_[v];
        std::erase_if(list, [&](Color c) {
            return std::find(forbidden[v].begin(), forbidden[v].end(), c) != forbidden[v].end();
        });
    }
    return out;
}

namespace {

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, const ListAssignment& lists, VertexSet region)
        : g_(g), lists_(lists), coloring_(g.order(), kNoColor), uncolored_(region)
    {
    }

    std::optional<Coloring> run()
    {
        if (solve()) return coloring_;
        return std::nullopt;
    }

private:
    bool available(Vertex v, Color c) const
    {
        for (Vertex u : g_.neighbours(v)) {
            if (coloring_[u] == c) return false;
        }
        return true;
    }

    bool solve()
    {
        if (uncolored_.empty()) return true;
        Vertex pick = -1;
        int fewest = 1 << 30;
        for (Vertex v : uncolored_.to_vector()) {
            int options = 0;
            for (Color c : lists_[v]) options += available(v, c) ? 1 : 0;
            if (options < fewest) {
                fewest = options;
                pick = v;
                if (options == 0) return false;
            }
        }
        uncolored_.erase(pick);
        for (Color c : lists_[pick]) {
            if (!available(pick, c)) continue;
            coloring_[pick] = c;
            if (solve()) return true;
        }
        coloring_[pick] = kNoColor;
        uncolored_.insert(pick);
        return false;
    }

    const Graph& g_;
    const ListAssignment& lists_;
    Coloring coloring_;
    VertexSet uncolored_;
};

} // namespace

std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& lists, VertexSet region)
{
    return ColoringSearch(g, lists, region).run();
}

std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& lists)
{
    return find_list_coloring(g, lists, g.vertices());
}

bool is_colorable(const Graph& g, const ListAssignment& lists, VertexSet region)
{
    return find_list_coloring(g, lists, region).has_value();
}

bool verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& coloring)
{
    if (static_cast<int>(coloring.size()) != g.order() || lists.order() != g.order()) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!lists.contains(v, coloring[v])) return false;
    }
    for (const Edge& e : g.edges()) {
        if (coloring[e.u] == coloring[e.v]) return false;
    }
    return true;
}

CanonicalState::CanonicalState(std::vector<std::uint64_t> occurrences) : occ_(std::move(occurrences))
{
    std::sort(occ_.begin(), occ_.end());
}

std::string CanonicalState::key() const
{
    std::uint64_t all = 0;
    for (auto m : occ_) all |= m;
    const int width = std::max(1, (64 - std::countl_zero(all) + 7) / 8);
    std::string out;
    out.reserve(1 + occ_.size() * width);
    out.push_back(static_cast<char>(width));
    for (auto m : occ_) {
        for (int b = 0; b < width; ++b) out.push_back(static_cast<char>((m >> (8 * b)) & 0xFF));
    }
    return out;
}

namespace {

std::map<Color, std::uint64_t> occurrence_sets(const ListAssignment& lists)
{
    std::map<Color, std::uint64_t> occ;
    for (Vertex v = 0; v < lists.order(); ++v) {
        for (Color c : lists[v]) occ[c] |= std::uint64_t{1} << v;
    }
    return occ;
}

} // namespace

CanonicalState canonicalize_state(const Graph& /*g*/, const ListAssignment& lists)
{
    std::vector<std::uint64_t> masks;
    for (const auto& [color, mask] : occurrence_sets(lists)) masks.push_back(mask);
    return CanonicalState(std::move(masks));
}

std::vector<Color> bob_move_classes(const Graph& /*g*/, const ListAssignment& lists, Vertex v)
{
    std::map<std::uint64_t, Color> by_occurrence;
    for (const auto& [color, mask] : occurrence_sets(lists)) {
        if ((mask >> v) & 1U) continue;
        by_occurrence.try_emplace(mask, color);
    }
    std::vector<Color> out;
    for (const auto& [mask, color] : by_occurrence) out.push_back(color);
    out.push_back(lists.fresh_color());
    return out;
}

ListAssignment apply_request(const ListAssignment& lists, Vertex v, Color c)
{
    return lists.with_request(v, c);
}

} // namespace isc
