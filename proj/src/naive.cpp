#include "isc/solver.hpp"

#include <algorithm>
#include <unordered_map>
#include <set>

namespace isc {

namespace {

using Lists = std::vector<std::vector<Color>>;

// Decision search: can Alice finish within depth rounds? The value is the least such depth.
class NaiveSearch {
public:
    NaiveSearch(const Graph& g, int palette, bool full_palette) : g_(g), palette_(palette), full_(full_palette) {}

    bool wins(Lists& lists, int depth)
    {
        std::string key = serialize(lists, depth);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool result = find_list_coloring(g_, ListAssignment(lists)).has_value();
        for (Vertex v = 0; !result && depth > 0 && v < g_.order(); ++v) {
            // More colours than neighbours: v is colourable whatever the others get.
            if (static_cast<int>(lists[v].size()) > g_.degree(v)) continue;
            bool all = true;
            for (Color c : responses(lists, v)) {
                auto& list = lists[v];
                list.insert(std::lower_bound(list.begin(), list.end(), c), c);
                all = wins(lists, depth - 1);
                list.erase(std::find(list.begin(), list.end(), c));
                if (!all) break;
            }
            result = all;
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    std::vector<Color> responses(const Lists& lists, Vertex v) const
    {
        std::set<Color> present;
        for (const auto& list : lists) present.insert(list.begin(), list.end());
        std::vector<Color> out;
        bool unused_taken = false;
        for (Color c = 1; c <= palette_; ++c) {
            if (std::binary_search(lists[v].begin(), lists[v].end(), c)) continue;
            if (!full_ && !present.contains(c)) {
                if (unused_taken) continue;
                unused_taken = true;
            }
            out.push_back(c);
        }
        return out;
    }

    const Graph& g_;
    int palette_;
    bool full_;
    static std::string serialize(const Lists& lists, int depth)
    {
        std::string out(1, static_cast<char>(depth));
        for (const auto& list : lists) {
            for (Color c : list) out.push_back(static_cast<char>(c));
            out.push_back('|');
        }
        return out;
    }

    std::unordered_map<std::string, bool> memo_;
};

} // namespace

int isc_exact_naive(const Graph& g, int palette_size, NaiveOptions options)
{
    if (g.order() > options.max_vertices && !options.force) {
        throw InstanceTooLarge("instance too large for the naive solver: " + std::to_string(g.order()) +
                               " vertices exceeds the guard of " + std::to_string(options.max_vertices));
    }
    const int cap = g.order() + g.size();
    if (palette_size < cap) {
        throw std::invalid_argument("palette must hold at least n + m colours");
    }
    Lists lists(g.order());
    NaiveSearch search(g, palette_size, options.full_palette);
    for (int k = 0; k < cap; ++k) {
        if (search.wins(lists, k)) return k;
    }
    return cap;
}

} // namespace isc
