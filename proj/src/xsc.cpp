#include "isc/solver.hpp"

#include <chrono>
#include <numeric>

namespace isc {

namespace {

// Lists are assigned vertex by vertex with colours in restricted-growth form: a list may use
// any colour seen so far plus the next few unseen ones, which covers every assignment up to
// renaming. A prefix that is already uncolourable stays so, which prunes the search.
class AssignmentSearch {
public:
    AssignmentSearch(const Graph& g, const std::vector<int>& f, std::vector<Vertex> order)
        : g_(g), f_(f), order_(std::move(order)), lists_(g.order())
    {
        universe_ = std::accumulate(f.begin(), f.end(), 0);
    }

    std::optional<ListAssignment> find_bad()
    {
        if (place(0, 0, VertexSet())) return complete();
        return std::nullopt;
    }

private:
    bool place(std::size_t index, int used, VertexSet placed)
    {
        if (index == order_.size()) return false;
        const Vertex v = order_[index];
        const int size = f_[v];
        placed.insert(v);
        for (int fresh = 0; fresh <= size && used + fresh <= universe_; ++fresh) {
            const int old = size - fresh;
            if (old > used) continue;
            std::vector<Color> pick(old);
            std::iota(pick.begin(), pick.end(), 1);
            while (true) {
                auto& list = lists_[v];
                list = pick;
                for (int j = 1; j <= fresh; ++j) list.push_back(used + j);
                if (!find_list_coloring(g_, ListAssignment(lists_), placed)) return true;
                if (place(index + 1, used + fresh, placed)) return true;
                if (!next_combination(pick, used)) break;
            }
        }
        lists_[v].clear();
        return false;
    }

    static bool next_combination(std::vector<Color>& pick, int top)
    {
        const int k = static_cast<int>(pick.size());
        for (int i = k - 1; i >= 0; --i) {
            if (pick[i] < top - (k - 1 - i)) {
                ++pick[i];
                for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                return true;
            }
        }
        return false;
    }

    ListAssignment complete()
    {
        Color next = 1;
        for (const auto& list : lists_) {
            for (Color c : list) next = std::max(next, c + 1);
        }
        for (Vertex v = 0; v < g_.order(); ++v) {
            while (static_cast<int>(lists_[v].size()) < f_[v]) lists_[v].push_back(next++);
        }
        return ListAssignment(lists_);
    }

    const Graph& g_;
    const std::vector<int>& f_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Color>> lists_;
    int universe_ = 0;
};

std::vector<Vertex> search_order(const Graph& g)
{
    std::vector<Vertex> order;
    VertexSet seen;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (seen.contains(root)) continue;
        seen.insert(root);
        order.push_back(root);
        for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
            for (Vertex u : g.neighbours(order[i])) {
                if (!seen.contains(u)) {
                    seen.insert(u);
                    order.push_back(u);
                }
            }
        }
    }
    return order;
}

void check_guard(const Graph& g, int sum, const XscOptions& options)
{
    if (options.force) return;
    if (g.order() > options.max_vertices) {
        throw InstanceTooLarge("instance too large for xsc: " + std::to_string(g.order()) +
                               " vertices exceeds the guard of " + std::to_string(options.max_vertices) +
                               " (use --force to override)");
    }
    if (sum > options.max_sum) {
        throw InstanceTooLarge("xsc search reached list sum " + std::to_string(sum) + " beyond the guard of " +
                               std::to_string(options.max_sum) + " (use --force to override)");
    }
}

// Calls visit on every f with 1 <= f(v) <= d(v)+1 summing to total, in lexicographic order.
template <class Visit>
bool each_choice_function(const Graph& g, int total, Visit&& visit)
{
    std::vector<int> f(g.order(), 1);
    std::vector<int> room_after(g.order() + 1, 0);
    for (Vertex v = g.order() - 1; v >= 0; --v) room_after[v] = room_after[v + 1] + g.degree(v);
    auto rec = [&](auto&& self, Vertex v, int left) -> bool {
        if (v == g.order()) return left == 0 ? visit(f) : false;
        for (int extra = 0; extra <= g.degree(v) && extra <= left; ++extra) {
            if (left - extra > room_after[v + 1]) continue;
            f[v] = 1 + extra;
            if (self(self, v + 1, left - extra)) return true;
        }
        f[v] = 1;
        return false;
    };
    return rec(rec, 0, total - g.order());
}

} // namespace

ChoiceCheck is_choice_function(const Graph& g, const std::vector<int>& f, XscOptions options)
{
    if (static_cast<int>(f.size()) != g.order()) {
        throw std::invalid_argument("choice function needs one value per vertex");
    }
    for (int x : f) {
        if (x < 1) throw std::invalid_argument("choice function values must be positive");
    }
    check_guard(g, std::accumulate(f.begin(), f.end(), 0), options);
    ChoiceCheck out;
    out.witness = AssignmentSearch(g, f, search_order(g)).find_bad();
    out.ok = !out.witness;
    return out;
}

SolveResult xsc_exact(const Graph& g, XscOptions options)
{
    const auto start = std::chrono::steady_clock::now();
    check_guard(g, 0, options);
    SolveResult result;
    result.quantity = "xsc";
    result.method = "choice-function-search";
    int lower = g.order();
    if (g.is_connected() && !g.is_tree()) lower = 2 * g.order();
    const int upper = g.order() + g.size();
    for (int total = std::min(lower, upper); total <= upper; ++total) {
        check_guard(g, total, options);
        std::int64_t tried = 0;
        const bool found = each_choice_function(g, total, [&](const std::vector<int>& f) {
            ++tried;
            if (!AssignmentSearch(g, f, search_order(g)).find_bad()) {
                result.choice_function = f;
                return true;
            }
            return false;
        });
        result.stats.nodes += tried;
        if (found) {
            result.value = total;
            break;
        }
    }
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace isc
