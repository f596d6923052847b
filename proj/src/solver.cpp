#include "isc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

namespace isc {

namespace {

using Masks = std::vector<std::uint64_t>;

constexpr int kUnknown = 1 << 20;

std::string key_of(const Masks& masks)
{
    return CanonicalState(masks).key();
}

Masks masks_of(const ListAssignment& lists)
{
    return canonicalize_state(Graph(), lists).occurrences();
}

// Colourability straight from occurrence sets: cover the vertices by disjoint
// independent sets, the i-th drawn from masks[i].
class MaskColoring {
public:
    MaskColoring(const Graph& g, const Masks& masks) : g_(g), masks_(masks), used_(masks.size(), 0) {}

    bool run()
    {
        std::uint64_t covered = 0;
        for (auto m : masks_) covered |= m;
        if ((g_.vertices().bits() & ~covered) != 0) return false;
        return solve(g_.vertices().bits());
    }

private:
    bool fits(Vertex v, std::size_t c) const
    {
        return ((masks_[c] >> v) & 1U) && (used_[c] & g_.neighbour_set(v).bits()) == 0;
    }

    bool solve(std::uint64_t open)
    {
        if (open == 0) return true;
        Vertex pick = -1;
        int fewest = 1 << 30;
        for (std::uint64_t rest = open; rest != 0; rest &= rest - 1) {
            const Vertex v = std::countr_zero(rest);
            int options = 0;
            for (std::size_t c = 0; c < masks_.size(); ++c) options += fits(v, c) ? 1 : 0;
            if (options < fewest) {
                fewest = options;
                pick = v;
                if (options <= 1) break;
            }
        }
        if (fewest == 0) return false;
        const std::uint64_t bit = std::uint64_t{1} << pick;
        for (std::size_t c = 0; c < masks_.size(); ++c) {
            if (!fits(pick, c)) continue;
            used_[c] |= bit;
            const bool ok = solve(open & ~bit);
            used_[c] &= ~bit;
            if (ok) return true;
        }
        return false;
    }

    const Graph& g_;
    const Masks& masks_;
    std::vector<std::uint64_t> used_;
};

struct Entry {
    int lo = 0;        // Alice cannot finish in fewer rounds
    int hi = kUnknown; // Alice can finish within hi rounds
    signed char colourable = -1;
};

} // namespace

struct GameSolver::Impl {
    Graph g;
    SolverOptions options;
    std::unordered_map<std::string, Entry> memo;
    mutable std::shared_mutex mutex;
    std::atomic<std::int64_t> nodes{0};
    std::atomic<std::int64_t> hits{0};

    Impl(const Graph& graph, SolverOptions opts) : g(graph), options(opts) {}

    int empty_count(const Masks& masks) const
    {
        std::uint64_t covered = 0;
        for (auto m : masks) covered |= m;
        return std::popcount(g.vertices().bits() & ~covered);
    }

    Entry lookup(const std::string& key, const Masks& masks)
    {
        {
            std::shared_lock lock(mutex);
            auto it = memo.find(key);
            if (it != memo.end()) {
                hits.fetch_add(1, std::memory_order_relaxed);
                return it->second;
            }
        }
        Entry e;
        e.colourable = MaskColoring(g, masks).run() ? 1 : 0;
        if (e.colourable) {
            e.hi = 0;
        } else {
            e.lo = std::max(1, empty_count(masks));
        }
        std::unique_lock lock(mutex);
        auto [it, inserted] = memo.try_emplace(key, e);
        return it->second;
    }

    void record(const std::string& key, int k, bool won)
    {
        std::unique_lock lock(mutex);
        Entry& e = memo[key];
        if (won) e.hi = std::min(e.hi, k);
        else e.lo = std::max(e.lo, k + 1);
    }

    std::vector<Vertex> alice_moves(const Masks& masks) const
    {
        std::vector<int> sizes(g.order(), 0);
        for (auto m : masks) {
            for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) ++sizes[std::countr_zero(rest)];
        }
        std::vector<Vertex> out;
        bool any_empty = false;
        for (Vertex v = 0; v < g.order(); ++v) any_empty |= sizes[v] == 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            // A vertex holding more colours than neighbours is colourable last whatever happens;
            // asking there again changes nothing.
            if (sizes[v] > g.degree(v)) continue;
            if (options.forced_opening && any_empty && sizes[v] != 0) continue;
            out.push_back(v);
        }
        std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return sizes[a] < sizes[b]; });
        return out;
    }

    static std::vector<Masks> children(const Masks& masks, Vertex v)
    {
        const std::uint64_t bit = std::uint64_t{1} << v;
        std::vector<Masks> out;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if (masks[i] & bit) continue;
            if (i > 0 && masks[i] == masks[i - 1]) continue;
            Masks child = masks;
            child[i] |= bit;
            std::sort(child.begin(), child.end());
            out.push_back(std::move(child));
        }
        Masks fresh = masks;
        fresh.push_back(bit);
        std::sort(fresh.begin(), fresh.end());
        out.push_back(std::move(fresh));
        return out;
    }

    bool move_wins(const Masks& masks, Vertex v, int k)
    {
        for (const Masks& child : children(masks, v)) {
            if (!wins(child, k - 1)) return false;
        }
        return true;
    }

    // Can Alice force termination within k more rounds?
    bool wins(const Masks& masks, int k)
    {
        const std::string key = key_of(masks);
        const Entry e = lookup(key, masks);
        if (e.colourable == 1 || k >= e.hi) return true;
        if (k < e.lo) return false;
        nodes.fetch_add(1, std::memory_order_relaxed);
        for (Vertex v : alice_moves(masks)) {
            if (move_wins(masks, v, k)) {
                record(key, k, true);
                return true;
            }
        }
        record(key, k, false);
        return false;
    }

    bool wins_root(const Masks& masks, int k)
    {
        if (options.threads <= 1) return wins(masks, k);
        const std::string key = key_of(masks);
        const Entry e = lookup(key, masks);
        if (e.colourable == 1 || k >= e.hi) return true;
        if (k < e.lo) return false;
        const std::vector<Vertex> moves = alice_moves(masks);
        std::atomic<std::size_t> next{0};
        std::atomic<bool> found{false};
        auto worker = [&] {
            for (std::size_t i = next++; i < moves.size() && !found.load(); i = next++) {
                if (move_wins(masks, moves[i], k)) found = true;
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < options.threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        record(key, k, found.load());
        return found.load();
    }

    int value(const Masks& masks, int lower = 0)
    {
        const Entry e = lookup(key_of(masks), masks);
        if (e.colourable == 1) return 0;
        int k = std::max(e.lo, lower);
        while (!wins_root(masks, k)) ++k;
        return k;
    }
};

GameSolver::GameSolver(const Graph& g, SolverOptions options) : impl_(std::make_unique<Impl>(g, options))
{
    if (g.order() > options.max_vertices && !options.force) {
        throw InstanceTooLarge("instance too large: " + std::to_string(g.order()) + " vertices exceeds the guard of " +
                               std::to_string(options.max_vertices) + " (use --force to override)");
    }
}

GameSolver::~GameSolver() = default;

const Graph& GameSolver::graph() const
{
    return impl_->g;
}

int GameSolver::value(const ListAssignment& lists)
{
    return impl_->value(masks_of(lists));
}

int GameSolver::value(const ListAssignment& lists, int known_lower)
{
    return impl_->value(masks_of(lists), known_lower);
}

std::optional<Vertex> GameSolver::best_request(const ListAssignment& lists)
{
    const Masks masks = masks_of(lists);
    const int target = impl_->value(masks);
    if (target == 0) return std::nullopt;
    for (Vertex v = 0; v < impl_->g.order(); ++v) {
        if (impl_->move_wins(masks, v, target)) return v;
    }
    return std::nullopt; // unreachable: some move realises the value
}

Color GameSolver::best_response(const ListAssignment& lists, Vertex v)
{
    Color best = kNoColor;
    int best_value = -1;
    for (Color c : bob_move_classes(impl_->g, lists, v)) {
        const int val = value(lists.with_request(v, c));
        if (val > best_value) {
            best_value = val;
            best = c;
        }
    }
    return best;
}

SolveStats GameSolver::stats() const
{
    return {impl_->nodes.load(), impl_->hits.load()};
}

SolveResult isc_exact(const Graph& g, bool extract_policy, SolverOptions options)
{
    const auto start = std::chrono::steady_clock::now();
    auto solver = std::make_shared<GameSolver>(g, options);
    const int lower = 2 * g.order() - max_independent_set_size(g);
    SolveResult result;
    result.quantity = "isc";
    result.method = options.threads > 1 ? "minimax-parallel" : "minimax";
    result.value = solver->value(ListAssignment(g.order()), lower);
    result.stats = solver->stats();
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (extract_policy) result.policy = solver;
    return result;
}

int game_value(const Graph& g, const ListAssignment& lists, SolverOptions options)
{
    return GameSolver(g, options).value(lists);
}

nlohmann::json SolveResult::to_json(const std::string& graph_spec) const
{
    nlohmann::json out = {
        {"graph_spec", graph_spec}, {"quantity", quantity},         {"value", value},
        {"method", method},         {"nodes", stats.nodes},         {"memo_hits", stats.memo_hits},
    };
    if (!choice_function.empty()) out["choice_function"] = choice_function;
    return out;
}

} // namespace isc
