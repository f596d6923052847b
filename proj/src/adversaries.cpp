#include "isc/players.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

namespace isc {

namespace {

Color smallest_absent(const ListAssignment& lists, Vertex v)
{
    Color c = 1;
    while (lists.contains(v, c)) ++c;
    return c;
}

// k-th request at a vertex gets colour k.
class Sequential final : public Adversary {
public:
    std::string name() const override { return "sequential"; }
    Color respond(const GameState& state, Vertex v) override { return smallest_absent(state.lists, v); }
};

class Fresh final : public Adversary {
public:
    std::string name() const override { return "fresh"; }
    Color respond(const GameState& state, Vertex /*v*/) override { return state.lists.fresh_color(); }
};

// First colours of the leaves climb a staircase: q leaves get 1, q-1 get 2, and so on;
// the centre is offered 1, 2, ..., q. Everything else is fresh.
class Staircase final : public Adversary {
public:
    explicit Staircase(const Graph& g)
    {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.degree(v) > g.degree(centre_)) centre_ = v;
        }
        q_ = g.order() == 0 ? 0 : triangular_root(g.degree(centre_));
        int step = q_;
        int left = step;
        Color colour = 1;
        for (Vertex leaf : g.neighbours(centre_)) {
            while (step > 0 && left == 0) {
                --step;
                left = step;
                ++colour;
            }
            if (step == 0) break;
            first_[leaf] = colour;
            --left;
        }
    }

    std::string name() const override { return "staircase"; }

    Color respond(const GameState& state, Vertex v) override
    {
        const ListAssignment& lists = state.lists;
        if (v == centre_) {
            const Color next = static_cast<Color>(lists[v].size()) + 1;
            if (next <= q_ && !lists.contains(v, next)) return next;
            return lists.fresh_color();
        }
        if (lists[v].empty()) {
            if (auto it = first_.find(v); it != first_.end()) return it->second;
        }
        return lists.fresh_color();
    }

private:
    Vertex centre_ = 0;
    int q_ = 0;
    std::map<Vertex, Color> first_;
};

// Even cycles: first colours pair up neighbours (1,1,2,2,...); a second colour copies a
// neighbour's second colour, else the first colour of the neighbour outside the pair.
// Odd cycles get the sequential answers.
class EvenCycle final : public Adversary {
public:
    explicit EvenCycle(const Graph& g) : g_(g)
    {
        auto order = cycle_order(g);
        if (!order) return;
        position_.assign(g.order(), -1);
        for (int i = 0; i < static_cast<int>(order->size()); ++i) position_[(*order)[i]] = i;
        cycle_ = true;
        odd_ = g.order() % 2 == 1;
    }

    std::string name() const override { return "evencycle"; }

    Color respond(const GameState& state, Vertex v) override
    {
        const ListAssignment& lists = state.lists;
        if (!cycle_) return lists.fresh_color();
        if (odd_) return smallest_absent(lists, v);
        const auto size = lists[v].size();
        const Color mine = position_[v] / 2 + 1;
        if (size == 0) return lists.contains(v, mine) ? lists.fresh_color() : mine;
        if (size == 1) {
            // w is the neighbour outside v's pair, w_mate its partner. With one extra request per
            // pair Bob wins at whichever pair Alice settles last.
            Vertex w = -1;
            for (Vertex u : g_.neighbours(v))
                if (position_[u] / 2 != position_[v] / 2) w = u;
            if (w < 0) return lists.fresh_color();
            Vertex w_mate = -1;
            for (Vertex u : g_.neighbours(w))
                if (u != v && position_[u] / 2 == position_[w] / 2) w_mate = u;
            if (lists[w].size() >= 2 && !lists.contains(v, lists[w][1])) return lists[w][1];
            if (lists[w].size() == 1 && w_mate >= 0 && lists[w_mate].size() >= 2 && !lists.contains(v, lists[w][0])) {
                return lists[w][0];
            }
        }
        return lists.fresh_color();
    }

private:
    const Graph& g_;
    std::vector<int> position_;
    bool cycle_ = false;
    bool odd_ = false;
};

class RandomBob final : public Adversary {
public:
    RandomBob(const Graph& g, std::uint64_t seed) : g_(g), seed_(seed), rng_(seed) {}

    std::string name() const override { return "random:" + std::to_string(seed_); }

    Color respond(const GameState& state, Vertex v) override
    {
        const ListAssignment& lists = state.lists;
        std::vector<Color> near;
        for (Vertex u : g_.neighbours(v)) {
            for (Color c : lists[u]) {
                if (!lists.contains(v, c) && std::find(near.begin(), near.end(), c) == near.end()) near.push_back(c);
            }
        }
        std::vector<Color> anywhere;
        for (Color c : lists.colors()) {
            if (!lists.contains(v, c)) anywhere.push_back(c);
        }
        const int roll = std::uniform_int_distribution<int>(0, 9)(rng_);
        if (roll < 6 && !near.empty()) return pick(near);
        if (roll < 8 && !anywhere.empty()) return pick(anywhere);
        return lists.fresh_color();
    }

private:
    Color pick(const std::vector<Color>& from)
    {
        return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng_)];
    }

    const Graph& g_;
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

class OptimalBob final : public Adversary {
public:
    explicit OptimalBob(std::shared_ptr<GameSolver> solver) : solver_(std::move(solver)) {}
    std::string name() const override { return "optimal"; }
    Color respond(const GameState& state, Vertex v) override { return solver_->best_response(state.lists, v); }

private:
    std::shared_ptr<GameSolver> solver_;
};

class OptimalAlice final : public Strategy {
public:
    explicit OptimalAlice(std::shared_ptr<GameSolver> solver) : solver_(std::move(solver)) {}
    std::string name() const override { return "optimal"; }
    std::optional<Vertex> next_request(const GameView& view) const override
    {
        return solver_->best_request(view.lists);
    }

private:
    std::shared_ptr<GameSolver> solver_;
};

// Renames colours in order of first appearance so colour-equivalent states share a key;
// grant order within each list is kept.
std::string normal_key(const ListAssignment& lists)
{
    std::unordered_map<Color, int> rename;
    std::string out;
    for (Vertex v = 0; v < lists.order(); ++v) {
        for (Color c : lists[v]) {
            auto [it, inserted] = rename.try_emplace(c, static_cast<int>(rename.size()) + 1);
            out.push_back(static_cast<char>(it->second));
        }
        out.push_back('\0');
    }
    return out;
}

} // namespace

std::vector<std::string> adversary_names()
{
    return {"sequential", "fresh", "staircase", "evencycle", "random:SEED", "optimal"};
}

AdversaryPtr make_adversary(const std::string& kind, const Graph& g, std::shared_ptr<GameSolver> solver)
{
    if (kind == "sequential") return std::make_unique<Sequential>();
    if (kind == "fresh") return std::make_unique<Fresh>();
    if (kind == "staircase") return std::make_unique<Staircase>(g);
    if (kind == "evencycle") return std::make_unique<EvenCycle>(g);
    if (kind.rfind("random:", 0) == 0) {
        const std::string seed = kind.substr(7);
        if (seed.empty() || seed.find_first_not_of("0123456789") != std::string::npos) {
            throw PlayerRejected("random adversary needs a numeric seed, e.g. random:7");
        }
        return std::make_unique<RandomBob>(g, std::stoull(seed));
    }
    if (kind == "random") throw PlayerRejected("random adversary needs a seed, e.g. random:7");
    if (kind == "optimal") {
        if (!solver) throw PlayerRejected("optimal adversary needs an exact solver for the graph");
        return std::make_unique<OptimalBob>(std::move(solver));
    }
    throw PlayerRejected("unknown adversary '" + kind + "'");
}

StrategyPtr optimal_strategy(std::shared_ptr<GameSolver> solver)
{
    return std::make_shared<OptimalAlice>(std::move(solver));
}

namespace {

class BestResponse {
public:
    BestResponse(const Graph& g, Adversary& bob) : g_(g), bob_(bob) {}

    bool wins(const ListAssignment& lists, int k)
    {
        std::string key = std::to_string(k) + ":" + raw_key(lists);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool result = is_colorable(g_, lists, g_.vertices());
        for (Vertex v = 0; !result && k > 0 && v < g_.order(); ++v) {
            const Color c = bob_.respond(GameState{&g_, lists, 0}, v);
            if (lists.contains(v, c)) throw IllegalMove(bob_.name() + " answered with a colour already present");
            result = wins(lists.with_request(v, c), k - 1);
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    static std::string raw_key(const ListAssignment& lists)
    {
        std::string out;
        for (Vertex v = 0; v < lists.order(); ++v) {
            for (Color c : lists[v]) out += std::to_string(c) + ",";
            out.push_back(';');
        }
        return out;
    }

    const Graph& g_;
    Adversary& bob_;
    std::unordered_map<std::string, bool> memo_;
};

class WorstCase {
public:
    WorstCase(const Graph& g, const Strategy& alice, int cap) : g_(g), alice_(alice), cap_(cap) {}

    int rounds(const ListAssignment& lists, int played)
    {
        if (is_colorable(g_, lists, g_.vertices())) return 0;
        if (played >= cap_) return cap_ + 1;
        const std::string key = normal_key(lists);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        int worst = 0;
        const auto v = alice_.next_request(GameView{g_, lists, g_.vertices()});
        if (!v || *v < 0 || *v >= g_.order()) {
            worst = cap_ + 1;
        } else {
            for (Color c : bob_move_classes(g_, lists, *v)) {
                worst = std::max(worst, 1 + rounds(lists.with_request(*v, c), played + 1));
                if (worst > cap_) break;
            }
        }
        worst = std::min(worst, cap_ + 1);
        memo_.emplace(key, worst);
        return worst;
    }

private:
    const Graph& g_;
    const Strategy& alice_;
    int cap_;
    std::unordered_map<std::string, int> memo_;
};

} // namespace

int best_response_rounds(const Graph& g, Adversary& bob, int cap, const ListAssignment& start)
{
    BestResponse search(g, bob);
    for (int k = 0; k <= cap; ++k) {
        if (search.wins(start, k)) return k;
    }
    return cap + 1;
}

int best_response_rounds(const Graph& g, Adversary& bob, int cap)
{
    return best_response_rounds(g, bob, cap, ListAssignment(g.order()));
}

int strategy_worst_case(const Graph& g, const Strategy& alice, int cap)
{
    return WorstCase(g, alice, cap).rounds(ListAssignment(g.order()), 0);
}

} // namespace isc
