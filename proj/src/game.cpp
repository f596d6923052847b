#include "isc/game.hpp"

#include <algorithm>

namespace isc {

std::optional<Coloring> Strategy::preferred_coloring(const GameView& view) const
{
    return find_list_coloring(view.graph, view.lists, view.region);
}

// --- referee ----------------------------------------------------------------

Referee::Referee(const Graph& g, ListAssignment initial) : graph_(g), initial_(initial), lists_(std::move(initial))
{
    if (lists_.order() != g.order()) {
        throw IllegalMove("initial lists cover " + std::to_string(lists_.order()) + " vertices, graph has " +
                          std::to_string(g.order()));
    }
    check_terminal();
}

Referee::Referee(const Graph& g) : Referee(g, ListAssignment(g.order())) {}

void Referee::request(Vertex v)
{
    if (terminal()) throw IllegalMove("game is over");
    if (pending_) throw IllegalMove("a request on vertex " + std::to_string(*pending_) + " awaits a colour");
    if (v < 0 || v >= graph_.order()) throw IllegalMove("vertex " + std::to_string(v) + " out of range");
    pending_ = v;
}

void Referee::respond(Color c)
{
    if (!pending_) throw IllegalMove("no request is pending");
    lists_.append(*pending_, c);
    trace_.push_back({*pending_, c});
    pending_.reset();
    check_terminal();
}

void Referee::prefer_coloring(const Coloring& c)
{
    if (terminal() && verify_coloring(graph_, lists_, c)) coloring_ = c;
}

void Referee::check_terminal()
{
    coloring_ = find_list_coloring(graph_, lists_);
}

// --- games ------------------------------------------------------------------

std::string_view to_string(GameStatus s)
{
    switch (s) {
    case GameStatus::terminal: return "terminal";
    case GameStatus::round_cap: return "round_cap";
    case GameStatus::strategy_exhausted: return "strategy_exhausted";
    case GameStatus::strategy_disqualified: return "strategy_disqualified";
    case GameStatus::adversary_disqualified: return "adversary_disqualified";
    }
    return "unknown";
}

nlohmann::json to_json(const GameRecord& record)
{
    nlohmann::json trace = nlohmann::json::array();
    for (const Request& r : record.trace) trace.push_back({{"v", r.vertex}, {"c", r.color}});
    nlohmann::json out = {
        {"graph_spec", record.graph_spec},
        {"initial_lists", record.initial_lists.lists()},
        {"trace", trace},
        {"rounds", record.rounds},
        {"terminal", record.terminal()},
        {"coloring", record.coloring ? nlohmann::json(*record.coloring) : nlohmann::json(nullptr)},
        {"status", std::string(to_string(record.status))},
    };
    if (!record.message.empty()) out["message"] = record.message;
    return out;
}

namespace {

GameRecord finish(const Referee& ref, GameStatus status, std::string message)
{
    GameRecord rec;
    rec.initial_lists = ref.initial_lists();
    rec.trace = ref.trace();
    rec.final_lists = ref.lists();
    rec.coloring = ref.coloring();
    rec.rounds = ref.rounds();
    rec.status = ref.terminal() ? GameStatus::terminal : status;
    rec.message = std::move(message);
    return rec;
}

} // namespace

GameRecord run_game(const Graph& g, const Strategy& alice, Adversary& bob, std::optional<ListAssignment> initial,
                    std::optional<int> round_cap)
{
    Referee ref(g, initial ? std::move(*initial) : ListAssignment(g.order()));
    const int cap = round_cap.value_or(g.order() + g.size() + 1);
    while (!ref.terminal()) {
        if (ref.rounds() >= cap) {
            return finish(ref, GameStatus::round_cap, "round cap " + std::to_string(cap) + " reached");
        }
        const GameView view{g, ref.lists(), g.vertices()};
        std::optional<Vertex> v = alice.next_request(view);
        if (!v) {
            return finish(ref, GameStatus::strategy_exhausted, alice.name() + " has no further request");
        }
        if (*v < 0 || *v >= g.order()) {
            return finish(ref, GameStatus::strategy_disqualified,
                          alice.name() + " requested out-of-range vertex " + std::to_string(*v));
        }
        ref.request(*v);
        const Color c = bob.respond(ref.state(), *v);
        try {
            ref.respond(c);
        } catch (const IllegalMove& e) {
            return finish(ref, GameStatus::adversary_disqualified, bob.name() + ": " + e.what());
        }
    }
    if (auto preferred = alice.preferred_coloring({g, ref.lists(), g.vertices()})) {
        ref.prefer_coloring(*preferred);
    }
    return finish(ref, GameStatus::terminal, {});
}

GameRecord game_from_alpha(const Graph& g, const std::vector<Color>& alpha, const Strategy& alice, Adversary& bob)
{
    if (static_cast<int>(alpha.size()) != g.order()) {
        throw IllegalMove("alpha must assign one colour per vertex");
    }
    std::vector<std::vector<Color>> lists;
    for (Color c : alpha) lists.push_back({c});
    return run_game(g, alice, bob, ListAssignment(std::move(lists)));
}

GameRecord replay(const Graph& g, const GameRecord& record)
{
    Referee ref(g, record.initial_lists);
    for (const Request& r : record.trace) {
        if (ref.terminal()) break;
        ref.request(r.vertex);
        ref.respond(r.color);
    }
    GameRecord out = finish(ref, GameStatus::strategy_exhausted, {});
    out.graph_spec = record.graph_spec;
    return out;
}

// --- greedy -----------------------------------------------------------------

namespace {

std::vector<Vertex> order_within(const std::vector<Vertex>& order, VertexSet region)
{
    std::vector<Vertex> out;
    VertexSet seen;
    for (Vertex v : order) {
        if (region.contains(v) && !seen.contains(v)) {
            out.push_back(v);
            seen.insert(v);
        }
    }
    for (Vertex v : (region - seen).to_vector()) out.push_back(v);
    return out;
}

// Colours vertices in order with the first list colour free of coloured neighbours.
// Returns the first vertex that has no such colour, or the completed colouring.
std::pair<std::optional<Vertex>, Coloring> simulate_greedy(const GameView& view, const std::vector<Vertex>& order)
{
    Coloring coloring(view.graph.order(), kNoColor);
    for (Vertex v : order_within(order, view.region)) {
        for (Color c : view.lists[v]) {
            bool free = std::none_of(view.graph.neighbours(v).begin(), view.graph.neighbours(v).end(),
                                     [&](Vertex u) { return coloring[u] == c; });
            if (free) {
                coloring[v] = c;
                break;
            }
        }
        if (coloring[v] == kNoColor) return {v, coloring};
    }
    return {std::nullopt, coloring};
}

class GreedyStrategy final : public Strategy {
public:
    explicit GreedyStrategy(std::optional<std::vector<Vertex>> order) : order_(std::move(order)) {}

    std::string name() const override { return "greedy"; }

    std::optional<Vertex> next_request(const GameView& view) const override
    {
        return greedy_request(view, order_.value_or(std::vector<Vertex>{}));
    }

    std::optional<Coloring> preferred_coloring(const GameView& view) const override
    {
        auto [stuck, coloring] = simulate_greedy(view, order_.value_or(std::vector<Vertex>{}));
        if (stuck) return Strategy::preferred_coloring(view);
        return coloring;
    }

private:
    std::optional<std::vector<Vertex>> order_;
};

class ForcedOpening final : public Strategy {
public:
    explicit ForcedOpening(StrategyPtr inner) : inner_(std::move(inner)) {}

    std::string name() const override { return inner_->name(); }

    std::optional<Vertex> next_request(const GameView& view) const override
    {
        for (Vertex v : view.region.to_vector()) {
            if (view.lists[v].empty()) return v;
        }
        return inner_->next_request(view);
    }

    std::optional<Coloring> preferred_coloring(const GameView& view) const override
    {
        return inner_->preferred_coloring(view);
    }

private:
    StrategyPtr inner_;
};

class AvoidColors final : public Strategy {
public:
    AvoidColors(StrategyPtr inner, ForbiddenMap forbidden) : inner_(std::move(inner)), forbidden_(std::move(forbidden)) {}

    std::string name() const override { return inner_->name(); }

    std::optional<Vertex> next_request(const GameView& view) const override
    {
        const ListAssignment filtered = view.lists.without(forbidden_);
        return inner_->next_request(view.with_lists(filtered));
    }

    std::optional<Coloring> preferred_coloring(const GameView& view) const override
    {
        const ListAssignment filtered = view.lists.without(forbidden_);
        if (auto c = inner_->preferred_coloring(view.with_lists(filtered))) return c;
        return Strategy::preferred_coloring(view);
    }

private:
    StrategyPtr inner_;
    ForbiddenMap forbidden_;
};

Coloring merge(Coloring base, const Coloring& extra, VertexSet region)
{
    for (Vertex v : region.to_vector()) base[v] = extra[v];
    return base;
}

class ComposeDisjoint final : public Strategy {
public:
    explicit ComposeDisjoint(std::vector<StrategyPart> parts) : parts_(std::move(parts)) {}

    std::string name() const override { return "disjoint"; }

    std::optional<Vertex> next_request(const GameView& view) const override
    {
        for (const auto& part : parts_) {
            const GameView sub = view.restricted(part.vertices & view.region);
            if (sub.region.empty() || is_colorable(view.graph, view.lists, sub.region)) continue;
            return part.strategy->next_request(sub);
        }
        return std::nullopt;
    }

    std::optional<Coloring> preferred_coloring(const GameView& view) const override
    {
        Coloring out(view.graph.order(), kNoColor);
        for (const auto& part : parts_) {
            const GameView sub = view.restricted(part.vertices & view.region);
            auto c = part.strategy->preferred_coloring(sub);
            if (!c) return std::nullopt;
            out = merge(std::move(out), *c, sub.region);
        }
        return out;
    }

private:
    std::vector<StrategyPart> parts_;
};

class ComposeCut final : public Strategy {
public:
    ComposeCut(VertexSet h, StrategyPtr rest, StrategyPtr h_strategy)
        : h_(h), rest_(std::move(rest)), h_strategy_(std::move(h_strategy))
    {
    }

    std::string name() const override { return "cut(" + rest_->name() + "," + h_strategy_->name() + ")"; }

    std::optional<Vertex> next_request(const GameView& view) const override
    {
        const GameView rest_view = view.restricted(view.region - h_);
        auto beta = rest_view.region.empty() ? std::optional<Coloring>(Coloring(view.graph.order(), kNoColor))
                                             : rest_->preferred_coloring(rest_view);
        if (!beta) {
            return rest_->next_request(rest_view);
        }
        const ListAssignment filtered = view.lists.without(boundary(view, *beta));
        const GameView h_view{view.graph, filtered, view.region & h_};
        if (h_view.region.empty() || is_colorable(view.graph, filtered, h_view.region)) return std::nullopt;
        return h_strategy_->next_request(h_view);
    }

    std::optional<Coloring> preferred_coloring(const GameView& view) const override
    {
        const GameView rest_view = view.restricted(view.region - h_);
        auto beta = rest_view.region.empty() ? std::optional<Coloring>(Coloring(view.graph.order(), kNoColor))
                                             : rest_->preferred_coloring(rest_view);
        if (!beta) return std::nullopt;
        const ListAssignment filtered = view.lists.without(boundary(view, *beta));
        const GameView h_view{view.graph, filtered, view.region & h_};
        if (h_view.region.empty()) return beta;
        auto gamma = h_strategy_->preferred_coloring(h_view);
        if (!gamma) return std::nullopt;
        return merge(std::move(*beta), *gamma, h_view.region);
    }

private:
    ForbiddenMap boundary(const GameView& view, const Coloring& beta) const
    {
        ForbiddenMap forbidden(view.graph.order());
        const VertexSet rest = view.region - h_;
        for (Vertex u : (view.region & h_).to_vector()) {
            for (Vertex w : (view.graph.neighbour_set(u) & rest).to_vector()) {
                if (beta[w] != kNoColor) forbidden[u].push_back(beta[w]);
            }
        }
        return forbidden;
    }

    VertexSet h_;
    StrategyPtr rest_;
    StrategyPtr h_strategy_;
};

class GreedyFallback final : public Strategy {
public:
    explicit GreedyFallback(StrategyPtr inner) : inner_(std::move(inner)) {}

    std::string name() const override { return inner_->name(); }

    std::optional<Vertex> next_request(const GameView& view) const override
    {
        if (auto v = inner_->next_request(view)) return v;
        if (is_colorable(view.graph, view.lists, view.region)) return std::nullopt;
        return greedy_request(view, {});
    }

    std::optional<Coloring> preferred_coloring(const GameView& view) const override
    {
        if (auto c = inner_->preferred_coloring(view)) return c;
        return Strategy::preferred_coloring(view);
    }

private:
    StrategyPtr inner_;
};

} // namespace

std::optional<Vertex> greedy_request(const GameView& view, const std::vector<Vertex>& order)
{
    return simulate_greedy(view, order).first;
}

StrategyPtr greedy_strategy(std::optional<std::vector<Vertex>> order)
{
    return std::make_shared<GreedyStrategy>(std::move(order));
}

StrategyPtr with_forced_opening(StrategyPtr alice)
{
    return std::make_shared<ForcedOpening>(std::move(alice));
}

StrategyPtr avoid_colors(StrategyPtr alice, ForbiddenMap forbidden)
{
    return std::make_shared<AvoidColors>(std::move(alice), std::move(forbidden));
}

StrategyPtr compose_disjoint(const Graph& g, std::vector<StrategyPart> parts)
{
    VertexSet covered;
    for (const auto& part : parts) {
        if (!(covered & part.vertices).empty()) {
            throw GraphError("strategy parts overlap");
        }
        covered |= part.vertices;
    }
    for (const Edge& e : g.edges()) {
        for (const auto& part : parts) {
            if (part.vertices.contains(e.u) != part.vertices.contains(e.v)) {
                throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " crosses strategy parts");
            }
        }
    }
    return std::make_shared<ComposeDisjoint>(std::move(parts));
}

StrategyPtr compose_cut(const Graph& g, VertexSet h_vertices, StrategyPtr rest, StrategyPtr h_strategy)
{
    if (!(h_vertices - g.vertices()).empty()) {
        throw GraphError("cut vertices outside the graph");
    }
    return std::make_shared<ComposeCut>(h_vertices, std::move(rest), std::move(h_strategy));
}

StrategyPtr with_greedy_fallback(StrategyPtr alice)
{
    return std::make_shared<GreedyFallback>(std::move(alice));
}

} // namespace isc
