#pragma once

#include "isc/coloring.hpp"
#include "isc/graph.hpp"

#include "json.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace isc {

struct Request {
    Vertex vertex;
    Color color;
    bool operator==(const Request&) const = default;
};

/// Requested vertices with the colours Bob granted, in play order.
using Trace = std::vector<Request>;

struct GameState {
    const Graph* graph = nullptr;
    ListAssignment lists;
    int round = 0;
};

/// What a strategy sees: the board, the current lists (possibly filtered by an
/// enclosing combinator), and the vertices it is responsible for.
struct GameView {
    const Graph& graph;
    const ListAssignment& lists;
    VertexSet region;

    GameView with_lists(const ListAssignment& l) const { return {graph, l, region}; }
    GameView restricted(VertexSet r) const { return {graph, lists, r}; }
};

/// Alice. Implementations are pure functions of the view: the lists record every
/// grant in order, so no per-game cursor is needed and instances may be shared.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual std::string name() const = 0;

    /// Next vertex to request inside view.region; none once the plan for the region is spent.
    virtual std::optional<Vertex> next_request(const GameView& view) const = 0;

    /// Colouring the strategy is steering towards, when the region is colourable.
    virtual std::optional<Coloring> preferred_coloring(const GameView& view) const;
};

using StrategyPtr = std::shared_ptr<const Strategy>;

/// Bob. May hold per-game state (e.g. a random generator); one instance per game.
class Adversary {
public:
    virtual ~Adversary() = default;
    virtual std::string name() const = 0;
    virtual Color respond(const GameState& state, Vertex v) = 0;
};

using AdversaryPtr = std::unique_ptr<Adversary>;

/// Single source of truth for legality and termination, shared by run_game,
/// interactive terminal play and API sessions.
class Referee {
public:
    Referee(const Graph& g, ListAssignment initial);
    explicit Referee(const Graph& g);

    const Graph& graph() const { return graph_; }
    const ListAssignment& lists() const { return lists_; }
    const ListAssignment& initial_lists() const { return initial_; }
    const Trace& trace() const { return trace_; }
    int rounds() const { return static_cast<int>(trace_.size()); }
    bool terminal() const { return coloring_.has_value(); }
    const std::optional<Coloring>& coloring() const { return coloring_; }
    std::optional<Vertex> pending() const { return pending_; }
    GameState state() const { return {&graph_, lists_, rounds()}; }

    /// Throws IllegalMove when terminal, a request is pending, or v is out of range.
    void request(Vertex v);
    /// Throws IllegalMove when nothing is pending or c is already in the list.
    void respond(Color c);
    /// Replaces the witness with a preferred one if it verifies.
    void prefer_coloring(const Coloring& c);

private:
    void check_terminal();

    Graph graph_;
    ListAssignment initial_;
    ListAssignment lists_;
    Trace trace_;
    std::optional<Vertex> pending_;
    std::optional<Coloring> coloring_;
};

enum class GameStatus {
    terminal,
    round_cap,
    strategy_exhausted,
    strategy_disqualified,
    adversary_disqualified,
};

std::string_view to_string(GameStatus s);

struct GameRecord {
    std::string graph_spec;
    ListAssignment initial_lists;
    Trace trace;
    ListAssignment final_lists;
    std::optional<Coloring> coloring;
    int rounds = 0;
    GameStatus status = GameStatus::terminal;
    std::string message;

    bool terminal() const { return status == GameStatus::terminal; }
};

nlohmann::json to_json(const GameRecord& record);

/// Default round cap is n + m + 1 (the greedy bound plus one).
GameRecord run_game(const Graph& g, const Strategy& alice, Adversary& bob,
                    std::optional<ListAssignment> initial = std::nullopt, std::optional<int> round_cap = std::nullopt);

/// Game from singleton lists {alpha(v)}; rounds count only the requests after alpha.
GameRecord game_from_alpha(const Graph& g, const std::vector<Color>& alpha, const Strategy& alice, Adversary& bob);

/// Replays the trace from the record's initial lists.
GameRecord replay(const Graph& g, const GameRecord& record);

// --- combinators ------------------------------------------------------------

/// Requests every empty-listed vertex of the region in index order, then delegates.
StrategyPtr with_forced_opening(StrategyPtr alice);

/// The inner strategy sees lists with the forbidden colours removed, so a forbidden
/// grant is invisible to it and it simply asks again.
StrategyPtr avoid_colors(StrategyPtr alice, ForbiddenMap forbidden);

struct StrategyPart {
    VertexSet vertices;
    StrategyPtr strategy;
};

/// Plays the parts one after the other; throws GraphError if an edge crosses parts.
StrategyPtr compose_disjoint(const Graph& g, std::vector<StrategyPart> parts);

/// Colours G - H with rest, then H avoiding the colours fixed on its neighbours outside H.
StrategyPtr compose_cut(const Graph& g, VertexSet h_vertices, StrategyPtr rest, StrategyPtr h_strategy);

/// Deals vertices in order (index order by default), requesting until a colour unused by
/// already coloured neighbours appears.
StrategyPtr greedy_strategy(std::optional<std::vector<Vertex>> order = std::nullopt);

/// Falls back to greedy dealing when the inner plan is spent but the region is not colourable.
StrategyPtr with_greedy_fallback(StrategyPtr alice);

/// Greedy dealing as a free function, used by several strategies.
std::optional<Vertex> greedy_request(const GameView& view, const std::vector<Vertex>& order);

} // namespace isc
