#pragma once

#include "isc/game.hpp"
#include "isc/solver.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isc {

/// A strategy or adversary does not apply to the given graph.
class PlayerRejected : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct StrategyBound {
    std::string strategy;
    int bound = 0;
    std::string source;
};

// --- Alice --------------------------------------------------------------------

/// Every factory returns a strategy that opens with one request per vertex and falls back
/// to greedy dealing if its plan ever runs dry.
StrategyPtr greedy_fallback(const Graph& g, std::optional<std::vector<Vertex>> order = std::nullopt);
StrategyPtr complete_sequential(const Graph& g);
StrategyPtr scgreedy_general(const Graph& g);
StrategyPtr star_strategy(const Graph& g);
StrategyPtr cycle_strategy(const Graph& g);
/// For p < 10 this is greedy dealing and warning (if given) explains why.
StrategyPtr clique_minus_edge_strategy(const Graph& g, std::string* warning = nullptr);
StrategyPtr kpq_strategy(const Graph& g);
/// Sides default to the smallest co-component versus the rest.
StrategyPtr complete_join_strategy(const Graph& g, std::optional<std::pair<VertexSet, VertexSet>> sides = std::nullopt);
StrategyPtr good2deg_strategy(const Graph& g);
/// The graph must be the k x l grid with vertex i*l + j in row i, column j.
StrategyPtr grid_strategy(const Graph& g, int k, int l);

std::vector<std::string> strategy_names();

/// Builds a strategy by its CLI name; grid needs a grid spec. Throws PlayerRejected.
StrategyPtr make_strategy(const std::string& name, const Graph& g, const std::optional<FamilySpec>& spec = std::nullopt,
                          std::string* warning = nullptr);

/// The proven (floored) round bound for the named strategy on g.
StrategyBound strategy_bound(const std::string& name, const Graph& g,
                             const std::optional<FamilySpec>& spec = std::nullopt);

/// Suggests the most specific applicable strategy name for a graph.
std::string default_strategy_name(const Graph& g, const std::optional<FamilySpec>& spec);

// --- structure helpers shared with tests ----------------------------------------

/// Vertices of a cycle graph in traversal order from vertex 0; none if g is not a cycle.
std::optional<std::vector<Vertex>> cycle_order(const Graph& g);
/// (small side, large side) if g is complete bipartite.
std::optional<std::pair<VertexSet, VertexSet>> complete_bipartition(const Graph& g);
/// Sides of a join with the smaller co-component first, if g is a join.
std::optional<std::pair<VertexSet, VertexSet>> join_sides(const Graph& g);
/// Centre of a star, if g is one.
std::optional<Vertex> star_centre(const Graph& g);
/// The unique non-adjacent pair of a clique minus an edge.
std::optional<std::pair<Vertex, Vertex>> missing_edge(const Graph& g);

// --- Bob ----------------------------------------------------------------------

std::vector<std::string> adversary_names();

/// kinds: sequential, fresh, staircase, evencycle, random:SEED, optimal.
/// optimal needs a solver for the same graph.
AdversaryPtr make_adversary(const std::string& kind, const Graph& g, std::shared_ptr<GameSolver> solver = nullptr);

/// Alice backed by the exact solver (lowest-index optimal request).
StrategyPtr optimal_strategy(std::shared_ptr<GameSolver> solver);

// --- analysis -----------------------------------------------------------------

/// Fewest rounds in which Alice can end the game against a deterministic adversary whose
/// answer depends only on the lists. Searches up to cap rounds; returns cap + 1 beyond it.
int best_response_rounds(const Graph& g, Adversary& bob, int cap, const ListAssignment& start);
int best_response_rounds(const Graph& g, Adversary& bob, int cap);

/// Most rounds the strategy can be made to play over every legal Bob (one response per move
/// class; exact for strategies that treat colours only by equality and grant order).
/// Returns cap + 1 if some line exceeds cap or the strategy stalls.
int strategy_worst_case(const Graph& g, const Strategy& alice, int cap);

} // namespace isc
