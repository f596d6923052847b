#pragma once

#include "isc/coloring.hpp"
#include "isc/graph.hpp"

#include "json.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isc {

/// Raised when an instance exceeds a solver's size guard and no override was given.
class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    int max_vertices = 7;
    bool force = false;
    /// Worker threads for the root split; 1 is the single-threaded baseline.
    int threads = 1;
    /// Restrict Alice to empty-listed vertices while any exist.
    bool forced_opening = false;
};

struct SolveStats {
    std::int64_t nodes = 0;
    std::int64_t memo_hits = 0;
};

class GameSolver;

struct SolveResult {
    std::string quantity; // "isc" or "xsc"
    int value = 0;
    std::string method;
    SolveStats stats;
    /// Wall time; left out of to_json so repeated runs print identical documents.
    double elapsed_ms = 0;
    /// Present for isc when requested: the solver that answers best moves lazily.
    std::shared_ptr<GameSolver> policy;
    /// For xsc: an optimal choice function.
    std::vector<int> choice_function;

    nlohmann::json to_json(const std::string& graph_spec) const;
};

/// Memoized minimax over canonical states of one graph. Values are cached across calls,
/// so one instance can answer many queries; all public members are thread safe.
class GameSolver {
public:
    explicit GameSolver(const Graph& g, SolverOptions options = {});
    ~GameSolver();
    GameSolver(const GameSolver&) = delete;
    GameSolver& operator=(const GameSolver&) = delete;

    const Graph& graph() const;

    /// Remaining rounds under optimal play from the given lists.
    int value(const ListAssignment& lists);
    /// Same, with iterative deepening started at a caller-proven lower bound.
    int value(const ListAssignment& lists, int known_lower);
    /// An optimal request (lowest index among optimal vertices); none if colourable.
    std::optional<Vertex> best_request(const ListAssignment& lists);
    /// Bob's optimal response at v (first maximizing move class).
    Color best_response(const ListAssignment& lists, Vertex v);

    SolveStats stats() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

SolveResult isc_exact(const Graph& g, bool extract_policy = false, SolverOptions options = {});

/// Value of the game started from L.
int game_value(const Graph& g, const ListAssignment& lists, SolverOptions options = {});

/// Plain minimax over raw lists with its own colourability test. Bob may play any colour
/// already present and absent from L(v), or the smallest palette colour not present at all
/// (unused colours are interchangeable); full_palette enumerates every palette colour instead.
struct NaiveOptions {
    int max_vertices = 5;
    bool force = false;
    bool full_palette = false;
};
int isc_exact_naive(const Graph& g, int palette_size, NaiveOptions options = {});

// --- sum choice number --------------------------------------------------------

struct XscOptions {
    int max_vertices = 6;
    int max_sum = 14;
    bool force = false;
};

struct ChoiceCheck {
    bool ok = false;
    /// An uncolourable assignment meeting f when ok is false.
    std::optional<ListAssignment> witness;
};

ChoiceCheck is_choice_function(const Graph& g, const std::vector<int>& f, XscOptions options = {});
SolveResult xsc_exact(const Graph& g, XscOptions options = {});

// --- bounds -------------------------------------------------------------------

struct BoundsReport {
    int greedy = 0;
    int alpha = 0;
    int stable_lower = 0;
    std::optional<int> nontree_xsc_lower;

    nlohmann::json to_json() const;
};

BoundsReport bounds(const Graph& g);

enum class BoundKind { exact, upper, lower };
std::string_view to_string(BoundKind k);

struct KnownValue {
    int value = 0;
    BoundKind kind = BoundKind::exact;
    std::string source;
};

struct ClosedForm {
    std::optional<KnownValue> isc;
    std::optional<KnownValue> xsc;
    nlohmann::json to_json() const;
};

std::optional<ClosedForm> closed_form(const FamilySpec& spec);

using Rational = boost::rational<long long>;

struct GridBounds {
    Rational xsc_lower;
    Rational isc_upper;
    Rational gap_lower;
    int r = 0;
    int s = 0;
};

/// Needs 3 <= k <= l; throws std::invalid_argument otherwise.
GridBounds grid_bound_formulas(int k, int l);

/// max{q : q(q+1)/2 <= p}
int triangular_root(long long p);
/// floor(c * sqrt(x)) for non-negative integers, computed exactly.
long long floor_mul_sqrt(long long c, long long x);

} // namespace isc
