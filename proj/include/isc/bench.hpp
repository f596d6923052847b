#pragma once

#include "isc/players.hpp"
#include "isc/solver.hpp"

#include "json.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace isc {

// --- result cache ---------------------------------------------------------------

struct CacheEntry {
    std::string graph_key;
    std::string quantity; // isc, xsc or game
    int value = 0;
    std::string method;
    std::string created_at; // UTC, ISO 8601

    bool operator==(const CacheEntry&) const = default;
};

nlohmann::json to_json(const CacheEntry& e);
CacheEntry cache_entry_from_json(const nlohmann::json& j);

/// JSON-lines file, append only. Lines that fail to parse are skipped; the newest
/// matching line wins.
class ResultCache {
public:
    explicit ResultCache(std::string path);

    const std::string& path() const { return path_; }
    std::optional<CacheEntry> lookup(const std::string& graph_key, const std::string& quantity,
                                     const std::string& method) const;
    /// One write(2) per entry on an O_APPEND descriptor.
    void store(const CacheEntry& entry);
    /// Problems met while reading or writing (unreadable file, bad lines).
    std::vector<std::string> warnings() const;

private:
    void load();

    std::string path_;
    mutable std::mutex mutex_;
    std::map<std::tuple<std::string, std::string, std::string>, CacheEntry> entries_;
    std::vector<std::string> warnings_;
};

/// --cache flag if given, else ISC_CACHE, else none.
std::optional<std::string> cache_path(const std::optional<std::string>& flag);

std::string utc_timestamp();

// --- tables ---------------------------------------------------------------------

/// "cycle:3..6", "tree:2..5:1", "grid:3..6" (square grids), "grid:3x4..8".
std::vector<std::string> expand_spec_range(const std::string& range);

struct TableOptions {
    bool exact = false;
    bool isc = true;
    bool xsc = true;
    bool force = false;
    std::string format = "csv"; // csv or json
};

std::string emit_table(const std::string& range, const TableOptions& options, ResultCache* cache = nullptr);

// --- acceptance suite -----------------------------------------------------------

struct AcceptanceRow {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Names of the rows in run order.
std::vector<std::string> acceptance_row_names();
AcceptanceRow run_acceptance_row(const std::string& name);
/// Runs every row; report (if given) sees each row as soon as it finishes.
std::vector<AcceptanceRow> run_acceptance(const std::function<void(const AcceptanceRow&)>& report = {});

// --- sessions and the HTTP API ----------------------------------------------------

/// An error with the HTTP status it maps to.
class ApiError : public std::runtime_error {
public:
    ApiError(int status, const std::string& message) : std::runtime_error(message), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

/// One human-versus-engine game. Moves go through a Referee, so legality and termination
/// match run_game exactly.
class Session {
public:
    enum class Role { alice, bob };

    Session(std::string id, std::string graph_spec, Role human, std::string engine);

    const std::string& id() const { return id_; }
    Role human() const { return human_; }
    const Referee& referee() const { return referee_; }

    /// Human Alice requests v; the engine Bob answers at once.
    void request(Vertex v);
    /// Human Bob answers the engine's pending request.
    void respond(Color c);

    nlohmann::json state() const;
    nlohmann::json hint() const;

private:
    void engine_alice_moves();

    std::string id_;
    std::string spec_;
    std::optional<FamilySpec> family_;
    Graph graph_;
    Role human_;
    std::string engine_;
    Referee referee_;
    StrategyPtr alice_;
    AdversaryPtr bob_;
    std::shared_ptr<GameSolver> solver_;
    std::string message_;
};

std::string_view to_string(Session::Role r);
Session::Role parse_role(std::string_view text);

/// Thread-safe registry; moves on one session are serialized by a per-session lock.
class SessionManager {
public:
    nlohmann::json create(const nlohmann::json& body);
    nlohmann::json get(const std::string& id);
    nlohmann::json request(const std::string& id, const nlohmann::json& body);
    nlohmann::json respond(const std::string& id, const nlohmann::json& body);
    nlohmann::json hint(const std::string& id);
    static nlohmann::json families();

private:
    struct Slot {
        std::mutex mutex;
        std::unique_ptr<Session> session;
    };
    std::shared_ptr<Slot> find(const std::string& id);

    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Slot>> sessions_;
    long long next_id_ = 1;
};

/// HTTP front of a SessionManager, listening on a background thread.
class ApiServer {
public:
    explicit ApiServer(SessionManager& sessions);
    ~ApiServer();
    /// Port 0 picks a free port; returns the bound port.
    int start(const std::string& host, int port);
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Blocks serving the API on host:port until the process is stopped.
void serve_api(const std::string& bind, SessionManager& sessions);

// --- command line ---------------------------------------------------------------

/// Entry point of iscbench; argv excludes the program name.
int cmd_run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace isc
