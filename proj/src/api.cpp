#include "isc/bench.hpp"

#include "httplib.h"

#include <iostream>
#include <thread>

namespace isc {

namespace {

constexpr int kSolverGuard = 7;

nlohmann::json lists_json(const ListAssignment& lists)
{
    nlohmann::json out = nlohmann::json::array();
    for (Vertex v = 0; v < lists.order(); ++v) {
        out.push_back(std::vector<Color>(lists[v].begin(), lists[v].end()));
    }
    return out;
}

template <class T>
T field(const nlohmann::json& body, const char* name)
{
    if (!body.is_object() || !body.contains(name)) throw ApiError(400, std::string("missing field '") + name + "'");
    try {
        return body.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ApiError(400, std::string("field '") + name + "' has the wrong type");
    }
}

} // namespace

std::string_view to_string(Session::Role r)
{
    return r == Session::Role::alice ? "alice" : "bob";
}

Session::Role parse_role(std::string_view text)
{
    if (text == "alice" || text == "Alice") return Session::Role::alice;
    if (text == "bob" || text == "Bob") return Session::Role::bob;
    throw ApiError(400, "human_role must be alice or bob");
}

namespace {

FamilySpec spec_or_400(const std::string& text)
{
    try {
        return parse_family_spec(text);
    } catch (const std::exception& e) {
        throw ApiError(400, e.what());
    }
}

Graph graph_or_400(const FamilySpec& spec)
{
    try {
        return generate(spec);
    } catch (const std::exception& e) {
        throw ApiError(400, e.what());
    }
}

} // namespace

Session::Session(std::string id, std::string graph_spec, Role human, std::string engine)
    : id_(std::move(id)),
      spec_(std::move(graph_spec)),
      family_(spec_or_400(spec_)),
      graph_(graph_or_400(*family_)),
      human_(human),
      engine_(std::move(engine)),
      referee_(graph_)
{
    if (graph_.order() <= kSolverGuard) solver_ = std::make_shared<GameSolver>(graph_);
    try {
        if (human_ == Role::alice) {
            if (engine_.empty()) engine_ = solver_ ? "optimal" : "sequential";
            bob_ = make_adversary(engine_, graph_, solver_);
        } else {
            if (engine_.empty()) engine_ = default_strategy_name(graph_, family_);
            alice_ = engine_ == "optimal" ? (solver_ ? optimal_strategy(solver_) : nullptr)
                                          : make_strategy(engine_, graph_, family_);
            if (!alice_) throw PlayerRejected("optimal strategy needs an exact solver for the graph");
            alice_ = with_greedy_fallback(alice_);
            engine_alice_moves();
        }
    } catch (const PlayerRejected& e) {
        throw ApiError(400, e.what());
    }
}

void Session::engine_alice_moves()
{
    if (referee_.terminal() || referee_.pending()) return;
    const auto v = alice_->next_request(GameView{graph_, referee_.lists(), graph_.vertices()});
    if (!v) {
        message_ = "engine strategy has no request left";
        return;
    }
    referee_.request(*v);
}

void Session::request(Vertex v)
{
    if (human_ != Role::alice) throw ApiError(409, "the human plays Bob in this session");
    try {
        referee_.request(v);
    } catch (const IllegalMove& e) {
        throw ApiError(409, e.what());
    }
    const Color c = bob_->respond(referee_.state(), v);
    referee_.respond(c);
}

void Session::respond(Color c)
{
    if (human_ != Role::bob) throw ApiError(409, "the human plays Alice in this session");
    try {
        referee_.respond(c);
    } catch (const IllegalMove& e) {
        throw ApiError(409, e.what());
    }
    if (referee_.terminal()) {
        if (auto pref = alice_->preferred_coloring(GameView{graph_, referee_.lists(), graph_.vertices()})) {
            referee_.prefer_coloring(*pref);
        }
        return;
    }
    engine_alice_moves();
}

nlohmann::json Session::state() const
{
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : graph_.edges()) edges.push_back({e.u, e.v});
    nlohmann::json trace = nlohmann::json::array();
    for (const Request& r : referee_.trace()) trace.push_back({{"v", r.vertex}, {"c", r.color}});
    nlohmann::json out = {
        {"id", id_},
        {"graph_spec", spec_},
        {"n", graph_.order()},
        {"edges", edges},
        {"human_role", std::string(to_string(human_))},
        {"engine", engine_},
        {"lists", lists_json(referee_.lists())},
        {"trace", trace},
        {"rounds", referee_.rounds()},
        {"pending", referee_.pending() ? nlohmann::json(*referee_.pending()) : nlohmann::json(nullptr)},
        {"terminal", referee_.terminal()},
        {"status", referee_.terminal() ? "terminal" : "live"},
    };
    if (referee_.coloring()) out["coloring"] = *referee_.coloring();
    if (!message_.empty()) out["message"] = message_;
    return out;
}

nlohmann::json Session::hint() const
{
    const ListAssignment& lists = referee_.lists();
    nlohmann::json out = {{"terminal", referee_.terminal()}, {"move", nullptr}};
    if (referee_.terminal()) {
        out["value"] = 0;
        out["method"] = "exact";
        return out;
    }
    if (solver_) {
        out["method"] = "exact";
        if (auto v = referee_.pending()) {
            // Value after the pending request is answered optimally: Bob's best reply plus the rest.
            const Color c = solver_->best_response(lists, *v);
            out["value"] = 1 + solver_->value(lists.with_request(*v, c));
            if (human_ == Role::bob) out["move"] = {{"colour", c}};
        } else {
            out["value"] = solver_->value(lists);
            if (human_ == Role::alice) {
                if (auto v = solver_->best_request(lists)) out["move"] = {{"vertex", *v}};
            }
        }
        return out;
    }
    out["method"] = "heuristic";
    out["value"] = nullptr;
    const std::string name = default_strategy_name(graph_, family_);
    out["strategy"] = name;
    try {
        out["strategy_bound"] = strategy_bound(name, graph_, family_).bound;
    } catch (const PlayerRejected&) {
    }
    if (human_ == Role::alice && !referee_.pending()) {
        const StrategyPtr s = with_greedy_fallback(make_strategy(name, graph_, family_));
        if (auto v = s->next_request(GameView{graph_, lists, graph_.vertices()})) out["move"] = {{"vertex", *v}};
    } else if (human_ == Role::bob && referee_.pending()) {
        out["move"] = {{"colour", lists.fresh_color()}};
    }
    return out;
}

// --- manager --------------------------------------------------------------------

std::shared_ptr<SessionManager::Slot> SessionManager::find(const std::string& id)
{
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw ApiError(404, "unknown session '" + id + "'");
    return it->second;
}

nlohmann::json SessionManager::create(const nlohmann::json& body)
{
    const auto spec = field<std::string>(body, "graph_spec");
    const Session::Role role = parse_role(field<std::string>(body, "human_role"));
    std::string engine;
    if (body.contains("engine_name") && !body["engine_name"].is_null()) engine = field<std::string>(body, "engine_name");
    std::string id;
    {
        std::lock_guard lock(mutex_);
        id = std::to_string(next_id_++);
    }
    auto slot = std::make_shared<Slot>();
    slot->session = std::make_unique<Session>(id, spec, role, engine);
    nlohmann::json state = slot->session->state();
    {
        std::lock_guard lock(mutex_);
        sessions_[id] = std::move(slot);
    }
    return {{"id", id}, {"state", state}};
}

nlohmann::json SessionManager::get(const std::string& id)
{
    auto slot = find(id);
    std::lock_guard lock(slot->mutex);
    return slot->session->state();
}

nlohmann::json SessionManager::request(const std::string& id, const nlohmann::json& body)
{
    auto slot = find(id);
    const int v = field<int>(body, "vertex");
    std::lock_guard lock(slot->mutex);
    slot->session->request(v);
    return slot->session->state();
}

nlohmann::json SessionManager::respond(const std::string& id, const nlohmann::json& body)
{
    auto slot = find(id);
    const nlohmann::json* value = nullptr;
    if (body.is_object() && body.contains("colour")) value = &body["colour"];
    else if (body.is_object() && body.contains("color")) value = &body["color"];
    if (!value || !value->is_number_integer()) throw ApiError(400, "missing integer field 'colour'");
    const int c = value->get<int>();
    std::lock_guard lock(slot->mutex);
    slot->session->respond(c);
    return slot->session->state();
}

nlohmann::json SessionManager::hint(const std::string& id)
{
    auto slot = find(id);
    std::lock_guard lock(slot->mutex);
    return slot->session->hint();
}

nlohmann::json SessionManager::families()
{
    return {
        {"grammar", "family:params"},
        {"families",
         {
             {{"name", "path"}, {"example", "path:5"}},
             {{"name", "cycle"}, {"example", "cycle:6"}},
             {{"name", "complete"}, {"example", "complete:4"}},
             {{"name", "kminus"}, {"example", "kminus:10"}},
             {{"name", "star"}, {"example", "star:7"}},
             {{"name", "kpq"}, {"example", "kpq:2x8"}},
             {{"name", "grid"}, {"example", "grid:3x4"}},
             {{"name", "tree"}, {"example", "tree:9:1"}},
             {{"name", "cactus"}, {"example", "cactus:12:5"}},
             {{"name", "fan"}, {"example", "fan:19"}},
             {{"name", "file"}, {"example", "file:PATH"}},
         }},
        {"strategies", strategy_names()},
        {"adversaries", adversary_names()},
    };
}

// --- HTTP -----------------------------------------------------------------------

namespace {

template <class Fn>
void answer(httplib::Response& res, Fn fn)
{
    try {
        res.set_content(fn().dump(), "application/json");
    } catch (const ApiError& e) {
        res.status = e.status();
        res.set_content(nlohmann::json{{"error", e.what()}}.dump(), "application/json");
    } catch (const nlohmann::json::exception& e) {
        res.status = 400;
        res.set_content(nlohmann::json{{"error", std::string("bad JSON: ") + e.what()}}.dump(), "application/json");
    } catch (const std::exception& e) {
        res.status = 500;
        res.set_content(nlohmann::json{{"error", e.what()}}.dump(), "application/json");
    }
}

nlohmann::json body_of(const httplib::Request& req)
{
    if (req.body.empty()) return nlohmann::json::object();
    return nlohmann::json::parse(req.body);
}

} // namespace

namespace {

void register_routes(httplib::Server& server, SessionManager& sessions)
{
    server.Post("/session", [&](const httplib::Request& req, httplib::Response& res) {
        answer(res, [&] { return sessions.create(body_of(req)); });
    });
    server.Get(R"(/session/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
        answer(res, [&] { return sessions.get(req.matches[1]); });
    });
    server.Post(R"(/session/([^/]+)/request)", [&](const httplib::Request& req, httplib::Response& res) {
        answer(res, [&] { return sessions.request(req.matches[1], body_of(req)); });
    });
    server.Post(R"(/session/([^/]+)/respond)", [&](const httplib::Request& req, httplib::Response& res) {
        answer(res, [&] { return sessions.respond(req.matches[1], body_of(req)); });
    });
    server.Get(R"(/session/([^/]+)/hint)", [&](const httplib::Request& req, httplib::Response& res) {
        answer(res, [&] { return sessions.hint(req.matches[1]); });
    });
    server.Get("/graphs/families", [&](const httplib::Request&, httplib::Response& res) {
        answer(res, [&] { return SessionManager::families(); });
    });
    // The board is served from another origin during development.
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
}

} // namespace

struct ApiServer::Impl {
    httplib::Server server;
    std::thread worker;
};

ApiServer::ApiServer(SessionManager& sessions) : impl_(std::make_unique<Impl>())
{
    register_routes(impl_->server, sessions);
}

ApiServer::~ApiServer()
{
    stop();
}

int ApiServer::start(const std::string& host, int port)
{
    const int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
    if (bound < 0) throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
    impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return bound;
}

void ApiServer::stop()
{
    impl_->server.stop();
    if (impl_->worker.joinable()) impl_->worker.join();
}

void serve_api(const std::string& bind, SessionManager& sessions)
{
    const auto colon = bind.rfind(':');
    if (colon == std::string::npos) throw std::invalid_argument("--bind wants HOST:PORT");
    const std::string host = bind.substr(0, colon);
    const int port = std::stoi(bind.substr(colon + 1));
    httplib::Server server;
    register_routes(server, sessions);
    std::cerr << "serving on " << host << ":" << port << std::endl;
    if (!server.listen(host, port)) throw std::runtime_error("cannot listen on " + bind);
}

} // namespace isc
