#include "isc/bench.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>

namespace isc {

namespace {

struct Flags {
    std::string graph;
    bool exact = false;
    std::string strategy;
    std::string adversary;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> cache;
    bool force = false;
    std::string format = "json";
    std::string bind = "127.0.0.1:8080";
    std::string quantities = "isc,xsc";
    std::string row;
};

struct Loaded {
    FamilySpec spec;
    Graph graph;
};

Loaded load(const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("--graph is required");
    Loaded out{parse_family_spec(text), {}};
    out.graph = generate(out.spec);
    return out;
}

std::unique_ptr<ResultCache> open_cache(const Flags& flags, std::ostream& err)
{
    auto path = cache_path(flags.cache);
    if (!path) return nullptr;
    auto cache = std::make_unique<ResultCache>(*path);
    for (const auto& w : cache->warnings()) err << "warning: " << w << "\n";
    return cache;
}

// "random" plus --seed N means random:N.
std::string with_seed(const std::string& name, const Flags& flags)
{
    if (name == "random" && flags.seed) return "random:" + std::to_string(*flags.seed);
    return name;
}

std::shared_ptr<GameSolver> solver_for(const Graph& g, const Flags& flags)
{
    SolverOptions options;
    if (g.order() > options.max_vertices && !flags.force) {
        throw InstanceTooLarge("the optimal player needs the exact solver: " + std::to_string(g.order()) +
                               " vertices exceeds the guard of " + std::to_string(options.max_vertices) +
                               " (use --force)");
    }
    return std::make_shared<GameSolver>(g, options);
}

StrategyPtr build_strategy(const std::string& name, const Loaded& in, const Flags& flags, std::ostream& err)
{
    if (name == "optimal") return optimal_strategy(solver_for(in.graph, flags));
    std::string warning;
    StrategyPtr s = make_strategy(name, in.graph, in.spec, &warning);
    if (!warning.empty()) err << "warning: " << warning << "\n";
    return s;
}

nlohmann::json game_json(const Loaded& in, const std::string& alice, const std::string& bob, const Flags& flags,
                         std::ostream& err)
{
    const StrategyPtr strategy = build_strategy(alice, in, flags, err);
    std::shared_ptr<GameSolver> solver;
    if (bob == "optimal") solver = solver_for(in.graph, flags);
    AdversaryPtr adversary = make_adversary(with_seed(bob, flags), in.graph, solver);
    GameRecord record = run_game(in.graph, *strategy, *adversary);
    record.graph_spec = format_family_spec(in.spec);
    nlohmann::json out = to_json(record);
    out["strategy"] = alice;
    out["adversary"] = adversary->name();
    if (alice != "optimal") {
        const StrategyBound b = strategy_bound(alice, in.graph, in.spec);
        out["strategy_bound"] = b.bound;
        out["bound_source"] = b.source;
        out["within_bound"] = record.rounds <= b.bound;
    }
    return out;
}

int cmd_solve(const Flags& flags, std::ostream& out, std::ostream& err)
{
    const Loaded in = load(flags.graph);
    if (!flags.strategy.empty() || !flags.adversary.empty()) {
        if (flags.strategy.empty() || flags.adversary.empty()) {
            throw std::invalid_argument("solve by play needs both --strategy and --adversary");
        }
        out << game_json(in, flags.strategy, flags.adversary, flags, err).dump(2) << "\n";
        return 0;
    }
    nlohmann::json doc;
    const std::string key = canonical_hash(in.graph);
    auto cache = open_cache(flags, err);
    std::optional<CacheEntry> hit;
    if (cache) hit = cache->lookup(key, "isc", "solver");
    if (hit) {
        doc = {{"graph_spec", format_family_spec(in.spec)}, {"quantity", "isc"}, {"value", hit->value},
               {"method", hit->method}, {"source", "cache"}};
    } else {
        SolverOptions options;
        options.force = flags.force;
        const SolveResult r = isc_exact(in.graph, false, options);
        doc = r.to_json(format_family_spec(in.spec));
        doc["source"] = "solver";
        if (cache) cache->store(CacheEntry{key, "isc", r.value, "solver", utc_timestamp()});
    }
    doc["bounds"] = bounds(in.graph).to_json();
    if (auto cf = closed_form(in.spec)) doc["closed_form"] = cf->to_json();
    out << doc.dump(2) << "\n";
    return 0;
}

int cmd_xsc(const Flags& flags, std::ostream& out, std::ostream& err)
{
    const Loaded in = load(flags.graph);
    nlohmann::json doc = {{"graph_spec", format_family_spec(in.spec)}, {"quantity", "xsc"}};
    if (flags.exact) {
        const std::string key = canonical_hash(in.graph);
        auto cache = open_cache(flags, err);
        std::optional<CacheEntry> hit;
        if (cache) hit = cache->lookup(key, "xsc", "search");
        if (hit) {
            doc["value"] = hit->value;
            doc["method"] = hit->method;
            doc["source"] = "cache";
        } else {
            XscOptions options;
            options.force = flags.force;
            const SolveResult r = xsc_exact(in.graph, options);
            doc = r.to_json(format_family_spec(in.spec));
            doc["source"] = "solver";
            if (cache) cache->store(CacheEntry{key, "xsc", r.value, "search", utc_timestamp()});
        }
    } else {
        const BoundsReport b = bounds(in.graph);
        doc["upper"] = b.greedy;
        doc["lower"] = b.nontree_xsc_lower ? nlohmann::json(*b.nontree_xsc_lower) : nlohmann::json(in.graph.order());
        doc["method"] = "bounds";
    }
    if (auto cf = closed_form(in.spec)) doc["closed_form"] = cf->to_json();
    out << doc.dump(2) << "\n";
    return 0;
}

void show_board(const Session& s, std::ostream& out)
{
    const auto st = s.state();
    out << "round " << st["rounds"].get<int>() << "\n";
    const auto& lists = st["lists"];
    for (std::size_t v = 0; v < lists.size(); ++v) out << "  v" << v << ": " << lists[v].dump() << "\n";
    if (!st["pending"].is_null()) out << "Alice requests vertex " << st["pending"].get<int>() << "\n";
}

// Human play mirrors the API: the same Session drives the referee and the engine side.
int interactive(const Loaded& in, Session::Role human, const std::string& engine, std::ostream& out,
                std::ostream& err, std::istream& input)
{
    Session session("terminal", format_family_spec(in.spec), human, engine);
    out << "playing " << (human == Session::Role::alice ? "Alice" : "Bob") << " against " << session.state()["engine"].get<std::string>()
        << "; commands: a number, hint, quit\n";
    std::string line;
    while (!session.referee().terminal()) {
        show_board(session, out);
        out << (human == Session::Role::alice ? "vertex> " : "colour> ") << std::flush;
        if (!std::getline(input, line)) break;
        std::istringstream words(line);
        std::string word;
        words >> word;
        if (word.empty()) continue;
        if (word == "quit") break;
        if (word == "hint") {
            out << session.hint().dump() << "\n";
            continue;
        }
        try {
            const int value = std::stoi(word);
            if (human == Session::Role::alice) session.request(value);
            else session.respond(value);
        } catch (const ApiError& e) {
            err << "illegal move: " << e.what() << "\n";
        } catch (const std::logic_error&) {
            err << "expected a number, hint or quit\n";
        }
    }
    out << session.state().dump(2) << "\n";
    return 0;
}

int cmd_play(const Flags& flags, const std::string& alice, const std::string& bob, std::ostream& out,
             std::ostream& err, std::istream& in)
{
    const Loaded loaded = load(flags.graph);
    const std::string a = alice.empty() ? default_strategy_name(loaded.graph, loaded.spec) : alice;
    const std::string b = bob.empty() ? "sequential" : bob;
    if (a == "human" && b == "human") throw std::invalid_argument("at most one side can be human");
    if (a == "human") return interactive(loaded, Session::Role::alice, with_seed(b, flags), out, err, in);
    if (b == "human") return interactive(loaded, Session::Role::bob, a, out, err, in);
    out << game_json(loaded, a, b, flags, err).dump(2) << "\n";
    return 0;
}

int cmd_table(const Flags& flags, std::ostream& out, std::ostream& err)
{
    TableOptions options;
    options.exact = flags.exact;
    options.force = flags.force;
    options.format = flags.format;
    options.isc = flags.quantities.find("isc") != std::string::npos;
    options.xsc = flags.quantities.find("xsc") != std::string::npos;
    auto cache = open_cache(flags, err);
    out << emit_table(flags.graph, options, cache.get());
    return 0;
}

int cmd_verify(const Flags& flags, std::ostream& out)
{
    bool all = true;
    auto report = [&](const AcceptanceRow& row) {
        all = all && row.passed;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.1fs", row.seconds);
        out << (row.passed ? "PASS " : "FAIL ") << row.name << ": " << row.detail << " (" << secs << ")\n" << std::flush;
    };
    if (!flags.row.empty()) {
        report(run_acceptance_row(flags.row));
    } else {
        run_acceptance(report);
    }
    return all ? 0 : 1;
}

} // namespace

int cmd_run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, std::istream& in)
{
    CLI::App app{"sum list colouring game workbench"};
    app.require_subcommand(1);
    Flags flags;
    std::string alice;
    std::string bob;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--graph,-g", flags.graph, "graph spec, e.g. cycle:5, grid:3x4, file:PATH");
        sub->add_option("--cache", flags.cache, "JSON-lines result cache (default: $ISC_CACHE)");
        sub->add_flag("--force", flags.force, "run past the solver size guards");
        sub->add_option("--seed", flags.seed, "seed for the random adversary");
    };

    auto* solve = app.add_subcommand("solve", "isc by the exact solver or by playing a strategy against an adversary");
    common(solve);
    solve->add_flag("--exact", flags.exact, "exact solver (the default)");
    solve->add_option("--strategy", flags.strategy, "Alice strategy");
    solve->add_option("--adversary", flags.adversary, "Bob adversary");

    auto* xsc = app.add_subcommand("xsc", "sum choice number, exact or bounds");
    common(xsc);
    xsc->add_flag("--exact", flags.exact, "exhaustive search");

    auto* play = app.add_subcommand("play", "one game; human on either side plays in the terminal");
    common(play);
    play->add_option("--alice,--strategy", alice, "strategy name or human");
    play->add_option("--bob,--adversary", bob, "adversary name or human");

    auto* table = app.add_subcommand("table", "one row per instance of a family range");
    common(table);
    table->add_option("range", flags.graph, "range like cycle:3..6 (or use --graph)");
    table->add_flag("--exact", flags.exact, "solve instances within the guards");
    table->add_option("--format", flags.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--quantities", flags.quantities, "isc, xsc or isc,xsc");

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--row", flags.row, "run a single row");

    auto* serve = app.add_subcommand("serve", "serve the JSON API");
    serve->add_option("--bind", flags.bind, "HOST:PORT");

    for (auto* sub : {solve, xsc, play}) {
        sub->add_option("--format", flags.format, "json")->check(CLI::IsMember({"json"}));
    }

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (flags.format.empty()) flags.format = "json";
    if (table->parsed() && !table->count("--format")) flags.format = "csv";

    try {
        if (solve->parsed()) return cmd_solve(flags, out, err);
        if (xsc->parsed()) return cmd_xsc(flags, out, err);
        if (play->parsed()) return cmd_play(flags, alice, bob, out, err, in);
        if (table->parsed()) return cmd_table(flags, out, err);
        if (verify->parsed()) return cmd_verify(flags, out);
        if (serve->parsed()) {
            SessionManager sessions;
            serve_api(flags.bind, sessions);
            return 0;
        }
    } catch (const InstanceTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ApiError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace isc
