#include "isc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace isc {

namespace {

// Collects failures for one row; the first few are kept verbatim.
class Findings {
public:
    void check(bool ok, const std::string& what)
    {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 5) notes_.push_back(what);
    }
    bool passed() const { return failures_ == 0; }
    std::string summary() const
    {
        std::ostringstream out;
        out << checks_ << " checks";
        if (failures_ > 0) {
            out << ", " << failures_ << " failed:";
            for (const auto& n : notes_) out << " [" << n << "]";
        }
        return out.str();
    }

private:
    int checks_ = 0;
    int failures_ = 0;
    std::vector<std::string> notes_;
};

std::string show(const std::string& what, long long got, long long want)
{
    return what + ": got " + std::to_string(got) + ", want " + std::to_string(want);
}

std::vector<Graph> connected_up_to(int n)
{
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k) {
        for (Graph& g : connected_graphs(k)) out.push_back(std::move(g));
    }
    return out;
}

Graph bowtie()
{
    const std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
    return Graph(5, edges);
}

std::string label(const Graph& g)
{
    std::string out = "n" + std::to_string(g.order()) + "{";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + "-" + std::to_string(e.v) + " ";
    if (out.back() == ' ') out.pop_back();
    return out + "}";
}

int isc_of(const Graph& g)
{
    SolverOptions options;
    options.force = true;
    return isc_exact(g, false, options).value;
}

// --- rows -----------------------------------------------------------------------

void closed_forms(Findings& f)
{
    auto expect = [&](const std::string& spec, int want) {
        const int got = isc_of(generate(parse_family_spec(spec)));
        f.check(got == want, show(spec, got, want));
    };
    for (int n = 1; n <= 4; ++n) expect("complete:" + std::to_string(n), n * (n + 1) / 2);
    for (int n = 3; n <= 5; ++n) expect("cycle:" + std::to_string(n), 3 * (n + 1) / 2);
    for (int n = 2; n <= 6; ++n) expect("path:" + std::to_string(n), 3 * n / 2);
    for (int p = 1; p <= 5; ++p) {
        int q = 0;
        while ((q + 1) * (q + 2) / 2 <= p) ++q;
        expect("star:" + std::to_string(p), p + q + 1);
    }
}

void xsc_known(Findings& f)
{
    for (const Graph& g : connected_up_to(5)) {
        if (!g.is_tree()) continue;
        const int got = xsc_exact(g).value;
        f.check(got == 2 * g.order() - 1, show("tree " + label(g), got, 2 * g.order() - 1));
    }
    for (int n : {3, 4}) {
        const int got = xsc_exact(generate(parse_family_spec("cycle:" + std::to_string(n)))).value;
        f.check(got == 2 * n, show("cycle:" + std::to_string(n), got, 2 * n));
    }
    const int k23 = xsc_exact(generate(parse_family_spec("kpq:2x3"))).value;
    f.check(k23 == 10, show("kpq:2x3", k23, 10));
}

void oracle_equivalence(Findings& f)
{
    for (const Graph& g : connected_up_to(5)) {
        const int fast = isc_of(g);
        const int naive = isc_exact_naive(g, g.order() + g.size());
        f.check(fast == naive, show("isc vs naive on " + label(g), fast, naive));
    }
}

struct BoundCase {
    std::string spec;
    std::string strategy;
    std::optional<Graph> graph; // overrides spec
};

std::vector<std::string> heuristic_adversaries()
{
    std::vector<std::string> out = {"sequential", "fresh", "staircase", "evencycle"};
    for (int seed = 0; seed < 1000; ++seed) out.push_back("random:" + std::to_string(seed));
    return out;
}

void strategy_bounds(Findings& f)
{
    const auto heuristics = heuristic_adversaries();
    auto run = [&](const BoundCase& c, bool solvable) {
        std::optional<FamilySpec> spec;
        Graph g;
        if (c.graph) {
            g = *c.graph;
        } else {
            spec = parse_family_spec(c.spec);
            g = generate(*spec);
        }
        const StrategyPtr alice = make_strategy(c.strategy, g, spec);
        const int bound = strategy_bound(c.strategy, g, spec).bound;
        const std::string tag = c.spec + " " + c.strategy;
        if (solvable) {
            auto solver = std::make_shared<GameSolver>(g);
            auto bob = make_adversary("optimal", g, solver);
            const GameRecord r = run_game(g, *alice, *bob);
            f.check(r.terminal() && r.rounds <= bound, show(tag + " vs optimal", r.rounds, bound));
            const int worst = strategy_worst_case(g, *alice, bound + 2);
            f.check(worst <= bound, show(tag + " worst case over every Bob", worst, bound));
        }
        for (const auto& kind : heuristics) {
            auto bob = make_adversary(kind, g);
            const GameRecord r = run_game(g, *alice, *bob);
            f.check(r.terminal() && r.rounds <= bound, show(tag + " vs " + kind, r.rounds, bound));
        }
        if (c.strategy == "kpq") {
            const auto sides = complete_bipartition(g);
            const long long p = sides->first.size();
            const long long q = sides->second.size();
            const long long headline = p + q + floor_mul_sqrt(p * p, 2 * q);
            f.check(bound <= headline, show(tag + " bound within headline", bound, headline));
        }
    };

    for (int n = 2; n <= 5; ++n) run({"path:" + std::to_string(n), "scgreedy", {}}, true);
    for (int n = 3; n <= 5; ++n) run({"cycle:" + std::to_string(n), "cycle", {}}, true);
    for (int p = 1; p <= 4; ++p) run({"star:" + std::to_string(p), "star", {}}, true);
    run({"complete:3", "complete", {}}, true);
    run({"complete:4", "complete", {}}, true);
    run({"bowtie", "good2deg", bowtie()}, true);
    for (int seed = 0; seed < 4; ++seed) run({"cactus:5:" + std::to_string(seed), "good2deg", {}}, true);

    run({"star:10", "star", {}}, false);
    for (int n = 6; n <= 10; ++n) run({"cycle:" + std::to_string(n), "cycle", {}}, false);
    run({"grid:3x3", "grid", {}}, false);
    run({"grid:3x4", "grid", {}}, false);
    run({"grid:4x4", "grid", {}}, false);
    run({"kpq:2x8", "kpq", {}}, false);
    run({"fan:19", "join", {}}, false);
    for (int n = 6; n <= 12; ++n) {
        run({"path:" + std::to_string(n), "scgreedy", {}}, false);
        for (int seed = 0; seed < 3; ++seed) {
            run({"tree:" + std::to_string(n) + ":" + std::to_string(seed), "scgreedy", {}}, false);
            run({"cactus:" + std::to_string(n) + ":" + std::to_string(seed), "good2deg", {}}, false);
        }
    }
}

void lower_bound_adversaries(Findings& f)
{
    for (const Graph& g : connected_up_to(5)) {
        auto solver = std::make_shared<GameSolver>(g);
        const StrategyPtr alice = optimal_strategy(solver);
        auto bob = make_adversary("sequential", g);
        const int want = 2 * g.order() - max_independent_set_size(g);
        const GameRecord r = run_game(g, *alice, *bob);
        f.check(r.rounds >= want, show("sequential vs optimal Alice on " + label(g), r.rounds, want));
        auto again = make_adversary("sequential", g);
        const int best = best_response_rounds(g, *again, g.order() + g.size());
        f.check(best >= want, show("sequential vs best reply on " + label(g), best, want));
    }
    for (int p : {3, 4}) {
        const std::string spec = "star:" + std::to_string(p);
        const Graph g = generate(parse_family_spec(spec));
        auto solver = std::make_shared<GameSolver>(g);
        auto bob = make_adversary("staircase", g);
        const int want = p + triangular_root(p) + 1;
        const GameRecord r = run_game(g, *optimal_strategy(solver), *bob);
        f.check(r.rounds == want, show("staircase vs optimal Alice on " + spec, r.rounds, want));
    }
    {
        const Graph g = generate(parse_family_spec("star:10"));
        auto bob = make_adversary("staircase", g);
        const GameRecord r = run_game(g, *star_strategy(g), *bob);
        f.check(r.rounds >= 15, show("staircase vs star strategy on star:10", r.rounds, 15));
    }
    {
        const Graph g = generate(parse_family_spec("cycle:4"));
        auto solver = std::make_shared<GameSolver>(g);
        auto bob = make_adversary("evencycle", g);
        const GameRecord r = run_game(g, *optimal_strategy(solver), *bob);
        f.check(r.rounds == 7, show("evencycle vs optimal Alice on cycle:4", r.rounds, 7));
    }
}

void conjecture_probe(Findings& f)
{
    for (const Graph& g : connected_up_to(5)) {
        if (g.is_complete()) continue;
        const int isc = isc_of(g);
        const int xsc = xsc_exact(g).value;
        f.check(isc < xsc, "isc " + std::to_string(isc) + " not below xsc " + std::to_string(xsc) + " on " + label(g));
    }
    for (int n = 2; n <= 4; ++n) {
        const Graph g = generate(parse_family_spec("complete:" + std::to_string(n)));
        const int isc = isc_of(g);
        const int xsc = xsc_exact(g).value;
        f.check(isc == xsc, show("complete:" + std::to_string(n) + " isc vs xsc", isc, xsc));
    }
    const int k5 = isc_of(generate(parse_family_spec("complete:5")));
    f.check(k5 == 15, show("complete:5 isc", k5, 15));
}

void grid_formulas(Findings& f)
{
    for (int k = 3; k <= 20; ++k) {
        for (int l = k; l <= 20; ++l) {
            const GridBounds b = grid_bound_formulas(k, l);
            f.check(b.gap_lower >= Rational(k * l, 18),
                    "gap_lower below kl/18 at " + std::to_string(k) + "x" + std::to_string(l));
        }
    }
    auto upper = [&](int k, int l, int want) {
        const Rational got = grid_bound_formulas(k, l).isc_upper;
        f.check(got == Rational(want), "isc_upper(" + std::to_string(k) + "," + std::to_string(l) + ") = " +
                                           std::to_string(got.numerator()) + "/" + std::to_string(got.denominator()) +
                                           ", want " + std::to_string(want));
    };
    upper(3, 3, 18);
    upper(3, 4, 25);
    upper(4, 4, 34);
    for (auto [n, want] : {std::pair{3, 20}, std::pair{6, 43}, std::pair{9, 66}}) {
        const auto cf = closed_form(parse_family_spec("grid:3x" + std::to_string(n)));
        const int got = cf && cf->xsc ? cf->xsc->value : -1;
        f.check(got == want, show("closed form xsc grid:3x" + std::to_string(n), got, want));
    }
}

// Random legal states reached by a few requests; colours drawn from a small pool so reuse happens.
ListAssignment random_state(const Graph& g, std::mt19937_64& rng)
{
    ListAssignment lists(g.order());
    const int moves = std::uniform_int_distribution<int>(0, g.order() + 2)(rng);
    for (int i = 0; i < moves; ++i) {
        const Vertex v = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
        const Color c = std::uniform_int_distribution<int>(1, g.order() + 1)(rng);
        if (!lists.contains(v, c)) lists.append(v, c);
    }
    return lists;
}

void substitute_properties(Findings& f)
{
    std::mt19937_64 rng(20240611);

    const auto small = connected_up_to(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph& g = small[std::uniform_int_distribution<std::size_t>(0, small.size() - 1)(rng)];
        const ListAssignment lists = random_state(g, rng);
        std::vector<Color> image(2 * g.order() + 3);
        std::iota(image.begin(), image.end(), 1);
        std::shuffle(image.begin(), image.end(), rng);
        const int offset = std::uniform_int_distribution<int>(0, 50)(rng);
        std::vector<std::vector<Color>> renamed(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            for (Color c : lists[v]) renamed[v].push_back(image[c - 1] + offset);
        }
        const int a = game_value(g, lists);
        const int b = game_value(g, ListAssignment(renamed));
        f.check(a == b, show("renaming changed the value on " + label(g), b, a));
    }

    std::unordered_map<std::string, int> known;
    auto value = [&](const Graph& g) {
        const std::string key = canonical_hash(g);
        if (auto it = known.find(key); it != known.end()) return it->second;
        return known[key] = isc_of(g);
    };
    const auto pool = connected_up_to(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph& g = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        std::vector<Edge> kept;
        for (const Edge& e : g.edges()) {
            if (std::bernoulli_distribution(0.6)(rng)) kept.push_back(e);
        }
        const Graph h(g.order(), kept);
        f.check(value(h) <= value(g), show("edge deletion raised isc on " + label(g), value(h), value(g)));
    }

    for (int a = 1; a <= 5; ++a) {
        for (int b = a; a + b <= 6; ++b) {
            for (const Graph& g1 : connected_graphs(a)) {
                for (const Graph& g2 : connected_graphs(b)) {
                    const Graph u = disjoint_union(g1, g2);
                    f.check(value(u) == value(g1) + value(g2),
                            show("union of " + label(g1) + " and " + label(g2), value(u), value(g1) + value(g2)));
                }
            }
        }
    }

    for (const Graph& g : pool) {
        SolverOptions single;
        SolverOptions parallel;
        parallel.threads = 4;
        const int s = isc_exact(g, false, single).value;
        const int p = isc_exact(g, false, parallel).value;
        f.check(s == p, show("parallel solver on " + label(g), p, s));
    }
}

using RowFn = void (*)(Findings&);

const std::vector<std::pair<std::string, RowFn>>& rows()
{
    static const std::vector<std::pair<std::string, RowFn>> table = {
        {"isc-closed-forms", closed_forms},
        {"xsc-known-values", xsc_known},
        {"oracle-equivalence", oracle_equivalence},
        {"strategy-bound-compliance", strategy_bounds},
        {"lower-bound-adversaries", lower_bound_adversaries},
        {"conjecture-probe", conjecture_probe},
        {"grid-formulas", grid_formulas},
        {"substitute-properties", substitute_properties},
    };
    return table;
}

} // namespace

std::vector<std::string> acceptance_row_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : rows()) out.push_back(name);
    return out;
}

AcceptanceRow run_acceptance_row(const std::string& name)
{
    for (const auto& [row_name, fn] : rows()) {
        if (row_name != name) continue;
        AcceptanceRow row{name, false, "", 0};
        const auto start = std::chrono::steady_clock::now();
        Findings f;
        try {
            fn(f);
            row.passed = f.passed();
            row.detail = f.summary();
        } catch (const std::exception& e) {
            row.detail = f.summary() + "; aborted: " + e.what();
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return row;
    }
    throw std::invalid_argument("unknown acceptance row '" + name + "'");
}

std::vector<AcceptanceRow> run_acceptance(const std::function<void(const AcceptanceRow&)>& report)
{
    std::vector<AcceptanceRow> out;
    for (const auto& name : acceptance_row_names()) {
        out.push_back(run_acceptance_row(name));
        if (report) report(out.back());
    }
    return out;
}

} // namespace isc
