#include "isc/players.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace isc {

namespace {

Color alpha(const ListAssignment& lists, Vertex v)
{
    return lists[v].empty() ? kNoColor : lists[v][0];
}

std::optional<Vertex> first_empty(const ListAssignment& lists, VertexSet region)
{
    for (Vertex v : region.to_vector()) {
        if (lists[v].empty()) return v;
    }
    return std::nullopt;
}

void forbid(ForbiddenMap& forbidden, Vertex u, Color c)
{
    auto& f = forbidden[u];
    if (std::find(f.begin(), f.end(), c) == f.end()) f.push_back(c);
}

bool used_by_neighbour(const Graph& g, const Coloring& coloring, Vertex v, Color c)
{
    for (Vertex u : g.neighbours(v)) {
        if (coloring[u] == c) return true;
    }
    return false;
}

// What a plan wants next: a request, or (when it has nothing to ask) the colouring it built.
// Neither means the plan is stuck.
struct Step {
    std::optional<Vertex> request;
    std::optional<Coloring> coloring;

    static Step ask(Vertex v) { return {v, std::nullopt}; }
    static Step done(Coloring c) { return {std::nullopt, std::move(c)}; }
    static Step stuck() { return {}; }
};

// Colour vertices in order with the first list colour not on a coloured neighbour.
// Precoloured entries in coloring are kept.
Step deal(const Graph& g, const ListAssignment& lists, const std::vector<Vertex>& order, Coloring coloring)
{
    for (Vertex v : order) {
        if (coloring[v] != kNoColor) continue;
        for (Color c : lists[v]) {
            if (!used_by_neighbour(g, coloring, v, c)) {
                coloring[v] = c;
                break;
            }
        }
        if (coloring[v] == kNoColor) return Step::ask(v);
    }
    return Step::done(std::move(coloring));
}

Coloring blank(const Graph& g)
{
    return Coloring(g.order(), kNoColor);
}

void merge_into(Coloring& out, const Coloring& part, VertexSet region)
{
    for (Vertex v : region.to_vector()) out[v] = part[v];
}

bool valid_on(const Graph& g, const ListAssignment& lists, const Coloring& c, VertexSet region)
{
    for (Vertex v : region.to_vector()) {
        if (!lists.contains(v, c[v])) return false;
        for (Vertex u : g.neighbours(v)) {
            if (region.contains(u) && c[u] == c[v]) return false;
        }
    }
    return true;
}

using Planner = std::function<Step(const GameView&)>;

class PlanStrategy final : public Strategy {
public:
    PlanStrategy(std::string name, Planner plan) : name_(std::move(name)), plan_(std::move(plan)) {}

    std::string name() const override { return name_; }

    std::optional<Vertex> next_request(const GameView& view) const override { return plan_(view).request; }

    std::optional<Coloring> preferred_coloring(const GameView& view) const override
    {
        Step step = plan_(view);
        if (step.coloring && valid_on(view.graph, view.lists, *step.coloring, view.region)) return step.coloring;
        return Strategy::preferred_coloring(view);
    }

private:
    std::string name_;
    Planner plan_;
};

StrategyPtr finish(StrategyPtr inner)
{
    return with_greedy_fallback(with_forced_opening(std::move(inner)));
}

// --- forests -------------------------------------------------------------------

// Forests need at most floor(n/2) requests beyond the first colours. Two reductions always
// apply to a tree on three or more vertices: a vertex with two leaves, or a leaf hanging off
// a vertex of degree two. Each removes two vertices for one request.
using PlanFn = Step (*)(const Graph&, const ListAssignment&, VertexSet, const ForbiddenMap&);

// Two leaves on one vertex, or a leaf hanging off a degree-2 vertex: remove the pair and
// spend at most one extra request on it. None if neither shape occurs in the region.
std::optional<Step> leaf_reduction(const Graph& g, const ListAssignment& raw, VertexSet region,
                                   const ForbiddenMap& forbidden, PlanFn recurse)
{
    const ListAssignment lists = raw.without(forbidden);
    auto degree = [&](Vertex v) { return (g.neighbour_set(v) & region).size(); };
    auto other_than = [&](Vertex v, Color avoid) {
        for (Color c : lists[v]) {
            if (c != avoid) return c;
        }
        return kNoColor;
    };

    for (Vertex y : region.to_vector()) {
        std::vector<Vertex> leaves;
        for (Vertex u : (g.neighbour_set(y) & region).to_vector()) {
            if (degree(u) == 1) leaves.push_back(u);
        }
        if (leaves.size() < 2) continue;
        const Vertex x1 = leaves[0];
        const Vertex x2 = leaves[1];
        const VertexSet rest = region - VertexSet::single(x1) - VertexSet::single(x2);
        if (alpha(lists, x1) == alpha(lists, x2)) {
            ForbiddenMap next = forbidden;
            forbid(next, y, alpha(lists, x1));
            Step step = recurse(g, raw, rest, next);
            if (!step.coloring) return step;
            (*step.coloring)[x1] = alpha(lists, x1);
            (*step.coloring)[x2] = alpha(lists, x2);
            return step;
        }
        Step step = recurse(g, raw, rest, forbidden);
        if (!step.coloring) return step;
        Coloring out = *step.coloring;
        for (Vertex x : {x1, x2}) {
            out[x] = other_than(x, out[y]);
            if (out[x] == kNoColor) return Step::ask(x);
        }
        return Step::done(std::move(out));
    }

    for (Vertex x : region.to_vector()) {
        if (degree(x) != 1) continue;
        const Vertex y = (g.neighbour_set(x) & region).lowest();
        if (degree(y) != 2) continue;
        const Vertex w = ((g.neighbour_set(y) & region) - VertexSet::single(x)).lowest();
        const VertexSet rest = region - VertexSet::single(x) - VertexSet::single(y);
        if (alpha(lists, x) != alpha(lists, y)) {
            ForbiddenMap next = forbidden;
            forbid(next, w, alpha(lists, y));
            Step step = recurse(g, raw, rest, next);
            if (!step.coloring) return step;
            (*step.coloring)[x] = alpha(lists, x);
            (*step.coloring)[y] = alpha(lists, y);
            return step;
        }
        Step step = recurse(g, raw, rest, forbidden);
        if (!step.coloring) return step;
        Coloring out = *step.coloring;
        if (out[w] != alpha(lists, y)) {
            out[y] = alpha(lists, y);
            out[x] = other_than(x, out[y]);
            if (out[x] == kNoColor) return Step::ask(x);
        } else {
            out[x] = alpha(lists, x);
            out[y] = other_than(y, out[w]);
            if (out[y] == kNoColor) return Step::ask(y);
        }
        return Step::done(std::move(out));
    }
    return std::nullopt;
}

Step forest_plan(const Graph& g, const ListAssignment& raw, VertexSet region, const ForbiddenMap& forbidden)
{
    const ListAssignment lists = raw.without(forbidden);
    if (auto v = first_empty(lists, region)) return Step::ask(*v);
    if (region.empty()) return Step::done(blank(g));
    const auto comps = g.components(region);
    if (comps.size() > 1) {
        Coloring out = blank(g);
        for (VertexSet comp : comps) {
            Step step = forest_plan(g, raw, comp, forbidden);
            if (!step.coloring) return step;
            merge_into(out, *step.coloring, comp);
        }
        return Step::done(std::move(out));
    }
    if (region.size() <= 2) return deal(g, lists, region.to_vector(), blank(g));

    if (auto step = leaf_reduction(g, raw, region, forbidden, forest_plan)) return *step;
    return deal(g, lists, region.to_vector(), blank(g));
}

// --- sc-greedy ----------------------------------------------------------------

Step scgreedy_plan(const Graph& g, const ListAssignment& raw, VertexSet region, const ForbiddenMap& forbidden)
{
    const ListAssignment lists = raw.without(forbidden);
    if (auto v = first_empty(lists, region)) return Step::ask(*v);
    if (region.empty()) return Step::done(blank(g));

    const auto comps = g.components(region);
    if (comps.size() > 1) {
        Coloring out = blank(g);
        for (VertexSet comp : comps) {
            Step step = scgreedy_plan(g, raw, comp, forbidden);
            if (!step.coloring) return step;
            merge_into(out, *step.coloring, comp);
        }
        return Step::done(std::move(out));
    }

    if (region.size() < 3 || g.is_clique(region)) {
        return deal(g, lists, region.to_vector(), blank(g));
    }
    if (g.edges_within(region) == region.size() - 1) return forest_plan(g, raw, region, forbidden);

    const InducedP3 p3 = *find_induced_p3(g, region);
    Vertex a = p3.x;
    Vertex b = p3.y;
    const Vertex c = p3.z;
    Coloring fixed = blank(g);
    ForbiddenMap next = forbidden;
    VertexSet removed;
    if (alpha(lists, a) == alpha(lists, b) && alpha(lists, c) != alpha(lists, b)) {
        a = c; // the far end plays the role of x
    }
    if (alpha(lists, a) != alpha(lists, b)) {
        removed = VertexSet::single(a) | VertexSet::single(b);
        const VertexSet rest = region - removed;
        fixed[a] = alpha(lists, a);
        fixed[b] = alpha(lists, b);
        for (Vertex u : (g.neighbour_set(a) & rest).to_vector()) forbid(next, u, fixed[a]);
        for (Vertex u : (g.neighbour_set(b) & rest).to_vector()) forbid(next, u, fixed[b]);
    } else {
        // All three share one first colour: colour both ends with it.
        removed = VertexSet::single(p3.x) | VertexSet::single(c);
        const VertexSet rest = region - removed;
        const Color shared = alpha(lists, p3.x);
        fixed[p3.x] = shared;
        fixed[c] = shared;
        for (Vertex u : ((g.neighbour_set(p3.x) | g.neighbour_set(c)) & rest).to_vector()) forbid(next, u, shared);
    }
    const VertexSet rest = region - removed;
    Step step = scgreedy_plan(g, raw, rest, next);
    if (!step.coloring) return step;
    merge_into(*step.coloring, fixed, removed);
    return step;
}

Planner scgreedy_planner()
{
    return [](const GameView& view) {
        return scgreedy_plan(view.graph, view.lists, view.region, ForbiddenMap(view.graph.order()));
    };
}

StrategyPtr scgreedy_region_strategy()
{
    return with_forced_opening(std::make_shared<PlanStrategy>("scgreedy", scgreedy_planner()));
}

// --- stars --------------------------------------------------------------------

Step star_plan(const GameView& view, Vertex centre, int q)
{
    const Graph& g = view.graph;
    const ListAssignment& lists = view.lists;
    if (auto v = first_empty(lists, view.region)) return Step::ask(*v);
    const auto leaves = (g.neighbour_set(centre) & view.region).to_vector();
    const auto centre_list = lists[centre];
    for (int i = 1; i <= static_cast<int>(centre_list.size()); ++i) {
        const Color ci = centre_list[i - 1];
        std::vector<Vertex> clashing;
        for (Vertex w : leaves) {
            if (alpha(lists, w) == ci) clashing.push_back(w);
        }
        if (static_cast<int>(clashing.size()) > q + 1 - i) continue;
        Coloring out = blank(g);
        out[centre] = ci;
        for (Vertex w : leaves) out[w] = alpha(lists, w);
        for (Vertex w : clashing) {
            if (lists[w].size() < 2) return Step::ask(w);
            out[w] = lists[w][1];
        }
        return Step::done(std::move(out));
    }
    return Step::ask(centre);
}

// --- clique minus an edge -----------------------------------------------------

Step kminus_plan(const GameView& view, Vertex u, Vertex v, int t)
{
    const Graph& g = view.graph;
    const ListAssignment& lists = view.lists;
    if (auto w = first_empty(lists, view.region)) return Step::ask(*w);
    if (static_cast<int>(lists[u].size()) < 1 + t) return Step::ask(u);
    if (static_cast<int>(lists[v].size()) < 1 + t) return Step::ask(v);

    std::vector<Vertex> others;
    for (Vertex w : view.region.to_vector()) {
        if (w != u && w != v) others.push_back(w);
    }
    for (Color c : lists[u]) {
        if (lists.contains(v, c)) {
            Coloring pre = blank(g);
            pre[u] = c;
            pre[v] = c;
            return deal(g, lists, others, std::move(pre));
        }
    }

    // No shared colour: deal the others in order, but take u or v as soon as it is down
    // to its last available colour.
    Coloring coloring = blank(g);
    auto available = [&](Vertex w) {
        int count = 0;
        for (Color c : lists[w]) count += used_by_neighbour(g, coloring, w, c) ? 0 : 1;
        return count;
    };
    auto take = [&](Vertex w) -> bool {
        for (Color c : lists[w]) {
            if (!used_by_neighbour(g, coloring, w, c)) {
                coloring[w] = c;
                return true;
            }
        }
        return false;
    };
    std::size_t next = 0;
    while (true) {
        bool progressed = false;
        for (Vertex w : {u, v}) {
            if (coloring[w] == kNoColor && available(w) <= 1) {
                if (!take(w)) return Step::ask(w);
                progressed = true;
            }
        }
        if (progressed) continue;
        if (next < others.size()) {
            const Vertex w = others[next++];
            if (!take(w)) return Step::ask(w);
            continue;
        }
        for (Vertex w : {u, v}) {
            if (coloring[w] == kNoColor && !take(w)) return Step::ask(w);
        }
        return Step::done(std::move(coloring));
    }
}

// --- complete bipartite and joins ---------------------------------------------

struct Levels {
    std::vector<Color> reserved;
    VertexSet remaining;
    Coloring coloring; // colours of the vertices removed by levels
};

// Repeatedly sets aside the largest colour class of the big side while it has at least t
// members, with t starting at max{t : t(t+1)/2 <= |big|} and dropping by one each level.
Levels peel_levels(const Graph& g, VertexSet big, const Coloring& colour_of)
{
    Levels out{{}, big, blank(g)};
    int t = triangular_root(big.size());
    while (t >= 1 && !out.remaining.empty()) {
        std::map<Color, VertexSet> classes;
        for (Vertex w : out.remaining.to_vector()) classes[colour_of[w]].insert(w);
        Color best = kNoColor;
        VertexSet best_class;
        for (const auto& [c, members] : classes) {
            const bool larger = members.size() > best_class.size();
            const bool tie_lower = members.size() == best_class.size() && members.lowest() < best_class.lowest();
            if (best == kNoColor || larger || tie_lower) {
                best = c;
                best_class = members;
            }
        }
        if (best_class.size() < t) break;
        out.reserved.push_back(best);
        for (Vertex w : best_class.to_vector()) out.coloring[w] = best;
        out.remaining -= best_class;
        --t;
    }
    return out;
}

bool contains(const std::vector<Color>& colours, Color c)
{
    return std::find(colours.begin(), colours.end(), c) != colours.end();
}

Step kpq_plan(const GameView& view, VertexSet small, VertexSet big)
{
    const Graph& g = view.graph;
    const ListAssignment& lists = view.lists;
    if (auto w = first_empty(lists, view.region)) return Step::ask(*w);
    Coloring first = blank(g);
    for (Vertex w : big.to_vector()) first[w] = alpha(lists, w);
    Levels levels = peel_levels(g, big, first);

    Coloring out = levels.coloring;
    std::vector<Color> centre_colours;
    for (Vertex c : small.to_vector()) {
        for (Color x : lists[c]) {
            if (!contains(levels.reserved, x)) {
                out[c] = x;
                break;
            }
        }
        if (out[c] == kNoColor) return Step::ask(c);
        centre_colours.push_back(out[c]);
    }
    for (Vertex w : levels.remaining.to_vector()) {
        for (Color x : lists[w]) {
            if (!contains(centre_colours, x)) {
                out[w] = x;
                break;
            }
        }
        if (out[w] == kNoColor) return Step::ask(w);
    }
    return Step::done(std::move(out));
}

Step join_plan(const GameView& view, VertexSet a_side, VertexSet b_side)
{
    const Graph& g = view.graph;
    const ListAssignment& lists = view.lists;
    if (auto w = first_empty(lists, view.region)) return Step::ask(*w);

    Step b_step = scgreedy_plan(g, lists, b_side, ForbiddenMap(g.order()));
    if (!b_step.coloring) return b_step;
    const Coloring beta = *b_step.coloring;
    Levels levels = peel_levels(g, b_side, beta);

    Coloring out = blank(g);
    std::vector<Color> a_colours;
    for (Vertex a : a_side.to_vector()) {
        for (Color x : lists[a]) {
            if (!contains(levels.reserved, x) && !used_by_neighbour(g, out, a, x)) {
                out[a] = x;
                break;
            }
        }
        if (out[a] == kNoColor) return Step::ask(a);
        a_colours.push_back(out[a]);
    }

    std::vector<Vertex> clashing;
    for (Vertex w : b_side.to_vector()) {
        if (levels.remaining.contains(w) && contains(a_colours, beta[w])) clashing.push_back(w);
        else out[w] = beta[w];
    }
    for (Vertex w : clashing) {
        for (Color x : lists[w]) {
            if (!contains(a_colours, x) && !used_by_neighbour(g, out, w, x)) {
                out[w] = x;
                break;
            }
        }
        if (out[w] == kNoColor) return Step::ask(w);
    }
    return Step::done(std::move(out));
}

// --- good 2-degenerate graphs -------------------------------------------------

bool is_forest_region(const Graph& g, VertexSet region)
{
    return g.edges_within(region) == region.size() - static_cast<int>(g.components(region).size());
}

Step good2deg_plan(const Graph& g, const ListAssignment& raw, VertexSet region, const ForbiddenMap& forbidden)
{
    const ListAssignment lists = raw.without(forbidden);
    if (auto w = first_empty(lists, region)) return Step::ask(*w);
    if (region.empty()) return Step::done(blank(g));
    if (is_forest_region(g, region)) return forest_plan(g, raw, region, forbidden);
    const auto comps = g.components(region);
    if (comps.size() > 1) {
        Coloring out = blank(g);
        for (VertexSet comp : comps) {
            Step step = good2deg_plan(g, raw, comp, forbidden);
            if (!step.coloring) return step;
            merge_into(out, *step.coloring, comp);
        }
        return Step::done(std::move(out));
    }
    if (auto step = leaf_reduction(g, raw, region, forbidden, good2deg_plan)) return *step;

    const auto ordering = good_2deg_ordering(g, region);
    if (!ordering) return deal(g, lists, region.to_vector(), blank(g));

    // First vertex with two later neighbours: it closes a cycle lying later in the order.
    VertexSet later = region;
    Vertex v = -1;
    for (Vertex w : ordering->order) {
        later.erase(w);
        if ((g.neighbour_set(w) & later).size() == 2) {
            v = w;
            break;
        }
    }
    std::optional<Vertex> x;
    for (Vertex w : (g.neighbour_set(v) & region).to_vector()) {
        if ((g.neighbour_set(w) & region).size() == 1) {
            x = w;
            break;
        }
    }

    auto free_colour = [&](Vertex w, const Coloring& coloring) -> Color {
        for (Color c : lists[w]) {
            if (!used_by_neighbour(g, coloring, w, c)) return c;
        }
        return kNoColor;
    };

    if (x && alpha(lists, v) != alpha(lists, *x)) {
        const VertexSet rest = region - VertexSet::single(v) - VertexSet::single(*x);
        ForbiddenMap next = forbidden;
        for (Vertex u : (g.neighbour_set(v) & rest).to_vector()) forbid(next, u, alpha(lists, v));
        Step step = good2deg_plan(g, raw, rest, next);
        if (!step.coloring) return step;
        (*step.coloring)[v] = alpha(lists, v);
        (*step.coloring)[*x] = alpha(lists, *x);
        return step;
    }
    if (x) {
        const VertexSet rest = region - VertexSet::single(v) - VertexSet::single(*x);
        Step step = good2deg_plan(g, raw, rest, forbidden);
        if (!step.coloring) return step;
        Coloring out = *step.coloring;
        bool blocked = false;
        for (Vertex u : (g.neighbour_set(v) & rest).to_vector()) blocked |= out[u] == alpha(lists, v);
        if (blocked) {
            out[*x] = alpha(lists, *x);
            out[v] = free_colour(v, out);
            if (out[v] == kNoColor) return Step::ask(v);
        } else {
            out[v] = alpha(lists, v);
            out[*x] = free_colour(*x, out);
            if (out[*x] == kNoColor) return Step::ask(*x);
        }
        return Step::done(std::move(out));
    }
    const VertexSet rest = region - VertexSet::single(v);
    Step step = good2deg_plan(g, raw, rest, forbidden);
    if (!step.coloring) return step;
    Coloring out = *step.coloring;
    out[v] = free_colour(v, out);
    if (out[v] == kNoColor) return Step::ask(v);
    return Step::done(std::move(out));
}

int isqrt_floor_bound(long long base, long long c, long long x)
{
    return static_cast<int>(base + floor_mul_sqrt(c, x));
}

} // namespace

// --- structure helpers ----------------------------------------------------------

std::optional<std::vector<Vertex>> cycle_order(const Graph& g)
{
    if (g.order() < 3 || !g.is_connected() || g.size() != g.order()) return std::nullopt;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) return std::nullopt;
    }
    std::vector<Vertex> order{0};
    Vertex prev = -1;
    Vertex cur = 0;
    while (static_cast<int>(order.size()) < g.order()) {
        const auto& nb = g.neighbours(cur);
        const Vertex next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    return order;
}

std::optional<std::pair<VertexSet, VertexSet>> complete_bipartition(const Graph& g)
{
    if (g.order() < 2 || !g.is_connected()) return std::nullopt;
    const VertexSet side0 = g.vertices() - g.neighbour_set(0);
    const VertexSet side1 = g.vertices() - side0;
    if (side1.empty()) return std::nullopt;
    if (g.size() != side0.size() * side1.size()) return std::nullopt;
    for (Vertex v : side0.to_vector()) {
        if (g.neighbour_set(v) != side1) return std::nullopt;
    }
    if (side1.size() < side0.size()) return std::make_pair(side1, side0);
    return std::make_pair(side0, side1);
}

std::optional<std::pair<VertexSet, VertexSet>> join_sides(const Graph& g)
{
    // Co-components of the complement: a join splits along any union of them.
    std::vector<Edge> complement;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) complement.push_back({u, v});
        }
    }
    const Graph co(g.order(), complement);
    auto comps = co.components(g.vertices());
    if (comps.size() < 2) return std::nullopt;
    VertexSet small = comps[0];
    for (VertexSet c : comps) {
        if (c.size() < small.size()) small = c;
    }
    return std::make_pair(small, g.vertices() - small);
}

std::optional<Vertex> star_centre(const Graph& g)
{
    if (g.order() < 2 || !g.is_tree()) return std::nullopt;
    Vertex centre = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > g.degree(centre)) centre = v;
    }
    if (g.degree(centre) != g.order() - 1) return std::nullopt;
    return centre;
}

std::optional<std::pair<Vertex, Vertex>> missing_edge(const Graph& g)
{
    const int n = g.order();
    if (n < 2 || g.size() != n * (n - 1) / 2 - 1) return std::nullopt;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

// --- factories ----------------------------------------------------------------

StrategyPtr greedy_fallback(const Graph& /*g*/, std::optional<std::vector<Vertex>> order)
{
    return with_forced_opening(greedy_strategy(std::move(order)));
}

StrategyPtr complete_sequential(const Graph& g)
{
    if (!g.is_complete()) throw PlayerRejected("complete: graph is not complete");
    return with_forced_opening(std::make_shared<PlanStrategy>("complete", [](const GameView& view) {
        return deal(view.graph, view.lists, view.region.to_vector(), blank(view.graph));
    }));
}

StrategyPtr scgreedy_general(const Graph& /*g*/)
{
    return finish(std::make_shared<PlanStrategy>("scgreedy", scgreedy_planner()));
}

StrategyPtr star_strategy(const Graph& g)
{
    auto centre = star_centre(g);
    if (!centre) throw PlayerRejected("star: graph is not a star");
    const int q = triangular_root(g.order() - 1);
    return finish(std::make_shared<PlanStrategy>(
        "star", [c = *centre, q](const GameView& view) { return star_plan(view, c, q); }));
}

StrategyPtr cycle_strategy(const Graph& g)
{
    auto order = cycle_order(g);
    if (!order) throw PlayerRejected("cycle: graph is not a cycle");
    const VertexSet h = VertexSet::single(order->back());
    return finish(compose_cut(g, h, scgreedy_region_strategy(), with_forced_opening(greedy_strategy())));
}

StrategyPtr clique_minus_edge_strategy(const Graph& g, std::string* warning)
{
    auto pair = missing_edge(g);
    if (!pair) throw PlayerRejected("kminus: graph is not a clique minus one edge");
    const int p = g.order();
    if (p < 10) {
        if (warning) *warning = "kminus: the extra-request plan needs p >= 10; dealing greedily instead";
        return greedy_fallback(g);
    }
    const int t = (p - 2) / 3;
    return finish(std::make_shared<PlanStrategy>(
        "kminus", [u = pair->first, v = pair->second, t](const GameView& view) { return kminus_plan(view, u, v, t); }));
}

StrategyPtr kpq_strategy(const Graph& g)
{
    auto sides = complete_bipartition(g);
    if (!sides) throw PlayerRejected("kpq: graph is not complete bipartite");
    if (sides->first.size() == 1) {
        // One vertex on the small side: the star plan meets the same bound.
        const int q = triangular_root(sides->second.size());
        return finish(std::make_shared<PlanStrategy>(
            "kpq", [c = sides->first.lowest(), q](const GameView& view) { return star_plan(view, c, q); }));
    }
    return finish(std::make_shared<PlanStrategy>(
        "kpq", [s = *sides](const GameView& view) { return kpq_plan(view, s.first, s.second); }));
}

StrategyPtr complete_join_strategy(const Graph& g, std::optional<std::pair<VertexSet, VertexSet>> sides)
{
    if (!sides) sides = join_sides(g);
    if (!sides) throw PlayerRejected("join: graph is not a join of two parts");
    const auto [a, b] = *sides;
    if ((a & b) != VertexSet() || (a | b) != g.vertices() || a.empty() || b.empty()) {
        throw PlayerRejected("join: sides must partition the vertices");
    }
    for (Vertex v : a.to_vector()) {
        if ((g.neighbour_set(v) & b) != b) throw PlayerRejected("join: some pair across the sides is not adjacent");
    }
    return finish(
        std::make_shared<PlanStrategy>("join", [a, b](const GameView& view) { return join_plan(view, a, b); }));
}

StrategyPtr good2deg_strategy(const Graph& g)
{
    if (!good_2deg_ordering(g)) throw PlayerRejected("good2deg: no good 2-degenerate ordering found");
    return finish(std::make_shared<PlanStrategy>("good2deg", [](const GameView& view) {
        return good2deg_plan(view.graph, view.lists, view.region, ForbiddenMap(view.graph.order()));
    }));
}

StrategyPtr grid_strategy(const Graph& g, int k, int l)
{
    if (g.order() != k * l || g.size() != k * (l - 1) + l * (k - 1)) {
        throw PlayerRejected("grid: graph does not match the requested grid size");
    }
    const PathDecomposition paths = grid_path_decomposition(k, l);
    auto region_of = [](const std::vector<Vertex>& path) {
        VertexSet s;
        for (Vertex v : path) s.insert(v);
        return s;
    };
    StrategyPtr s = scgreedy_region_strategy();
    for (std::size_t i = 1; i < paths.paths.size(); ++i) {
        s = compose_cut(g, region_of(paths.paths[i]), s, scgreedy_region_strategy());
    }
    return finish(std::move(s));
}

std::vector<std::string> strategy_names()
{
    return {"greedy", "complete", "scgreedy", "star", "cycle", "kminus", "kpq", "join", "good2deg", "grid"};
}

StrategyPtr make_strategy(const std::string& name, const Graph& g, const std::optional<FamilySpec>& spec,
                          std::string* warning)
{
    if (name == "greedy") return greedy_fallback(g);
    if (name == "complete") return complete_sequential(g);
    if (name == "scgreedy") return scgreedy_general(g);
    if (name == "star") return star_strategy(g);
    if (name == "cycle") return cycle_strategy(g);
    if (name == "kminus") return clique_minus_edge_strategy(g, warning);
    if (name == "kpq") return kpq_strategy(g);
    if (name == "join") return complete_join_strategy(g);
    if (name == "good2deg") return good2deg_strategy(g);
    if (name == "grid") {
        if (!spec || spec->family != Family::grid) throw PlayerRejected("grid: needs a grid:KxL graph spec");
        return grid_strategy(g, spec->params.at(0), spec->params.at(1));
    }
    throw PlayerRejected("unknown strategy '" + name + "'");
}

StrategyBound strategy_bound(const std::string& name, const Graph& g, const std::optional<FamilySpec>& spec)
{
    const int n = g.order();
    const int m = g.size();
    if (name == "greedy") return {name, n + m, "greedy bound n+m"};
    if (name == "complete") return {name, n * (n + 1) / 2, "complete graphs: p(p+1)/2"};
    if (name == "scgreedy") {
        const int omega = clique_number(g);
        // floor(n + m - (n - omega)/2)
        return {name, n + m - (n - omega + 1) / 2, "n+m-(n-omega)/2"};
    }
    if (name == "star") {
        const int p = n - 1;
        return {name, p + triangular_root(p) + 1, "stars: p+q+1"};
    }
    if (name == "cycle") return {name, 3 * (n + 1) / 2, "cycles: floor(3(n+1)/2)"};
    if (name == "kminus") {
        if (n < 10) return {name, n + m, "greedy bound n+m (p < 10)"};
        return {name, n * (n + 1) / 2 - (n - 2) / 3, "p(p+1)/2 - floor((p-2)/3)"};
    }
    if (name == "kpq") {
        auto sides = complete_bipartition(g);
        if (!sides) throw PlayerRejected("kpq: graph is not complete bipartite");
        const int p = sides->first.size();
        const int r = triangular_root(sides->second.size());
        return {name, n + p * p * r, "n + p^2 r"};
    }
    if (name == "join") {
        auto sides = join_sides(g);
        if (!sides) throw PlayerRejected("join: graph is not a join of two parts");
        const auto [a, b] = *sides;
        int delta = 0;
        for (Vertex v = 0; v < n; ++v) {
            const VertexSet own = a.contains(v) ? a : b;
            delta = std::max(delta, (g.neighbour_set(v) & own).size());
        }
        const long long asz = a.size();
        return {name, isqrt_floor_bound(n, (delta + 1) * asz * asz, 2LL * b.size()),
                "|A|+|B|+(D+1)|A|^2 sqrt(2|B|)"};
    }
    if (name == "good2deg") {
        auto ordering = good_2deg_ordering(g);
        if (!ordering) throw PlayerRejected("good2deg: no good 2-degenerate ordering found");
        return {name, 3 * (n + ordering->q) / 2, "3(n+q)/2"};
    }
    if (name == "grid") {
        if (!spec || spec->family != Family::grid) throw PlayerRejected("grid: needs a grid:KxL graph spec");
        const int k = std::min(spec->params.at(0), spec->params.at(1));
        const int l = std::max(spec->params.at(0), spec->params.at(1));
        if (k == 1) return {name, 3 * l / 2, "paths: floor(3n/2)"};
        if (k == 2) return {name, 4 * l, "2 floor(3l/2) + l"};
        return {name, (5 * k * l - l - 2 * k) / 2, "5kl/2 - l/2 - k"};
    }
    throw PlayerRejected("unknown strategy '" + name + "'");
}

std::string default_strategy_name(const Graph& g, const std::optional<FamilySpec>& spec)
{
    if (spec && spec->family == Family::grid && std::min(spec->params[0], spec->params[1]) >= 2) return "grid";
    if (g.is_complete()) return "complete";
    if (star_centre(g)) return "star";
    if (cycle_order(g)) return "cycle";
    if (missing_edge(g) && g.order() >= 10) return "kminus";
    if (g.is_forest()) return "scgreedy";
    if (complete_bipartition(g)) return "kpq";
    if (good_2deg_ordering(g)) return "good2deg";
    if (join_sides(g)) return "join";
    return "scgreedy";
}

} // namespace isc
