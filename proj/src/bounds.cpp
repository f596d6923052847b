#include "isc/solver.hpp"

#include <cmath>

namespace isc {

int triangular_root(long long p)
{
    int q = 0;
    while (static_cast<long long>(q + 1) * (q + 2) / 2 <= p) ++q;
    return q;
}

long long floor_mul_sqrt(long long c, long long x)
{
    if (c < 0 || x < 0) throw std::invalid_argument("floor_mul_sqrt needs non-negative arguments");
    const __int128 target = static_cast<__int128>(c) * c * x;
    long long r = static_cast<long long>(std::sqrt(static_cast<long double>(target)));
    while (static_cast<__int128>(r) * r > target) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= target) ++r;
    return r;
}

BoundsReport bounds(const Graph& g)
{
    BoundsReport out;
    out.greedy = g.order() + g.size();
    out.alpha = max_independent_set_size(g);
    out.stable_lower = 2 * g.order() - out.alpha;
    if (g.order() > 0 && g.is_connected() && !g.is_tree()) out.nontree_xsc_lower = 2 * g.order();
    return out;
}

nlohmann::json BoundsReport::to_json() const
{
    nlohmann::json out = {{"greedy", greedy}, {"alpha", alpha}, {"stable_lower", stable_lower}};
    out["nontree_xsc_lower"] = nontree_xsc_lower ? nlohmann::json(*nontree_xsc_lower) : nlohmann::json(nullptr);
    return out;
}

std::string_view to_string(BoundKind k)
{
    switch (k) {
    case BoundKind::exact: return "exact";
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
    }
    return "unknown";
}

namespace {

nlohmann::json known_json(const std::optional<KnownValue>& k)
{
    if (!k) return nullptr;
    return {{"value", k->value}, {"kind", std::string(to_string(k->kind))}, {"source", k->source}};
}

long long floor_rational(const Rational& r)
{
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

long long ceil_rational(const Rational& r)
{
    return -floor_rational(-r);
}

int grid_isc_upper(int k, int l)
{
    if (k > l) std::swap(k, l);
    if (k == 1) return 3 * l / 2;
    if (k == 2) return 4 * l;
    return static_cast<int>(floor_rational(Rational(5, 2) * k * l - Rational(l, 2) - k));
}

} // namespace

nlohmann::json ClosedForm::to_json() const
{
    return {{"isc", known_json(isc)}, {"xsc", known_json(xsc)}};
}

GridBounds grid_bound_formulas(int k, int l)
{
    if (k < 3 || k > l) throw std::invalid_argument("grid formulas need 3 <= k <= l");
    GridBounds out;
    // Split the k rows into s bands of three and r bands of two.
    switch (k % 3) {
    case 0: out.r = 0; break;
    case 2: out.r = 1; break;
    default: out.r = 2; break;
    }
    out.s = (k - 2 * out.r) / 3;
    out.xsc_lower = Rational(23, 3) * l * out.s + Rational(5) * l * out.r - 3 * out.s - 2 * out.r;
    out.isc_upper = Rational(5, 2) * k * l - Rational(l, 2) - k;
    out.gap_lower = out.xsc_lower - out.isc_upper;
    return out;
}

std::optional<ClosedForm> closed_form(const FamilySpec& spec)
{
    const auto& p = spec.params;
    ClosedForm out;
    switch (spec.family) {
    case Family::path: {
        const int n = p.at(0);
        out.isc = KnownValue{3 * n / 2, BoundKind::exact, "tree upper bound meets stable set lower bound"};
        out.xsc = KnownValue{2 * n - 1, BoundKind::exact, "trees: 2n-1"};
        return out;
    }
    case Family::cycle: {
        const int n = p.at(0);
        out.isc = KnownValue{3 * (n + 1) / 2, BoundKind::exact, "cycles: floor(3(n+1)/2)"};
        out.xsc = KnownValue{2 * n, BoundKind::exact, "cycles: n+m"};
        return out;
    }
    case Family::complete: {
        const int n = p.at(0);
        out.isc = KnownValue{n * (n + 1) / 2, BoundKind::exact, "complete graphs: p(p+1)/2"};
        out.xsc = KnownValue{n * (n + 1) / 2, BoundKind::exact, "complete graphs: p(p+1)/2"};
        return out;
    }
    case Family::complete_minus_edge: {
        const int n = p.at(0);
        if (n >= 10) {
            out.isc = KnownValue{n * (n + 1) / 2 - (n - 2) / 3, BoundKind::upper,
                                 "clique minus an edge: p(p+1)/2 - floor((p-2)/3)"};
        } else {
            out.isc = KnownValue{n * (n + 1) / 2 - 1, BoundKind::upper, "greedy bound n+m"};
        }
        out.xsc = KnownValue{2 * n, BoundKind::lower, "non-trees: 2n"};
        return out;
    }
    case Family::star: {
        const int leaves = p.at(0);
        out.isc = KnownValue{leaves + triangular_root(leaves) + 1, BoundKind::exact, "stars: p+q+1"};
        out.xsc = KnownValue{2 * leaves + 1, BoundKind::exact, "trees: 2n-1"};
        return out;
    }
    case Family::complete_bipartite: {
        const int a = std::min(p.at(0), p.at(1));
        const int b = std::max(p.at(0), p.at(1));
        out.isc = KnownValue{static_cast<int>(a + b + floor_mul_sqrt(static_cast<long long>(a) * a, 2LL * b)),
                             BoundKind::upper, "unbalanced complete bipartite: p+q+p^2 sqrt(2q)"};
        if (a == 1) {
            out.isc = KnownValue{b + triangular_root(b) + 1, BoundKind::exact, "stars: p+q+1"};
            out.xsc = KnownValue{2 * b + 1, BoundKind::exact, "trees: 2n-1"};
        } else if (a == 2 && b == 3) {
            out.xsc = KnownValue{10, BoundKind::exact, "known value for K(2,3)"};
        } else {
            out.xsc = KnownValue{2 * (a + b), BoundKind::lower, "non-trees: 2n"};
        }
        return out;
    }
    case Family::grid: {
        const int k = std::min(p.at(0), p.at(1));
        const int l = std::max(p.at(0), p.at(1));
        if (k == 1) {
            out.isc = KnownValue{3 * l / 2, BoundKind::exact, "tree upper bound meets stable set lower bound"};
            out.xsc = KnownValue{2 * l - 1, BoundKind::exact, "trees: 2n-1"};
            return out;
        }
        out.isc = KnownValue{grid_isc_upper(k, l), BoundKind::upper,
                             k == 2 ? "two paths joined by rungs: 2 floor(3l/2) + l" : "L-shaped paths: 5kl/2 - l/2 - k"};
        if (k == 3) {
            out.xsc = KnownValue{8 * l - 3 - l / 3, BoundKind::exact, "P3 x Pn: 8n-3-floor(n/3)"};
        } else if (k > 3) {
            out.xsc = KnownValue{static_cast<int>(ceil_rational(grid_bound_formulas(k, l).xsc_lower)), BoundKind::lower,
                                 "grid bands of two and three rows"};
        } else {
            out.xsc = KnownValue{4 * l, BoundKind::lower, "non-trees: 2n"};
        }
        return out;
    }
    case Family::tree_random: {
        const int n = p.at(0);
        out.isc = KnownValue{3 * n / 2, BoundKind::upper, "trees: floor(3n/2)"};
        out.xsc = KnownValue{2 * n - 1, BoundKind::exact, "trees: 2n-1"};
        return out;
    }
    case Family::cactus_random: {
        const Graph g = generate(spec);
        auto ordering = good_2deg_ordering(g);
        if (!ordering) return std::nullopt;
        out.isc = KnownValue{3 * (g.order() + ordering->q) / 2, BoundKind::upper, "good 2-degenerate: 3(n+q)/2"};
        if (!g.is_tree()) out.xsc = KnownValue{2 * g.order(), BoundKind::lower, "non-trees: 2n"};
        else out.xsc = KnownValue{2 * g.order() - 1, BoundKind::exact, "trees: 2n-1"};
        return out;
    }
    case Family::fan: {
        const int n = p.at(0);
        if (n < 3) return std::nullopt;
        const int rim_degree = n - 1 >= 3 ? 2 : 1;
        out.isc = KnownValue{static_cast<int>(n + floor_mul_sqrt(rim_degree + 1, 2LL * (n - 1))), BoundKind::upper,
                             "complete join: |A|+|B|+(D+1)|A|^2 sqrt(2|B|)"};
        out.xsc = KnownValue{2 * n, BoundKind::lower, "non-trees: 2n"};
        return out;
    }
    case Family::edge_list: return std::nullopt;
    }
    return std::nullopt;
}

} // namespace isc
