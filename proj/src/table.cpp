#include "isc/bench.hpp"

#include <sstream>

namespace isc {

namespace {

std::string rational_text(const Rational& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct Cell {
    std::optional<int> value;
    std::string source;
};

// Solver values go through the cache when one is open; a cached value is reused as is.
template <class Solve>
std::optional<int> cached(ResultCache* cache, const Graph& g, const std::string& quantity, const std::string& method,
                          Solve solve)
{
    const std::string key = canonical_hash(g);
    if (cache) {
        if (auto hit = cache->lookup(key, quantity, method)) return hit->value;
    }
    std::optional<int> value = solve();
    if (cache && value) cache->store(CacheEntry{key, quantity, *value, method, utc_timestamp()});
    return value;
}

Cell isc_cell(const Graph& g, const FamilySpec& spec, const TableOptions& options, ResultCache* cache)
{
    if (options.exact) {
        SolverOptions so;
        so.force = options.force;
        auto v = cached(cache, g, "isc", "solver", [&]() -> std::optional<int> {
            try {
                return isc_exact(g, false, so).value;
            } catch (const InstanceTooLarge&) {
                return std::nullopt;
            }
        });
        if (v) return {v, "solver"};
    }
    if (auto cf = closed_form(spec); cf && cf->isc) {
        return {cf->isc->value, std::string("formula_") + std::string(to_string(cf->isc->kind))};
    }
    const std::string name = default_strategy_name(g, spec);
    if (name != "greedy") {
        try {
            return {strategy_bound(name, g, spec).bound, "strategy_" + name};
        } catch (const PlayerRejected&) {
        }
    }
    return {g.order() + g.size(), "greedy"};
}

Cell xsc_cell(const Graph& g, const FamilySpec& spec, const TableOptions& options, ResultCache* cache)
{
    if (options.exact) {
        XscOptions xo;
        xo.force = options.force;
        auto v = cached(cache, g, "xsc", "search", [&]() -> std::optional<int> {
            try {
                return xsc_exact(g, xo).value;
            } catch (const InstanceTooLarge&) {
                return std::nullopt;
            }
        });
        if (v) return {v, "solver"};
    }
    if (auto cf = closed_form(spec); cf && cf->xsc) {
        return {cf->xsc->value, std::string("formula_") + std::string(to_string(cf->xsc->kind))};
    }
    return {g.order() + g.size(), "greedy"};
}

} // namespace

std::vector<std::string> expand_spec_range(const std::string& range)
{
    const auto dots = range.find("..");
    if (dots == std::string::npos) return {range};
    auto lo_start = dots;
    while (lo_start > 0 && std::isdigit(static_cast<unsigned char>(range[lo_start - 1]))) --lo_start;
    auto hi_end = dots + 2;
    while (hi_end < range.size() && std::isdigit(static_cast<unsigned char>(range[hi_end]))) ++hi_end;
    if (lo_start == dots || hi_end == dots + 2) throw GraphError("bad range '" + range + "'");
    const int lo = std::stoi(range.substr(lo_start, dots - lo_start));
    const int hi = std::stoi(range.substr(dots + 2, hi_end - dots - 2));
    if (lo > hi) throw GraphError("empty range '" + range + "'");
    const std::string head = range.substr(0, lo_start);
    const std::string tail = range.substr(hi_end);
    const bool square = head == "grid:" && tail.find('x') == std::string::npos;
    std::vector<std::string> out;
    for (int i = lo; i <= hi; ++i) {
        std::string n = std::to_string(i);
        out.push_back(head + (square ? n + "x" + n : n) + tail);
    }
    return out;
}

std::string emit_table(const std::string& range, const TableOptions& options, ResultCache* cache)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const std::string& text : expand_spec_range(range)) {
        const FamilySpec spec = parse_family_spec(text);
        const Graph g = generate(spec);
        nlohmann::json row = {{"spec", format_family_spec(spec)}, {"n", g.order()}, {"m", g.size()}};
        Cell isc;
        Cell xsc;
        if (options.isc) {
            isc = isc_cell(g, spec, options, cache);
            row["isc"] = isc.value ? nlohmann::json(*isc.value) : nlohmann::json(nullptr);
            row["isc_source"] = isc.source;
        }
        if (options.xsc) {
            xsc = xsc_cell(g, spec, options, cache);
            row["xsc"] = xsc.value ? nlohmann::json(*xsc.value) : nlohmann::json(nullptr);
            row["xsc_source"] = xsc.source;
        }
        row["gap"] = (isc.value && xsc.value) ? nlohmann::json(*xsc.value - *isc.value) : nlohmann::json(nullptr);
        row["gap_lower"] = nullptr;
        row["kl_over_18"] = nullptr;
        if (spec.family == Family::grid) {
            const int k = std::min(spec.params[0], spec.params[1]);
            const int l = std::max(spec.params[0], spec.params[1]);
            if (k >= 3) {
                row["gap_lower"] = rational_text(grid_bound_formulas(k, l).gap_lower);
                row["kl_over_18"] = rational_text(Rational(k * l, 18));
            }
        }
        rows.push_back(std::move(row));
    }
    if (options.format == "json") return rows.dump(2) + "\n";
    if (options.format != "csv") throw std::invalid_argument("format must be csv or json");

    std::vector<std::string> columns = {"spec", "n", "m"};
    if (options.isc) columns.insert(columns.end(), {"isc", "isc_source"});
    if (options.xsc) columns.insert(columns.end(), {"xsc", "xsc_source"});
    columns.insert(columns.end(), {"gap", "gap_lower", "kl_over_18"});
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const auto& cell = row[columns[i]];
            out << (i ? "," : "");
            if (cell.is_string()) out << cell.get<std::string>();
            else if (!cell.is_null()) out << cell.dump();
        }
        out << "\n";
    }
    return out.str();
}

} // namespace isc
