#pragma once

#include "isc/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace isc {

using Color = int;
constexpr Color kNoColor = -1;

class IllegalMove : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Per-vertex colour lists in the order the colours were granted.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(int n) : lists_(n) {}
    explicit ListAssignment(std::vector<std::vector<Color>> lists);

    int order() const { return static_cast<int>(lists_.size()); }
    std::span<const Color> operator[](Vertex v) const { return lists_[v]; }
    const std::vector<std::vector<Color>>& lists() const { return lists_; }

    bool contains(Vertex v, Color c) const;
    int total_size() const;
    /// Smallest colour id >= 1 absent from every list.
    Color fresh_color() const;
    std::vector<Color> colors() const;

    /// New assignment with c appended at v; throws IllegalMove if c is already there.
    ListAssignment with_request(Vertex v, Color c) const;
    void append(Vertex v, Color c);

    /// Copy with each vertex's forbidden colours removed.
    ListAssignment without(std::span<const std::vector<Color>> forbidden) const;

    bool operator==(const ListAssignment&) const = default;

private:
    std::vector<std::vector<Color>> lists_;
};

/// Colours forbidden per vertex; empty vectors mean no restriction.
using ForbiddenMap = std::vector<std::vector<Color>>;

using Coloring = std::vector<Color>;

/// Backtracking with most-constrained-vertex ordering; deterministic.
/// Vertices outside region are ignored and left as kNoColor.
std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& lists, VertexSet region);
std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& lists);
bool is_colorable(const Graph& g, const ListAssignment& lists, VertexSet region);

bool verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& coloring);

/// Sorted multiset of occurrence sets, one per colour present.
class CanonicalState {
public:
    CanonicalState() = default;
    explicit CanonicalState(std::vector<std::uint64_t> occurrences);

    const std::vector<std::uint64_t>& occurrences() const { return occ_; }
    /// Compact byte key, suitable for hash maps.
    std::string key() const;

    bool operator==(const CanonicalState&) const = default;

private:
    std::vector<std::uint64_t> occ_;
};

CanonicalState canonicalize_state(const Graph& g, const ListAssignment& lists);

/// One representative colour per class of strategically equivalent legal responses at v.
/// Reuse classes come first (ordered by occurrence set), the fresh colour last.
std::vector<Color> bob_move_classes(const Graph& g, const ListAssignment& lists, Vertex v);

ListAssignment apply_request(const ListAssignment& lists, Vertex v, Color c);

} // namespace isc
