#pragma once

#include "udg/bitset.hpp"
#include "udg/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace udg {

/**
 * A unit-distance graph: canonically sorted, deduplicated point list with
 * the exact unit-distance edge set held as per-vertex bitsets.
 *
 * Graphs loaded from edge lists (DIMACS) carry no coordinates; geometric
 * operations reject them. Immutable after construction.
 */
class UDGraph {
public:
    UDGraph() = default;

    /// Dedup + canonical sort + exact O(n²) edge computation.
    static UDGraph from_points(std::vector<Point> points);

    /// Abstract graph from an explicit edge list (1-based callers convert first).
    static UDGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    bool geometric() const { return !pts_.empty() || adj_.empty(); }

    const std::vector<Point>& points() const { return pts_; }
    const Point& point(std::size_t i) const { return pts_[i]; }
    const Bitset& neighbors(std::size_t i) const { return adj_[i]; }
    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
    std::size_t degree(std::size_t i) const { return adj_[i].count(); }

    /// Index of p in the canonical order, or num_vertices() if absent.
    std::size_t find(const Point& p) const;

    UDGraph induced_subgraph(const std::vector<std::size_t>& keep) const;
    UDGraph induced_subgraph(const Bitset& keep) const;

    bool is_independent(const Bitset& s) const;
    bool is_independent(const std::vector<std::size_t>& s) const;

    std::vector<std::pair<std::size_t, std::size_t>> edge_list() const;

    /// FNV-1a over the canonical serialization; binds certificates to graphs.
    std::uint64_t content_hash() const;

private:
    std::vector<Point> pts_;
    std::vector<Bitset> adj_;
    std::size_t num_edges_ = 0;
};

/// JSON export/import: vertices as quadruple-pair strings plus the edge list.
std::string graph_to_json(const UDGraph& g);
UDGraph graph_from_json(const std::string& json_text);

/// DIMACS export ("p edge n m" + "e u v", 1-based) and import (abstract).
std::string graph_to_dimacs(const UDGraph& g);
UDGraph graph_from_dimacs(std::istream& in);

void save_graph(const UDGraph& g, const std::string& path);
UDGraph load_graph(const std::string& path);  // dispatches on extension (.json / .dimacs / .col)

/// Parses a point-list file: one "((a,b,c,d),(a,b,c,d))" per entry, entries
/// separated by commas/newlines; ignores blank lines and '#' comments.
/// Throws std::invalid_argument with a line number on bad input.
std::vector<Point> parse_point_list(std::istream& in);
std::vector<Point> parse_point_list_text(const std::string& text);

}  // namespace udg
