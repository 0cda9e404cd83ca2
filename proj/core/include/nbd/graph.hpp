#ifndef NBD_GRAPH_HPP
#define NBD_GRAPH_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nbd {

/// Parse failure for edge-list input; carries the 1-based line number
/// (0 when the error is not tied to a single line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + std::move(message)
                                      : std::move(message)),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Simple undirected graph: no self-loops, no parallel edges, vertices
/// labeled 0..n-1. Immutable after construction; cheap to copy and safe to
/// share across threads.
class Graph {
public:
    Graph() = default;

    /// Builds the simplified graph: self-loops and duplicate edges are
    /// dropped, neighbor lists are sorted. Throws std::invalid_argument on
    /// labels outside [0, n).
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
    bool has_edge(int u, int v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    std::vector<int> degrees() const;

    /// Maximal subgraph of minimum degree >= 2, obtained by iteratively
    /// deleting vertices of degree <= 1. Surviving vertices are relabeled
    /// 0..n'-1 in ascending original order. May be empty.
    Graph two_core() const;

    /// perm maps old label -> new label and must be a bijection on 0..n-1.
    Graph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::vector<int>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Reads the edge-list text format: two whitespace-separated non-negative
/// integer labels per line; lines starting with '#' or '%' are comments,
/// except the directive `#vertices N` which declares the total vertex count
/// (including isolated vertices). Labels appearing in edges are compacted to
/// 0..n-1 in first-appearance order.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::filesystem::path& path);

/// Writes `#vertices n` followed by one "u v" line per edge, ascending.
void write_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

}  // namespace nbd

#endif  // NBD_GRAPH_HPP
