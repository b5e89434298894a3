#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semitrans/binary_matrix.hpp"
#include "semitrans/parse_error.hpp"

namespace semitrans {

using Edge = std::pair<int, int>;

/// Simple undirected graph on the dense vertex ids 1..n. Immutable once
/// built; adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws std::invalid_argument on self-loops, duplicates or ids outside
  /// 1..n. Edge endpoints may be given in either order.
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int v) const { return adjacency_[v - 1]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v - 1].size()); }
  bool adjacent(int u, int v) const;
  bool contains(int v) const { return v >= 1 && v <= vertex_count(); }

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A split decomposition (C, I) of a graph. Order of `clique` is the row
/// order of every matrix derived from it; order of `independent` is the
/// column order.
struct SplitPartition {
  Graph graph;
  std::vector<int> clique;
  std::vector<int> independent;
};

/// Returns a description of the first violated invariant, or nothing if the
/// partition is valid. Maximality is only checked when requested.
std::optional<std::string> partition_violation(const SplitPartition& p,
                                               bool require_maximal = true);

/// Parsed graph file: the graph plus the optional pinned clique side.
struct GraphFile {
  Graph graph;
  std::optional<std::vector<int>> clique;
};

GraphFile parse_graph_file(std::string_view text);
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g,
                         std::optional<std::span<const int>> clique = {});

/// Degree-sequence split recognition followed by normalize_partition.
/// Returns nothing when g is not a split graph.
std::optional<SplitPartition> split_partition(const Graph& g);

/// Builds a partition from a pinned clique (I = the remaining vertices in id
/// order) and normalizes it. Throws std::invalid_argument if the pinned set is
/// not a clique or its complement is not independent.
SplitPartition partition_with_clique(const Graph& g, std::span<const int> clique);

/// Moves I-vertices adjacent to all of C into C (smallest id first) until the
/// partition is maximal. Throws std::invalid_argument when the input is not a
/// clique/independent split.
SplitPartition normalize_partition(SplitPartition p);

bool are_twins(const Graph& g, int a, int b);

struct TwinReduction {
  Graph graph;
  std::vector<int> original_ids;           // new id - 1 -> original id
  std::vector<std::pair<int, int>> removals;  // (kept, removed), original ids
};

/// Repeatedly deletes the larger vertex of the lexicographically first twin
/// pair until no twins remain.
TwinReduction twin_reduce(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_ids;  // new id - 1 -> original id
};

/// Subgraph induced by `vertices`, relabeled 1..|vertices| in the given order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// k x t matrix: rows follow p.clique, columns follow p.independent.
BinaryMatrix neighborhood_matrix(const SplitPartition& p);

}  // namespace semitrans
