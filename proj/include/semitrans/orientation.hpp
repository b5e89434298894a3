#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semitrans/graph.hpp"

namespace semitrans {

/// Directed edge (tail, head).
using Arc = std::pair<int, int>;

/// A choice of direction for every edge of a base graph.
class Orientation {
 public:
  Orientation() = default;
  /// Throws std::invalid_argument unless `arcs` orients every base edge
  /// exactly once and nothing else.
  Orientation(Graph base, std::span<const Arc> arcs);

  const Graph& base() const { return base_; }
  int vertex_count() const { return base_.vertex_count(); }
  std::size_t arc_count() const { return base_.edge_count(); }

  std::span<const int> out_neighbors(int v) const { return out_[v - 1]; }
  std::span<const int> in_neighbors(int v) const { return in_[v - 1]; }
  bool has_arc(int tail, int head) const;

  /// Sorted by (tail, head).
  std::vector<Arc> arcs() const;
  Orientation reversed() const;

 private:
  Graph base_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// "n m" header, then m lines "u > v".
Orientation parse_orientation(std::string_view text);
std::string format_orientation(const Orientation& o);

/// A directed path whose endpoints are joined by an arc while some pair
/// along the path is not.
struct ShortcutWitness {
  std::vector<int> path;
  Arc closing;                    // (path.front(), path.back())
  std::pair<int, int> missing;    // earlier, later on the path; not adjacent
};

/// Checks the witness literally against the orientation.
bool witness_holds(const Orientation& o, const ShortcutWitness& w);

/// Directs every edge from the earlier to the later vertex of `order`.
/// Throws std::invalid_argument if order is not a permutation of 1..n.
Orientation orient_by_order(const Graph& g, std::span<const int> order);

bool is_acyclic(const Orientation& o);

/// Returns a shortcut if one exists. A shortcut exists iff some arc x->y and
/// some non-adjacent a != b satisfy x ~> a ~> b ~> y (reflexive reachability
/// at the ends, strict in the middle). Throws std::invalid_argument on a
/// cyclic orientation.
std::optional<ShortcutWitness> find_shortcut(const Orientation& o);

bool is_semi_transitive_orientation(const Orientation& o);

/// Thrown by the brute-force oracles when the instance exceeds the guard.
class SizeGuardExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lexicographically first vertex order whose induced orientation is
/// semi-transitive. Prefixes whose induced orientation already contains a
/// shortcut are skipped, which never changes the answer because a shortcut
/// inside an induced subgraph survives every extension.
std::optional<std::vector<int>> first_semi_transitive_order(const Graph& g,
                                                            int max_vertices = 12);

/// Exhaustive semi-transitivity test over all vertex orders (every acyclic
/// orientation is induced by some order). Vertex limit is at most 64.
std::optional<Orientation> oracle_semi_transitive(const Graph& g, int max_vertices = 12);

}  // namespace semitrans
