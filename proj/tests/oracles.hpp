#pragma once

// Brute-force reference implementations used only by tests. None of them
// calls into the library beyond reading Graph, BinaryMatrix and Orientation.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "semitrans/binary_matrix.hpp"
#include "semitrans/graph.hpp"
#include "semitrans/orientation.hpp"

namespace oracle {

using semitrans::BinaryMatrix;
using semitrans::Edge;
using semitrans::Graph;
using semitrans::Orientation;

// Graph on n vertices whose edge set is the bitmask over pairs (i<j) in
// lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline bool is_split(const Graph& g) {
  const int n = g.vertex_count();
  for (std::uint32_t side = 0; side < (1u << n); ++side) {
    bool ok = true;
    for (int u = 1; u <= n && ok; ++u) {
      for (int v = u + 1; v <= n && ok; ++v) {
        const bool cu = side >> (u - 1) & 1, cv = side >> (v - 1) & 1;
        if (cu && cv && !g.adjacent(u, v)) ok = false;
        if (!cu && !cv && g.adjacent(u, v)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline bool acyclic(const Orientation& o) {
  const int n = o.vertex_count();
  std::vector<int> state(n + 1, 0);
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : o.out_neighbors(v)) {
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 1; v <= n; ++v) {
    if (state[v] == 0 && !dfs(v)) return false;
  }
  return true;
}

// Enumerates every directed path and checks the definition literally.
inline bool semi_transitive_by_paths(const Orientation& o) {
  if (!acyclic(o)) return false;
  const int n = o.vertex_count();
  std::vector<int> path;
  std::function<bool(int)> walk = [&](int v) {
    path.push_back(v);
    if (path.size() >= 3 && o.has_arc(path.front(), v)) {
      for (std::size_t i = 0; i < path.size(); ++i) {
        for (std::size_t j = i + 1; j < path.size(); ++j) {
          if (!o.has_arc(path[i], path[j])) return false;
        }
      }
    }
    for (int w : o.out_neighbors(v)) {
      if (!walk(w)) return false;
    }
    path.pop_back();
    return true;
  };
  for (int v = 1; v <= n; ++v) {
    path.clear();
    if (!walk(v)) return false;
  }
  return true;
}

// Tries every assignment of directions to the edges.
inline bool semi_transitive_by_orientations(const Graph& g) {
  auto edges = g.edges();
  const std::size_t m = edges.size();
  for (std::uint64_t dirs = 0; dirs < (std::uint64_t{1} << m); ++dirs) {
    std::vector<semitrans::Arc> arcs;
    for (std::size_t i = 0; i < m; ++i) {
      auto [u, v] = edges[i];
      arcs.push_back(dirs >> i & 1 ? semitrans::Arc{v, u} : semitrans::Arc{u, v});
    }
    if (semi_transitive_by_paths(Orientation(g, arcs))) return true;
  }
  return false;
}

inline bool column_consecutive(const std::vector<int>& bits) {
  int runs = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] && (i == 0 || !bits[i - 1])) ++runs;
  }
  return runs <= 1;
}

inline bool column_circular(const std::vector<int>& bits) {
  std::vector<int> flipped(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) flipped[i] = !bits[i];
  return column_consecutive(bits) || column_consecutive(flipped);
}

// Number of row orders under which every column passes.
inline std::uint64_t count_orders(const BinaryMatrix& m, bool circular) {
  std::vector<int> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int c = 0; c < m.cols() && ok; ++c) {
      std::vector<int> bits;
      for (int r : order) bits.push_back(m.at(r, c));
      ok = circular ? column_circular(bits) : column_consecutive(bits);
    }
    count += ok;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

// Literal reading of the three labeling conditions, positions 1..k.
inline bool labeling_ok(const std::vector<std::set<int>>& hoods, int k) {
  struct Shape {
    bool wrapped;
    int a, b;
  };
  std::vector<Shape> shapes;
  for (const auto& s : hoods) {
    if (s.empty()) continue;
    bool found = false;
    for (int a = 1; a <= k && !found; ++a) {
      for (int b = a; b <= k && !found; ++b) {
        std::set<int> iv;
        for (int i = a; i <= b; ++i) iv.insert(i);
        if (iv == s) shapes.push_back({false, a, b}), found = true;
      }
    }
    for (int a = 1; a <= k && !found; ++a) {
      for (int b = a + 1; b <= k && !found; ++b) {
        std::set<int> w;
        for (int i = 1; i <= a; ++i) w.insert(i);
        for (int i = b; i <= k; ++i) w.insert(i);
        if (w == s) shapes.push_back({true, a, b}), found = true;
      }
    }
    if (!found) return false;
  }
  for (const auto& x : shapes) {
    for (const auto& y : shapes) {
      if (!x.wrapped && y.wrapped && !(x.a > y.a || x.b < y.b)) return false;
      if (x.wrapped && y.wrapped && !(y.a < x.b && x.a < y.b)) return false;
    }
  }
  return true;
}

// Split partition with the clique given as positions; hoods[v] lists the
// clique vertices adjacent to I-vertex v, as 1-based clique positions.
inline bool some_labeling_ok(int k, const std::vector<std::set<int>>& hoods) {
  std::vector<int> pos(k);
  std::iota(pos.begin(), pos.end(), 1);
  do {
    std::vector<std::set<int>> relabeled;
    for (const auto& s : hoods) {
      std::set<int> r;
      for (int x : s) r.insert(pos[x - 1]);
      relabeled.push_back(r);
    }
    if (labeling_ok(relabeled, k)) return true;
  } while (std::next_permutation(pos.begin(), pos.end()));
  return false;
}

}  // namespace oracle
