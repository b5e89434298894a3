#include "semitrans/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "text_lines.hpp"

namespace semitrans {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.resize(vertex_count);
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
  }
  for (int v = 1; v <= vertex_count; ++v) {
    auto& list = adjacency_[v - 1];
    std::sort(list.begin(), list.end());
    if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
      throw std::invalid_argument("duplicate edge " + std::to_string(std::min(v, *dup)) +
                                  " " + std::to_string(std::max(v, *dup)));
    }
  }
  edge_count_ = edges.size();
}

bool Graph::adjacent(int u, int v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adjacency_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 1; u <= vertex_count(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<std::string> partition_violation(const SplitPartition& p,
                                               bool require_maximal) {
  const Graph& g = p.graph;
  std::vector<int> side(g.vertex_count() + 1, 0);  // 1 = clique, 2 = independent
  for (int v : p.clique) {
    if (!g.contains(v)) return "clique vertex " + std::to_string(v) + " out of range";
    if (side[v] != 0) return "vertex " + std::to_string(v) + " listed twice";
    side[v] = 1;
  }
  for (int v : p.independent) {
    if (!g.contains(v)) return "independent vertex " + std::to_string(v) + " out of range";
    if (side[v] != 0) return "vertex " + std::to_string(v) + " listed twice";
    side[v] = 2;
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (side[v] == 0) return "vertex " + std::to_string(v) + " not assigned";
  }
  for (int v : p.clique) {
    int clique_neighbors = 0;
    for (int w : g.neighbors(v)) clique_neighbors += side[w] == 1;
    if (clique_neighbors != static_cast<int>(p.clique.size()) - 1) {
      return "clique vertex " + std::to_string(v) + " misses a clique neighbor";
    }
  }
  for (int v : p.independent) {
    int clique_neighbors = 0;
    for (int w : g.neighbors(v)) {
      if (side[w] == 2) {
        return "independent vertices " + std::to_string(v) + " and " + std::to_string(w) +
               " are adjacent";
      }
      ++clique_neighbors;
    }
    if (require_maximal && clique_neighbors == static_cast<int>(p.clique.size())) {
      return "independent vertex " + std::to_string(v) + " is adjacent to all of C";
    }
  }
  return std::nullopt;
}

GraphFile parse_graph_file(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header line \"n m\"");
  long n = -1, m = -1;
  {
    std::istringstream header(lines[0].text);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
      throw ParseError(lines[0].number, "expected header \"n m\"");
    }
  }
  std::vector<Edge> edges;
  GraphFile out;
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.text.rfind("C:", 0) == 0) {
      if (i + 1 != lines.size()) {
        throw ParseError(line.number, "clique line must be the last line");
      }
      std::istringstream in(line.text.substr(2));
      std::vector<int> clique;
      std::string token;
      while (in >> token) {
        std::size_t used = 0;
        long v = 0;
        try {
          v = std::stol(token, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != token.size()) throw ParseError(line.number, "bad vertex id '" + token + "'");
        if (v < 1 || v > n) {
          throw ParseError(line.number, "vertex id " + token + " out of range");
        }
        clique.push_back(static_cast<int>(v));
      }
      out.clique = std::move(clique);
      continue;
    }
    if (static_cast<long>(edges.size()) == m) {
      throw ParseError(line.number, "more edge lines than the header declares");
    }
    std::istringstream in(line.text);
    long u = 0, v = 0;
    std::string extra;
    if (!(in >> u >> v) || (in >> extra)) {
      throw ParseError(line.number, "expected edge line \"u v\"");
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line.number, "vertex id out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    auto a = static_cast<int>(std::min(u, v));
    auto b = static_cast<int>(std::max(u, v));
    if (!seen.insert((static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b))
             .second) {
      throw ParseError(line.number, "duplicate edge");
    }
    edges.emplace_back(a, b);
  }
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  }
  out.graph = Graph(static_cast<int>(n), edges);
  return out;
}

Graph parse_graph(std::string_view text) { return parse_graph_file(text).graph; }

std::string format_graph(const Graph& g, std::optional<std::span<const int>> clique) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (clique) {
    out << "C:";
    for (int v : *clique) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  // Largest h (1-based) with d_h >= h - 1.
  int h = 0;
  for (int i = 0; i < n; ++i) {
    if (g.degree(order[i]) >= i) h = i + 1;
  }
  long head = 0, tail = 0;
  for (int i = 0; i < n; ++i) (i < h ? head : tail) += g.degree(order[i]);
  if (head != static_cast<long>(h) * (h - 1) + tail) return std::nullopt;

  SplitPartition p{g, {order.begin(), order.begin() + h}, {order.begin() + h, order.end()}};
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());
  if (partition_violation(p, false)) {
    // Unreachable when the degree condition holds.
    return std::nullopt;
  }
  return normalize_partition(std::move(p));
}

SplitPartition partition_with_clique(const Graph& g, std::span<const int> clique) {
  SplitPartition p{g, {clique.begin(), clique.end()}, {}};
  std::vector<bool> in_clique(g.vertex_count() + 1, false);
  for (int v : clique) {
    if (!g.contains(v)) throw std::invalid_argument("clique vertex out of range");
    in_clique[v] = true;
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (!in_clique[v]) p.independent.push_back(v);
  }
  return normalize_partition(std::move(p));
}

SplitPartition normalize_partition(SplitPartition p) {
  if (auto bad = partition_violation(p, false)) {
    throw std::invalid_argument("not a split partition: " + *bad);
  }
  for (;;) {
    auto it = p.independent.end();
    for (auto cand = p.independent.begin(); cand != p.independent.end(); ++cand) {
      if (p.graph.degree(*cand) == static_cast<int>(p.clique.size()) &&
          (it == p.independent.end() || *cand < *it)) {
        it = cand;
      }
    }
    if (it == p.independent.end()) break;
    p.clique.push_back(*it);
    p.independent.erase(it);
  }
  return p;
}

namespace {

// N(a) \ {b} == N(b) \ {a}, restricted to vertices flagged alive.
bool twins_among(const Graph& g, const std::vector<char>& alive, int a, int b) {
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  auto skip = [&](std::span<const int> list, std::size_t i, int other) {
    while (i < list.size() && (list[i] == other || !alive[list[i]])) ++i;
    return i;
  };
  std::size_t i = skip(na, 0, b), j = skip(nb, 0, a);
  while (i < na.size() && j < nb.size()) {
    if (na[i] != nb[j]) return false;
    i = skip(na, i + 1, b);
    j = skip(nb, j + 1, a);
  }
  return i == na.size() && j == nb.size();
}

}  // namespace

bool are_twins(const Graph& g, int a, int b) {
  if (!g.contains(a) || !g.contains(b) || a == b) return false;
  std::vector<char> alive(g.vertex_count() + 1, 1);
  return twins_among(g, alive, a, b);
}

TwinReduction twin_reduce(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> alive(n + 1, 1);
  TwinReduction out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 1; a <= n && !changed; ++a) {
      if (!alive[a]) continue;
      for (int b = a + 1; b <= n; ++b) {
        if (alive[b] && twins_among(g, alive, a, b)) {
          alive[b] = 0;
          out.removals.emplace_back(a, b);
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<int> kept;
  for (int v = 1; v <= n; ++v) {
    if (alive[v]) kept.push_back(v);
  }
  auto induced = induced_subgraph(g, kept);
  out.graph = std::move(induced.graph);
  out.original_ids = std::move(induced.original_ids);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> new_id(g.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (!g.contains(v)) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the graph");
    }
    if (new_id[v] != 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
    }
    new_id[v] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (int v : vertices) {
    for (int w : g.neighbors(v)) {
      if (new_id[w] != 0 && new_id[v] < new_id[w]) edges.emplace_back(new_id[v], new_id[w]);
    }
  }
  return {Graph(static_cast<int>(vertices.size()), edges), {vertices.begin(), vertices.end()}};
}

BinaryMatrix neighborhood_matrix(const SplitPartition& p) {
  const int k = static_cast<int>(p.clique.size());
  const int t = static_cast<int>(p.independent.size());
  std::vector<int> row_of(p.graph.vertex_count() + 1, -1);
  for (int r = 0; r < k; ++r) row_of[p.clique[r]] = r;
  BinaryMatrix m(k, t);
  std::vector<std::string> labels;
  labels.reserve(t);
  for (int c = 0; c < t; ++c) {
    int v = p.independent[c];
    for (int w : p.graph.neighbors(v)) {
      if (row_of[w] >= 0) m.set(row_of[w], c, true);
    }
    labels.push_back(std::to_string(v));
  }
  m.set_labels(std::move(labels));
  return m;
}

}  // namespace semitrans
