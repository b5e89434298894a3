#include "semitrans/orientation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <sstream>

#include "bitset.hpp"
#include "text_lines.hpp"

namespace semitrans {

using detail::Bits;

Orientation::Orientation(Graph base, std::span<const Arc> arcs)
    : base_(std::move(base)), out_(base_.vertex_count()), in_(base_.vertex_count()) {
  if (arcs.size() != base_.edge_count()) {
    throw std::invalid_argument("orientation must direct every edge exactly once");
  }
  for (auto [u, v] : arcs) {
    if (!base_.adjacent(u, v)) {
      throw std::invalid_argument("arc " + std::to_string(u) + " > " + std::to_string(v) +
                                  " is not an edge of the base graph");
    }
    out_[u - 1].push_back(v);
    in_[v - 1].push_back(u);
  }
  std::vector<int> both;
  for (int v = 1; v <= base_.vertex_count(); ++v) {
    std::sort(out_[v - 1].begin(), out_[v - 1].end());
    std::sort(in_[v - 1].begin(), in_[v - 1].end());
    both.clear();
    std::merge(out_[v - 1].begin(), out_[v - 1].end(), in_[v - 1].begin(), in_[v - 1].end(),
               std::back_inserter(both));
    auto nb = base_.neighbors(v);
    if (!std::equal(both.begin(), both.end(), nb.begin(), nb.end())) {
      throw std::invalid_argument("edges at vertex " + std::to_string(v) +
                                  " are not oriented exactly once");
    }
  }
}

bool Orientation::has_arc(int tail, int head) const {
  if (!base_.contains(tail) || !base_.contains(head)) return false;
  const auto& list = out_[tail - 1];
  return std::binary_search(list.begin(), list.end(), head);
}

std::vector<Arc> Orientation::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (int u = 1; u <= vertex_count(); ++u) {
    for (int v : out_[u - 1]) out.emplace_back(u, v);
  }
  return out;
}

Orientation Orientation::reversed() const {
  auto forward = arcs();
  for (auto& [u, v] : forward) std::swap(u, v);
  return Orientation(base_, forward);
}

Orientation parse_orientation(std::string_view text) {
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
  if (static_cast<long>(lines.size()) - 1 != m) {
    throw ParseError(0, "header declares " + std::to_string(m) + " arcs, found " +
                            std::to_string(lines.size() - 1));
  }
  std::vector<Arc> arcs;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i].text);
    long u = 0, v = 0;
    char gt = 0;
    std::string extra;
    if (!(in >> u >> gt >> v) || gt != '>' || (in >> extra)) {
      throw ParseError(lines[i].number, "expected arc line \"u > v\"");
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(lines[i].number, "vertex id out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(lines[i].number, "self-loop at vertex " + std::to_string(u));
    arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    Graph base(static_cast<int>(n), edges);
    return Orientation(std::move(base), arcs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string format_orientation(const Orientation& o) {
  std::ostringstream out;
  out << o.vertex_count() << ' ' << o.arc_count() << '\n';
  for (auto [u, v] : o.arcs()) out << u << " > " << v << '\n';
  return out.str();
}

bool witness_holds(const Orientation& o, const ShortcutWitness& w) {
  const auto& p = w.path;
  if (p.size() < 3) return false;
  std::vector<char> seen(o.vertex_count() + 1, 0);
  for (int v : p) {
    if (!o.base().contains(v) || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!o.has_arc(p[i], p[i + 1])) return false;
  }
  if (w.closing != Arc{p.front(), p.back()} || !o.has_arc(p.front(), p.back())) return false;
  auto ia = std::find(p.begin(), p.end(), w.missing.first);
  auto ib = std::find(p.begin(), p.end(), w.missing.second);
  if (ia == p.end() || ib == p.end() || ia >= ib) return false;
  return !o.base().adjacent(w.missing.first, w.missing.second);
}

Orientation orient_by_order(const Graph& g, std::span<const int> order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("order must list every vertex exactly once");
  }
  std::vector<int> position(n + 1, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (v < 1 || v > n || position[v] != -1) {
      throw std::invalid_argument("order must list every vertex exactly once");
    }
    position[v] = static_cast<int>(i);
  }
  auto edges = g.edges();
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (auto [u, v] : edges) {
    arcs.push_back(position[u] < position[v] ? Arc{u, v} : Arc{v, u});
  }
  return Orientation(g, arcs);
}

bool is_acyclic(const Orientation& o) {
  const int n = o.vertex_count();
  std::vector<int> indegree(n + 1, 0);
  std::vector<int> ready;
  for (int v = 1; v <= n; ++v) {
    indegree[v] = static_cast<int>(o.in_neighbors(v).size());
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w : o.out_neighbors(v)) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == n;
}

namespace {

// Shortest directed path from `from` to `to` (to must be reachable).
std::vector<int> directed_path(const Orientation& o, int from, int to) {
  if (from == to) return {from};
  std::vector<int> parent(o.vertex_count() + 1, 0);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : o.out_neighbors(v)) {
      if (parent[w] != 0) continue;
      parent[w] = v;
      if (w == to) {
        std::vector<int> path{to};
        for (int x = to; x != from;) {
          x = parent[x];
          path.push_back(x);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return {};
}

}  // namespace

std::optional<ShortcutWitness> find_shortcut(const Orientation& o) {
  if (!is_acyclic(o)) throw std::invalid_argument("find_shortcut requires an acyclic orientation");
  const int n = o.vertex_count();
  // Vertex v occupies bit v - 1.
  std::vector<Bits> desc(n + 1, Bits(n)), anc(n + 1, Bits(n)), adj(n + 1, Bits(n));
  std::vector<int> stack;
  for (int s = 1; s <= n; ++s) {
    for (int w : o.base().neighbors(s)) adj[s].set(w - 1);
    Bits& seen = desc[s];
    seen.set(s - 1);
    stack.assign(1, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : o.out_neighbors(v)) {
        if (!seen.test(w - 1)) {
          seen.set(w - 1);
          stack.push_back(w);
        }
      }
    }
  }
  for (int x = 1; x <= n; ++x) {
    for (int y = desc[x].next(0); y >= 0; y = desc[x].next(y + 1)) anc[y + 1].set(x - 1);
  }

  Bits between(n), candidates(n);
  for (auto [x, y] : o.arcs()) {
    between = desc[x];
    between &= anc[y];
    for (int ai = between.next(0); ai >= 0; ai = between.next(ai + 1)) {
      int a = ai + 1;
      candidates = desc[a];
      candidates &= between;
      candidates.subtract(adj[a]);
      candidates.reset(ai);
      int bi = candidates.next(0);
      if (bi < 0) continue;
      int b = bi + 1;
      ShortcutWitness w;
      w.path = directed_path(o, x, a);
      auto middle = directed_path(o, a, b);
      w.path.insert(w.path.end(), middle.begin() + 1, middle.end());
      auto tail = directed_path(o, b, y);
      w.path.insert(w.path.end(), tail.begin() + 1, tail.end());
      w.closing = {x, y};
      w.missing = {a, b};
      return w;
    }
  }
  return std::nullopt;
}

bool is_semi_transitive_orientation(const Orientation& o) {
  return is_acyclic(o) && !find_shortcut(o);
}

namespace {

class OrderSearch {
 public:
  explicit OrderSearch(const Graph& g) : n_(g.vertex_count()), adj_(n_, 0), desc_(n_, 0), anc_(n_, 0) {
    for (int v = 1; v <= n_; ++v) {
      for (int w : g.neighbors(v)) adj_[v - 1] |= bit(w - 1);
    }
  }

  std::optional<std::vector<int>> run() {
    order_.clear();
    if (!extend(0)) return std::nullopt;
    std::vector<int> out;
    out.reserve(order_.size());
    for (int v : order_) out.push_back(v + 1);
    return out;
  }

 private:
  static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

  bool extend(std::uint64_t placed) {
    if (static_cast<int>(order_.size()) == n_) return true;
    for (int w = 0; w < n_; ++w) {
      if (placed & bit(w)) continue;
      const std::uint64_t preds = adj_[w] & placed;
      std::uint64_t anc = bit(w);
      for (std::uint64_t m = preds; m; m &= m - 1) anc |= anc_[std::countr_zero(m)];
      anc_[w] = anc;
      desc_[w] = bit(w);
      const std::uint64_t strict_anc = anc & ~bit(w);
      for (std::uint64_t m = strict_anc; m; m &= m - 1) desc_[std::countr_zero(m)] |= bit(w);

      if (sink_is_clean(preds, anc)) {
        order_.push_back(w);
        if (extend(placed | bit(w))) return true;
        order_.pop_back();
      }
      for (std::uint64_t m = strict_anc; m; m &= m - 1) desc_[std::countr_zero(m)] &= ~bit(w);
    }
    return false;
  }

  // With w appended as a sink, any new shortcut closes on an arc x->w.
  bool sink_is_clean(std::uint64_t preds, std::uint64_t anc_w) const {
    for (std::uint64_t m = preds; m; m &= m - 1) {
      const int x = std::countr_zero(m);
      const std::uint64_t between = desc_[x] & anc_w;
      for (std::uint64_t r = between; r; r &= r - 1) {
        const int a = std::countr_zero(r);
        if (desc_[a] & between & ~adj_[a] & ~bit(a)) return false;
      }
    }
    return true;
  }

  int n_;
  std::vector<std::uint64_t> adj_, desc_, anc_;
  std::vector<int> order_;
};

}  // namespace

std::optional<std::vector<int>> first_semi_transitive_order(const Graph& g, int max_vertices) {
  if (max_vertices > 64) max_vertices = 64;
  if (g.vertex_count() > max_vertices) {
    throw SizeGuardExceeded("orientation oracle limited to " + std::to_string(max_vertices) +
                            " vertices, got " + std::to_string(g.vertex_count()));
  }
  return OrderSearch(g).run();
}

std::optional<Orientation> oracle_semi_transitive(const Graph& g, int max_vertices) {
  auto order = first_semi_transitive_order(g, max_vertices);
  if (!order) return std::nullopt;
  return orient_by_order(g, *order);
}

}  // namespace semitrans
