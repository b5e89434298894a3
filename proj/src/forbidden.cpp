#include <algorithm>
#include <map>
#include <set>

#include "semitrans/split_semitrans.hpp"

namespace semitrans {

namespace {

constexpr unsigned kA = 1, kB = 2, kC = 4;

RefutationKind refutation_for(ForbiddenCase c) {
  switch (c) {
    case ForbiddenCase::A: return RefutationKind::CaseA;
    case ForbiddenCase::B: return RefutationKind::CaseB;
    case ForbiddenCase::C: return RefutationKind::CaseC;
  }
  return RefutationKind::None;
}

constexpr std::array<ForbiddenCase, 3> kCases{ForbiddenCase::A, ForbiddenCase::B,
                                              ForbiddenCase::C};

}  // namespace

const char* case_tag(ForbiddenCase c) {
  switch (c) {
    case ForbiddenCase::A: return "case-a";
    case ForbiddenCase::B: return "case-b";
    case ForbiddenCase::C: return "case-c";
  }
  return "";
}

std::vector<int> ForbiddenWitness::vertices() const {
  std::vector<int> out(clique.begin(), clique.end());
  out.insert(out.end(), independent.begin(), independent.end());
  return out;
}

std::array<unsigned, 4> forbidden_types(ForbiddenCase c) {
  switch (c) {
    case ForbiddenCase::A: return {kA | kB, kA | kC, kB | kC, 0};
    case ForbiddenCase::B: return {kA | kB, kA | kC, kB | kC, kA | kB | kC};
    case ForbiddenCase::C: return {kA, kB, kC, kA | kB | kC};
  }
  return {};
}

Graph forbidden_graph(ForbiddenCase c) {
  std::vector<Edge> edges;
  for (int u = 1; u <= 4; ++u) {
    for (int v = u + 1; v <= 4; ++v) edges.emplace_back(u, v);
  }
  auto types = forbidden_types(c);
  for (int u = 1; u <= 4; ++u) {
    for (int j = 0; j < 3; ++j) {
      if (types[u - 1] & (1u << j)) edges.emplace_back(u, 5 + j);
    }
  }
  return Graph(7, edges);
}

bool forbidden_witness_holds(const Graph& g, const ForbiddenWitness& w) {
  auto vertices = w.vertices();
  std::set<int> distinct(vertices.begin(), vertices.end());
  if (distinct.size() != vertices.size()) return false;
  for (int v : vertices) {
    if (!g.contains(v)) return false;
  }
  return induced_subgraph(g, vertices).graph.edges() == forbidden_graph(w.kind).edges();
}

Decision check_small_I(const SplitPartition& p) {
  SplitPartition q = normalize_partition(p);

  std::vector<int> reps;
  {
    std::set<std::vector<int>> seen;
    for (int v : q.independent) {
      auto nb = q.graph.neighbors(v);
      if (seen.emplace(nb.begin(), nb.end()).second) reps.push_back(v);
    }
  }
  if (reps.size() > 3) {
    throw std::invalid_argument("check_small_I needs at most 3 distinct independent neighborhoods, got " +
                                std::to_string(reps.size()));
  }

  // Clique vertices grouped by their neighborhood among the representatives.
  std::map<unsigned, std::vector<int>> by_type;
  for (int u : q.clique) {
    unsigned mask = 0;
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (q.graph.adjacent(u, reps[j])) mask |= 1u << j;
    }
    by_type[mask].push_back(u);
  }
  auto present = [&](unsigned mask) { return by_type.count(mask) > 0; };

  Decision d;
  std::vector<unsigned> sequence;
  if (reps.size() <= 1) {
    sequence = {kA, 0};
  } else if (reps.size() == 2) {
    sequence = {kA, kA | kB, kB, 0};
  } else {
    for (auto c : kCases) {
      auto types = forbidden_types(c);
      if (std::all_of(types.begin(), types.end(), present)) {
        d.outcome = Outcome::NotSemiTransitive;
        d.refutation = refutation_for(c);
        for (unsigned mask : types) d.witness.push_back(by_type[mask].front());
        d.witness.insert(d.witness.end(), reps.begin(), reps.end());
        return d;
      }
    }
    // First absent pair type {x, y}; z is the remaining bit.
    unsigned x = 0, y = 0, z = 0;
    for (auto [px, py, pz] : {std::array{kA, kB, kC}, std::array{kA, kC, kB},
                              std::array{kB, kC, kA}}) {
      if (!present(px | py)) {
        x = px, y = py, z = pz;
        break;
      }
    }
    const unsigned all = kA | kB | kC;
    if (!present(all) && !present(0)) {
      sequence = {kA, kA | kB, kB, kB | kC, kC, kA | kC};
    } else if (!present(all)) {
      sequence = {x, x | z, z, z | y, y, 0};
    } else if (!present(x)) {
      sequence = {z, x | z, all, y | z, y, 0};
    } else if (!present(y)) {
      sequence = {z, y | z, all, x | z, x, 0};
    } else {
      sequence = {x, x | z, all, y | z, y, 0};
    }
  }

  std::vector<int> order;
  for (unsigned mask : sequence) {
    if (auto it = by_type.find(mask); it != by_type.end()) {
      order.insert(order.end(), it->second.begin(), it->second.end());
      by_type.erase(it);
    }
  }
  if (!by_type.empty()) throw InternalError("small-I labeling missed a clique vertex type");
  d.outcome = Outcome::SemiTransitive;
  d.labeling = Labeling(std::move(order));
  if (auto report = validate_labeling(q, *d.labeling); !report) {
    throw InternalError("small-I labeling invalid: " + report.describe());
  }
  d.orientation = construct_orientation(q, *d.labeling);
  return d;
}

std::optional<ForbiddenWitness> find_forbidden_subgraph(const Graph& g) {
  auto split = split_partition(g);
  if (!split) throw std::invalid_argument("find_forbidden_subgraph requires a split graph");
  const auto& clique = split->clique;
  const auto& independent = split->independent;
  const int n = g.vertex_count();
  std::vector<char> in_clique(n + 1, 0);
  for (int v : clique) in_clique[v] = 1;

  // An induced copy has an independent triple with at most one clique vertex.
  std::vector<std::array<int, 3>> triples;
  const int t = static_cast<int>(independent.size());
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      for (int l = j + 1; l < t; ++l) triples.push_back({independent[i], independent[j], independent[l]});
    }
  }
  for (int c : clique) {
    for (int i = 0; i < t; ++i) {
      if (g.adjacent(c, independent[i])) continue;
      for (int j = i + 1; j < t; ++j) {
        if (!g.adjacent(c, independent[j])) triples.push_back({c, independent[i], independent[j]});
      }
    }
  }

  std::array<std::vector<int>, 8> in_c, in_i;  // candidates by type, per side
  for (const auto& triple : triples) {
    for (auto& list : in_c) list.clear();
    for (auto& list : in_i) list.clear();
    for (int x = 1; x <= n; ++x) {
      if (x == triple[0] || x == triple[1] || x == triple[2]) continue;
      unsigned mask = 0;
      for (int j = 0; j < 3; ++j) {
        if (g.adjacent(x, triple[j])) mask |= 1u << j;
      }
      (in_clique[x] ? in_c : in_i)[mask].push_back(x);
    }
    for (auto c : kCases) {
      auto types = forbidden_types(c);
      ForbiddenWitness w{c, {}, triple};
      int lacking = -1;
      bool possible = true;
      for (int s = 0; s < 4; ++s) {
        if (!in_c[types[s]].empty()) {
          w.clique[s] = in_c[types[s]].front();
        } else if (lacking < 0) {
          lacking = s;
        } else {
          possible = false;  // at most one clique member of a copy lies in I
        }
      }
      if (!possible) continue;
      if (lacking < 0) return w;
      // One slot filled from I; the others need clique vertices adjacent to it.
      for (int x : in_i[types[lacking]]) {
        bool ok = true;
        for (int s = 0; s < 4 && ok; ++s) {
          if (s == lacking) continue;
          const auto& list = in_c[types[s]];
          auto it = std::find_if(list.begin(), list.end(), [&](int u) { return g.adjacent(u, x); });
          if (it == list.end()) {
            ok = false;
          } else {
            w.clique[s] = *it;
          }
        }
        if (ok) {
          w.clique[lacking] = x;
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace semitrans
