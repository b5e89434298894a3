#include "semitrans/split_semitrans.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bitset.hpp"

namespace semitrans {

Labeling::Labeling(std::vector<int> order) : order_(std::move(order)) {
  int largest = 0;
  for (int v : order_) {
    if (v <= 0) throw std::invalid_argument("labeling vertices must be positive ids");
    largest = std::max(largest, v);
  }
  position_.assign(largest + 1, 0);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (position_[order_[i]] != 0) {
      throw std::invalid_argument("vertex " + std::to_string(order_[i]) + " labeled twice");
    }
    position_[order_[i]] = static_cast<int>(i) + 1;
  }
}

bool Labeling::labels_exactly(std::span<const int> vertices) const {
  if (vertices.size() != order_.size()) return false;
  return std::all_of(vertices.begin(), vertices.end(),
                     [&](int v) { return position_of(v) != 0; });
}

std::optional<NeighborhoodShape> shape_of(const SplitPartition& p, const Labeling& labeling,
                                          int v) {
  const int k = labeling.size();
  std::vector<int> positions;
  for (int w : p.graph.neighbors(v)) {
    int pos = labeling.position_of(w);
    if (pos == 0) throw std::invalid_argument("neighbor " + std::to_string(w) + " is not labeled");
    positions.push_back(pos);
  }
  if (positions.empty()) return NeighborhoodShape{};
  std::sort(positions.begin(), positions.end());
  const int size = static_cast<int>(positions.size());
  if (positions.back() - positions.front() + 1 == size) {
    return NeighborhoodShape{NeighborhoodShape::Kind::Interval, positions.front(), positions.back()};
  }
  if (positions.front() != 1 || positions.back() != k) return std::nullopt;
  int prefix = 1;
  while (prefix < size && positions[prefix] == prefix + 1) ++prefix;
  // positions[0..prefix) = 1..prefix; the remainder must run up to k.
  int b = positions[prefix];
  if (positions.back() - b + 1 != size - prefix) return std::nullopt;
  return NeighborhoodShape{NeighborhoodShape::Kind::Wrapped, prefix, b};
}

std::string LabelingReport::describe() const {
  switch (condition) {
    case LabelingCondition::None:
      return "valid";
    case LabelingCondition::NotBijective:
      return "labeling is not a bijection onto the clique";
    case LabelingCondition::Shape:
      return "condition (1): neighborhood of " + std::to_string(first) +
             " is neither an interval nor wrapped";
    case LabelingCondition::IntervalWrapped:
      return "condition (2): interval neighborhood of " + std::to_string(first) +
             " covers the gap of wrapped neighborhood of " + std::to_string(second);
    case LabelingCondition::WrappedWrapped:
      return "condition (3): wrapped neighborhoods of " + std::to_string(first) + " and " +
             std::to_string(second) + " overlap across the gap";
  }
  return {};
}

LabelingReport validate_labeling(const SplitPartition& p, const Labeling& labeling) {
  if (!labeling.labels_exactly(p.clique)) return {LabelingCondition::NotBijective};
  using Kind = NeighborhoodShape::Kind;
  struct Entry {
    int vertex;
    NeighborhoodShape shape;
  };
  std::vector<Entry> intervals, wrapped;
  for (int v : p.independent) {
    auto shape = shape_of(p, labeling, v);
    if (!shape) return {LabelingCondition::Shape, v};
    if (shape->kind == Kind::Interval) intervals.push_back({v, *shape});
    if (shape->kind == Kind::Wrapped) wrapped.push_back({v, *shape});
  }
  for (const auto& u : intervals) {
    for (const auto& w : wrapped) {
      if (!(u.shape.a > w.shape.a || u.shape.b < w.shape.b)) {
        return {LabelingCondition::IntervalWrapped, u.vertex, w.vertex};
      }
    }
  }
  for (std::size_t i = 0; i < wrapped.size(); ++i) {
    for (std::size_t j = i + 1; j < wrapped.size(); ++j) {
      const auto& s = wrapped[i].shape;
      const auto& r = wrapped[j].shape;
      if (!(r.a < s.b && s.a < r.b)) {
        return {LabelingCondition::WrappedWrapped, wrapped[i].vertex, wrapped[j].vertex};
      }
    }
  }
  return {};
}

bool validate_matrix_form(const BinaryMatrix& m, const RowPermutation& perm) {
  if (!check_circ_under_perm(m, perm)) return false;
  const int k = m.rows();
  std::vector<std::vector<std::uint8_t>> columns;
  columns.reserve(m.cols());
  for (int c = 0; c < m.cols(); ++c) columns.push_back(permuted_column(m, perm, c));

  for (int c = 0; c < m.cols(); ++c) {
    const auto& col = columns[c];
    if (k < 3 || !col.front() || !col.back()) continue;
    int a = 0;
    while (a < k && col[a]) ++a;
    if (a == k) continue;  // all ones
    int zeros_end = a;
    while (col[zeros_end] == 0) ++zeros_end;
    // 0-based: ones at a-1 and zeros_end bracket the zero block.
    for (int other = 0; other < m.cols(); ++other) {
      if (other == c) continue;
      const auto& o = columns[other];
      bool covers = true;
      for (int i = a - 1; i <= zeros_end && covers; ++i) covers = o[i] != 0;
      if (covers) return false;
    }
  }
  return true;
}

Labeling labeling_from_rows(const SplitPartition& p, const RowPermutation& perm) {
  std::vector<int> order;
  order.reserve(perm.order.size());
  for (int r : perm.order) order.push_back(p.clique[r]);
  return Labeling(std::move(order));
}

Orientation construct_orientation(const SplitPartition& p, const Labeling& labeling) {
  if (auto report = validate_labeling(p, labeling); !report) {
    throw std::invalid_argument("cannot orient: " + report.describe());
  }
  std::vector<Arc> arcs;
  arcs.reserve(p.graph.edge_count());
  const int k = labeling.size();
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) arcs.emplace_back(labeling.vertex_at(i), labeling.vertex_at(j));
  }
  for (int v : p.independent) {
    auto shape = *shape_of(p, labeling, v);
    for (int w : p.graph.neighbors(v)) {
      bool into_v = shape.kind == NeighborhoodShape::Kind::Wrapped &&
                    labeling.position_of(w) <= shape.a;
      arcs.push_back(into_v ? Arc{w, v} : Arc{v, w});
    }
  }
  return Orientation(p.graph, arcs);
}

std::optional<Labeling> enumerate_labelings_oracle(const SplitPartition& p, int max_clique) {
  if (static_cast<int>(p.clique.size()) > max_clique) {
    throw SizeGuardExceeded("labeling oracle limited to |C| <= " + std::to_string(max_clique));
  }
  std::vector<int> order = p.clique;
  std::sort(order.begin(), order.end());
  do {
    Labeling candidate(order);
    if (validate_labeling(p, candidate)) return candidate;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

BinaryMatrix intersection_matrix(const SplitPartition& p) {
  const int k = static_cast<int>(p.clique.size());
  const int t = static_cast<int>(p.independent.size());
  std::vector<int> row_of(p.graph.vertex_count() + 1, -1);
  for (int r = 0; r < k; ++r) row_of[p.clique[r]] = r;
  std::vector<detail::Bits> sets(t, detail::Bits(k));
  for (int i = 0; i < t; ++i) {
    for (int w : p.graph.neighbors(p.independent[i])) {
      if (row_of[w] >= 0) sets[i].set(row_of[w]);
    }
  }

  BinaryMatrix m(k, t * (t + 1) / 2);
  std::vector<std::string> labels;
  labels.reserve(m.cols());
  int c = 0;
  for (int i = 0; i < t; ++i) {
    const auto& wi = sets[i].words();
    for (int j = i; j < t; ++j, ++c) {
      const auto& wj = sets[j].words();
      auto col = m.column(c);
      for (std::size_t w = 0; w < wi.size(); ++w) {
        for (std::uint64_t bits = wi[w] & wj[w]; bits; bits &= bits - 1) {
          col[w * 64 + std::countr_zero(bits)] = 1;
        }
      }
      labels.push_back(std::to_string(p.independent[i]) + "," + std::to_string(p.independent[j]));
    }
  }
  m.set_labels(std::move(labels));
  return m;
}

BinaryMatrix prune_trivial_columns(const BinaryMatrix& m) {
  std::vector<int> keep;
  for (int c = 0; c < m.cols(); ++c) {
    if (m.column_ones(c) > 1) keep.push_back(c);
  }
  if (static_cast<int>(keep.size()) == m.cols()) return m;
  return m.select_columns(keep);
}

const char* refutation_tag(RefutationKind kind) {
  switch (kind) {
    case RefutationKind::None: return "none";
    case RefutationKind::CircularOnes: return "circ1p-fail";
    case RefutationKind::CaseA: return "case-a";
    case RefutationKind::CaseB: return "case-b";
    case RefutationKind::CaseC: return "case-c";
  }
  return "none";
}

std::string format_decision(const Decision& d, bool machine) {
  std::ostringstream out;
  const char* verdict = d.semi_transitive() ? "SEMI-TRANSITIVE" : "NOT-SEMI-TRANSITIVE";
  if (machine) {
    out << "result=" << verdict << '\n';
    if (d.semi_transitive()) {
      if (d.labeling) {
        out << "labeling=";
        for (int pos = 1; pos <= d.labeling->size(); ++pos) {
          out << (pos > 1 ? " " : "") << d.labeling->vertex_at(pos) << ':' << pos;
        }
        out << '\n';
      }
      if (d.orientation) {
        out << "orientation=";
        bool first = true;
        for (auto [u, v] : d.orientation->arcs()) {
          out << (first ? "" : " ") << u << '>' << v;
          first = false;
        }
        out << '\n';
      }
    } else {
      out << "witness=" << refutation_tag(d.refutation) << '\n';
      out << "witness_vertices=";
      for (std::size_t i = 0; i < d.witness.size(); ++i) out << (i ? " " : "") << d.witness[i];
      out << '\n';
    }
    return out.str();
  }

  out << verdict << '\n';
  if (d.semi_transitive()) {
    if (d.labeling) {
      out << "labeling:";
      for (int pos = 1; pos <= d.labeling->size(); ++pos) {
        out << ' ' << d.labeling->vertex_at(pos) << ':' << pos;
      }
      out << '\n';
    }
    if (d.orientation) {
      out << "orientation:\n";
      for (auto [u, v] : d.orientation->arcs()) out << u << " > " << v << '\n';
    }
  } else {
    out << "witness: " << refutation_tag(d.refutation);
    for (int v : d.witness) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Decision recognize(const SplitPartition& p, const RecognizeOptions& options) {
  SplitPartition q = normalize_partition(p);
  auto perm = has_circular_ones(prune_trivial_columns(intersection_matrix(q)));
  Decision d;
  if (!perm) {
    d.outcome = Outcome::NotSemiTransitive;
    d.refutation = RefutationKind::CircularOnes;
    return d;
  }
  d.outcome = Outcome::SemiTransitive;
  d.labeling = labeling_from_rows(q, *perm);
  if (auto report = validate_labeling(q, *d.labeling); !report) {
    throw InternalError("circular-ones order failed labeling check: " + report.describe());
  }
  if (options.build_orientation) {
    d.orientation = construct_orientation(q, *d.labeling);
    if (options.verify && !is_semi_transitive_orientation(*d.orientation)) {
      throw InternalError("constructed orientation is not semi-transitive");
    }
  }
  return d;
}

}  // namespace semitrans
