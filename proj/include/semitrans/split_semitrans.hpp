#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "semitrans/binary_matrix.hpp"
#include "semitrans/graph.hpp"
#include "semitrans/ones_matrix.hpp"
#include "semitrans/orientation.hpp"

namespace semitrans {

/// Bijection from clique vertices to positions 1..k.
class Labeling {
 public:
  Labeling() = default;
  /// order[i] is the vertex at position i + 1. Throws std::invalid_argument
  /// on repeated or non-positive vertex ids.
  explicit Labeling(std::vector<int> order);

  int size() const { return static_cast<int>(order_.size()); }
  std::span<const int> order() const { return order_; }
  int vertex_at(int position) const { return order_[position - 1]; }
  /// 1-based position, or 0 when the vertex is not labeled.
  int position_of(int vertex) const {
    return vertex >= 0 && vertex < static_cast<int>(position_.size()) ? position_[vertex] : 0;
  }
  /// True when the labeled vertices are exactly `vertices`.
  bool labels_exactly(std::span<const int> vertices) const;

  friend bool operator==(const Labeling& a, const Labeling& b) { return a.order_ == b.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> position_;
};

/// Shape of N(v) under a labeling: empty, [a,b], or [1,a] u [b,k] with a < b.
struct NeighborhoodShape {
  enum class Kind { Empty, Interval, Wrapped };
  Kind kind = Kind::Empty;
  int a = 0;
  int b = 0;

  friend bool operator==(const NeighborhoodShape&, const NeighborhoodShape&) = default;
};

/// Nothing when N(v) is neither empty, an interval, nor a prefix plus a
/// suffix of the labeling.
std::optional<NeighborhoodShape> shape_of(const SplitPartition& p, const Labeling& labeling,
                                          int v);

enum class LabelingCondition {
  None,
  NotBijective,
  Shape,            // some N(v) is not an interval or wrapped pair
  IntervalWrapped,  // interval [a1,b1] with a1 <= a2 and b1 >= b2
  WrappedWrapped,   // wrapped pair with a2 >= b1 or a1 >= b2
};

struct LabelingReport {
  LabelingCondition condition = LabelingCondition::None;
  int first = 0;   // offending I-vertex (or vertices) when applicable
  int second = 0;

  bool valid() const { return condition == LabelingCondition::None; }
  explicit operator bool() const { return valid(); }
  std::string describe() const;
};

LabelingReport validate_labeling(const SplitPartition& p, const Labeling& labeling);

/// Circular ones for every column under `perm`, and for every column of the
/// form 1^a 0^b 1^c (a, b, c >= 1) no other column has ones at all of the
/// 1-based positions a..a+b+1.
bool validate_matrix_form(const BinaryMatrix& m, const RowPermutation& perm);

/// Labeling whose i-th position holds p.clique[perm.order[i - 1]].
Labeling labeling_from_rows(const SplitPartition& p, const RowPermutation& perm);

/// Clique edges point up the labeling; a wrapped vertex receives arcs from
/// [1,a] and sends arcs to [b,k]; interval vertices are sources. Throws
/// std::invalid_argument when the labeling does not validate.
Orientation construct_orientation(const SplitPartition& p, const Labeling& labeling);

/// Lexicographically first valid labeling by brute force over k! orders.
/// Throws SizeGuardExceeded when |C| > max_clique.
std::optional<Labeling> enumerate_labelings_oracle(const SplitPartition& p, int max_clique = 8);

/// k x (t(t+1)/2) matrix; column (i,j), i <= j, is the indicator of
/// N(v_i) n N(v_j) over the clique rows. Labels read "u,v" in vertex ids.
BinaryMatrix intersection_matrix(const SplitPartition& p);

/// Drops columns with at most one 1.
BinaryMatrix prune_trivial_columns(const BinaryMatrix& m);

enum class ForbiddenCase { A, B, C };

const char* case_tag(ForbiddenCase c);  // "case-a", ...

/// An induced copy of one of the three minimal forbidden graphs. `clique`
/// lists the copy's vertices playing 1..4, `independent` those playing a, b, c.
struct ForbiddenWitness {
  ForbiddenCase kind = ForbiddenCase::A;
  std::array<int, 4> clique{};
  std::array<int, 3> independent{};

  std::vector<int> vertices() const;
};

/// Clique vertex types (bitmask over a=1, b=2, c=4) of vertices 1..4.
std::array<unsigned, 4> forbidden_types(ForbiddenCase c);

/// The 7-vertex graph: clique 1..4, independent vertices a=5, b=6, c=7.
Graph forbidden_graph(ForbiddenCase c);

bool forbidden_witness_holds(const Graph& g, const ForbiddenWitness& w);

enum class Outcome { SemiTransitive, NotSemiTransitive };

enum class RefutationKind { None, CircularOnes, CaseA, CaseB, CaseC };

const char* refutation_tag(RefutationKind kind);

struct Decision {
  Outcome outcome = Outcome::NotSemiTransitive;
  std::optional<Labeling> labeling;
  std::optional<Orientation> orientation;
  RefutationKind refutation = RefutationKind::None;
  std::vector<int> witness;

  bool semi_transitive() const { return outcome == Outcome::SemiTransitive; }
};

/// Plain or key=value rendering of a decision.
std::string format_decision(const Decision& d, bool machine = false);

/// Raised when a certificate produced by the pipeline fails its own checks.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct RecognizeOptions {
  /// Build the explicit orientation (quadratic in |C|).
  bool build_orientation = true;
  /// Re-check the orientation for acyclicity and shortcuts.
  bool verify = true;
};

/// Normalizes p, then searches for a circular-ones row order of the pruned
/// intersection matrix. Such an order is a valid labeling; none exists iff
/// the graph has no semi-transitive orientation.
Decision recognize(const SplitPartition& p, const RecognizeOptions& options = {});

/// Decision by the small-I characterization. Requires at most three
/// independent vertices once twins with equal neighborhoods are merged;
/// throws std::invalid_argument otherwise.
Decision check_small_I(const SplitPartition& p);

/// Searches for an induced copy of one of the three forbidden graphs,
/// anchoring on independent triples. Throws std::invalid_argument when g is
/// not split.
std::optional<ForbiddenWitness> find_forbidden_subgraph(const Graph& g);

}  // namespace semitrans
