#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace semitrans {

/// PQ-tree over the leaves 0..n-1.
///
/// The tree encodes every leaf order in which all sets reduced so far are
/// consecutive. reduce() applies the Booth-Lueker templates bottom-up over
/// the pertinent subtree; each call costs time linear in the tree size.
/// After a failed reduction the tree is left unusable and every further
/// reduce() returns false.
class PQTree {
 public:
  explicit PQTree(int leaf_count);

  int leaf_count() const { return static_cast<int>(leaf_node_.size()); }
  bool valid() const { return valid_; }

  /// Restricts the tree to orders where `leaves` are consecutive. Returns
  /// false if no remaining order achieves that.
  bool reduce(std::span<const int> leaves);

  /// Leaves in left-to-right order.
  std::vector<int> frontier() const;

  /// Nested description, e.g. "P(0 Q(1 2 3) 4)".
  std::string to_string() const;

  /// Checks the structural invariants: P-nodes have >= 2 children, Q-nodes
  /// >= 3, every leaf appears exactly once.
  bool well_formed() const;

 private:
  enum class Kind : std::uint8_t { Leaf, P, Q };
  enum class Mark : std::uint8_t { Empty, Full, Partial };

  struct Node {
    Kind kind = Kind::Leaf;
    int leaf = -1;
    std::vector<int> children;
  };

  int new_node(Kind kind);
  void release(int node);
  int group_as_p(std::vector<int>& children);
  bool process(int node, bool is_root);
  bool process_p(int node, bool is_root);
  bool process_q(int node, bool is_root);
  Mark mark_of(int node) const;
  void describe(int node, std::string& out) const;

  std::vector<Node> nodes_;
  std::vector<int> free_;
  std::vector<int> leaf_node_;
  int root_ = -1;
  bool valid_ = true;

  // Per-reduction scratch, indexed by node.
  std::vector<int> full_count_;
  std::vector<Mark> mark_;
  std::vector<int> postorder_;
  std::vector<int> stack_;
  std::vector<int> full_, empty_, partial_;
};

}  // namespace semitrans
