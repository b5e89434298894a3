#include "semitrans/pq_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace semitrans {

PQTree::PQTree(int leaf_count) {
  if (leaf_count < 0) throw std::invalid_argument("negative leaf count");
  leaf_node_.resize(leaf_count);
  for (int i = 0; i < leaf_count; ++i) {
    int node = new_node(Kind::Leaf);
    nodes_[node].leaf = i;
    leaf_node_[i] = node;
  }
  if (leaf_count == 1) {
    root_ = leaf_node_[0];
  } else if (leaf_count > 1) {
    root_ = new_node(Kind::P);
    nodes_[root_].children = leaf_node_;
  }
}

int PQTree::new_node(Kind kind) {
  int id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    full_count_.push_back(0);
    mark_.push_back(Mark::Empty);
  }
  nodes_[id].kind = kind;
  nodes_[id].leaf = -1;
  nodes_[id].children.clear();
  full_count_[id] = 0;
  mark_[id] = Mark::Empty;
  return id;
}

void PQTree::release(int node) {
  nodes_[node].children.clear();
  free_.push_back(node);
}

int PQTree::group_as_p(std::vector<int>& children) {
  if (children.size() == 1) return children[0];
  int node = new_node(Kind::P);
  nodes_[node].children = children;
  return node;
}

PQTree::Mark PQTree::mark_of(int node) const {
  return full_count_[node] == 0 ? Mark::Empty : mark_[node];
}

bool PQTree::reduce(std::span<const int> leaves) {
  if (!valid_) return false;
  const int total = static_cast<int>(leaves.size());
  for (int leaf : leaves) {
    if (leaf < 0 || leaf >= leaf_count()) throw std::out_of_range("leaf index out of range");
  }
  if (total <= 1 || total >= leaf_count()) return true;

  std::fill(full_count_.begin(), full_count_.end(), 0);
  for (int leaf : leaves) full_count_[leaf_node_[leaf]] = 1;

  // Children precede parents in reversed preorder.
  postorder_.clear();
  stack_.assign(1, root_);
  while (!stack_.empty()) {
    int v = stack_.back();
    stack_.pop_back();
    postorder_.push_back(v);
    for (int c : nodes_[v].children) stack_.push_back(c);
  }
  for (auto it = postorder_.rbegin(); it != postorder_.rend(); ++it) {
    auto& node = nodes_[*it];
    if (node.kind == Kind::Leaf) continue;
    int sum = 0;
    for (int c : node.children) sum += full_count_[c];
    full_count_[*it] = sum;
  }

  int pertinent = root_;
  for (bool descended = true; descended;) {
    descended = false;
    for (int c : nodes_[pertinent].children) {
      if (full_count_[c] == total) {
        pertinent = c;
        descended = true;
        break;
      }
    }
  }

  postorder_.clear();
  stack_.assign(1, pertinent);
  while (!stack_.empty()) {
    int v = stack_.back();
    stack_.pop_back();
    postorder_.push_back(v);
    for (int c : nodes_[v].children) {
      if (full_count_[c] > 0) stack_.push_back(c);
    }
  }
  // Copy: processing may allocate nodes and grow the scratch vectors.
  std::vector<int> order(postorder_.rbegin(), postorder_.rend());
  for (int v : order) {
    if (!process(v, v == pertinent)) {
      valid_ = false;
      return false;
    }
  }
  return true;
}

bool PQTree::process(int node, bool is_root) {
  switch (nodes_[node].kind) {
    case Kind::Leaf:
      mark_[node] = Mark::Full;
      return true;
    case Kind::P:
      return process_p(node, is_root);
    case Kind::Q:
      return process_q(node, is_root);
  }
  return false;
}

bool PQTree::process_p(int node, bool is_root) {
  full_.clear();
  empty_.clear();
  partial_.clear();
  for (int c : nodes_[node].children) {
    switch (mark_of(c)) {
      case Mark::Full: full_.push_back(c); break;
      case Mark::Empty: empty_.push_back(c); break;
      case Mark::Partial: partial_.push_back(c); break;
    }
  }
  if (empty_.empty() && partial_.empty()) {
    mark_[node] = Mark::Full;
    return true;
  }

  if (!is_root) {
    if (partial_.size() > 1) return false;
    std::vector<int> children;
    if (partial_.empty()) {
      // Empty group, then full group.
      children.push_back(group_as_p(empty_));
      children.push_back(group_as_p(full_));
    } else {
      int q = partial_[0];
      if (!empty_.empty()) children.push_back(group_as_p(empty_));
      const auto& inner = nodes_[q].children;
      children.insert(children.end(), inner.begin(), inner.end());
      if (!full_.empty()) children.push_back(group_as_p(full_));
      release(q);
    }
    nodes_[node].kind = Kind::Q;
    nodes_[node].children = std::move(children);
    mark_[node] = Mark::Partial;
    return true;
  }

  if (partial_.size() > 2) return false;
  if (partial_.empty()) {
    if (full_.size() < 2) return true;
    std::vector<int> children = empty_;
    children.push_back(group_as_p(full_));
    nodes_[node].children = std::move(children);
    return true;
  }

  // One or two partial Q children: chain them around the full group.
  int q = partial_[0];
  std::vector<int> chain = nodes_[q].children;
  if (!full_.empty()) chain.push_back(group_as_p(full_));
  if (partial_.size() == 2) {
    const auto& other = nodes_[partial_[1]].children;
    chain.insert(chain.end(), other.rbegin(), other.rend());
    release(partial_[1]);
  }
  if (empty_.empty()) {
    release(q);
    nodes_[node].kind = Kind::Q;
    nodes_[node].children = std::move(chain);
  } else {
    nodes_[q].children = std::move(chain);
    std::vector<int> children = empty_;
    children.push_back(q);
    nodes_[node].children = std::move(children);
  }
  return true;
}

bool PQTree::process_q(int node, bool is_root) {
  auto& children = nodes_[node].children;
  const int count = static_cast<int>(children.size());
  bool any_empty = false, any_partial = false;
  for (int c : children) {
    auto m = mark_of(c);
    any_empty |= m == Mark::Empty;
    any_partial |= m == Mark::Partial;
  }
  if (!any_empty && !any_partial) {
    mark_[node] = Mark::Full;
    return true;
  }

  std::vector<int> spliced;
  spliced.reserve(children.size() + 4);
  auto splice = [&](int c, bool reversed) {
    const auto& inner = nodes_[c].children;
    if (reversed) {
      spliced.insert(spliced.end(), inner.rbegin(), inner.rend());
    } else {
      spliced.insert(spliced.end(), inner.begin(), inner.end());
    }
    release(c);
  };

  if (!is_root) {
    // Need Empty* Partial? Full* in one of the two directions.
    auto rank = [&](int c) {
      switch (mark_of(c)) {
        case Mark::Empty: return 0;
        case Mark::Partial: return 1;
        case Mark::Full: return 2;
      }
      return 0;
    };
    auto monotone = [&](bool backwards) {
      int prev = 0, partials = 0;
      for (int i = 0; i < count; ++i) {
        int r = rank(children[backwards ? count - 1 - i : i]);
        if (r < prev) return false;
        partials += r == 1;
        prev = r;
      }
      return partials <= 1;
    };
    if (!monotone(false)) {
      if (!monotone(true)) return false;
      std::reverse(children.begin(), children.end());
    }
    for (int c : children) {
      if (mark_of(c) == Mark::Partial) {
        splice(c, false);
      } else {
        spliced.push_back(c);
      }
    }
    nodes_[node].children = std::move(spliced);
    mark_[node] = Mark::Partial;
    return true;
  }

  // Root: the non-empty children must be contiguous, full inside, with
  // partial children allowed only at the two ends.
  int first = -1, last = -1;
  for (int i = 0; i < count; ++i) {
    if (mark_of(children[i]) != Mark::Empty) {
      if (first < 0) first = i;
      last = i;
    }
  }
  for (int i = first + 1; i < last; ++i) {
    if (mark_of(children[i]) != Mark::Full) return false;
  }
  for (int i = 0; i < count; ++i) {
    int c = children[i];
    if (mark_of(c) != Mark::Partial) {
      spliced.push_back(c);
    } else {
      splice(c, i == last && i != first);
    }
  }
  nodes_[node].children = std::move(spliced);
  return true;
}

std::vector<int> PQTree::frontier() const {
  std::vector<int> out;
  if (root_ < 0) return out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const auto& node = nodes_[v];
    if (node.kind == Kind::Leaf) {
      out.push_back(node.leaf);
      continue;
    }
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

void PQTree::describe(int node, std::string& out) const {
  const auto& n = nodes_[node];
  if (n.kind == Kind::Leaf) {
    out += std::to_string(n.leaf);
    return;
  }
  out += n.kind == Kind::P ? "P(" : "Q(";
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    if (i) out += ' ';
    describe(n.children[i], out);
  }
  out += ')';
}

std::string PQTree::to_string() const {
  std::string out;
  if (root_ >= 0) describe(root_, out);
  return out;
}

bool PQTree::well_formed() const {
  if (root_ < 0) return leaf_count() == 0;
  std::vector<int> seen(leaf_count(), 0);
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const auto& node = nodes_[v];
    switch (node.kind) {
      case Kind::Leaf:
        if (node.leaf < 0 || node.leaf >= leaf_count() || seen[node.leaf]++) return false;
        if (leaf_node_[node.leaf] != v) return false;
        break;
      case Kind::P:
        if (node.children.size() < 2) return false;
        break;
      case Kind::Q:
        if (node.children.size() < 3) return false;
        break;
    }
    for (int c : node.children) stack.push_back(c);
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

}  // namespace semitrans
