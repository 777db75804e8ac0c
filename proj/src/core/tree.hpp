#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/path.hpp"

namespace catcomb {

// Ordered rooted tree; only the child structure matters.
struct OrderedTree {
  std::vector<OrderedTree> children;

  bool operator==(const OrderedTree& other) const = default;
  bool is_leaf() const { return children.empty(); }
  // Number of edges.
  int size() const;
};

// Walkaround correspondence: U opens an edge, D closes it.
OrderedTree tree_from_dyck(const Path& p);
Path dyck_from_tree(const OrderedTree& t);

// Vertices that are neither the root nor a leaf and have at least one leaf
// child.
long long nodes_adjacent_to_leaf(const OrderedTree& t);

// Nested-parentheses text form: each edge is one "(...)" pair.
std::string tree_to_parens(const OrderedTree& t);
OrderedTree tree_from_parens(std::string_view text);  // typed errors

}  // namespace catcomb
