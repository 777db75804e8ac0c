#include "core/tree.hpp"

#include <utility>

namespace catcomb {

int OrderedTree::size() const {
  // Iterative edge count.
  int edges = 0;
  std::vector<const OrderedTree*> stack{this};
  while (!stack.empty()) {
    const OrderedTree* node = stack.back();
    stack.pop_back();
    edges += static_cast<int>(node->children.size());
    for (const auto& child : node->children) {
      stack.push_back(&child);
    }
  }
  return edges;
}

OrderedTree tree_from_dyck(const Path& p) {
  if (!p.is_dyck()) {
    fail(ErrorCode::DomainError, "tree correspondence requires a Dyck path");
  }
  OrderedTree root;
  // Ancestor chain; appending only ever happens at the deepest node, so the
  // chain pointers stay valid.
  std::vector<OrderedTree*> chain{&root};
  for (int i = 0; i < p.steps(); ++i) {
    if (p.is_up(i)) {
      OrderedTree* parent = chain.back();
      parent->children.emplace_back();
      chain.push_back(&parent->children.back());
    } else {
      chain.pop_back();
    }
  }
  return root;
}

Path dyck_from_tree(const OrderedTree& t) {
  std::string word;
  // Frame: node plus index of the next child to visit.
  std::vector<std::pair<const OrderedTree*, std::size_t>> stack{{&t, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next < node->children.size()) {
      const OrderedTree* child = &node->children[next];
      ++next;
      word.push_back('U');
      stack.emplace_back(child, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        word.push_back('D');
      }
    }
  }
  return Path::parse_dyck(word);
}

long long nodes_adjacent_to_leaf(const OrderedTree& t) {
  long long cnt = 0;
  std::vector<std::pair<const OrderedTree*, bool>> stack{{&t, true}};
  while (!stack.empty()) {
    auto [node, is_root] = stack.back();
    stack.pop_back();
    if (!is_root && !node->is_leaf()) {
      for (const auto& child : node->children) {
        if (child.is_leaf()) {
          ++cnt;
          break;
        }
      }
    }
    for (const auto& child : node->children) {
      stack.emplace_back(&child, false);
    }
  }
  return cnt;
}

std::string tree_to_parens(const OrderedTree& t) {
  // Same shape as the walkaround word with '(' for U and ')' for D.
  std::string word = dyck_from_tree(t).word();
  for (char& c : word) {
    c = (c == 'U') ? '(' : ')';
  }
  return word;
}

OrderedTree tree_from_parens(std::string_view text) {
  std::string word;
  word.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') {
      word.push_back('U');
    } else if (c == ')') {
      word.push_back('D');
    } else {
      fail(ErrorCode::ParseError,
           std::string("invalid tree character '") + c + "' at index " +
               std::to_string(i) + " (expected '(' or ')')");
    }
  }
  return tree_from_dyck(Path::parse_dyck(word));
}

}  // namespace catcomb
