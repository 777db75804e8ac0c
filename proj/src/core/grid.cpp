#include "core/grid.hpp"

#include <algorithm>
#include <utility>

namespace catcomb {

GridPoint pair_b_start(PairRole role) {
  switch (role) {
    case PairRole::Levine:
    case PairRole::GvLongInterior:
      return {1, 0};
    case PairRole::GvX1X2:
      return {2, 0};
  }
  return {0, 0};
}

GridPoint pair_t_start(PairRole role) {
  switch (role) {
    case PairRole::Levine:
    case PairRole::GvLongInterior:
      return {0, 1};
    case PairRole::GvX1X2:
      return {0, 0};
  }
  return {0, 0};
}

namespace {

void validate_word(const std::string& word, const char* which) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (c != 'N' && c != 'E') {
      fail(ErrorCode::ParseError,
           std::string("invalid ") + which + "-path character '" + c +
               "' at index " + std::to_string(i) + " (expected 'N' or 'E')");
    }
  }
}

GridPoint word_end(const std::string& word, GridPoint start) {
  for (char c : word) {
    if (c == 'E') {
      ++start.x;
    } else {
      ++start.y;
    }
  }
  return start;
}

}  // namespace

GridPathPair::GridPathPair(std::string b, std::string t, PairRole role)
    : b_(std::move(b)), t_(std::move(t)), role_(role) {
  validate_word(b_, "bottom");
  validate_word(t_, "top");
}

GridPoint GridPathPair::b_end() const { return word_end(b_, b_start()); }

GridPoint GridPathPair::t_end() const { return word_end(t_, t_start()); }

bool GridPathPair::nonintersecting() const {
  auto bp = grid_points(b_, b_start());
  auto tp = grid_points(t_, t_start());
  auto less = [](const GridPoint& a, const GridPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  };
  std::sort(bp.begin(), bp.end(), less);
  for (const auto& pt : tp) {
    if (std::binary_search(bp.begin(), bp.end(), pt, less)) {
      return false;
    }
  }
  return true;
}

std::vector<GridPoint> grid_points(const std::string& word, GridPoint start) {
  std::vector<GridPoint> out;
  out.reserve(word.size() + 1);
  out.push_back(start);
  for (char c : word) {
    if (c == 'E') {
      ++start.x;
    } else {
      ++start.y;
    }
    out.push_back(start);
  }
  return out;
}

}  // namespace catcomb
