#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"

namespace catcomb {

struct GridPoint {
  int x = 0;
  int y = 0;

  bool operator==(const GridPoint& other) const = default;
};

// Role of a bottom/top pair of N/E lattice paths.
//
//   Levine          - B starts at (1,0), T at (0,1); both words have the same
//                     number of E's and the same number of N's.
//   GvLongInterior  - raw pair feeding the long-interior identity:
//                     B (1,0) -> (k+2, n-1-k), T (0,1) -> (k, n-1-k).
//   GvX1X2          - raw pair feeding the x1-plus-x2 identity:
//                     B (2,0) -> (k+2, n-1-k), T (0,0) -> (k, n-1-k).
enum class PairRole { Levine, GvLongInterior, GvX1X2 };

GridPoint pair_b_start(PairRole role);
GridPoint pair_t_start(PairRole role);

// An ordered pair of N/E words anchored by its role. Words may be empty.
class GridPathPair {
 public:
  GridPathPair(std::string b, std::string t, PairRole role);

  const std::string& b() const { return b_; }
  const std::string& t() const { return t_; }
  PairRole role() const { return role_; }
  GridPoint b_start() const { return pair_b_start(role_); }
  GridPoint t_start() const { return pair_t_start(role_); }
  GridPoint b_end() const;
  GridPoint t_end() const;
  // True when the two paths share no lattice point.
  bool nonintersecting() const;

  friend bool operator==(const GridPathPair& a, const GridPathPair& b) {
    return a.b_ == b.b_ && a.t_ == b.t_ && a.role_ == b.role_;
  }

 private:
  std::string b_;
  std::string t_;
  PairRole role_;
};

std::vector<GridPoint> grid_points(const std::string& word, GridPoint start);

}  // namespace catcomb
