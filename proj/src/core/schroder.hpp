#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"

namespace catcomb {

// A path of U (up), D (down) and F (double-flat, spanning two x-units) steps
// that starts and ends at ground level and never dips below it.
class SchroderPath {
 public:
  SchroderPath() = default;  // the empty path

  static SchroderPath parse(std::string_view word);

  const std::string& word() const { return word_; }
  int step_count() const { return static_cast<int>(word_.size()); }
  // Semilength n: the x-span is 2n.
  int size() const;
  char step(int i) const { return word_[static_cast<std::size_t>(i)]; }
  // Level before step i (levels()[step_count()] is the final level, 0).
  std::vector<int> levels() const;
  long long flat_count() const;
  // True when some F lies at ground level.
  bool has_ground_flat() const;

  friend bool operator==(const SchroderPath& a, const SchroderPath& b) {
    return a.word_ == b.word_;
  }
  friend bool operator<(const SchroderPath& a, const SchroderPath& b);

 private:
  explicit SchroderPath(std::string word) : word_(std::move(word)) {}

  std::string word_;
};

}  // namespace catcomb
