#include "core/schroder.hpp"

namespace catcomb {

namespace {

int letter_rank(char c) {
  switch (c) {
    case 'F':
      return 0;
    case 'U':
      return 1;
    case 'D':
      return 2;
    default:
      return 3;
  }
}

}  // namespace

SchroderPath SchroderPath::parse(std::string_view word) {
  int level = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (c == 'U') {
      ++level;
    } else if (c == 'D') {
      --level;
    } else if (c != 'F') {
      fail(ErrorCode::ParseError,
           std::string("invalid step character '") + c + "' at index " +
               std::to_string(i) + " (expected 'U', 'D' or 'F')");
    }
    if (level < 0) {
      fail(ErrorCode::DomainError,
           "path dips below ground: violating step index " + std::to_string(i));
    }
  }
  if (level != 0) {
    fail(ErrorCode::DomainError,
         "path does not return to ground: violating step index " +
             std::to_string(word.empty() ? 0 : word.size() - 1));
  }
  return SchroderPath(std::string(word));
}

int SchroderPath::size() const {
  int span = 0;
  for (char c : word_) {
    span += (c == 'F') ? 2 : 1;
  }
  return span / 2;
}

std::vector<int> SchroderPath::levels() const {
  std::vector<int> out;
  out.reserve(word_.size() + 1);
  int level = 0;
  out.push_back(level);
  for (char c : word_) {
    if (c == 'U') {
      ++level;
    } else if (c == 'D') {
      --level;
    }
    out.push_back(level);
  }
  return out;
}

long long SchroderPath::flat_count() const {
  long long cnt = 0;
  for (char c : word_) {
    if (c == 'F') {
      ++cnt;
    }
  }
  return cnt;
}

bool SchroderPath::has_ground_flat() const {
  int level = 0;
  for (char c : word_) {
    if (c == 'F' && level == 0) {
      return true;
    }
    if (c == 'U') {
      ++level;
    } else if (c == 'D') {
      --level;
    }
  }
  return false;
}

bool operator<(const SchroderPath& a, const SchroderPath& b) {
  std::size_t common = std::min(a.word_.size(), b.word_.size());
  for (std::size_t i = 0; i < common; ++i) {
    int ra = letter_rank(a.word_[i]);
    int rb = letter_rank(b.word_[i]);
    if (ra != rb) {
      return ra < rb;
    }
  }
  return a.word_.size() < b.word_.size();
}

}  // namespace catcomb
