#include "core/path.hpp"

#include <algorithm>
#include <utility>

namespace catcomb {

namespace {

std::uint64_t bits_from_word(std::string_view word) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (c == 'U') {
      bits |= std::uint64_t{1} << i;
    } else if (c != 'D') {
      fail(ErrorCode::ParseError,
           std::string("invalid step character '") + c + "' at index " +
               std::to_string(i) + " (expected 'U' or 'D')");
    }
  }
  return bits;
}

void check_size(std::size_t size) {
  if (size > Path::kMaxSteps) {
    fail(ErrorCode::BoundsError,
         "path of " + std::to_string(size) + " steps exceeds the supported " +
             std::to_string(Path::kMaxSteps) + " steps");
  }
}

}  // namespace

Path::Path(std::uint64_t bits, int size) : size_(static_cast<std::int16_t>(size)) {
  std::uint64_t mask =
      size >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
  bits_ = bits & mask;
  int h = 0;
  int lo = 0;
  int hi = 0;
  height_[0] = 0;
  for (int i = 0; i < size; ++i) {
    h += ((bits_ >> i) & 1u) ? 1 : -1;
    height_[i + 1] = static_cast<std::int8_t>(h);
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  min_h_ = static_cast<std::int8_t>(lo);
  max_h_ = static_cast<std::int8_t>(hi);
}

Path Path::parse(std::string_view word) {
  check_size(word.size());
  return Path(bits_from_word(word), static_cast<int>(word.size()));
}

Path Path::from_bits(std::uint64_t bits, int size) {
  check_size(static_cast<std::size_t>(size));
  return Path(bits, size);
}

namespace {

// First step index after which the walk can no longer end at height 0
// within its own length; -1 when the whole word is balanced.
int first_unbalanced_index(const Path& p) {
  for (int i = 0; i < p.steps(); ++i) {
    int remaining = p.steps() - (i + 1);
    int h = p.height(i + 1);
    if (h > remaining || -h > remaining) {
      return i;
    }
  }
  return -1;
}

}  // namespace

Path Path::parse_balanced(std::string_view word) {
  Path p = parse(word);
  int bad = first_unbalanced_index(p);
  if (bad >= 0) {
    fail(ErrorCode::DomainError,
         "not a balanced path: violating step index " + std::to_string(bad));
  }
  return p;
}

Path Path::parse_dyck(std::string_view word) {
  Path p = parse(word);
  for (int i = 0; i < p.steps(); ++i) {
    int remaining = p.steps() - (i + 1);
    int h = p.height(i + 1);
    if (h < 0 || h > remaining) {
      fail(ErrorCode::DomainError,
           "not a Dyck path: violating step index " + std::to_string(i));
    }
  }
  return p;
}

Path Path::parse_inverted_dyck(std::string_view word) {
  Path p = parse(word);
  for (int i = 0; i < p.steps(); ++i) {
    int remaining = p.steps() - (i + 1);
    int h = p.height(i + 1);
    if (h > 0 || -h > remaining) {
      fail(ErrorCode::DomainError,
           "not an inverted Dyck path: violating step index " +
               std::to_string(i));
    }
  }
  return p;
}

std::string Path::word() const {
  std::string out(static_cast<std::size_t>(size_), 'D');
  for (int i = 0; i < size_; ++i) {
    if (is_up(i)) {
      out[static_cast<std::size_t>(i)] = 'U';
    }
  }
  return out;
}

bool operator<(const Path& a, const Path& b) {
  int common = std::min(a.steps(), b.steps());
  for (int i = 0; i < common; ++i) {
    bool au = a.is_up(i);
    bool bu = b.is_up(i);
    if (au != bu) {
      return au;  // U < D
    }
  }
  return a.steps() < b.steps();
}

std::vector<Incline> inclines(const Path& p) {
  std::vector<Incline> out;
  int i = 0;
  while (i < p.steps()) {
    int j = i;
    while (j < p.steps() && p.is_up(j) == p.is_up(i)) {
      ++j;
    }
    Incline inc;
    inc.is_ascent = p.is_up(i);
    inc.start_step = i;
    inc.length = j - i;
    inc.is_initial = (i == 0);
    inc.is_terminal = (j == p.steps());
    inc.is_interior = !(inc.is_initial && inc.is_ascent) &&
                      !(inc.is_terminal && !inc.is_ascent);
    out.push_back(inc);
    i = j;
  }
  return out;
}

namespace {

long long count_factor(const Path& p, bool first_up, bool second_up) {
  long long cnt = 0;
  for (int i = 0; i + 1 < p.steps(); ++i) {
    if (p.is_up(i) == first_up && p.is_up(i + 1) == second_up) {
      ++cnt;
    }
  }
  return cnt;
}

long long hills_count(const Path& p) {
  long long cnt = 0;
  for (int i = 0; i + 1 < p.steps(); ++i) {
    if (p.is_up(i) && !p.is_up(i + 1) && p.height(i) == 0) {
      ++cnt;
    }
  }
  return cnt;
}

long long dxd_count(const Path& p) {
  long long cnt = 0;
  for (int i = 0; i + 2 < p.steps(); ++i) {
    if (!p.is_up(i) && !p.is_up(i + 2)) {
      ++cnt;
    }
  }
  return cnt;
}

long long returns_count(const Path& p) {
  long long cnt = 0;
  for (int v = 1; v <= p.steps(); ++v) {
    if (p.height(v) == 0) {
      ++cnt;
    }
  }
  return cnt;
}

long long x_upsteps_above_ground(const Path& p) {
  long long cnt = 0;
  for (int i = 0; i < p.steps(); ++i) {
    if (p.is_up(i) && p.height(i) >= 0) {
      ++cnt;
    }
  }
  return cnt;
}

long long hill_producing_count(const Path& p) {
  long long cnt = 0;
  for (int u = 0; u < p.steps(); ++u) {
    if (!p.is_up(u)) {
      continue;
    }
    int m = matching_downstep(p, u);
    for (int i = u + 1; i <= m - 2; ++i) {
      if (p.is_up(i) && !p.is_up(i + 1) && p.height(i) == p.height(u) + 1) {
        ++cnt;
        break;
      }
    }
  }
  return cnt;
}

}  // namespace

long long statistic(const Path& p, StatKind kind) {
  switch (kind) {
    case StatKind::UU:
      return count_factor(p, true, true);
    case StatKind::UD:
    case StatKind::PEAKS:
      return count_factor(p, true, false);
    case StatKind::DU:
    case StatKind::VALLEYS:
      return count_factor(p, false, true);
    case StatKind::DD:
      return count_factor(p, false, false);
    case StatKind::HILLS:
      return hills_count(p);
    case StatKind::DXD:
      return dxd_count(p);
    case StatKind::RETURNS:
      return returns_count(p);
    case StatKind::X_UPSTEPS_ABOVE_GROUND:
      return x_upsteps_above_ground(p);
    case StatKind::HILL_PRODUCING_UPSTEPS:
      return hill_producing_count(p);
    case StatKind::STRICT_INDICATOR:
      return returns_count(p) == 1 ? 1 : 0;
    case StatKind::X1_PLUS_X2:
      return statistic(p, StatKind::LONG_INTERIOR_INCLINES) +
             statistic(p, StatKind::STRICT_INDICATOR);
    default:
      break;
  }
  // Incline-based statistics.
  auto incs = inclines(p);
  long long cnt = 0;
  switch (kind) {
    case StatKind::LONG_INTERIOR_INCLINES:
      for (const auto& inc : incs) {
        if (inc.is_interior && inc.length >= 2) {
          ++cnt;
        }
      }
      return cnt;
    case StatKind::LONG_NONTERMINAL_INCLINES:
      for (const auto& inc : incs) {
        if (!(inc.is_terminal && !inc.is_ascent) && inc.length >= 2) {
          ++cnt;
        }
      }
      return cnt;
    case StatKind::LONG_NONINITIAL_ASCENTS:
      for (const auto& inc : incs) {
        if (inc.is_ascent && inc.start_step != 0 && inc.length >= 2) {
          ++cnt;
        }
      }
      return cnt;
    case StatKind::LONG_ASCENTS:
      for (const auto& inc : incs) {
        if (inc.is_ascent && inc.length >= 2) {
          ++cnt;
        }
      }
      return cnt;
    case StatKind::SHORT_ASCENTS:
      for (const auto& inc : incs) {
        if (inc.is_ascent && inc.length == 1) {
          ++cnt;
        }
      }
      return cnt;
    case StatKind::ODD_ASCENTS:
      for (const auto& inc : incs) {
        if (inc.is_ascent && inc.length % 2 == 1) {
          ++cnt;
        }
      }
      return cnt;
    case StatKind::MAX_DIMERS:
      for (const auto& inc : incs) {
        if (inc.is_ascent) {
          cnt += inc.length / 2;
        }
      }
      return cnt;
    case StatKind::TERMINAL_DESCENT_LEN:
      if (!incs.empty() && !incs.back().is_ascent) {
        return incs.back().length;
      }
      return 0;
    case StatKind::FIRST_ASCENT_LEN:
      if (!incs.empty() && incs.front().is_ascent) {
        return incs.front().length;
      }
      return 0;
    default:
      fail(ErrorCode::InternalError, "unhandled statistic kind");
  }
}

const std::vector<std::pair<std::string, StatKind>>& stat_registry() {
  static const std::vector<std::pair<std::string, StatKind>> reg = {
      {"uu", StatKind::UU},
      {"ud", StatKind::UD},
      {"du", StatKind::DU},
      {"dd", StatKind::DD},
      {"peaks", StatKind::PEAKS},
      {"valleys", StatKind::VALLEYS},
      {"hills", StatKind::HILLS},
      {"dxd", StatKind::DXD},
      {"long_interior_inclines", StatKind::LONG_INTERIOR_INCLINES},
      {"long_nonterminal_inclines", StatKind::LONG_NONTERMINAL_INCLINES},
      {"long_noninitial_ascents", StatKind::LONG_NONINITIAL_ASCENTS},
      {"long_ascents", StatKind::LONG_ASCENTS},
      {"short_ascents", StatKind::SHORT_ASCENTS},
      {"odd_ascents", StatKind::ODD_ASCENTS},
      {"terminal_descent_len", StatKind::TERMINAL_DESCENT_LEN},
      {"first_ascent_len", StatKind::FIRST_ASCENT_LEN},
      {"returns", StatKind::RETURNS},
      {"x_upsteps_above_ground", StatKind::X_UPSTEPS_ABOVE_GROUND},
      {"max_dimers", StatKind::MAX_DIMERS},
      {"hill_producing_upsteps", StatKind::HILL_PRODUCING_UPSTEPS},
      {"strict_indicator", StatKind::STRICT_INDICATOR},
      {"x1_plus_x2", StatKind::X1_PLUS_X2},
  };
  return reg;
}

const char* stat_name(StatKind kind) {
  for (const auto& [name, k] : stat_registry()) {
    if (k == kind) {
      return name.c_str();
    }
  }
  return "unknown";
}

StatKind stat_from_name(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (const auto& [reg_name, kind] : stat_registry()) {
    if (reg_name == normalized) {
      return kind;
    }
  }
  fail(ErrorCode::UnknownName,
       "unknown statistic '" + std::string(name) + "'");
}

int matching_downstep(const Path& p, int u) {
  if (u < 0 || u >= p.steps() || !p.is_up(u)) {
    fail(ErrorCode::DomainError,
         "index " + std::to_string(u) + " is not an upstep");
  }
  int depth = 0;
  for (int j = u; j < p.steps(); ++j) {
    depth += p.is_up(j) ? 1 : -1;
    if (depth == 0) {
      return j;
    }
  }
  fail(ErrorCode::DomainError,
       "no matching downstep for the upstep at index " + std::to_string(u));
}

int associated_downstep(const Path& p, int u) {
  if (u < 0 || u >= p.steps() || !p.is_up(u)) {
    fail(ErrorCode::DomainError,
         "index " + std::to_string(u) + " is not an upstep");
  }
  int depth = 0;
  int best = -1;
  for (int j = u; j < p.steps(); ++j) {
    depth += p.is_up(j) ? 1 : -1;
    if (depth < 0) {
      break;
    }
    if (depth == 0) {
      best = j;
    }
  }
  if (best < 0) {
    fail(ErrorCode::DomainError,
         "no associated downstep for the upstep at index " + std::to_string(u));
  }
  return best;
}

int matching_vertex(const Path& p, int v) {
  if (v < 0 || v > p.steps()) {
    fail(ErrorCode::DomainError,
         "vertex " + std::to_string(v) + " out of range");
  }
  int h = p.height(v);
  if (h > 0) {
    for (int w = v + 1; w <= p.steps(); ++w) {
      if (p.height(w) == h) {
        return w;
      }
    }
  } else if (h < 0) {
    for (int w = v - 1; w >= 0; --w) {
      if (p.height(w) == h) {
        return w;
      }
    }
  }
  fail(ErrorCode::DomainError,
       "no matching vertex for vertex " + std::to_string(v));
}

Path elevate(const Path& p) {
  std::uint64_t bits = (p.bits() << 1) | 1u;
  return Path::from_bits(bits, p.steps() + 2);  // the final D bit is 0
}

namespace {

Path subpath(const Path& p, int start, int len) {
  return Path::from_bits(p.bits() >> start, len);
}

}  // namespace

std::vector<Path> components(const Path& p) {
  if (!p.is_balanced()) {
    fail(ErrorCode::DomainError, "components require a balanced path");
  }
  std::vector<Path> out;
  int start = 0;
  for (int v = 1; v <= p.steps(); ++v) {
    if (p.height(v) == 0) {
      out.push_back(subpath(p, start, v - start));
      start = v;
    }
  }
  return out;
}

std::pair<Path, Path> first_component(const Path& p) {
  if (p.empty()) {
    fail(ErrorCode::DomainError, "first component of the empty path");
  }
  if (!p.is_balanced()) {
    fail(ErrorCode::DomainError, "components require a balanced path");
  }
  int v = 1;
  while (p.height(v) != 0) {
    ++v;
  }
  return {subpath(p, 0, v), subpath(p, v, p.steps() - v)};
}

Path interior(const Path& p) {
  if (p.empty()) {
    fail(ErrorCode::DomainError, "interior of the empty path");
  }
  auto [c, rest] = first_component(p);
  (void)rest;
  return subpath(c, 1, c.steps() - 2);
}

std::vector<int> ia_vertices(const Path& p) {
  std::vector<int> out;
  for (int v = 1; v < p.steps(); ++v) {
    if (p.is_up(v - 1) && p.is_up(v)) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<int> df_vertices(const Path& p) {
  std::vector<int> out;
  for (int v = 0; v <= p.steps(); ++v) {
    bool left_ok = (v == 0) || p.is_up(v - 1);
    bool right_ok = (v == p.steps()) || p.is_up(v);
    if (left_ok && right_ok) {
      out.push_back(v);
    }
  }
  return out;
}

MarkedPath::MarkedPath(Path path, std::vector<int> marks, MarkKind kind)
    : path_(std::move(path)), marks_(std::move(marks)), kind_(kind) {
  std::sort(marks_.begin(), marks_.end());
  for (std::size_t i = 0; i + 1 < marks_.size(); ++i) {
    if (marks_[i] == marks_[i + 1]) {
      fail(ErrorCode::DomainError,
           "duplicate mark at vertex " + std::to_string(marks_[i]));
    }
  }
  std::vector<int> allowed =
      kind_ == MarkKind::IA ? ia_vertices(path_) : df_vertices(path_);
  for (int v : marks_) {
    if (!std::binary_search(allowed.begin(), allowed.end(), v)) {
      fail(ErrorCode::DomainError,
           std::string("vertex ") + std::to_string(v) + " is not " +
               (kind_ == MarkKind::IA ? "an IA" : "a DF") + " vertex");
    }
  }
}

bool df_parity_ok(const Path& p, const std::vector<int>& marks) {
  auto in_marks = [&marks](int v) {
    return std::find(marks.begin(), marks.end(), v) != marks.end();
  };
  for (const auto& inc : inclines(p)) {
    if (!inc.is_ascent) {
      continue;
    }
    int cnt = 0;
    for (int v = inc.start_step + 1; v < inc.start_step + inc.length; ++v) {
      if (in_marks(v)) {
        ++cnt;
      }
    }
    if (inc.start_step == 0 && in_marks(0)) {
      ++cnt;
    }
    if (inc.start_step + inc.length == p.steps() && in_marks(p.steps())) {
      ++cnt;
    }
    if ((inc.length - cnt) % 2 != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace catcomb
