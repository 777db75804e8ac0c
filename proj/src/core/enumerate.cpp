#include "core/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <variant>

#include "core/errors.hpp"

namespace catcomb {

namespace {

constexpr int kMaxSemilength = Path::kMaxSteps / 2;

void require_representable(long long n, const char* what) {
  if (n > kMaxSemilength) {
    fail(ErrorCode::BoundsError,
         std::string(what) + " size " + std::to_string(n) +
             " exceeds the representable limit of " +
             std::to_string(kMaxSemilength));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Family registry
// ---------------------------------------------------------------------------

const std::vector<std::pair<std::string, Family>>& family_registry() {
  static const std::vector<std::pair<std::string, Family>> table = {
      {"dyck", Family::Dyck},
      {"balanced", Family::Balanced},
      {"inverted-dyck", Family::InvertedDyck},
      {"schroder", Family::Schroder},
      {"trees", Family::Trees},
      {"marked-ia", Family::MarkedIA},
      {"marked-df", Family::MarkedDF},
      {"marked-df-parity", Family::MarkedDFParity},
      {"levine", Family::Levine},
      {"gv-long-interior", Family::GvLongInterior},
      {"gv-x1-plus-x2", Family::GvX1X2},
      {"finelike", Family::Finelike},
  };
  return table;
}

namespace {

int family_arity(Family f) {
  switch (f) {
    case Family::Dyck:
    case Family::Balanced:
    case Family::InvertedDyck:
    case Family::Schroder:
    case Family::Trees:
      return 1;
    case Family::Finelike:
      return 3;
    default:
      return 2;
  }
}

std::string normalized_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    if (c == '_') c = '-';
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

FamilySpec make_family_spec(std::string_view name,
                            const std::vector<long long>& params) {
  const std::string key = normalized_name(name);
  for (const auto& [reg_name, fam] : family_registry()) {
    if (reg_name != key) continue;
    const int arity = family_arity(fam);
    if (static_cast<int>(params.size()) != arity) {
      fail(ErrorCode::DomainError,
           "family '" + reg_name + "' takes " + std::to_string(arity) +
               " parameter(s), got " + std::to_string(params.size()));
    }
    for (long long p : params) {
      if (p < 0) {
        fail(ErrorCode::DomainError,
             "family parameters must be nonnegative, got " +
                 std::to_string(p));
      }
    }
    return FamilySpec{fam, params};
  }
  fail(ErrorCode::UnknownName, "unknown family '" + std::string(name) + "'");
}

std::string family_spec_to_string(const FamilySpec& spec) {
  std::string name = "?";
  for (const auto& [reg_name, fam] : family_registry()) {
    if (fam == spec.family) {
      name = reg_name;
      break;
    }
  }
  std::string out = name + "(";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(spec.params[i]);
  }
  out += ")";
  return out;
}

// ---------------------------------------------------------------------------
// WordStream
// ---------------------------------------------------------------------------

WordStream::WordStream(int n, Mode mode) : n_(n), mode_(mode), len_(2 * n) {
  require_representable(n, "path family");
  if (n < 0) fail(ErrorCode::DomainError, "negative semilength");
}

void WordStream::reset() {
  started_ = false;
  done_ = false;
  bits_ = 0;
}

bool WordStream::can_place(int pos, bool up) const {
  const int h = h_[pos];
  if (up) {
    if (ucnt_[pos] + 1 > n_) return false;
    if (mode_ == Mode::Inverted && h + 1 > 0) return false;
    return true;
  }
  if ((pos - ucnt_[pos]) + 1 > n_) return false;
  if (mode_ == Mode::Dyck && h - 1 < 0) return false;
  return true;
}

void WordStream::place(int pos, bool up) {
  if (up) {
    bits_ |= (std::uint64_t{1} << pos);
  } else {
    bits_ &= ~(std::uint64_t{1} << pos);
  }
  h_[pos + 1] = static_cast<std::int8_t>(h_[pos] + (up ? 1 : -1));
  ucnt_[pos + 1] = static_cast<std::int8_t>(ucnt_[pos] + (up ? 1 : 0));
}

void WordStream::complete_from(int pos) {
  for (int i = pos; i < len_; ++i) {
    if (can_place(i, true)) {
      place(i, true);
    } else if (can_place(i, false)) {
      place(i, false);
    } else {
      fail(ErrorCode::InternalError, "word completion from feasible prefix");
    }
  }
}

bool WordStream::first_word() {
  h_[0] = 0;
  ucnt_[0] = 0;
  complete_from(0);
  return true;
}

bool WordStream::successor() {
  for (int pos = len_ - 1; pos >= 0; --pos) {
    const bool up = (bits_ >> pos) & 1u;
    if (up && can_place(pos, false)) {
      place(pos, false);
      complete_from(pos + 1);
      return true;
    }
  }
  return false;
}

std::optional<Path> WordStream::next() {
  if (done_) return std::nullopt;
  bool ok;
  if (!started_) {
    started_ = true;
    ok = first_word();
  } else {
    ok = successor();
  }
  if (!ok) {
    done_ = true;
    return std::nullopt;
  }
  return Path::from_bits(bits_, len_);
}

// ---------------------------------------------------------------------------
// SchroderStream
// ---------------------------------------------------------------------------

SchroderStream::SchroderStream(int n) : n_(n) {
  require_representable(n, "Schroder family");
  if (n < 0) fail(ErrorCode::DomainError, "negative size");
}

void SchroderStream::reset() {
  started_ = false;
  done_ = false;
  len_ = 0;
}

namespace {
bool schroder_state_ok(int level, int remaining) {
  return level >= 0 && remaining >= level && ((remaining - level) % 2 == 0);
}
}  // namespace

bool SchroderStream::can_place(int pos, char c) const {
  const int l = lvl_[pos];
  const int r = rem_[pos];
  switch (c) {
    case 'F':
      return r >= 2 && schroder_state_ok(l, r - 2);
    case 'U':
      return schroder_state_ok(l + 1, r - 1);
    case 'D':
      return l >= 1 && schroder_state_ok(l - 1, r - 1);
    default:
      return false;
  }
}

void SchroderStream::place(int pos, char c) {
  buf_[pos] = c;
  int l = lvl_[pos];
  int r = rem_[pos];
  if (c == 'F') {
    r -= 2;
  } else if (c == 'U') {
    ++l;
    --r;
  } else {
    --l;
    --r;
  }
  lvl_[pos + 1] = static_cast<std::int8_t>(l);
  rem_[pos + 1] = static_cast<std::int8_t>(r);
}

void SchroderStream::complete_from(int pos) {
  static constexpr char kLetters[] = {'F', 'U', 'D'};
  int i = pos;
  while (rem_[i] > 0) {
    bool placed = false;
    for (char c : kLetters) {
      if (can_place(i, c)) {
        place(i, c);
        placed = true;
        break;
      }
    }
    if (!placed) {
      fail(ErrorCode::InternalError, "Schroder completion from feasible prefix");
    }
    ++i;
  }
  len_ = i;
}

bool SchroderStream::successor() {
  static constexpr char kLetters[] = {'F', 'U', 'D'};
  for (int pos = len_ - 1; pos >= 0; --pos) {
    const char cur = buf_[pos];
    int rank = cur == 'F' ? 0 : cur == 'U' ? 1 : 2;
    for (int r2 = rank + 1; r2 < 3; ++r2) {
      const char c = kLetters[r2];
      if (can_place(pos, c)) {
        place(pos, c);
        complete_from(pos + 1);
        return true;
      }
    }
  }
  return false;
}

std::optional<SchroderPath> SchroderStream::next() {
  if (done_) return std::nullopt;
  bool ok;
  if (!started_) {
    started_ = true;
    lvl_[0] = 0;
    rem_[0] = static_cast<std::int8_t>(2 * n_);
    complete_from(0);
    ok = true;
  } else {
    ok = successor();
  }
  if (!ok) {
    done_ = true;
    return std::nullopt;
  }
  return SchroderPath::parse(std::string(buf_.data(), len_));
}

// ---------------------------------------------------------------------------
// CombinationStream
// ---------------------------------------------------------------------------

CombinationStream::CombinationStream(int m, int k) : m_(m), k_(k) {
  if (k_ < 0 || k_ > m_) done_ = true;
}

void CombinationStream::reset() {
  started_ = false;
  done_ = (k_ < 0 || k_ > m_);
}

std::optional<const std::vector<int>*> CombinationStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    idx_.resize(k_);
    for (int i = 0; i < k_; ++i) idx_[i] = i;
    return &idx_;
  }
  int i = k_ - 1;
  while (i >= 0 && idx_[i] == m_ - k_ + i) --i;
  if (i < 0) {
    done_ = true;
    return std::nullopt;
  }
  ++idx_[i];
  for (int j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
  return &idx_;
}

// ---------------------------------------------------------------------------
// NEWordStream
// ---------------------------------------------------------------------------

NEWordStream::NEWordStream(int n_e, int n_n) : ne_(n_e), nn_(n_n) {
  if (ne_ < 0 || nn_ < 0) done_ = true;
}

void NEWordStream::reset() {
  started_ = false;
  done_ = (ne_ < 0 || nn_ < 0);
}

std::optional<const std::string*> NEWordStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    buf_.assign(static_cast<std::size_t>(ne_), 'E');
    buf_.append(static_cast<std::size_t>(nn_), 'N');
    return &buf_;
  }
  if (!std::next_permutation(buf_.begin(), buf_.end())) {
    done_ = true;
    return std::nullopt;
  }
  return &buf_;
}

// ---------------------------------------------------------------------------
// MarkedFamilyStream
// ---------------------------------------------------------------------------

namespace {

WordStream::Mode marked_base_mode(Family f) {
  return (f == Family::MarkedIA || f == Family::MarkedDF)
             ? WordStream::Mode::Dyck
             : WordStream::Mode::Balanced;
}

MarkKind marked_kind(Family f) {
  return (f == Family::MarkedDF || f == Family::MarkedDFParity) ? MarkKind::DF
                                                                : MarkKind::IA;
}

}  // namespace

MarkedFamilyStream::MarkedFamilyStream(Family family, long long n, long long k,
                                       long long j)
    : family_(family),
      n_(static_cast<int>(n)),
      k_(static_cast<int>(k)),
      j_(static_cast<int>(j)),
      words_(static_cast<int>(n), marked_base_mode(family)) {}

void MarkedFamilyStream::reset() {
  words_.reset();
  current_.reset();
  combos_.reset();
}

bool MarkedFamilyStream::load_next_path() {
  const MarkKind kind = marked_kind(family_);
  int marks_count = k_;
  if (family_ == Family::MarkedDFParity) marks_count = n_ - 2 * k_;
  if (family_ == Family::Finelike) marks_count = j_;
  for (;;) {
    current_ = words_.next();
    if (!current_) return false;
    const Path& p = *current_;
    if (family_ == Family::Finelike) {
      // All ascents long (length >= 2) and exactly k_ of them; markable
      // vertices skip each ascent's first interior vertex.
      int ascents = 0;
      bool ok = true;
      allowed_.clear();
      for (const Incline& inc : inclines(p)) {
        if (!inc.is_ascent) continue;
        ++ascents;
        if (inc.length < 2) {
          ok = false;
          break;
        }
        for (int v = inc.start_step + 2; v <= inc.start_step + inc.length - 1;
             ++v) {
          allowed_.push_back(v);
        }
      }
      if (!ok || ascents != k_) continue;
    } else if (kind == MarkKind::IA) {
      allowed_ = ia_vertices(p);
    } else {
      allowed_ = df_vertices(p);
    }
    combos_ = std::make_unique<CombinationStream>(
        static_cast<int>(allowed_.size()), marks_count);
    return true;
  }
}

bool MarkedFamilyStream::combo_admissible(const std::vector<int>& verts) const {
  if (family_ != Family::MarkedDFParity) return true;
  return df_parity_ok(*current_, verts);
}

std::optional<MarkedPath> MarkedFamilyStream::next() {
  if (family_ == Family::MarkedDFParity && n_ - 2 * k_ < 0) return std::nullopt;
  for (;;) {
    if (!current_) {
      if (!load_next_path()) return std::nullopt;
    }
    auto idx = combos_->next();
    if (!idx) {
      current_.reset();
      continue;
    }
    scratch_.clear();
    for (int i : **idx) scratch_.push_back(allowed_[i]);
    if (!combo_admissible(scratch_)) continue;
    return MarkedPath(*current_, scratch_, marked_kind(family_));
  }
}

// ---------------------------------------------------------------------------
// PairStream
// ---------------------------------------------------------------------------

PairStream::PairStream(Family family, long long a, long long b)
    : family_(family),
      role_(family == Family::Levine          ? PairRole::Levine
            : family == Family::GvLongInterior ? PairRole::GvLongInterior
                                                : PairRole::GvX1X2),
      b_e_(0),
      b_n_(0),
      t_e_(0),
      t_n_(0),
      bwords_(0, 0),
      twords_(0, 0) {
  const auto n = a;
  const auto k = b;
  switch (family) {
    case Family::Levine:
      // (a, b) = (r, s): both words have r-1 E's and s-1 N's.
      b_e_ = static_cast<int>(a) - 1;
      b_n_ = static_cast<int>(b) - 1;
      t_e_ = b_e_;
      t_n_ = b_n_;
      break;
    case Family::GvLongInterior:
      b_e_ = static_cast<int>(k) + 1;
      b_n_ = static_cast<int>(n) - 1 - static_cast<int>(k);
      t_e_ = static_cast<int>(k);
      t_n_ = static_cast<int>(n) - 2 - static_cast<int>(k);
      break;
    case Family::GvX1X2:
      b_e_ = static_cast<int>(k);
      b_n_ = static_cast<int>(n) - 1 - static_cast<int>(k);
      t_e_ = b_e_;
      t_n_ = b_n_;
      break;
    default:
      fail(ErrorCode::InternalError, "pair stream over non-pair family");
  }
  empty_family_ = (b_e_ < 0 || b_n_ < 0 || t_e_ < 0 || t_n_ < 0);
  bwords_ = NEWordStream(b_e_, b_n_);
  twords_ = NEWordStream(t_e_, t_n_);
}

void PairStream::reset() {
  bwords_.reset();
  twords_.reset();
  current_b_.reset();
}

bool PairStream::load_next_bottom() {
  auto b = bwords_.next();
  if (!b) return false;
  current_b_ = **b;
  auto pts = grid_points(*current_b_, pair_b_start(role_));
  std::sort(pts.begin(), pts.end(), [](const GridPoint& p, const GridPoint& q) {
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
  b_points_ = std::move(pts);
  twords_.reset();
  return true;
}

std::optional<GridPathPair> PairStream::next() {
  if (empty_family_) return std::nullopt;
  for (;;) {
    if (!current_b_) {
      if (!load_next_bottom()) return std::nullopt;
    }
    auto t = twords_.next();
    if (!t) {
      current_b_.reset();
      continue;
    }
    bool disjoint = true;
    for (const GridPoint& pt : grid_points(**t, pair_t_start(role_))) {
      auto it = std::lower_bound(
          b_points_.begin(), b_points_.end(), pt,
          [](const GridPoint& p, const GridPoint& q) {
            return p.x != q.x ? p.x < q.x : p.y < q.y;
          });
      if (it != b_points_.end() && *it == pt) {
        disjoint = false;
        break;
      }
    }
    if (disjoint) return GridPathPair(*current_b_, **t, role_);
  }
}

// ---------------------------------------------------------------------------
// ObjectStream
// ---------------------------------------------------------------------------

std::string marks_to_text(const std::vector<int>& marks) {
  std::string out;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(marks[i]);
  }
  return out;
}

std::vector<int> marks_from_text(std::string_view text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    if (token.empty()) {
      fail(ErrorCode::ParseError, "empty mark entry in '" + std::string(text) +
                                      "'");
    }
    char* end = nullptr;
    const long v = std::strtol(token.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || v < 0) {
      fail(ErrorCode::ParseError,
           "invalid mark '" + token + "' (expected a nonnegative integer)");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

namespace {

std::string pair_to_line(const GridPathPair& pair) {
  const std::string b = pair.b().empty() ? "." : pair.b();
  const std::string t = pair.t().empty() ? "." : pair.t();
  return b + " " + t;
}

std::string marked_to_line(const MarkedPath& mp) {
  std::string out = mp.path().word();
  if (!mp.marks().empty()) {
    out += " ";
    out += marks_to_text(mp.marks());
  }
  return out;
}

}  // namespace

struct ObjectStream::Impl {
  std::variant<WordStream, SchroderStream, MarkedFamilyStream, PairStream>
      stream;

  template <typename T>
  explicit Impl(T&& s) : stream(std::forward<T>(s)) {}
};

ObjectStream::ObjectStream(FamilySpec spec) : spec_(std::move(spec)) {
  const auto& p = spec_.params;
  switch (spec_.family) {
    case Family::Dyck:
    case Family::Trees:
      impl_ = std::make_shared<Impl>(
          WordStream(static_cast<int>(p[0]), WordStream::Mode::Dyck));
      break;
    case Family::Balanced:
      impl_ = std::make_shared<Impl>(
          WordStream(static_cast<int>(p[0]), WordStream::Mode::Balanced));
      break;
    case Family::InvertedDyck:
      impl_ = std::make_shared<Impl>(
          WordStream(static_cast<int>(p[0]), WordStream::Mode::Inverted));
      break;
    case Family::Schroder:
      impl_ = std::make_shared<Impl>(SchroderStream(static_cast<int>(p[0])));
      break;
    case Family::MarkedIA:
    case Family::MarkedDF:
    case Family::MarkedDFParity:
      impl_ = std::make_shared<Impl>(
          MarkedFamilyStream(spec_.family, p[0], p[1], 0));
      break;
    case Family::Finelike:
      impl_ = std::make_shared<Impl>(
          MarkedFamilyStream(spec_.family, p[0], p[2], p[1]));
      break;
    case Family::Levine:
    case Family::GvLongInterior:
    case Family::GvX1X2:
      impl_ = std::make_shared<Impl>(PairStream(spec_.family, p[0], p[1]));
      break;
  }
}

std::optional<std::string> ObjectStream::next_line() {
  std::optional<std::string> out;
  const bool is_tree_family = (spec_.family == Family::Trees);
  std::visit(
      [&](auto& s) {
        using S = std::decay_t<decltype(s)>;
        auto item = s.next();
        if (!item) return;
        if constexpr (std::is_same_v<S, WordStream>) {
          if (is_tree_family) {
            out = tree_to_parens(tree_from_dyck(*item));
          } else {
            out = item->word();
          }
        } else if constexpr (std::is_same_v<S, SchroderStream>) {
          out = item->word();
        } else if constexpr (std::is_same_v<S, MarkedFamilyStream>) {
          out = marked_to_line(*item);
        } else {
          out = pair_to_line(*item);
        }
      },
      impl_->stream);
  return out;
}

bool ObjectStream::advance() {
  bool moved = false;
  std::visit([&](auto& s) { moved = s.next().has_value(); }, impl_->stream);
  return moved;
}

void ObjectStream::reset() {
  std::visit([](auto& s) { s.reset(); }, impl_->stream);
}

long long family_count(const FamilySpec& spec) {
  ObjectStream stream(spec);
  long long count = 0;
  while (stream.advance()) ++count;
  return count;
}

}  // namespace catcomb
