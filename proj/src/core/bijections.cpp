#include "core/bijections.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "core/errors.hpp"

namespace catcomb {

namespace {

// --- string-level helpers (words validated by the typed boundary) -----------

std::vector<int> word_heights(const std::string& p) {
  std::vector<int> h(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    h[i + 1] = h[i] + (p[i] == 'U' ? 1 : -1);
  }
  return h;
}

struct Run {
  char c;
  int start;
  int length;
};

std::vector<Run> word_runs(const std::string& p) {
  std::vector<Run> out;
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    out.push_back({p[i], static_cast<int>(i), static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

int word_terminal_descent(const std::string& p) {
  int cnt = 0;
  for (auto it = p.rbegin(); it != p.rend() && *it == 'D'; ++it) ++cnt;
  return cnt;
}

int word_first_ascent(const std::string& p) {
  int cnt = 0;
  for (char c : p) {
    if (c != 'U') break;
    ++cnt;
  }
  return cnt;
}

std::vector<std::string> word_components(const std::string& p) {
  std::vector<std::string> out;
  int h = 0;
  std::size_t start = 0;
  for (std::size_t v = 0; v < p.size(); ++v) {
    h += (p[v] == 'U') ? 1 : -1;
    if (h == 0) {
      out.push_back(p.substr(start, v + 1 - start));
      start = v + 1;
    }
  }
  return out;
}

std::pair<std::string, std::string> word_first_component(const std::string& p) {
  if (p.empty()) {
    fail(ErrorCode::DomainError, "first component of an empty path");
  }
  int h = 0;
  for (std::size_t v = 0; v < p.size(); ++v) {
    h += (p[v] == 'U') ? 1 : -1;
    if (h == 0) {
      return {p.substr(0, v + 1), p.substr(v + 1)};
    }
  }
  fail(ErrorCode::DomainError, "path has no return to ground");
}

std::string word_interior(const std::string& c) {
  return c.substr(1, c.size() - 2);
}

bool word_has_hill(const std::string& p) {
  int h = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (h == 0 && p[i] == 'U' && p[i + 1] == 'D') return true;
    h += (p[i] == 'U') ? 1 : -1;
  }
  return false;
}

int word_matching_downstep(const std::string& p, int u) {
  int depth = 0;
  for (std::size_t j = u; j < p.size(); ++j) {
    depth += (p[j] == 'U') ? 1 : -1;
    if (depth == 0) return static_cast<int>(j);
  }
  fail(ErrorCode::DomainError, "no matching downstep");
}

// --- generic recursion-elimination rewriter ----------------------------------

struct Token {
  std::string text;
  bool recurse = false;
};

std::string render_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (t.text.empty()) continue;
    if (!out.empty()) out += " ";
    if (t.recurse) {
      out += "[" + t.text + "]";
    } else {
      out += t.text;
    }
  }
  return out;
}

std::string rewrite_word(
    const std::string& input,
    const std::function<std::vector<Token>(const std::string&)>& expand,
    TraceSink trace) {
  std::vector<Token> stack;
  stack.push_back({input, true});
  std::string out;
  while (!stack.empty()) {
    Token tok = std::move(stack.back());
    stack.pop_back();
    if (!tok.recurse) {
      out += tok.text;
      continue;
    }
    if (tok.text.empty()) continue;
    std::vector<Token> tokens = expand(tok.text);
    if (trace) {
      trace->push_back("rewrite " + tok.text + " -> " + render_tokens(tokens));
    }
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
      stack.push_back(std::move(*it));
    }
  }
  return out;
}

}  // namespace

// --- elementary involutions ---------------------------------------------------

Path reverse_path(const Path& p, TraceSink trace) {
  std::string out;
  out.reserve(p.steps());
  const std::string w = p.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out += (*it == 'D') ? 'U' : 'D';
  }
  if (trace) trace->push_back("reverse-complement: " + w + " -> " + out);
  return Path::parse_balanced(out);
}

Path deutsch_involution(const Path& p, TraceSink trace) {
  if (!p.is_dyck()) {
    fail(ErrorCode::DomainError, "first-return swap requires a Dyck path");
  }
  auto expand = [](const std::string& w) {
    const int m = word_matching_downstep(w, 0);
    std::vector<Token> out;
    out.push_back({"U", false});
    out.push_back({w.substr(m + 1), true});
    out.push_back({"D", false});
    out.push_back({w.substr(1, m - 1), true});
    return out;
  };
  return Path::parse_dyck(rewrite_word(p.word(), expand, trace));
}

int terminal_ud_run(const Path& p) {
  const std::string w = p.word();
  int m = 0;
  std::size_t len = w.size();
  while (len >= 3 && w[len - 1] == 'D' && w[len - 2] == 'U' &&
         w[len - 3] == 'D') {
    ++m;
    len -= 2;
  }
  return m;
}

// --- valley -> DXD rewriting ---------------------------------------------------

namespace {

std::vector<Token> expand_du_to_dxd(const std::string& p) {
  std::vector<Token> out;
  auto comps = word_components(p);
  if (word_terminal_descent(p) % 2 == 0) {
    // P = U P1 D . U P2 D ... U P_{l-1} D . U P_l (U Q D) D
    const std::string x = word_interior(comps.back());
    auto xc = word_components(x);
    const std::string q = word_interior(xc.back());
    std::string p_l;
    for (std::size_t i = 0; i + 1 < xc.size(); ++i) p_l += xc[i];
    std::vector<std::string> parts;
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
      parts.push_back(word_interior(comps[i]));
    }
    parts.push_back(p_l);
    for (const std::string& pi : parts) {
      out.push_back({"U", false});
      out.push_back({pi, true});
    }
    out.push_back({"U" + std::string(parts.size() + 1, 'D'), false});
    out.push_back({q, true});
    return out;
  }
  // Odd terminal descent: peel the maximal trailing run of components whose
  // interiors have even terminal descent.
  std::size_t cut = comps.size();
  while (cut > 0 &&
         word_terminal_descent(word_interior(comps[cut - 1])) % 2 == 0) {
    --cut;
  }
  std::string p0;
  for (std::size_t i = 0; i < cut; ++i) p0 += comps[i];
  out.push_back({p0, true});
  for (std::size_t i = cut; i < comps.size(); ++i) {
    out.push_back({"UD", false});
    out.push_back({word_interior(comps[i]), true});
  }
  return out;
}

std::vector<Token> expand_dxd_to_du(const std::string& p) {
  std::vector<Token> out;
  if (!word_has_hill(p)) {
    auto [c, q] = word_first_component(p);
    const int ell = word_terminal_descent(c) - 1;
    const std::string body = c.substr(0, c.size() - (ell + 1));
    const auto h = word_heights(body);
    std::vector<std::string> segs;
    int pos = static_cast<int>(body.size()) - 1;
    for (int lvl = ell; lvl >= 1; --lvl) {
      int j = -1;
      for (int t = pos - 1; t >= 0; --t) {
        if (body[t] != 'U' || h[t] != lvl - 1) continue;
        bool stays_above = true;
        for (int idx = t + 1; idx <= pos; ++idx) {
          if (h[idx] < lvl) {
            stays_above = false;
            break;
          }
        }
        if (stays_above) {
          j = t;
          break;
        }
      }
      if (j < 0) {
        fail(ErrorCode::InternalError, "template upstep not found");
      }
      segs.push_back(body.substr(j + 1, pos - (j + 1)));
      pos = j;
    }
    std::reverse(segs.begin(), segs.end());
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
      out.push_back({"U", false});
      out.push_back({segs[i], true});
      out.push_back({"D", false});
    }
    out.push_back({"U", false});
    out.push_back({segs.back(), true});
    out.push_back({"U", false});
    out.push_back({q, true});
    out.push_back({"DD", false});
    return out;
  }
  auto parts = split_at_hills(p);
  out.push_back({parts[0], true});
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out.push_back({"U", false});
    out.push_back({parts[i], true});
    out.push_back({"D", false});
  }
  return out;
}

}  // namespace

Path du_to_dxd(const Path& p, TraceSink trace) {
  if (!p.is_dyck()) {
    fail(ErrorCode::DomainError, "valley-to-DXD map requires a Dyck path");
  }
  return Path::parse_dyck(rewrite_word(p.word(), expand_du_to_dxd, trace));
}

Path dxd_to_du(const Path& p, TraceSink trace) {
  if (!p.is_dyck()) {
    fail(ErrorCode::DomainError, "DXD-to-valley map requires a Dyck path");
  }
  return Path::parse_dyck(rewrite_word(p.word(), expand_dxd_to_du, trace));
}

// --- cut-and-paste realization ---------------------------------------------------

ExplicitColoring explicit_coloring(const Path& path) {
  const std::string p = path.word();
  const int n2 = static_cast<int>(p.size());
  ExplicitColoring col;
  std::vector<bool> is_red(n2, false);
  for (int i = 0; i + 2 < n2; ++i) {
    if (p[i] == 'D' && p[i + 1] == 'D' && p[i + 2] == 'D') {
      if (!is_red[i + 2]) {
        is_red[i + 2] = true;
        col.reds.push_back(i + 2);
      }
    }
  }
  for (int i = 0; i + 2 < n2; ++i) {
    if (p[i] == 'D' && p[i + 1] == 'U' && p[i + 2] == 'U') {
      const int m = word_matching_downstep(p, i + 1);
      if (m + 1 < n2 && p[m + 1] == 'D' && is_red[m + 1]) continue;
      col.blues.push_back(i + 1);
    }
  }
  return col;
}

Path dxd_to_du_explicit(const Path& path, const std::vector<int>* order,
                        TraceSink trace) {
  if (!path.is_dyck()) {
    fail(ErrorCode::DomainError, "cut-and-paste map requires a Dyck path");
  }
  const std::string p = path.word();
  const ExplicitColoring col = explicit_coloring(path);
  if (trace) {
    trace->push_back("red downsteps: " +
                     (col.reds.empty() ? std::string("none")
                                       : [&] {
                                           std::string s;
                                           for (std::size_t i = 0;
                                                i < col.reds.size(); ++i) {
                                             if (i) s += ",";
                                             s += std::to_string(col.reds[i]);
                                           }
                                           return s;
                                         }()));
    trace->push_back("blue upsteps: " +
                     (col.blues.empty() ? std::string("none")
                                        : [&] {
                                            std::string s;
                                            for (std::size_t i = 0;
                                                 i < col.blues.size(); ++i) {
                                              if (i) s += ",";
                                              s += std::to_string(col.blues[i]);
                                            }
                                            return s;
                                          }()));
  }

  enum class Color { None, Red, Blue };
  struct Tagged {
    char c;
    Color color;
    int tag;
  };
  std::vector<Tagged> steps;
  steps.reserve(p.size());
  for (int j = 0; j < static_cast<int>(p.size()); ++j) {
    Color color = Color::None;
    if (std::find(col.reds.begin(), col.reds.end(), j) != col.reds.end()) {
      color = Color::Red;
    } else if (std::find(col.blues.begin(), col.blues.end(), j) !=
               col.blues.end()) {
      color = Color::Blue;
    }
    steps.push_back({p[j], color, j});
  }

  std::vector<int> blue_order;
  if (order != nullptr) {
    blue_order = *order;
    if (blue_order.size() != col.blues.size()) {
      fail(ErrorCode::DomainError, "blue processing order has wrong length");
    }
  } else {
    blue_order.resize(col.blues.size());
    for (std::size_t i = 0; i < blue_order.size(); ++i) {
      blue_order[i] = static_cast<int>(i);
    }
  }

  auto find_tag = [&steps](int tag) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].tag == tag) return static_cast<int>(i);
    }
    fail(ErrorCode::InternalError, "tagged step vanished");
  };

  for (int bi : blue_order) {
    if (bi < 0 || bi >= static_cast<int>(col.blues.size())) {
      fail(ErrorCode::DomainError, "blue order index out of range");
    }
    const int u = find_tag(col.blues[bi]);
    int depth = 0;
    int m = u;
    for (int j = u; j < static_cast<int>(steps.size()); ++j) {
      depth += (steps[j].c == 'U') ? 1 : -1;
      if (depth == 0) {
        m = j;
        break;
      }
    }
    int pk = -1;
    for (int i = u - 2; i >= 0; --i) {
      if (steps[i].c == 'U' && steps[i + 1].c == 'D') {
        pk = i;
        break;
      }
    }
    if (pk < 0) {
      fail(ErrorCode::InternalError, "no peak before a blue upstep");
    }
    std::vector<Tagged> next;
    next.reserve(steps.size());
    next.insert(next.end(), steps.begin(), steps.begin() + pk + 1);
    next.insert(next.end(), steps.begin() + u, steps.begin() + m + 1);
    next.insert(next.end(), steps.begin() + pk + 1, steps.begin() + u);
    next.insert(next.end(), steps.begin() + m + 1, steps.end());
    steps = std::move(next);
    if (trace) {
      std::string w;
      for (const Tagged& st : steps) w += st.c;
      trace->push_back("after moving blue upstep " +
                       std::to_string(col.blues[bi]) + ": " + w);
    }
  }

  // Red downsteps move simultaneously: each is relocated to just before the
  // upstep whose matching downstep immediately precedes the red step.
  std::vector<std::pair<int, int>> moves;  // (red tag, destination upstep tag)
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (steps[j].color != Color::Red) continue;
    if (j == 0 || steps[j - 1].c != 'D') {
      fail(ErrorCode::InternalError, "red step without preceding downstep");
    }
    int found = -1;
    for (std::size_t u = 0; u + 1 < j && found < 0; ++u) {
      if (steps[u].c != 'U') continue;
      int depth = 0;
      for (std::size_t t = u; t < steps.size(); ++t) {
        depth += (steps[t].c == 'U') ? 1 : -1;
        if (depth == 0) {
          if (t == j - 1) found = static_cast<int>(u);
          break;
        }
      }
    }
    if (found < 0) {
      fail(ErrorCode::InternalError, "red step has no sheltering upstep");
    }
    moves.push_back({steps[j].tag, steps[found].tag});
  }
  for (const auto& [red_tag, up_tag] : moves) {
    const int from = find_tag(red_tag);
    const Tagged red = steps[from];
    steps.erase(steps.begin() + from);
    steps.insert(steps.begin() + find_tag(up_tag), red);
  }

  std::string out;
  out.reserve(steps.size());
  for (const Tagged& st : steps) out += st.c;
  if (trace) trace->push_back("after moving red downsteps: " + out);
  return Path::parse_dyck(out);
}

// --- cycle rotation -----------------------------------------------------------

RotateResult cycle_rotate(const Path& p, int index, const std::vector<int>& marks,
                          TraceSink trace) {
  if (!p.is_inverted_dyck()) {
    fail(ErrorCode::DomainError,
         "rotation starts from an inverted path (never above the ground)");
  }
  const std::string w = p.word();
  std::vector<int> ups;
  for (int j = 0; j < p.steps(); ++j) {
    if (p.is_up(j)) ups.push_back(j);
  }
  if (ups.empty()) {
    fail(ErrorCode::DomainError, "rotation requires at least one upstep");
  }
  if (index < 1 || index > static_cast<int>(ups.size())) {
    fail(ErrorCode::DomainError,
         "rotation index " + std::to_string(index) + " outside 1.." +
             std::to_string(ups.size()));
  }
  std::vector<int> order = ups;
  std::sort(order.begin(), order.end(), [&p](int a, int b) {
    const int ha = p.height(a + 1);
    const int hb = p.height(b + 1);
    if (ha != hb) return ha > hb;
    return a > b;
  });
  if (order.front() != ups.back()) {
    fail(ErrorCode::InternalError, "final upstep must be numbered first");
  }
  const int uj = order[index - 1];
  const int band_top = p.height(uj + 1);
  int d = -1;
  for (int t = uj - 1; t >= 0; --t) {
    if (!p.is_up(t) && p.height(t) == band_top) {
      d = t;
      break;
    }
  }
  if (d < 0) {
    fail(ErrorCode::DomainError,
         "no downstep directly west of the selected upstep at its band height");
  }
  const std::string pre = w.substr(0, d);
  const std::string post = w.substr(d + 1);
  if (trace) {
    trace->push_back("selected upstep " + std::to_string(index) + " at step " +
                     std::to_string(uj) + " (band top " +
                     std::to_string(band_top) + ")");
    trace->push_back("cut downstep at step " + std::to_string(d) + "; pre=" +
                     (pre.empty() ? "." : pre) + " post=" +
                     (post.empty() ? "." : post));
  }
  std::vector<int> newmarks;
  newmarks.reserve(marks.size());
  for (int v : marks) {
    newmarks.push_back(v >= d + 2 ? v - (d + 1)
                                  : v + static_cast<int>(post.size()) + 1);
  }
  std::sort(newmarks.begin(), newmarks.end());
  return {Path::parse_balanced(post + "D" + pre), std::move(newmarks)};
}

// --- DF marks <-> Schroder -------------------------------------------------------

SchroderPath df_to_schroder(const MarkedPath& m, TraceSink trace) {
  if (m.kind() != MarkKind::DF) {
    fail(ErrorCode::DomainError, "flattening requires DF marks");
  }
  if (!m.path().is_dyck()) {
    fail(ErrorCode::DomainError, "flattening requires a Dyck path");
  }
  const std::string p = m.path().word();
  if (p.empty() && !m.marks().empty()) {
    fail(ErrorCode::DomainError, "empty path cannot carry a transferable mark");
  }
  std::vector<bool> to_del(p.size(), false);
  std::vector<bool> to_f(p.size(), false);
  for (int v : m.marks()) {
    to_del[v] = true;
    const int d = word_matching_downstep(p, v);
    to_f[d] = true;
    if (trace) {
      trace->push_back("mark " + std::to_string(v) + ": delete upstep " +
                       std::to_string(v) + ", flatten downstep " +
                       std::to_string(d));
    }
  }
  std::string out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (to_del[j]) continue;
    out += to_f[j] ? 'F' : p[j];
  }
  return SchroderPath::parse(out);
}

MarkedPath schroder_to_df(const SchroderPath& s, TraceSink trace) {
  const std::string& w = s.word();
  const auto lev = s.levels();
  std::vector<int> inserts(w.size() + 1, 0);
  for (std::size_t f = 0; f < w.size(); ++f) {
    if (w[f] != 'F') continue;
    const int a = lev[f];
    int e = 0;
    for (int x = static_cast<int>(f); x > 0; --x) {
      if (lev[x] == a && w[x - 1] == 'U') {
        e = x;
        break;
      }
    }
    ++inserts[e];
    if (trace) {
      trace->push_back("flat at index " + std::to_string(f) + " (level " +
                       std::to_string(a) + ") -> insert upstep at gap " +
                       std::to_string(e));
    }
  }
  std::string out;
  std::vector<int> marks;
  for (std::size_t j = 0; j <= w.size(); ++j) {
    for (int r = 0; r < inserts[j]; ++r) {
      marks.push_back(static_cast<int>(out.size()));
      out += 'U';
    }
    if (j < w.size()) {
      out += (w[j] == 'F') ? 'D' : w[j];
    }
  }
  return MarkedPath(Path::parse_dyck(out), marks, MarkKind::DF);
}

// --- Levine pair <-> Dyck ----------------------------------------------------------

namespace {

std::vector<int> gap_vector(const std::string& w) {
  std::vector<int> out;
  int cnt = 0;
  for (char c : w) {
    if (c == 'N') {
      ++cnt;
    } else {
      out.push_back(cnt);
      cnt = 0;
    }
  }
  out.push_back(cnt);
  return out;
}

}  // namespace

Path levine_to_dyck(const std::string& b, const std::string& t,
                    TraceSink trace) {
  const std::vector<int> a = gap_vector(t);
  const std::vector<int> d = gap_vector(b);
  if (a.size() != d.size()) {
    fail(ErrorCode::DomainError,
         "pair words disagree on the number of E steps");
  }
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out += std::string(1 + a[i], 'U');
    out += std::string(1 + d[i], 'D');
  }
  if (trace) {
    std::string al, dl;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) {
        al += ",";
        dl += ",";
      }
      al += std::to_string(1 + a[i]);
      dl += std::to_string(1 + d[i]);
    }
    trace->push_back("ascent lengths: " + al);
    trace->push_back("descent lengths: " + dl);
  }
  return Path::parse_dyck(out);
}

std::pair<std::string, std::string> dyck_to_levine(const Path& p,
                                                   TraceSink trace) {
  if (!p.is_dyck() || p.empty()) {
    fail(ErrorCode::DomainError,
         "pair extraction requires a nonempty Dyck path");
  }
  std::string b, t;
  bool first_asc = true;
  bool first_dsc = true;
  for (const Run& r : word_runs(p.word())) {
    if (r.c == 'U') {
      if (!first_asc) t += 'E';
      first_asc = false;
      t.append(static_cast<std::size_t>(r.length - 1), 'N');
    } else {
      if (!first_dsc) b += 'E';
      first_dsc = false;
      b.append(static_cast<std::size_t>(r.length - 1), 'N');
    }
  }
  if (trace) {
    trace->push_back("bottom word: " + (b.empty() ? "." : b));
    trace->push_back("top word: " + (t.empty() ? "." : t));
  }
  return {b, t};
}

// --- raw pair adjustment and chains ---------------------------------------------------

namespace {

char flip_ne(char c) { return c == 'N' ? 'E' : 'N'; }

void require_gv_variant(PairRole variant) {
  if (variant != PairRole::GvLongInterior && variant != PairRole::GvX1X2) {
    fail(ErrorCode::DomainError, "adjustment applies to raw pair roles only");
  }
}

}  // namespace

GvAdjustResult gv_adjust(const std::string& b, const std::string& t,
                         PairRole variant, TraceSink trace) {
  require_gv_variant(variant);
  if (b.empty()) {
    fail(ErrorCode::DomainError, "adjustment needs a nonempty bottom word");
  }
  if (variant == PairRole::GvX1X2 && t.empty()) {
    fail(ErrorCode::DomainError,
         "this adjustment moves the top word's first step and needs it "
         "nonempty");
  }
  std::string nb = b.substr(0, b.size() - 1);
  std::string nt = t + flip_ne(b.back());
  if (trace) {
    trace->push_back(std::string("move flipped last bottom step '") + b.back() +
                     "' to the top word");
  }
  if (variant == PairRole::GvX1X2) {
    nb = std::string(1, flip_ne(t[0])) + nb;
    nt = nt.substr(1);
    if (trace) {
      trace->push_back(std::string("move flipped first top step '") + t[0] +
                       "' to the bottom word");
    }
  }
  GvAdjustResult res;
  res.cls = (!nt.empty() && nt.back() == 'E') ? 'A' : 'B';
  res.b = std::move(nb);
  res.t = std::move(nt);
  if (trace) {
    trace->push_back(std::string("class ") + res.cls + ": " +
                     (res.b.empty() ? "." : res.b) + " " +
                     (res.t.empty() ? "." : res.t));
  }
  return res;
}

std::pair<std::string, std::string> gv_unadjust(char cls, const std::string& b,
                                                const std::string& t,
                                                PairRole variant,
                                                TraceSink trace) {
  require_gv_variant(variant);
  if (cls != 'A' && cls != 'B') {
    fail(ErrorCode::DomainError, "class tag must be A or B");
  }
  if (t.empty()) {
    fail(ErrorCode::DomainError, "adjusted top word must be nonempty");
  }
  if ((cls == 'A') != (t.back() == 'E')) {
    fail(ErrorCode::DomainError,
         "class tag disagrees with the adjusted top word");
  }
  std::string rb, rt;
  if (variant == PairRole::GvLongInterior) {
    rb = b + flip_ne(t.back());
    rt = t.substr(0, t.size() - 1);
  } else {
    if (b.empty()) {
      fail(ErrorCode::DomainError, "adjusted bottom word must be nonempty");
    }
    rt = std::string(1, flip_ne(b[0])) + t.substr(0, t.size() - 1);
    rb = b.substr(1) + flip_ne(t.back());
  }
  if (trace) {
    trace->push_back("recovered pair: " + (rb.empty() ? "." : rb) + " " +
                     (rt.empty() ? "." : rt));
  }
  return {rb, rt};
}

ChainResult chain_to_dyck(const std::string& b, const std::string& t,
                          PairRole variant, TraceSink trace) {
  GvAdjustResult adj = gv_adjust(b, t, variant, trace);
  Path q = levine_to_dyck(adj.b, adj.t, nullptr);
  if (trace) trace->push_back("staircase image: " + q.word());
  Path r = reverse_path(q, nullptr);
  if (trace) trace->push_back("reversed: " + r.word());
  Path d = deutsch_involution(r, nullptr);
  if (trace) trace->push_back("first-return swap: " + d.word());
  Path f = du_to_dxd(d, nullptr);
  if (trace) trace->push_back("final image: " + f.word());
  return {adj.cls, f};
}

// --- mark transfer to odd ascents --------------------------------------------------------

Path marks_to_odd_ascents(const MarkedPath& m, TraceSink trace) {
  if (m.kind() != MarkKind::DF) {
    fail(ErrorCode::DomainError, "odd-ascent transfer requires DF marks");
  }
  const Path& path = m.path();
  const std::string p = path.word();
  std::vector<bool> removes(p.size(), false);
  std::vector<int> inserts(p.size() + 1, 0);
  for (int v : m.marks()) {
    if (path.height(v) == 0) {
      if (trace) {
        trace->push_back("mark " + std::to_string(v) +
                         ": at ground level, erased");
      }
      continue;
    }
    removes[v] = true;
    const int w = matching_vertex(path, v);
    ++inserts[w];
    if (trace) {
      trace->push_back("mark " + std::to_string(v) + ": move upstep " +
                       std::to_string(v) + " to vertex " + std::to_string(w));
    }
  }
  std::string out;
  for (std::size_t j = 0; j <= p.size(); ++j) {
    out.append(static_cast<std::size_t>(inserts[j]), 'U');
    if (j < p.size() && !removes[j]) out += p[j];
  }
  return Path::parse_balanced(out);
}

MarkedPath odd_ascents_to_marks(const Path& qp, TraceSink trace) {
  const std::string q = qp.word();
  const int n2 = static_cast<int>(q.size());

  struct Tagged {
    char c;
    int tag;
  };
  std::vector<Tagged> steps;
  steps.reserve(q.size());
  for (int j = 0; j < n2; ++j) steps.push_back({q[j], j});

  std::vector<int> above;   // tags of transferred initial steps, west to east
  std::vector<int> below;   // tags of transferred terminal steps
  std::vector<int> ground;  // -1 (vertex 0), -2 (final vertex), or step tag
  for (const Run& r : word_runs(q)) {
    if (r.c != 'U' || r.length % 2 == 0) continue;
    const int s = r.start;
    const int l = r.length;
    if (s == 0) {
      ground.push_back(-1);
      if (trace) trace->push_back("odd ascent at 0: marks the start vertex");
    } else if (s + l == n2) {
      ground.push_back(-2);
      if (trace) {
        trace->push_back("odd ascent at " + std::to_string(s) +
                         ": marks the final vertex");
      }
    } else if (qp.height(s) >= 0) {
      above.push_back(s);
      if (trace) {
        trace->push_back("odd ascent at " + std::to_string(s) +
                         ": above ground, untransfer its first step");
      }
    } else if (qp.height(s + l) <= 0) {
      below.push_back(s + l - 1);
      if (trace) {
        trace->push_back("odd ascent at " + std::to_string(s) +
                         ": below ground, untransfer its last step");
      }
    } else {
      const int g = s - qp.height(s);  // the ascent's height-0 interior vertex
      ground.push_back(g);
      if (trace) {
        trace->push_back("odd ascent at " + std::to_string(s) +
                         ": crosses ground, marks vertex tracked by step " +
                         std::to_string(g));
      }
    }
  }

  auto cur_heights = [&steps] {
    std::vector<int> hh(steps.size() + 1, 0);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      hh[i + 1] = hh[i] + (steps[i].c == 'U' ? 1 : -1);
    }
    return hh;
  };
  auto find_tag = [&steps](int tag) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].tag == tag) return static_cast<int>(i);
    }
    fail(ErrorCode::InternalError, "tagged step vanished");
  };

  std::vector<int> mark_tags;
  int next_tag = n2;
  for (int tag : above) {
    const int pos = find_tag(tag);
    const auto hh = cur_heights();
    const int a = hh[pos];
    steps.erase(steps.begin() + pos);
    int w = -1;
    for (int x = pos; x >= 1; --x) {
      if (hh[x] == a + 1 && steps[x - 1].c == 'U') {
        w = x;
        break;
      }
    }
    if (w < 0) {
      fail(ErrorCode::DomainError, "transfer recovery failed");
    }
    steps.insert(steps.begin() + w, {'U', next_tag});
    mark_tags.push_back(next_tag++);
  }
  for (auto it = below.rbegin(); it != below.rend(); ++it) {
    const int pos = find_tag(*it);
    auto hh = cur_heights();
    const int b = hh[pos + 1];
    steps.erase(steps.begin() + pos);
    hh = cur_heights();
    int w = -1;
    for (int x = pos + 1; x <= static_cast<int>(steps.size()); ++x) {
      if (hh[x] == b - 1) {
        w = x;
        break;
      }
    }
    if (w < 0) {
      fail(ErrorCode::DomainError, "transfer recovery failed");
    }
    steps.insert(steps.begin() + w, {'U', next_tag});
    mark_tags.push_back(next_tag++);
  }

  std::string out;
  out.reserve(steps.size());
  for (const Tagged& st : steps) out += st.c;
  std::vector<int> verts;
  for (int tag : mark_tags) verts.push_back(find_tag(tag));
  for (int g : ground) {
    if (g == -1) {
      verts.push_back(0);
    } else if (g == -2) {
      verts.push_back(static_cast<int>(steps.size()));
    } else {
      verts.push_back(find_tag(g));
    }
  }
  return MarkedPath(Path::parse_balanced(out), verts, MarkKind::DF);
}

// --- dimers <-> hill-producing upsteps -------------------------------------------------------

std::vector<std::string> split_at_hills(const std::string& p) {
  std::vector<std::string> parts{""};
  for (const std::string& c : word_components(p)) {
    if (c == "UD") {
      parts.push_back("");
    } else {
      parts.back() += c;
    }
  }
  return parts;
}

namespace {

std::vector<Token> expand_dimer_to_hill(const std::string& p) {
  std::vector<Token> out;
  auto comps = word_components(p);
  if (comps.size() >= 2) {
    for (const std::string& c : comps) out.push_back({c, true});
    return out;
  }
  if (p == "UD") {
    out.push_back({"UD", false});
    return out;
  }
  const std::string x = word_interior(p);
  if (word_first_ascent(p) % 2 == 0) {
    auto [c1, p2] = word_first_component(x);
    const std::string p1 = word_interior(c1);
    if (!word_has_hill(x)) {
      out.push_back({"U", false});
      out.push_back({p1, true});
      out.push_back({"UD", false});
      out.push_back({p2, true});
      out.push_back({"D", false});
      return out;
    }
    if (p1.empty()) {
      out.push_back({"UUD", false});
      out.push_back({p2, true});
      out.push_back({"D", false});
      return out;
    }
    if (!word_has_hill(p1)) {
      out.push_back({"UU", false});
      out.push_back({p1, true});
      out.push_back({"D", false});
      out.push_back({p2, true});
      out.push_back({"D", false});
      return out;
    }
    out.push_back({"U", false});
    out.push_back({x, true});
    out.push_back({"D", false});
    return out;
  }
  if (!word_has_hill(x)) {
    out.push_back({"U", false});
    out.push_back({x, true});
    out.push_back({"D", false});
    return out;
  }
  auto parts = split_at_hills(x);
  out.push_back({std::string(parts.size(), 'U'), false});
  out.push_back({parts[0], true});
  out.push_back({"D", false});
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out.push_back({parts[i], true});
    out.push_back({"D", false});
  }
  return out;
}

std::vector<Token> expand_hill_to_dimer(const std::string& q) {
  std::vector<Token> out;
  auto comps = word_components(q);
  if (comps.size() >= 2) {
    for (const std::string& c : comps) out.push_back({c, true});
    return out;
  }
  if (q == "UD") {
    out.push_back({"UD", false});
    return out;
  }
  const std::string y = word_interior(q);
  if (word_has_hill(y)) {
    auto [c1, rest] = word_first_component(y);
    const std::string y2 = word_interior(c1);
    if (y2.empty()) {
      out.push_back({"UUD", false});
      out.push_back({rest, true});
      out.push_back({"D", false});
      return out;
    }
    if (word_has_hill(y2)) {
      auto comps_y = word_components(y);
      std::size_t last = 0;
      for (std::size_t i = 0; i < comps_y.size(); ++i) {
        if (comps_y[i] == "UD") last = i;
      }
      std::string a, b;
      for (std::size_t i = 0; i < last; ++i) a += comps_y[i];
      for (std::size_t i = last + 1; i < comps_y.size(); ++i) b += comps_y[i];
      out.push_back({"UU", false});
      out.push_back({a, true});
      out.push_back({"D", false});
      out.push_back({b, true});
      out.push_back({"D", false});
      return out;
    }
    const std::string y3 = word_interior(word_first_component(y2).first);
    if (word_has_hill(y3)) {
      out.push_back({"UU", false});
      out.push_back({y2, true});
      out.push_back({"D", false});
      out.push_back({rest, true});
      out.push_back({"D", false});
      return out;
    }
    out.push_back({"U", false});
    out.push_back({y, true});
    out.push_back({"D", false});
    return out;
  }
  auto [c1, rest] = word_first_component(y);
  if (word_has_hill(word_interior(c1))) {
    out.push_back({"U", false});
    out.push_back({y, true});
    out.push_back({"D", false});
    return out;
  }
  std::vector<std::string> parts;
  std::string z = y;
  for (;;) {
    if (z.empty()) {
      fail(ErrorCode::InternalError, "peeling reached the empty word");
    }
    auto [c1z, restz] = word_first_component(z);
    const std::string iz = word_interior(c1z);
    if (word_has_hill(iz)) break;
    parts.push_back(restz);
    z = iz;
  }
  out.push_back({"U", false});
  out.push_back({z, true});
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    out.push_back({"UD", false});
    out.push_back({*it, true});
  }
  out.push_back({"D", false});
  return out;
}

}  // namespace

Path dimer_to_hill(const Path& p, TraceSink trace) {
  if (!p.is_dyck()) {
    fail(ErrorCode::DomainError, "dimer transfer requires a Dyck path");
  }
  return Path::parse_dyck(rewrite_word(p.word(), expand_dimer_to_hill, trace));
}

Path hill_to_dimer(const Path& q, TraceSink trace) {
  if (!q.is_dyck()) {
    fail(ErrorCode::DomainError, "hill transfer requires a Dyck path");
  }
  return Path::parse_dyck(rewrite_word(q.word(), expand_hill_to_dimer, trace));
}

int strict_case(const Path& path) {
  const std::string p = path.word();
  if (p.size() < 2 || statistic(path, StatKind::RETURNS) != 1 || p == "UD") {
    fail(ErrorCode::DomainError,
         "case classification applies to strict paths other than UD");
  }
  const std::string x = word_interior(p);
  if (word_first_ascent(p) % 2 == 0) {
    if (!word_has_hill(x)) return 1;
    const std::string x2 = word_interior(word_first_component(x).first);
    if (x2.empty()) return 2;
    return word_has_hill(x2) ? 4 : 3;
  }
  return word_has_hill(x) ? 6 : 5;
}

int image_case(const Path& path) {
  const std::string q = path.word();
  if (q.size() < 2 || statistic(path, StatKind::RETURNS) != 1 || q == "UD") {
    fail(ErrorCode::DomainError,
         "case classification applies to strict paths other than UD");
  }
  const std::string y = word_interior(q);
  if (word_has_hill(y)) {
    const std::string y2 = word_interior(word_first_component(y).first);
    if (y2.empty()) return 2;
    if (word_has_hill(y2)) return 1;
    const std::string y3 = word_interior(word_first_component(y2).first);
    return word_has_hill(y3) ? 3 : 4;
  }
  if (y.empty()) {
    fail(ErrorCode::DomainError, "classification undefined for this path");
  }
  const std::string y2 = word_interior(word_first_component(y).first);
  return word_has_hill(y2) ? 5 : 6;
}

// --- short-ascent mark transfer ------------------------------------------------------------

Path finelike_to_fine(const MarkedPath& m, TraceSink trace) {
  if (m.kind() != MarkKind::IA) {
    fail(ErrorCode::DomainError, "short-ascent transfer requires IA marks");
  }
  const Path& path = m.path();
  if (!path.is_dyck()) {
    fail(ErrorCode::DomainError, "short-ascent transfer requires a Dyck path");
  }
  const std::string p = path.word();
  for (const Run& r : word_runs(p)) {
    if (r.c == 'U' && r.length < 2) {
      fail(ErrorCode::DomainError,
           "input must have only long ascents (length >= 2)");
    }
  }
  std::vector<bool> removes(p.size(), false);
  std::vector<int> inserts(p.size() + 1, 0);
  for (int v : m.marks()) {
    if (v < 2 || p[v - 2] != 'U') {
      fail(ErrorCode::DomainError,
           "mark " + std::to_string(v) +
               " sits on the first interior vertex of an ascent");
    }
    removes[v - 1] = true;
    const int d = word_matching_downstep(p, v - 1);
    ++inserts[d];
    if (trace) {
      trace->push_back("mark " + std::to_string(v) + ": move upstep " +
                       std::to_string(v - 1) + " to gap " + std::to_string(d));
    }
  }
  std::string out;
  for (std::size_t j = 0; j <= p.size(); ++j) {
    out.append(static_cast<std::size_t>(inserts[j]), 'U');
    if (j < p.size() && !removes[j]) out += p[j];
  }
  return Path::parse_dyck(out);
}

MarkedPath fine_to_finelike(const Path& qp, TraceSink trace) {
  if (!qp.is_dyck()) {
    fail(ErrorCode::DomainError, "short-ascent recovery requires a Dyck path");
  }
  const std::string q = qp.word();
  std::vector<std::pair<int, int>> moves;  // (remove step, insert gap)
  for (const Run& r : word_runs(q)) {
    if (r.c != 'U' || r.length != 1) continue;
    const int s = r.start;
    if (s == 0) {
      fail(ErrorCode::DomainError,
           "short initial ascent: not in the image of the transfer");
    }
    const int g = qp.height(s);
    int x = s;
    for (int w = s; w >= 0 && qp.height(w) >= g; --w) {
      if (qp.height(w) == g) x = w;
    }
    moves.push_back({s, x});
    if (trace) {
      trace->push_back("short ascent at " + std::to_string(s) +
                       ": move its upstep back to gap " + std::to_string(x));
    }
  }
  std::vector<bool> removes(q.size(), false);
  std::vector<int> inserts(q.size() + 1, 0);
  for (const auto& [s, x] : moves) {
    removes[s] = true;
    ++inserts[x];
  }
  std::string out;
  std::vector<int> marks;
  for (std::size_t j = 0; j <= q.size(); ++j) {
    for (int r = 0; r < inserts[j]; ++r) {
      out += 'U';
      marks.push_back(static_cast<int>(out.size()));
    }
    if (j < q.size() && !removes[j]) out += q[j];
  }
  return MarkedPath(Path::parse_dyck(out), marks, MarkKind::IA);
}

}  // namespace catcomb
