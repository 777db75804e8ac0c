#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"

namespace catcomb {

// A lattice walk of up (U) and down (D) unit steps, stored bit-packed
// (bit i set = step i is U) with a precomputed prefix-height table.
// Vertices are numbered 0..steps(); step i runs from vertex i to vertex i+1.
// Values are immutable; equality is structural.
class Path {
 public:
  static constexpr int kMaxSteps = 60;

  Path() = default;  // the empty path

  // Any U/D walk. Rejects non-UD characters with ParseError (names the index).
  static Path parse(std::string_view word);
  // Refinements; each rejects with DomainError naming the first step index at
  // which the property becomes impossible to satisfy.
  static Path parse_balanced(std::string_view word);
  static Path parse_dyck(std::string_view word);
  static Path parse_inverted_dyck(std::string_view word);
  // From packed bits (bit i = step i, 1 = U); callers guarantee size.
  static Path from_bits(std::uint64_t bits, int size);

  int steps() const { return size_; }
  int semilength() const { return size_ / 2; }
  bool empty() const { return size_ == 0; }
  bool is_up(int i) const { return (bits_ >> i) & 1u; }
  char step(int i) const { return is_up(i) ? 'U' : 'D'; }
  int height(int v) const { return height_[v]; }
  int min_height() const { return min_h_; }
  int max_height() const { return max_h_; }
  int final_height() const { return height_[size_]; }
  bool is_balanced() const { return final_height() == 0; }
  bool is_dyck() const { return is_balanced() && min_h_ >= 0; }
  bool is_inverted_dyck() const { return is_balanced() && max_h_ <= 0; }
  std::uint64_t bits() const { return bits_; }
  std::string word() const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.size_ == b.size_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
  // Lexicographic with U < D (shorter word first on ties); total order.
  friend bool operator<(const Path& a, const Path& b);

 private:
  Path(std::uint64_t bits, int size);

  std::uint64_t bits_ = 0;
  std::int16_t size_ = 0;
  std::int8_t min_h_ = 0;
  std::int8_t max_h_ = 0;
  std::array<std::int8_t, kMaxSteps + 1> height_{};
};

// Maximal run of equal steps.
struct Incline {
  bool is_ascent = false;  // true for a U-run, false for a D-run
  int start_step = 0;
  int length = 0;
  bool is_initial = false;   // starts the path
  bool is_terminal = false;  // ends the path
  // Neither the initial ascent nor the terminal descent.
  bool is_interior = false;
};

std::vector<Incline> inclines(const Path& p);

// Path statistics. PEAKS/UD and VALLEYS/DU are deliberate synonyms.
enum class StatKind {
  UU,
  UD,
  DU,
  DD,
  PEAKS,
  VALLEYS,
  HILLS,
  DXD,
  LONG_INTERIOR_INCLINES,
  LONG_NONTERMINAL_INCLINES,
  LONG_NONINITIAL_ASCENTS,
  LONG_ASCENTS,
  SHORT_ASCENTS,
  ODD_ASCENTS,
  TERMINAL_DESCENT_LEN,
  FIRST_ASCENT_LEN,
  RETURNS,
  X_UPSTEPS_ABOVE_GROUND,
  MAX_DIMERS,
  HILL_PRODUCING_UPSTEPS,
  STRICT_INDICATOR,
  X1_PLUS_X2,
};

long long statistic(const Path& p, StatKind kind);

// Registry of snake_case statistic names (stable order for listings).
const std::vector<std::pair<std::string, StatKind>>& stat_registry();
const char* stat_name(StatKind kind);
StatKind stat_from_name(std::string_view name);  // UnknownName on miss

// Matching downstep of the upstep at index u: the downstep ending the
// shortest balanced subpath starting at u. DomainError if none / not an
// upstep.
int matching_downstep(const Path& p, int u);
// Associated downstep: ends the longest such subpath before the walk dips
// below the upstep's starting level.
int associated_downstep(const Path& p, int u);
// Matching vertex of vertex v (nonzero height): nearest vertex at the same
// height eastward when above ground, westward when below. DomainError when
// none exists or v is at ground level.
int matching_vertex(const Path& p, int v);

// Elevation U p D.
Path elevate(const Path& p);
// Maximal factors delimited by returns to ground (requires a balanced walk).
std::vector<Path> components(const Path& p);
// First component and the remainder.
std::pair<Path, Path> first_component(const Path& p);
// Interior of the first component (outer U, D removed). DomainError on the
// empty path.
Path interior(const Path& p);

// Vertices strictly between two upsteps.
std::vector<int> ia_vertices(const Path& p);
// Vertices incident to no downstep (path endpoints count when the touching
// step is an upstep or absent).
std::vector<int> df_vertices(const Path& p);

enum class MarkKind { IA, DF };

// A path with strictly increasing marked vertices, each of the stated kind.
class MarkedPath {
 public:
  MarkedPath(Path path, std::vector<int> marks, MarkKind kind);

  const Path& path() const { return path_; }
  const std::vector<int>& marks() const { return marks_; }
  MarkKind kind() const { return kind_; }

  friend bool operator==(const MarkedPath& a, const MarkedPath& b) {
    return a.path_ == b.path_ && a.marks_ == b.marks_ && a.kind_ == b.kind_;
  }

 private:
  Path path_;
  std::vector<int> marks_;
  MarkKind kind_;
};

// Per-ascent parity rule for DF marks: every ascent's length minus the number
// of marks in its group must be even (the endpoints 0 and 2n belong to the
// ascent they touch).
bool df_parity_ok(const Path& p, const std::vector<int>& marks);

}  // namespace catcomb
