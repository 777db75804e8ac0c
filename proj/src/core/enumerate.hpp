#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/grid.hpp"
#include "core/path.hpp"
#include "core/schroder.hpp"
#include "core/tree.hpp"

namespace catcomb {

// Object families the identities quantify over.
enum class Family {
  Dyck,            // dyck(n)
  Balanced,        // balanced(n)
  InvertedDyck,    // inverted-dyck(n)
  Schroder,        // schroder(n)
  Trees,           // trees(n)
  MarkedIA,        // marked-ia(n,k): Dyck paths, k IA marks
  MarkedDF,        // marked-df(n,k): Dyck paths, k DF marks
  MarkedDFParity,  // marked-df-parity(n,k): balanced paths, n-2k DF marks,
                   // per-ascent parity rule
  Levine,          // levine(r,s)
  GvLongInterior,  // gv-long-interior(n,k): raw pairs for the long-interior
                   // identity
  GvX1X2,          // gv-x1-plus-x2(n,k): raw pairs for the x1-plus-x2 identity
  Finelike,        // finelike(n,j,k): balanced, all ascents long, k ascents,
                   // j IA marks avoiding each ascent's first interior vertex
};

struct FamilySpec {
  Family family = Family::Dyck;
  std::vector<long long> params;
};

const std::vector<std::pair<std::string, Family>>& family_registry();
// Validates the name, parameter count and nonnegativity.
FamilySpec make_family_spec(std::string_view name,
                            const std::vector<long long>& params);
std::string family_spec_to_string(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Low-level streams (restartable, deterministic lexicographic order).
// ---------------------------------------------------------------------------

// Fixed-length U/D words by iterative successor with prefix-feasibility
// pruning; lexicographic with U < D.
class WordStream {
 public:
  enum class Mode { Balanced, Dyck, Inverted };

  WordStream(int n, Mode mode);
  std::optional<Path> next();
  void reset();

 private:
  bool can_place(int pos, bool up) const;
  void place(int pos, bool up);
  void complete_from(int pos);
  bool first_word();
  bool successor();

  int n_;
  Mode mode_;
  int len_;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t bits_ = 0;
  std::array<std::int8_t, Path::kMaxSteps + 1> h_{};
  std::array<std::int8_t, Path::kMaxSteps + 1> ucnt_{};
};

// Schroder words by iterative successor; lexicographic with F < U < D.
class SchroderStream {
 public:
  explicit SchroderStream(int n);
  std::optional<SchroderPath> next();
  void reset();

 private:
  bool can_place(int pos, char c) const;
  void place(int pos, char c);
  void complete_from(int pos);
  bool successor();

  int n_;
  int len_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::array<char, Path::kMaxSteps> buf_{};
  std::array<std::int8_t, Path::kMaxSteps + 1> lvl_{};
  std::array<std::int8_t, Path::kMaxSteps + 1> rem_{};
};

// k-subsets of 0..m-1 in lexicographic order (as index tuples).
class CombinationStream {
 public:
  CombinationStream(int m, int k);
  // Returns indices (ascending) or nullopt when exhausted.
  std::optional<const std::vector<int>*> next();
  void reset();

 private:
  int m_;
  int k_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> idx_;
};

// Fixed-count E/N words, lexicographic with E < N.
class NEWordStream {
 public:
  NEWordStream(int n_e, int n_n);
  std::optional<const std::string*> next();
  void reset();

 private:
  int ne_;
  int nn_;
  bool started_ = false;
  bool done_ = false;
  std::string buf_;
};

// Marked-path families: base word stream, then admissible mark tuples in
// lexicographic order (path-then-mark-tuple lex overall).
class MarkedFamilyStream {
 public:
  MarkedFamilyStream(Family family, long long n, long long k, long long j);
  std::optional<MarkedPath> next();
  void reset();

 private:
  bool load_next_path();
  bool combo_admissible(const std::vector<int>& idx) const;

  Family family_;
  int n_;
  int k_;
  int j_;
  WordStream words_;
  std::optional<Path> current_;
  std::vector<int> allowed_;
  std::unique_ptr<CombinationStream> combos_;
  std::vector<int> scratch_;
};

// Nonintersecting bottom/top pair families (Levine and both raw-GV shapes).
class PairStream {
 public:
  PairStream(Family family, long long a, long long b);
  std::optional<GridPathPair> next();
  void reset();

 private:
  bool load_next_bottom();

  Family family_;
  PairRole role_;
  int b_e_, b_n_, t_e_, t_n_;
  bool empty_family_ = false;
  NEWordStream bwords_;
  NEWordStream twords_;
  std::optional<std::string> current_b_;
  std::vector<GridPoint> b_points_;  // sorted
};

// ---------------------------------------------------------------------------
// Family-generic stream: serialized one-per-line text objects.
//
// Text forms: paths and Schroder paths as step words; trees as nested
// parentheses; marked paths as "WORD v1,v2" (marks omitted when none); pairs
// as "B T" with "." standing for an empty word.
// ---------------------------------------------------------------------------
class ObjectStream {
 public:
  explicit ObjectStream(FamilySpec spec);
  std::optional<std::string> next_line();
  // Advance without serializing (used by counting).
  bool advance();
  void reset();
  const FamilySpec& spec() const { return spec_; }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  FamilySpec spec_;
};

// Stream length by full enumeration (this is the ground-truth count).
long long family_count(const FamilySpec& spec);

// Serialization helpers shared with the command layer.
std::string marks_to_text(const std::vector<int>& marks);
std::vector<int> marks_from_text(std::string_view text);  // "2,3,4"

}  // namespace catcomb
