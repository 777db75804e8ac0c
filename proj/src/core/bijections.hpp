#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/grid.hpp"
#include "core/path.hpp"
#include "core/schroder.hpp"

namespace catcomb {

// Optional sink for human-readable stage annotations (CLI --trace).
using TraceSink = std::vector<std::string>*;

// --- elementary involutions -------------------------------------------------

// Reverse the word and swap U/D (vertical flip).
Path reverse_path(const Path& p, TraceSink trace = nullptr);

// First-return decomposition swap: U P1 D P2 -> U f(P2) D f(P1).
Path deutsch_involution(const Path& p, TraceSink trace = nullptr);

// Largest m with p = X . D . (UD)^m.
int terminal_ud_run(const Path& p);

// --- valley -> DXD rewriting ------------------------------------------------

Path du_to_dxd(const Path& p, TraceSink trace = nullptr);
Path dxd_to_du(const Path& p, TraceSink trace = nullptr);

// Cut-and-paste realization of dxd_to_du with colored steps; `order` selects
// the processing order of the blue steps (indices into the blue list);
// nullptr means left-to-right.
Path dxd_to_du_explicit(const Path& p, const std::vector<int>* order = nullptr,
                        TraceSink trace = nullptr);
struct ExplicitColoring {
  std::vector<int> reds;   // step indices (final D of each DDD factor)
  std::vector<int> blues;  // step indices (middle U of admissible DUU)
};
ExplicitColoring explicit_coloring(const Path& p);

// --- cycle rotation ----------------------------------------------------------

struct RotateResult {
  Path path;
  std::vector<int> marks;
};
// Rotation carrying the X=0 class onto the X=index class; upsteps are
// numbered by (top-vertex height descending, then x descending), so the final
// upstep is always number 1.
RotateResult cycle_rotate(const Path& p, int index,
                          const std::vector<int>& marks = {},
                          TraceSink trace = nullptr);

// --- DF marks <-> Schroder ---------------------------------------------------

SchroderPath df_to_schroder(const MarkedPath& m, TraceSink trace = nullptr);
MarkedPath schroder_to_df(const SchroderPath& s, TraceSink trace = nullptr);

// --- Levine pair <-> Dyck ----------------------------------------------------

Path levine_to_dyck(const std::string& b, const std::string& t,
                    TraceSink trace = nullptr);
std::pair<std::string, std::string> dyck_to_levine(const Path& p,
                                                   TraceSink trace = nullptr);

// --- raw pair adjustment and full chains --------------------------------------

struct GvAdjustResult {
  char cls = 'A';  // 'A' iff the adjusted top word ends in E
  std::string b;
  std::string t;
};
// `variant` must be PairRole::GvLongInterior or PairRole::GvX1X2.
GvAdjustResult gv_adjust(const std::string& b, const std::string& t,
                         PairRole variant, TraceSink trace = nullptr);
std::pair<std::string, std::string> gv_unadjust(char cls, const std::string& b,
                                                const std::string& t,
                                                PairRole variant,
                                                TraceSink trace = nullptr);

struct ChainResult {
  char cls = 'A';
  Path path;
};
// adjust -> levine_to_dyck -> reverse -> deutsch -> du_to_dxd.
ChainResult chain_to_dyck(const std::string& b, const std::string& t,
                          PairRole variant, TraceSink trace = nullptr);

// --- mark transfer to odd ascents ---------------------------------------------

Path marks_to_odd_ascents(const MarkedPath& m, TraceSink trace = nullptr);
MarkedPath odd_ascents_to_marks(const Path& q, TraceSink trace = nullptr);

// --- dimers <-> hill-producing upsteps -----------------------------------------

// Splits a balanced word at its ground-level peaks (hills); the hills
// themselves are dropped, leaving hole-count + 1 parts.
std::vector<std::string> split_at_hills(const std::string& p);

Path dimer_to_hill(const Path& p, TraceSink trace = nullptr);
Path hill_to_dimer(const Path& q, TraceSink trace = nullptr);
// Domain / image case numbers (1..6) for strict paths with first ascent >= 2.
int strict_case(const Path& p);
int image_case(const Path& q);

// --- short-ascent mark transfer -------------------------------------------------

Path finelike_to_fine(const MarkedPath& m, TraceSink trace = nullptr);
MarkedPath fine_to_finelike(const Path& q, TraceSink trace = nullptr);

// --- registry & verification -----------------------------------------------------

struct BijectionReport {
  std::string name;
  long long size = 0;
  long long objects = 0;  // domain objects examined
  bool pass = false;
  std::vector<std::string> checks;  // one line per verified property
  std::string counterexample;       // empty when pass
};

struct BijectionInfo {
  std::string name;
  long long max_size;  // refusal bound for verify_bijection
  std::string summary;
};

const std::vector<BijectionInfo>& bijection_registry();
// Exhaustive round-trip and statistic-transport verification at one size.
// Unknown name -> UnknownName; size above the registered bound -> BoundsError.
BijectionReport verify_bijection(std::string_view name, long long size);

}  // namespace catcomb
