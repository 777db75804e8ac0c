#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/enumerate.hpp"
#include "core/numeric.hpp"

namespace catcomb {

// The verified counting identities. Each kind binds a closed-form evaluator,
// an enumerated family/statistic, and (where one exists) a bijection chain
// that transports the count.
enum class IdentityKind {
  CATALAN_TOTAL,
  LONG_INTERIOR,
  TREE_NODES,
  FINE_TOUCHARD,
  TOUCHARD,
  NARAYANA,
  X1_PLUS_X2,
  FINE_REFINED,
  SCHRODER_COUNTS,
  FINE_MANIFEST,
};

struct IdentityInfo {
  IdentityKind kind;
  std::string name;  // kebab-case name used on the command line
  int verify_max;    // largest n accepted by verify_identity
  std::string summary;
};

const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo& identity_info(IdentityKind kind);
IdentityKind identity_from_name(std::string_view name);
std::string identity_name(IdentityKind kind);

// Sequence helpers shared by formulas, tables, and b-file output.
u64 fine_number(long long n);
u64 big_schroder_number(long long n);
u64 little_schroder_number(long long n);

// Point value of the closed form. k is ignored by CATALAN_TOTAL and
// FINE_MANIFEST; SCHRODER_COUNTS uses k = 0 for the big and k = 1 for the
// little Schroder number. FINE_REFINED needs (n, j, k) and rejects this
// entry point.
u64 identity_formula(IdentityKind kind, long long n, long long k);
u64 fine_refined_formula(long long n, long long j, long long k);

struct Distribution {
  std::string family;     // family spec, e.g. "dyck(7)"
  std::string statistic;  // statistic name, e.g. "long_interior_inclines"
  long long n = 0;
  std::vector<u64> counts;  // dense from k = 0, trailing zeros trimmed
  u64 total = 0;
};

// Counts a statistic over an enumerated family. Path statistics apply to the
// path families, "nodes_adj_leaf" to the tree family; anything else is a
// statistic/family mismatch.
Distribution distribution(const FamilySpec& family, std::string_view stat_name);

struct VerificationRow {
  long long n = 0;
  long long k = 0;
  std::optional<long long> j;  // used by the (j, k)-refined identity
  u64 formula_value = 0;
  u64 enumerated_value = 0;
  std::optional<u64> transported_value;
  bool ok = true;
};

struct VerificationReport {
  IdentityKind kind = IdentityKind::CATALAN_TOTAL;
  std::string identity;
  long long n_max = 0;
  std::vector<VerificationRow> rows;
  std::vector<std::string> notes;
  std::vector<std::string> discrepancies;
  bool pass = true;
};

// Three-way verification: closed form vs exhaustive enumeration vs (where a
// chain exists) the count transported through the bijections.
VerificationReport verify_identity(IdentityKind kind, long long n_max);

// Runs every registered identity with n_max clamped to its per-kind cap.
std::vector<VerificationReport> verify_all(long long n_max);

// Enumerated table rows for n = 1..n_max (triangle kinds give distribution
// rows; sequence kinds give one or two columns).
std::vector<std::vector<u64>> identity_table(IdentityKind kind,
                                             long long n_max);

enum class OutputFormat { Text, Csv, Json, Bfile };
OutputFormat output_format_from_name(std::string_view name);

std::string format_report(const VerificationReport& report, OutputFormat fmt);
std::string format_reports(const std::vector<VerificationReport>& reports,
                           OutputFormat fmt);
std::string format_distribution(const Distribution& dist, OutputFormat fmt);
std::string format_table(IdentityKind kind, long long n_max, OutputFormat fmt);

}  // namespace catcomb
