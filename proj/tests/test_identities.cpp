#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <string>
#include <vector>

#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/identities.hpp"
#include "core/numeric.hpp"
#include "doctest.h"

using namespace catcomb;

namespace {

const std::vector<std::vector<u64>> kLongInteriorRows = {
    {1},           {2},           {3, 2},         {4, 8, 2},
    {5, 20, 15, 2}, {6, 40, 60, 24, 2}, {7, 70, 175, 140, 35, 2}};

const std::vector<std::vector<u64>> kTreeNodeRows = {
    {1},          {1, 1},          {1, 4},           {1, 10, 3},
    {1, 20, 21},  {1, 35, 84, 12}, {1, 56, 252, 120}, {1, 84, 630, 660, 55}};

}  // namespace

TEST_CASE("registry and name lookup") {
  const auto& reg = identity_registry();
  CHECK(reg.size() == 10);
  for (const IdentityInfo& info : reg) {
    CHECK_FALSE(info.name.empty());
    CHECK_FALSE(info.summary.empty());
    CHECK(info.verify_max >= 6);
    CHECK(identity_from_name(info.name) == info.kind);
    CHECK(identity_name(info.kind) == info.name);
  }
  CHECK(identity_from_name("LONG_INTERIOR") == IdentityKind::LONG_INTERIOR);
  CHECK_THROWS_AS((void)identity_from_name("nope"), Error);
}

TEST_CASE("classical number sequences") {
  const std::vector<u64> fine = {1, 0, 1, 2, 6, 18, 57, 186, 622, 2120};
  for (std::size_t n = 0; n < fine.size(); ++n) {
    CHECK(fine_number(static_cast<long long>(n)) == fine[n]);
  }
  const std::vector<u64> big = {1, 2, 6, 22, 90, 394, 1806};
  const std::vector<u64> little = {1, 1, 3, 11, 45, 197, 903};
  for (std::size_t n = 0; n < big.size(); ++n) {
    CHECK(big_schroder_number(static_cast<long long>(n)) == big[n]);
    CHECK(little_schroder_number(static_cast<long long>(n)) == little[n]);
    if (n >= 1) CHECK(big[n] == 2 * little[n]);
  }
  CHECK_THROWS_AS((void)fine_number(-1), Error);
}

TEST_CASE("closed-form spot values") {
  CHECK(identity_formula(IdentityKind::CATALAN_TOTAL, 8, 0) == 1430);
  CHECK(identity_formula(IdentityKind::LONG_INTERIOR, 5, 1) == 20);
  CHECK(identity_formula(IdentityKind::LONG_INTERIOR, 7, 2) == 175);
  CHECK(identity_formula(IdentityKind::LONG_INTERIOR, 1, 0) == 0);
  CHECK(identity_formula(IdentityKind::TREE_NODES, 8, 4) == 55);
  CHECK(identity_formula(IdentityKind::TREE_NODES, 4, 1) == 10);
  CHECK(identity_formula(IdentityKind::FINE_TOUCHARD, 4, 0) == 4);
  CHECK(identity_formula(IdentityKind::FINE_TOUCHARD, 4, 1) == 2);
  CHECK(identity_formula(IdentityKind::TOUCHARD, 4, 0) == 8);
  CHECK(identity_formula(IdentityKind::TOUCHARD, 4, 1) == 6);
  CHECK(identity_formula(IdentityKind::NARAYANA, 7, 2) == 105);
  CHECK(identity_formula(IdentityKind::X1_PLUS_X2, 3, 0) == 1);
  CHECK(identity_formula(IdentityKind::X1_PLUS_X2, 3, 1) == 4);
  CHECK(identity_formula(IdentityKind::X1_PLUS_X2, 3, 2) == 0);
  CHECK(identity_formula(IdentityKind::SCHRODER_COUNTS, 5, 0) == 394);
  CHECK(identity_formula(IdentityKind::SCHRODER_COUNTS, 5, 1) == 197);
  CHECK(identity_formula(IdentityKind::FINE_MANIFEST, 6, 0) == 57);
  CHECK_THROWS_AS(
      (void)identity_formula(IdentityKind::SCHRODER_COUNTS, 5, 2), Error);
  CHECK_THROWS_AS(
      (void)identity_formula(IdentityKind::FINE_REFINED, 4, 1), Error);
  CHECK(fine_refined_formula(4, 1, 1) == 2);
}

TEST_CASE("row sums recover the parent sequences") {
  for (long long n = 1; n <= 12; ++n) {
    u64 touchard = 0;
    u64 fine_touchard = 0;
    u64 narayana = 0;
    for (long long k = 0; k <= n; ++k) {
      touchard += identity_formula(IdentityKind::TOUCHARD, n, k);
      fine_touchard += identity_formula(IdentityKind::FINE_TOUCHARD, n, k);
      narayana += identity_formula(IdentityKind::NARAYANA, n, k);
    }
    CHECK(touchard == catalan_number(static_cast<int>(n)));
    CHECK(fine_touchard == fine_number(n));
    CHECK(narayana == catalan_number(static_cast<int>(n)));
  }
}

TEST_CASE("distribution over enumerated families") {
  const Distribution trees =
      distribution(make_family_spec("trees", {6}), "nodes_adj_leaf");
  CHECK(trees.counts == std::vector<u64>{1, 35, 84, 12});
  CHECK(trees.total == 132);

  const Distribution dyck =
      distribution(make_family_spec("dyck", {7}), "long_interior_inclines");
  CHECK(dyck.counts == std::vector<u64>{7, 70, 175, 140, 35, 2});
  CHECK(dyck.total == 429);

  CHECK_THROWS_AS(
      (void)distribution(make_family_spec("trees", {4}), "peaks"), Error);
  CHECK_THROWS_AS(
      (void)distribution(make_family_spec("dyck", {4}), "nodes_adj_leaf"),
      Error);
  CHECK_THROWS_AS(
      (void)distribution(make_family_spec("dyck", {4}), "nope"), Error);
}

TEST_CASE("enumerated tables match the published triangles") {
  CHECK(identity_table(IdentityKind::LONG_INTERIOR, 7) == kLongInteriorRows);
  CHECK(identity_table(IdentityKind::TREE_NODES, 8) == kTreeNodeRows);
  CHECK(identity_table(IdentityKind::SCHRODER_COUNTS, 4) ==
        std::vector<std::vector<u64>>{{2, 1}, {6, 3}, {22, 11}, {90, 45}});
  CHECK(identity_table(IdentityKind::CATALAN_TOTAL, 5) ==
        std::vector<std::vector<u64>>{{1}, {2}, {5}, {14}, {42}});
  CHECK_THROWS_AS((void)identity_table(IdentityKind::FINE_REFINED, 4), Error);
  CHECK_THROWS_AS((void)identity_table(IdentityKind::TREE_NODES, 0), Error);
}

TEST_CASE("three-way verification passes for every identity") {
  for (const IdentityInfo& info : identity_registry()) {
    const long long n_max = std::min(info.verify_max, 7);
    const VerificationReport rep = verify_identity(info.kind, n_max);
    CAPTURE(info.name);
    CHECK(rep.pass);
    CHECK(rep.discrepancies.empty());
    CHECK_FALSE(rep.rows.empty());
    for (const VerificationRow& row : rep.rows) {
      CHECK(row.ok);
      CHECK(row.formula_value == row.enumerated_value);
      if (row.transported_value) {
        CHECK(*row.transported_value == row.enumerated_value);
      }
    }
  }
}

TEST_CASE("verification guard rails and the documented erratum") {
  CHECK_THROWS_AS((void)verify_identity(IdentityKind::CATALAN_TOTAL, 99),
                  Error);
  try {
    (void)verify_identity(IdentityKind::CATALAN_TOTAL, 99);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundsError);
  }
  CHECK_THROWS_AS((void)verify_identity(IdentityKind::CATALAN_TOTAL, -1),
                  Error);

  const VerificationReport rep = verify_identity(IdentityKind::NARAYANA, 6);
  const bool has_erratum_note =
      std::any_of(rep.notes.begin(), rep.notes.end(), [](const std::string& s) {
        return s.find("erratum") != std::string::npos;
      });
  CHECK(has_erratum_note);
}

TEST_CASE("verify-all runs every identity at its clamped cap") {
  const std::vector<VerificationReport> reports = verify_all(6);
  CHECK(reports.size() == identity_registry().size());
  for (const VerificationReport& rep : reports) {
    CAPTURE(rep.identity);
    CHECK(rep.pass);
  }
}

TEST_CASE("output formatting") {
  CHECK(output_format_from_name("text") == OutputFormat::Text);
  CHECK(output_format_from_name("CSV") == OutputFormat::Csv);
  CHECK(output_format_from_name("json") == OutputFormat::Json);
  CHECK(output_format_from_name("bfile") == OutputFormat::Bfile);
  CHECK_THROWS_AS((void)output_format_from_name("xml"), Error);

  const Distribution trees =
      distribution(make_family_spec("trees", {6}), "nodes_adj_leaf");
  CHECK(format_distribution(trees, OutputFormat::Text) ==
        "trees(6) nodes_adj_leaf: 1 35 84 12 (total 132)\n");
  const std::string csv = format_distribution(trees, OutputFormat::Csv);
  CHECK(csv.rfind("family,statistic,k,count\n", 0) == 0);
  CHECK(csv.find("trees(6),nodes_adj_leaf,3,12\n") != std::string::npos);
  CHECK(format_distribution(trees, OutputFormat::Bfile) ==
        "0 1\n1 35\n2 84\n3 12\n");

  const VerificationReport rep =
      verify_identity(IdentityKind::LONG_INTERIOR, 4);
  const std::string text = format_report(rep, OutputFormat::Text);
  CHECK(text.find("long-interior") != std::string::npos);
  CHECK(text.find("pass") != std::string::npos);
  const std::string csv2 = format_report(rep, OutputFormat::Csv);
  CHECK(csv2.rfind("identity,n,k,j,formula,enumerated,transported,ok\n", 0) ==
        0);
  CHECK(csv2.find("long-interior,2,0,,2,2,2,true\n") != std::string::npos);

  CHECK(format_table(IdentityKind::FINE_MANIFEST, 5, OutputFormat::Bfile) ==
        "0 1\n1 0\n2 1\n3 2\n4 6\n5 18\n");
  const std::string report_bfile = format_report(rep, OutputFormat::Bfile);
  CHECK(report_bfile.rfind("# long-interior row totals\n", 0) == 0);

  const std::string table =
      format_table(IdentityKind::LONG_INTERIOR, 7, OutputFormat::Text);
  CHECK(table.find("n=7: 7 70 175 140 35 2") != std::string::npos);
}
