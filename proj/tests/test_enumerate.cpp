#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/numeric.hpp"
#include "doctest.h"

using namespace catcomb;

namespace {

FamilySpec spec_of(const std::string& name, std::vector<long long> params) {
  return make_family_spec(name, params);
}

long long count_of(const std::string& name, std::vector<long long> params) {
  return family_count(spec_of(name, std::move(params)));
}

std::vector<std::string> lines_of(const FamilySpec& spec) {
  ObjectStream s(spec);
  std::vector<std::string> out;
  while (auto line = s.next_line()) out.push_back(*line);
  return out;
}

}  // namespace

TEST_CASE("family spec validation") {
  CHECK(spec_of("dyck", {3}).family == Family::Dyck);
  CHECK(spec_of("gv-long-interior", {5, 1}).family == Family::GvLongInterior);
  CHECK_THROWS_AS((void)make_family_spec("nope", {1}), Error);
  CHECK_THROWS_AS((void)make_family_spec("dyck", {}), Error);
  CHECK_THROWS_AS((void)make_family_spec("dyck", {1, 2}), Error);
  CHECK_THROWS_AS((void)make_family_spec("dyck", {-1}), Error);
  try {
    (void)make_family_spec("nope", {1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownName);
  }
  // Representation bound.
  CHECK_THROWS_AS((void)family_count(spec_of("dyck", {31})), Error);
  for (const auto& [name, fam] : family_registry()) {
    (void)fam;
    CHECK(!name.empty());
  }
}

TEST_CASE("counts match the classical sequences") {
  const std::vector<long long> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  const std::vector<long long> big_schroder{1, 2, 6, 22, 90, 394, 1806};
  const std::vector<long long> little_schroder{1, 1, 3, 11, 45, 197, 903};
  for (int n = 0; n <= 8; ++n) {
    CHECK(count_of("dyck", {n}) == catalan[n]);
    CHECK(count_of("trees", {n}) == catalan[n]);
    CHECK(count_of("inverted-dyck", {n}) == catalan[n]);
    CHECK(count_of("balanced", {n}) ==
          static_cast<long long>(binom(2 * n, n)));
  }
  for (int n = 0; n <= 6; ++n) {
    CHECK(count_of("schroder", {n}) == big_schroder[n]);
    long long ia_total = 0;
    long long df_total = 0;
    for (int k = 0; k <= 2 * n; ++k) {
      ia_total += count_of("marked-ia", {n, k});
      df_total += count_of("marked-df", {n, k});
    }
    CHECK(ia_total == little_schroder[n]);
    if (n >= 1) CHECK(df_total == big_schroder[n]);
  }
}

TEST_CASE("marked family with the per-ascent parity rule") {
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      CHECK(count_of("marked-df-parity", {n, k}) ==
            static_cast<long long>(binom(n + 1, 2 * k + 1) *
                                   binom(n + k, k)));
    }
  }
}

TEST_CASE("pair family counts") {
  CHECK(count_of("levine", {2, 2}) == 3);
  CHECK(count_of("gv-long-interior", {5, 1}) == 20);
  CHECK(count_of("gv-long-interior", {7, 2}) == 175);
  CHECK(count_of("gv-x1-plus-x2", {3, 1}) == 4);
}

TEST_CASE("fine-like family counts") {
  // Balanced base: (n+1) times the Dyck-based count (cycle classes).
  CHECK(count_of("finelike", {4, 1, 1}) == 10);
  CHECK(count_of("finelike", {4, 0, 2}) == 10);
}

TEST_CASE("pinned enumeration orders") {
  CHECK(lines_of(spec_of("dyck", {3})) ==
        std::vector<std::string>{"UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD",
                                 "UDUDUD"});
  CHECK(lines_of(spec_of("schroder", {2})) ==
        std::vector<std::string>{"FF", "FUD", "UFD", "UUDD", "UDF", "UDUD"});
  CHECK(lines_of(spec_of("trees", {2})) ==
        std::vector<std::string>{"(())", "()()"});
  CHECK(lines_of(spec_of("balanced", {1})) ==
        std::vector<std::string>{"UD", "DU"});
  CHECK(lines_of(spec_of("gv-long-interior", {2, 0})) ==
        std::vector<std::string>{"EN .", "NE ."});
}

TEST_CASE("marked serialization and mark parsing") {
  const auto lines = lines_of(spec_of("marked-ia", {2, 1}));
  CHECK(lines == std::vector<std::string>{"UUDD 1"});
  CHECK(marks_to_text({2, 3, 4}) == "2,3,4");
  CHECK(marks_from_text("2,3,4") == std::vector<int>{2, 3, 4});
  CHECK(marks_from_text("7") == std::vector<int>{7});
  CHECK_THROWS_AS((void)marks_from_text("2,,3"), Error);
  CHECK_THROWS_AS((void)marks_from_text("a"), Error);
}

TEST_CASE("streams reset and recount deterministically") {
  ObjectStream s(spec_of("dyck", {4}));
  std::vector<std::string> first;
  while (auto line = s.next_line()) first.push_back(*line);
  s.reset();
  std::vector<std::string> second;
  while (auto line = s.next_line()) second.push_back(*line);
  CHECK(first == second);
  CHECK(static_cast<long long>(first.size()) == count_of("dyck", {4}));

  WordStream ws(3, WordStream::Mode::Dyck);
  int a = 0;
  while (ws.next()) ++a;
  ws.reset();
  int b = 0;
  while (ws.next()) ++b;
  CHECK(a == 5);
  CHECK(a == b);
}

TEST_CASE("combination and NE-word streams") {
  CombinationStream cs(3, 2);
  std::vector<std::vector<int>> combos;
  while (auto c = cs.next()) combos.push_back(**c);
  CHECK(combos == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

  NEWordStream ns(1, 1);
  std::vector<std::string> words;
  while (auto w = ns.next()) words.push_back(**w);
  CHECK(words == std::vector<std::string>{"EN", "NE"});

  CombinationStream empty(2, 0);
  int cnt = 0;
  while (empty.next()) ++cnt;
  CHECK(cnt == 1);  // exactly the empty subset
}

TEST_CASE("word stream modes agree with the predicates") {
  WordStream dyck(3, WordStream::Mode::Dyck);
  while (auto p = dyck.next()) CHECK(p->is_dyck());
  WordStream inv(3, WordStream::Mode::Inverted);
  while (auto p = inv.next()) CHECK(p->is_inverted_dyck());
  WordStream bal(3, WordStream::Mode::Balanced);
  long long total = 0;
  while (auto p = bal.next()) {
    CHECK(p->is_balanced());
    ++total;
  }
  CHECK(total == 20);
}
