#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <string>
#include <vector>

#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/path.hpp"
#include "core/tree.hpp"
#include "doctest.h"

using namespace catcomb;

namespace {

const std::string kFigure = "UUDUDUUDDDUD";

long long stat(const std::string& w, StatKind k) {
  return statistic(Path::parse(w), k);
}

}  // namespace

TEST_CASE("parsing and predicates") {
  const Path p = Path::parse(kFigure);
  CHECK(p.word() == kFigure);
  CHECK(p.steps() == 12);
  CHECK(p.semilength() == 6);
  CHECK(p.is_dyck());
  CHECK(p.is_balanced());
  CHECK_FALSE(p.is_inverted_dyck());
  CHECK(p.height(0) == 0);
  CHECK(p.height(2) == 2);
  CHECK(p.max_height() == 3);
  CHECK(p.min_height() == 0);

  CHECK(Path::parse("").empty());
  CHECK(Path::parse("DDUU").min_height() == -2);
  CHECK(Path::parse("DDUU").is_inverted_dyck());
  CHECK_FALSE(Path::parse("UDD").is_balanced());

  CHECK_THROWS_AS((void)Path::parse("UXD"), Error);
  CHECK_THROWS_AS((void)Path::parse_dyck("UDDU"), Error);
  CHECK_THROWS_AS((void)Path::parse_balanced("UDU"), Error);
  CHECK_THROWS_AS((void)Path::parse_inverted_dyck("UD"), Error);
  try {
    (void)Path::parse("UXD");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  try {
    (void)Path::parse_dyck("UDDU");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }
}

TEST_CASE("figure statistics") {
  CHECK(stat(kFigure, StatKind::PEAKS) == 4);
  CHECK(stat(kFigure, StatKind::VALLEYS) == 3);
  CHECK(stat(kFigure, StatKind::UU) == 2);
  CHECK(stat(kFigure, StatKind::DD) == 2);
  CHECK(stat(kFigure, StatKind::DXD) == 3);
  CHECK(stat(kFigure, StatKind::HILLS) == 1);
  CHECK(stat(kFigure, StatKind::LONG_INTERIOR_INCLINES) == 2);
  CHECK(stat(kFigure, StatKind::UD) == stat(kFigure, StatKind::PEAKS));
  CHECK(stat(kFigure, StatKind::DU) == stat(kFigure, StatKind::VALLEYS));
}

TEST_CASE("pattern statistics count overlapping occurrences") {
  CHECK(stat("DDDD", StatKind::DXD) == 2);  // two DDD factors
  CHECK(stat("UDUDUD", StatKind::DU) == 2);
  CHECK(stat("UUUUDDDD", StatKind::UU) == 3);
}

TEST_CASE("derived statistics agree with their definitions") {
  WordStream ws(7, WordStream::Mode::Dyck);
  while (auto p = ws.next()) {
    const long long n = p->semilength();
    CHECK(statistic(*p, StatKind::MAX_DIMERS) ==
          (n - statistic(*p, StatKind::ODD_ASCENTS)) / 2);
    CHECK(statistic(*p, StatKind::X1_PLUS_X2) ==
          statistic(*p, StatKind::LONG_INTERIOR_INCLINES) +
              (statistic(*p, StatKind::RETURNS) == 1 ? 1 : 0));
    CHECK(statistic(*p, StatKind::UU) + statistic(*p, StatKind::DU) == n - 1);
    CHECK(statistic(*p, StatKind::UD) == 1 + statistic(*p, StatKind::DU));
    // Every upstep of a Dyck path starts at or above ground.
    CHECK(statistic(*p, StatKind::X_UPSTEPS_ABOVE_GROUND) == n);
  }
  CHECK(stat("DUUD", StatKind::X_UPSTEPS_ABOVE_GROUND) == 1);
  CHECK(stat("DDUU", StatKind::X_UPSTEPS_ABOVE_GROUND) == 0);
}

TEST_CASE("long interior inclines vs DXDs of the elevation") {
  CHECK(stat(kFigure, StatKind::LONG_INTERIOR_INCLINES) +
            statistic(elevate(Path::parse(kFigure)), StatKind::DXD) ==
        5);
  for (int n = 1; n <= 8; ++n) {
    WordStream ws(n, WordStream::Mode::Dyck);
    while (auto p = ws.next()) {
      CHECK(statistic(*p, StatKind::LONG_INTERIOR_INCLINES) +
                statistic(elevate(*p), StatKind::DXD) ==
            n - 1);
    }
  }
}

TEST_CASE("inclines") {
  const auto ud = inclines(Path::parse("UD"));
  REQUIRE(ud.size() == 2);
  CHECK(ud[0].is_ascent);
  CHECK(ud[0].is_initial);
  CHECK_FALSE(ud[0].is_interior);
  CHECK(ud[1].is_terminal);
  CHECK_FALSE(ud[1].is_interior);

  const auto fig = inclines(Path::parse(kFigure));
  REQUIRE(fig.size() == 8);
  CHECK(fig[0].length == 2);
  int interior = 0;
  for (const Incline& inc : fig) interior += inc.is_interior ? 1 : 0;
  CHECK(interior == 6);
  CHECK(stat(kFigure, StatKind::FIRST_ASCENT_LEN) == 2);
  CHECK(stat(kFigure, StatKind::TERMINAL_DESCENT_LEN) == 1);
}

TEST_CASE("matching and associated downsteps") {
  const Path p = Path::parse("UUDD");
  CHECK(matching_downstep(p, 0) == 3);
  CHECK(matching_downstep(p, 1) == 2);
  CHECK(associated_downstep(p, 0) == 3);
  CHECK(associated_downstep(p, 1) == 2);
  const Path q = Path::parse("UDUD");
  CHECK(matching_downstep(q, 0) == 1);
  CHECK(associated_downstep(q, 0) == 3);
  CHECK_THROWS_AS((void)matching_downstep(q, 1), Error);  // not an upstep

  for (int n = 1; n <= 7; ++n) {
    WordStream ws(n, WordStream::Mode::Dyck);
    while (auto w = ws.next()) {
      for (int i = 0; i < w->steps(); ++i) {
        if (!w->is_up(i)) continue;
        CHECK(matching_downstep(*w, i) <= associated_downstep(*w, i));
      }
    }
  }
}

TEST_CASE("matching vertex") {
  const Path p = Path::parse("UUDD");
  CHECK(matching_vertex(p, 1) == 3);
  CHECK(matching_vertex(Path::parse("UDUD"), 1) == 3);
  // Above ground the match is strictly eastward; vertex 3 has none.
  CHECK_THROWS_AS((void)matching_vertex(p, 3), Error);
  CHECK_THROWS_AS((void)matching_vertex(p, 0), Error);  // ground level
  const Path b = Path::parse("DDUU");
  CHECK(matching_vertex(b, 3) == 1);  // below ground: nearest westward
}

TEST_CASE("components, first component, interior, elevation") {
  const Path p = Path::parse("UUDDUDUD");
  const auto comps = components(p);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].word() == "UUDD");
  CHECK(comps[1].word() == "UD");
  const auto [c1, rest] = first_component(p);
  CHECK(c1.word() == "UUDD");
  CHECK(rest.word() == "UDUD");
  CHECK(interior(p).word() == "UD");
  CHECK(elevate(Path::parse("UD")).word() == "UUDD");
  CHECK(elevate(Path()).word() == "UD");
  CHECK_THROWS_AS((void)interior(Path()), Error);
}

TEST_CASE("IA and DF vertices") {
  const Path p = Path::parse("UUDD");
  CHECK(ia_vertices(p) == std::vector<int>{1});
  CHECK(df_vertices(p) == std::vector<int>{0, 1});
  CHECK(df_vertices(Path()) == std::vector<int>{0});
  CHECK(ia_vertices(Path()).empty());

  // Every IA vertex is DF on every balanced path.
  for (int n = 1; n <= 6; ++n) {
    WordStream ws(n, WordStream::Mode::Balanced);
    while (auto w = ws.next()) {
      const auto ia = ia_vertices(*w);
      const auto df = df_vertices(*w);
      const std::set<int> dfset(df.begin(), df.end());
      for (int v : ia) CHECK(dfset.count(v) == 1);
    }
  }
}

TEST_CASE("marked path validation") {
  const Path p = Path::parse("UUDD");
  CHECK_NOTHROW(MarkedPath(p, {1}, MarkKind::IA));
  CHECK_THROWS_AS(MarkedPath(p, {2}, MarkKind::IA), Error);   // not IA
  CHECK_THROWS_AS(MarkedPath(p, {2}, MarkKind::DF), Error);   // not DF
  CHECK_THROWS_AS(MarkedPath(p, {1, 1}, MarkKind::IA), Error);  // not strict
  CHECK_NOTHROW(MarkedPath(p, {0, 1}, MarkKind::DF));
}

TEST_CASE("statistic registry round trip") {
  for (const auto& [name, kind] : stat_registry()) {
    CHECK(stat_from_name(name) == kind);
    CHECK(std::string(stat_name(kind)) == name);
  }
  CHECK_THROWS_AS((void)stat_from_name("nope"), Error);
  try {
    (void)stat_from_name("nope");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownName);
  }
}

TEST_CASE("tree round trips and statistics") {
  CHECK(dyck_from_tree(tree_from_dyck(Path::parse("UD"))).word() == "UD");
  CHECK(nodes_adjacent_to_leaf(tree_from_dyck(Path::parse("UD"))) == 0);
  CHECK(nodes_adjacent_to_leaf(tree_from_dyck(Path::parse("UUDD"))) == 1);
  {
    std::vector<long long> vals;
    WordStream ws(3, WordStream::Mode::Dyck);
    while (auto p = ws.next()) {
      vals.push_back(nodes_adjacent_to_leaf(tree_from_dyck(*p)));
    }
    std::sort(vals.begin(), vals.end());
    CHECK(vals == std::vector<long long>{0, 1, 1, 1, 1});
  }
  CHECK(nodes_adjacent_to_leaf(
            tree_from_dyck(Path::parse("UUUUDDDUDUUDDDUDUUDD"))) == 4);

  for (int n = 0; n <= 8; ++n) {
    WordStream ws(n, WordStream::Mode::Dyck);
    while (auto p = ws.next()) {
      const OrderedTree t = tree_from_dyck(*p);
      CHECK(dyck_from_tree(t) == *p);
      CHECK(tree_from_parens(tree_to_parens(t)) == t);
      CHECK(nodes_adjacent_to_leaf(t) ==
            statistic(*p, StatKind::HILL_PRODUCING_UPSTEPS));
    }
  }
  CHECK_THROWS_AS((void)tree_from_parens("(()"), Error);
  CHECK_THROWS_AS((void)tree_from_parens(")("), Error);
}

TEST_CASE("path ordering is U-before-D lexicographic") {
  CHECK(Path::parse("UUDD") < Path::parse("UDUD"));
  CHECK_FALSE(Path::parse("UDUD") < Path::parse("UUDD"));
  CHECK(Path::parse("UUDD") < Path::parse("UD"));  // U < D at index 1
  CHECK(Path::parse("UU") < Path::parse("UUDD"));  // prefix: shorter first
}
