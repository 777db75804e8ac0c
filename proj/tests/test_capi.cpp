#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>
#include <vector>

#include "catcomb/catcomb.h"
#include "doctest.h"

namespace {

// Wraps a char* output so every test body frees what the API allocates.
struct Str {
  char* p = nullptr;
  ~Str() { cc_string_free(p); }
  std::string view() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(cc_status_name(CC_OK)) == "ok");
  CHECK(std::string(cc_status_name(CC_EOF)) == "end of stream");
  CHECK(std::string(cc_status_name(CC_ERR_USAGE)) == "usage error");
  CHECK(std::string(cc_status_name(CC_ERR_PARSE)) == "parse error");
  CHECK(std::string(cc_status_name(CC_ERR_DOMAIN)) == "domain error");
  CHECK(std::string(cc_status_name(CC_ERR_UNKNOWN_NAME)) == "unknown name");
  CHECK(std::string(cc_status_name(CC_ERR_BOUNDS)) == "bounds error");
  CHECK(std::string(cc_status_name(CC_ERR_MISMATCH)) ==
        "verification mismatch");
  CHECK(std::string(cc_status_name(CC_ERR_INTERNAL)) == "internal error");
}

TEST_CASE("registries list their entries") {
  Str fam, stat, bij, ident;
  CHECK(cc_list_families(&fam.p) == CC_OK);
  CHECK(fam.view().find("dyck") != std::string::npos);
  CHECK(fam.view().find("finelike") != std::string::npos);
  CHECK(cc_list_statistics(&stat.p) == CC_OK);
  CHECK(stat.view().find("long_interior_inclines") != std::string::npos);
  CHECK(stat.view().find("nodes_adj_leaf") != std::string::npos);
  CHECK(cc_list_bijections(&bij.p) == CC_OK);
  CHECK(bij.view().find("du-to-dxd\t") != std::string::npos);
  CHECK(bij.view().find("verified up to") != std::string::npos);
  CHECK(cc_list_identities(&ident.p) == CC_OK);
  CHECK(ident.view().find("long-interior\t") != std::string::npos);
  CHECK(cc_list_families(nullptr) == CC_ERR_USAGE);
}

TEST_CASE("path statistics") {
  long long v = 0;
  Str err;
  CHECK(cc_path_stat("UUDUDUUDDDUD", "peaks", &v, &err.p) == CC_OK);
  CHECK(v == 4);
  CHECK(cc_path_stat("UUDUDUUDDDUD", "dxd", &v, nullptr) == CC_OK);
  CHECK(v == 3);
  CHECK(cc_path_stat("UXD", "peaks", &v, &err.p) == CC_ERR_PARSE);
  CHECK(err.p != nullptr);

  Str err2;
  CHECK(cc_path_stat("UD", "nope", &v, &err2.p) == CC_ERR_UNKNOWN_NAME);
  CHECK(cc_path_stat(nullptr, "peaks", &v, nullptr) == CC_ERR_USAGE);

  Str all;
  CHECK(cc_path_stats_all("UUDUDUUDDDUD", &all.p, nullptr) == CC_OK);
  CHECK(all.view().find("peaks=4\n") != std::string::npos);
  CHECK(all.view().find("valleys=3\n") != std::string::npos);
  CHECK(all.view().find("hills=1\n") != std::string::npos);
  CHECK(all.view().find("long_interior_inclines=2\n") != std::string::npos);
  CHECK(all.view().find("x1_plus_x2=2") != std::string::npos);

  long long t = -1;
  CHECK(cc_tree_stat("(()())", &t, nullptr) == CC_OK);
  CHECK(t == 1);
  Str err3;
  CHECK(cc_tree_stat("x)", &t, &err3.p) == CC_ERR_PARSE);
  Str err4;
  CHECK(cc_tree_stat("(()", &t, &err4.p) == CC_ERR_DOMAIN);
}

TEST_CASE("streams enumerate in the documented order") {
  const long long params[] = {3};
  cc_stream* s = nullptr;
  Str err;
  REQUIRE(cc_stream_open("dyck", params, 1, &s, &err.p) == CC_OK);
  std::vector<std::string> words;
  for (;;) {
    Str line;
    const cc_status st = cc_stream_next(s, &line.p);
    if (st == CC_EOF) break;
    REQUIRE(st == CC_OK);
    words.push_back(line.view());
  }
  CHECK(words == std::vector<std::string>{"UUUDDD", "UUDUDD", "UUDDUD",
                                          "UDUUDD", "UDUDUD"});
  CHECK(cc_stream_reset(s) == CC_OK);
  Str again;
  CHECK(cc_stream_next(s, &again.p) == CC_OK);
  CHECK(again.view() == "UUUDDD");
  cc_stream_free(s);

  cc_stream* bad = nullptr;
  Str err2;
  CHECK(cc_stream_open("nope", params, 1, &bad, &err2.p) ==
        CC_ERR_UNKNOWN_NAME);
  CHECK(bad == nullptr);

  unsigned long long count = 0;
  CHECK(cc_count("balanced", params, 1, &count, nullptr) == CC_OK);
  CHECK(count == 20);
  const long long big[] = {31};
  Str err3;
  CHECK(cc_count("dyck", big, 1, &count, &err3.p) == CC_ERR_BOUNDS);
  const long long neg[] = {-1};
  CHECK(cc_count("dyck", neg, 1, &count, nullptr) == CC_ERR_DOMAIN);
  CHECK(cc_count("dyck", nullptr, 1, &count, nullptr) == CC_ERR_DOMAIN);
}

TEST_CASE("bijections through the C surface") {
  Str out;
  CHECK(cc_biject("du-to-dxd", "UD", nullptr, &out.p, nullptr) == CC_OK);
  CHECK(out.view() == "UD");

  Str fwd, back;
  CHECK(cc_biject("du-to-dxd", "UDUUDD", "", &fwd.p, nullptr) == CC_OK);
  CHECK(fwd.view() == "UUUDDD");
  CHECK(cc_biject("du-to-dxd", "UUUDDD", "inverse", &back.p, nullptr) ==
        CC_OK);
  CHECK(back.view() == "UDUUDD");

  Str traced;
  CHECK(cc_biject("du-to-dxd", "UDUUDD", "trace", &traced.p, nullptr) ==
        CC_OK);
  CHECK(traced.view().rfind("UUUDDD\n", 0) == 0);
  CHECK(traced.view().size() > 7);

  Str rot;
  CHECK(cc_biject("cycle-rotate", "DDUU", "index=2", &rot.p, nullptr) ==
        CC_OK);
  CHECK(rot.view() == "UUDD");
  Str err;
  CHECK(cc_biject("cycle-rotate", "DDUU", "inverse,index=1", &rot.p,
                  &err.p) == CC_ERR_DOMAIN);

  Str sch;
  CHECK(cc_biject("df-to-schroder", "UUDD 0,1", nullptr, &sch.p, nullptr) ==
        CC_OK);
  CHECK(sch.view() == "FF");
  Str sch2;
  CHECK(cc_biject("df-to-schroder", "UUDD", "marks=0;1", &sch2.p, nullptr) ==
        CC_OK);
  CHECK(sch2.view() == "FF");
  Str mk;
  CHECK(cc_biject("df-to-schroder", "UFD", "inverse", &mk.p, nullptr) ==
        CC_OK);
  CHECK(mk.view() == "UUDD 1");

  Str pair;
  CHECK(cc_biject("levine-to-dyck", "EENNENN NEENNEN", nullptr, &pair.p,
                  nullptr) == CC_OK);
  CHECK(pair.view() == "UUDUDUUUDDDUUDDD");
  Str pair2;
  CHECK(cc_biject("levine-to-dyck", "UUDUDUUUDDDUUDDD", "inverse", &pair2.p,
                  nullptr) == CC_OK);
  CHECK(pair2.view() == "EENNENN NEENNEN");

  Str adj;
  CHECK(cc_biject("gv-adjust", "EN .", "variant=gv-long-interior", &adj.p,
                  nullptr) == CC_OK);
  CHECK(adj.view() == "A E E");
  Str unadj;
  CHECK(cc_biject("gv-adjust", "E E",
                  "inverse,variant=gv-long-interior,class=A", &unadj.p,
                  nullptr) == CC_OK);
  CHECK(unadj.view() == "EN .");

  Str chain;
  CHECK(cc_biject("chain-long-interior", "ENN N", nullptr, &chain.p,
                  nullptr) == CC_OK);
  CHECK(chain.view() == "A UUUDDD");
  Str err2;
  CHECK(cc_biject("chain-long-interior", "ENN N", "inverse", &chain.p,
                  &err2.p) == CC_ERR_DOMAIN);

  Str err3;
  CHECK(cc_biject("nope", "UD", nullptr, &out.p, &err3.p) ==
        CC_ERR_UNKNOWN_NAME);
  Str err4;
  CHECK(cc_biject("du-to-dxd", "UD", "bogus", &out.p, &err4.p) ==
        CC_ERR_DOMAIN);
}

TEST_CASE("bijection verification reports") {
  Str report;
  int pass = 0;
  CHECK(cc_verify_bijection("deutsch-involution", 6, &report.p, &pass,
                            nullptr) == CC_OK);
  CHECK(pass == 1);
  CHECK(report.view().rfind("bijection: deutsch-involution\n", 0) == 0);
  CHECK(report.view().find("verdict: pass") != std::string::npos);

  Str err;
  CHECK(cc_verify_bijection("du-to-dxd", 13, &report.p, &pass, &err.p) ==
        CC_ERR_BOUNDS);
}

TEST_CASE("identity formulas, tables, and verification") {
  unsigned long long v = 0;
  CHECK(cc_formula("narayana", 7, 2, &v, nullptr) == CC_OK);
  CHECK(v == 105);
  Str err;
  CHECK(cc_formula("fine-refined", 4, 1, &v, &err.p) == CC_ERR_DOMAIN);
  CHECK(cc_formula_refined(4, 1, 1, &v, nullptr) == CC_OK);
  CHECK(v == 2);

  Str dist;
  const long long params[] = {6};
  CHECK(cc_distribution("trees", params, 1, "nodes_adj_leaf", "text", &dist.p,
                        nullptr) == CC_OK);
  CHECK(dist.view() == "trees(6) nodes_adj_leaf: 1 35 84 12 (total 132)\n");

  Str csv;
  int pass = 0;
  CHECK(cc_verify_identity("long-interior", 7, "csv", &csv.p, &pass,
                           nullptr) == CC_OK);
  CHECK(pass == 1);
  CHECK(csv.view().rfind("identity,n,k,j,formula,enumerated,transported,ok\n",
                         0) == 0);
  CHECK(csv.view().find("long-interior,7,2,,175,175,175,true\n") !=
        std::string::npos);

  Str all;
  CHECK(cc_verify_all(6, nullptr, &all.p, &pass, nullptr) == CC_OK);
  CHECK(pass == 1);

  Str table;
  CHECK(cc_table("long-interior", 7, "text", &table.p, nullptr) == CC_OK);
  CHECK(table.view().find("n=7: 7 70 175 140 35 2\n") != std::string::npos);
}

TEST_CASE("rendering through the C surface") {
  Str a;
  CHECK(cc_render("path", "UD", nullptr, "ascii", &a.p, nullptr) == CC_OK);
  CHECK(a.view() == "/\\\n");
  Str b;
  CHECK(cc_render("schroder", "F", nullptr, "ascii", &b.p, nullptr) == CC_OK);
  CHECK(b.view() == "==\n");
  Str c;
  CHECK(cc_render("path", "UUDD", "0;4", "ascii", &c.p, nullptr) == CC_OK);
  CHECK(c.view() == "*   *\n /\\\n/  \\\n");
  Str d;
  CHECK(cc_render("tree", "(()())", nullptr, "ascii", &d.p, nullptr) == CC_OK);
  CHECK(d.view() == "*\n  *\n    *\n    *\n");
  Str e, err;
  CHECK(cc_render("tree", "(()())", "1", "ascii", &e.p, &err.p) ==
        CC_ERR_DOMAIN);
  Str f, err2;
  CHECK(cc_render("blob", "UD", nullptr, "ascii", &f.p, &err2.p) ==
        CC_ERR_UNKNOWN_NAME);
  Str g, err3;
  CHECK(cc_render("path", "UD", nullptr, "jpeg", &g.p, &err3.p) ==
        CC_ERR_UNKNOWN_NAME);
}
