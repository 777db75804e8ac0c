// Command-line front end. Links against the C API only.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catcomb/catcomb.h"

namespace {

std::string take(char* s) {
  if (s == nullptr) return {};
  std::string out(s);
  cc_string_free(s);
  return out;
}

// Usage/parse/domain/bounds/internal problems all exit 2; a verification
// mismatch exits 1 (handled at the call sites that can produce one).
int report_error(cc_status status, char* err) {
  const std::string msg = take(err);
  std::cerr << "error: " << (msg.empty() ? cc_status_name(status) : msg)
            << "\n";
  return 2;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

std::string semicolons(const std::string& comma_list) {
  std::string out = comma_list;
  for (char& c : out) {
    if (c == ',') c = ';';
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& part : parts) {
    if (!out.empty()) out += ' ';
    out += part;
  }
  return out;
}

int run_list(const std::string& what) {
  char* out = nullptr;
  cc_status st = CC_ERR_USAGE;
  if (what == "families") {
    st = cc_list_families(&out);
  } else if (what == "statistics") {
    st = cc_list_statistics(&out);
  } else if (what == "bijections") {
    st = cc_list_bijections(&out);
  } else if (what == "identities") {
    st = cc_list_identities(&out);
  } else {
    return usage_error("list expects families|statistics|bijections|identities");
  }
  if (st != CC_OK) return report_error(st, nullptr);
  std::cout << take(out);
  return 0;
}

int run_enumerate(const std::string& family,
                  const std::vector<long long>& params, bool count_only) {
  char* err = nullptr;
  if (count_only) {
    unsigned long long total = 0;
    const cc_status st = cc_count(family.c_str(), params.data(), params.size(),
                                  &total, &err);
    if (st != CC_OK) return report_error(st, err);
    std::cout << total << "\n";
    return 0;
  }
  cc_stream* stream = nullptr;
  cc_status st =
      cc_stream_open(family.c_str(), params.data(), params.size(), &stream,
                     &err);
  if (st != CC_OK) return report_error(st, err);
  for (;;) {
    char* line = nullptr;
    st = cc_stream_next(stream, &line);
    if (st == CC_EOF) break;
    if (st != CC_OK) {
      cc_stream_free(stream);
      return report_error(st, nullptr);
    }
    std::cout << take(line) << "\n";
  }
  cc_stream_free(stream);
  return 0;
}

int stats_one(const std::string& word, const std::string& stat, bool tree) {
  char* err = nullptr;
  if (tree) {
    long long value = 0;
    const cc_status st = cc_tree_stat(word.c_str(), &value, &err);
    if (st != CC_OK) return report_error(st, err);
    std::cout << value << "\n";
    return 0;
  }
  if (!stat.empty()) {
    long long value = 0;
    const cc_status st = cc_path_stat(word.c_str(), stat.c_str(), &value, &err);
    if (st != CC_OK) return report_error(st, err);
    std::cout << value << "\n";
    return 0;
  }
  char* out = nullptr;
  const cc_status st = cc_path_stats_all(word.c_str(), &out, &err);
  if (st != CC_OK) return report_error(st, err);
  std::cout << take(out);
  return 0;
}

int run_stats(const std::string& word, const std::string& stat, bool tree,
              bool use_stdin) {
  if (use_stdin) {
    if (!word.empty()) {
      return usage_error("give either a positional object or --stdin");
    }
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.empty()) continue;
      if (const int rc = stats_one(line, stat, tree); rc != 0) return rc;
    }
    return 0;
  }
  if (word.empty()) return usage_error("missing object (or use --stdin)");
  return stats_one(word, stat, tree);
}

int biject_one(const std::string& name, const std::string& input,
               const std::string& options) {
  char* out = nullptr;
  char* err = nullptr;
  const cc_status st =
      cc_biject(name.c_str(), input.c_str(),
                options.empty() ? nullptr : options.c_str(), &out, &err);
  if (st != CC_OK) return report_error(st, err);
  std::cout << take(out) << "\n";
  return 0;
}

int run_biject(const std::string& name, const std::string& input,
               const std::string& options, bool use_stdin) {
  if (use_stdin) {
    if (!input.empty()) {
      return usage_error("give either a positional object or --stdin");
    }
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.empty()) continue;
      if (const int rc = biject_one(name, line, options); rc != 0) return rc;
    }
    return 0;
  }
  if (input.empty()) return usage_error("missing object (or use --stdin)");
  return biject_one(name, input, options);
}

int run_verify_bijection(const std::string& name, long long size) {
  char* report = nullptr;
  char* err = nullptr;
  int pass = 0;
  const cc_status st =
      cc_verify_bijection(name.c_str(), size, &report, &pass, &err);
  if (st != CC_OK && st != CC_ERR_MISMATCH) return report_error(st, err);
  std::cout << take(report);
  return pass == 1 ? 0 : 1;
}

int run_verify(const std::string& target, const std::vector<std::string>& rest,
               std::optional<long long> n_max, const std::string& format) {
  if (target == "bijection") {
    if (rest.size() != 2) {
      return usage_error("usage: verify bijection <name> <size>");
    }
    long long size = 0;
    try {
      size = std::stoll(rest[1]);
    } catch (const std::exception&) {
      return usage_error("size must be an integer");
    }
    return run_verify_bijection(rest[0], size);
  }
  if (!rest.empty()) {
    return usage_error("unexpected extra arguments after '" + target + "'");
  }
  if (!n_max.has_value()) return usage_error("--n-max is required");
  char* out = nullptr;
  char* err = nullptr;
  int pass = 0;
  cc_status st;
  if (target == "all") {
    st = cc_verify_all(*n_max, format.c_str(), &out, &pass, &err);
  } else {
    st = cc_verify_identity(target.c_str(), *n_max, format.c_str(), &out,
                            &pass, &err);
  }
  if (st != CC_OK && st != CC_ERR_MISMATCH) return report_error(st, err);
  std::cout << take(out);
  return pass == 1 ? 0 : 1;
}

int run_table(const std::string& identity, long long n_max,
              const std::string& format) {
  char* out = nullptr;
  char* err = nullptr;
  const cc_status st =
      cc_table(identity.c_str(), n_max, format.c_str(), &out, &err);
  if (st != CC_OK) return report_error(st, err);
  std::cout << take(out);
  return 0;
}

int run_distribution(const std::string& family,
                     const std::vector<long long>& params,
                     const std::string& stat, const std::string& format) {
  char* out = nullptr;
  char* err = nullptr;
  const cc_status st =
      cc_distribution(family.c_str(), params.data(), params.size(),
                      stat.c_str(), format.c_str(), &out, &err);
  if (st != CC_OK) return report_error(st, err);
  std::cout << take(out);
  return 0;
}

int run_render(const std::string& kind, const std::string& input,
               const std::string& marks, const std::string& style) {
  char* out = nullptr;
  char* err = nullptr;
  const cc_status st =
      cc_render(kind.c_str(), input.c_str(),
                marks.empty() ? nullptr : semicolons(marks).c_str(),
                style.c_str(), &out, &err);
  if (st != CC_OK) return report_error(st, err);
  std::cout << take(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact enumeration, statistics, bijections and identity verification "
      "for Catalan-family lattice paths and ordered trees."};
  app.require_subcommand(1);
  int rc = 0;

  // --- list ----------------------------------------------------------------
  std::string list_what;
  CLI::App* list = app.add_subcommand(
      "list", "Show registered families, statistics, bijections, identities");
  list->add_option("what", list_what,
                   "families|statistics|bijections|identities")
      ->required();
  list->callback([&]() { rc = run_list(list_what); });

  // --- enumerate -------------------------------------------------------------
  std::string enum_family;
  std::vector<long long> enum_params;
  bool count_only = false;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Stream every object of a family, one line each");
  enumerate->add_option("family", enum_family, "family name (see `list families`)")
      ->required();
  enumerate->add_option("params", enum_params, "integer family parameters");
  enumerate->add_flag("--count-only", count_only,
                      "print only the number of objects");
  enumerate->callback(
      [&]() { rc = run_enumerate(enum_family, enum_params, count_only); });

  // --- stats -----------------------------------------------------------------
  std::string stats_word;
  std::string stats_stat;
  bool stats_all = false;
  bool stats_tree = false;
  bool stats_stdin = false;
  CLI::App* stats =
      app.add_subcommand("stats", "Evaluate statistics of one object");
  stats->add_option("object", stats_word, "U/D word (or tree with --tree)");
  stats->add_option("--stat", stats_stat, "print a single statistic value");
  stats->add_flag("--all", stats_all, "print every statistic as name=value");
  stats->add_flag("--tree", stats_tree,
                  "treat the object as a parenthesized ordered tree");
  stats->add_flag("--stdin", stats_stdin, "read objects from stdin");
  stats->callback([&]() {
    if (stats_all && !stats_stat.empty()) {
      rc = usage_error("--all and --stat are mutually exclusive");
      return;
    }
    rc = run_stats(stats_word, stats_stat, stats_tree, stats_stdin);
  });

  // --- biject ----------------------------------------------------------------
  std::string bij_name;
  std::vector<std::string> bij_input;
  std::string bij_marks;
  std::string bij_variant;
  std::string bij_class;
  int bij_index = 0;
  bool bij_inverse = false;
  bool bij_trace = false;
  bool bij_stdin = false;
  CLI::App* biject =
      app.add_subcommand("biject", "Apply a registered bijection to one object");
  biject->add_option("name", bij_name, "bijection name (see `list bijections`)")
      ->required();
  biject->add_option("object", bij_input,
                     "object in its line serialization (may span arguments)");
  biject->add_option("--marks", bij_marks, "marked vertices, e.g. 2,3,4");
  CLI::Option* opt_index =
      biject->add_option("--index", bij_index, "rotation class index");
  biject->add_option("--variant", bij_variant,
                     "pair variant: gv-long-interior|gv-x1-plus-x2");
  biject->add_option("--class", bij_class, "class letter A|B for the inverse");
  biject->add_flag("--inverse", bij_inverse, "apply the inverse direction");
  biject->add_flag("--trace", bij_trace, "append intermediate stages");
  biject->add_flag("--stdin", bij_stdin, "read objects from stdin");
  biject->callback([&]() {
    std::vector<std::string> tokens;
    if (bij_inverse) tokens.emplace_back("inverse");
    if (bij_trace) tokens.emplace_back("trace");
    if (opt_index->count() > 0) {
      tokens.push_back("index=" + std::to_string(bij_index));
    }
    if (!bij_variant.empty()) tokens.push_back("variant=" + bij_variant);
    if (!bij_class.empty()) tokens.push_back("class=" + bij_class);
    if (!bij_marks.empty()) tokens.push_back("marks=" + semicolons(bij_marks));
    std::string options;
    for (const std::string& t : tokens) {
      if (!options.empty()) options += ',';
      options += t;
    }
    rc = run_biject(bij_name, join(bij_input), options, bij_stdin);
  });

  // --- verify ----------------------------------------------------------------
  std::string verify_target;
  std::vector<std::string> verify_rest;
  long long verify_n_max = -1;
  std::string verify_format = "text";
  CLI::App* verify = app.add_subcommand(
      "verify",
      "Check an identity (or `all`, or `bijection <name> <size>`) by "
      "exhaustive enumeration");
  verify->add_option("target", verify_target,
                     "identity name, `all`, or `bijection`")
      ->required();
  verify->add_option("rest", verify_rest, "for `bijection`: <name> <size>");
  CLI::Option* opt_n_max =
      verify->add_option("--n-max", verify_n_max, "largest semilength to check");
  verify->add_option("--format", verify_format, "text|csv|json|bfile");
  verify->callback([&]() {
    std::optional<long long> n_max;
    if (opt_n_max->count() > 0) n_max = verify_n_max;
    rc = run_verify(verify_target, verify_rest, n_max, verify_format);
  });

  // --- table -----------------------------------------------------------------
  std::string table_identity;
  long long table_n_max = 0;
  std::string table_format = "text";
  CLI::App* table = app.add_subcommand(
      "table", "Print an identity's enumerated triangle rows n = 1..N");
  table->add_option("identity", table_identity, "identity name")->required();
  table->add_option("--n-max", table_n_max, "largest row")->required();
  table->add_option("--format", table_format, "text|csv|json|bfile");
  table->callback(
      [&]() { rc = run_table(table_identity, table_n_max, table_format); });

  // --- distribution ------------------------------------------------------------
  std::string dist_family;
  std::vector<long long> dist_params;
  std::string dist_stat;
  std::string dist_format = "text";
  CLI::App* dist = app.add_subcommand(
      "distribution", "Statistic distribution over one enumerated family");
  dist->add_option("family", dist_family, "family name")->required();
  dist->add_option("params", dist_params, "integer family parameters");
  dist->add_option("--stat", dist_stat, "statistic name")->required();
  dist->add_option("--format", dist_format, "text|csv|json|bfile");
  dist->callback([&]() {
    rc = run_distribution(dist_family, dist_params, dist_stat, dist_format);
  });

  // --- render ----------------------------------------------------------------
  std::string render_kind;
  std::vector<std::string> render_input;
  std::string render_marks;
  std::string render_style = "ascii";
  CLI::App* render = app.add_subcommand(
      "render", "Draw a path, Schroder path, or tree as ASCII or SVG");
  render->add_option("kind", render_kind, "path|schroder|tree")->required();
  render->add_option("object", render_input, "object in its line serialization")
      ->required();
  render->add_option("--marks", render_marks, "marked vertices, e.g. 2,3,4");
  render->add_option("--style", render_style, "ascii|svg");
  render->callback([&]() {
    rc = run_render(render_kind, join(render_input), render_marks,
                    render_style);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
