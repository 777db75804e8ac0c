#include "catcomb/catcomb.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "core/bijections.hpp"
#include "core/enumerate.hpp"
#include "core/errors.hpp"
#include "core/identities.hpp"
#include "core/path.hpp"
#include "core/render.hpp"
#include "core/schroder.hpp"
#include "core/tree.hpp"

namespace {

using namespace catcomb;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) std::abort();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& message) {
  if (err != nullptr) *err = dup_string(message);
}

cc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return CC_ERR_PARSE;
    case ErrorCode::DomainError:
      return CC_ERR_DOMAIN;
    case ErrorCode::UnknownName:
      return CC_ERR_UNKNOWN_NAME;
    case ErrorCode::BoundsError:
      return CC_ERR_BOUNDS;
    case ErrorCode::InternalError:
      return CC_ERR_INTERNAL;
  }
  return CC_ERR_INTERNAL;
}

template <typename Fn>
cc_status guarded(char** err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    set_err(err, e.what());
    return status_of(e.code());
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return CC_ERR_INTERNAL;
  }
}

std::vector<long long> param_vector(const long long* params, size_t n_params) {
  if (params == nullptr && n_params != 0) {
    fail(ErrorCode::DomainError, "parameter array is null");
  }
  return std::vector<long long>(params, params + n_params);
}

// ---------------------------------------------------------------------------
// Bijection plumbing.
// ---------------------------------------------------------------------------

struct BijectOptions {
  bool inverse = false;
  bool trace = false;
  std::optional<int> index;
  std::optional<std::string> variant;
  std::optional<char> cls;
  std::optional<std::vector<int>> marks;
};

std::vector<int> parse_mark_list(const std::string& text) {
  std::string commas = text;
  for (char& c : commas) {
    if (c == ';') c = ',';
  }
  return marks_from_text(commas);
}

BijectOptions parse_options(const char* options) {
  BijectOptions out;
  if (options == nullptr) return out;
  std::string text(options);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string token = text.substr(pos, end - pos);
    pos = end + 1;
    if (token.empty()) continue;
    const std::size_t eq = token.find('=');
    const std::string key = token.substr(0, eq);
    const std::string value =
        eq == std::string::npos ? std::string() : token.substr(eq + 1);
    if (key == "inverse" && eq == std::string::npos) {
      out.inverse = true;
    } else if (key == "trace" && eq == std::string::npos) {
      out.trace = true;
    } else if (key == "index" && !value.empty()) {
      out.index = std::stoi(value);
    } else if (key == "variant" && !value.empty()) {
      out.variant = value;
    } else if (key == "class" && value.size() == 1 &&
               (value[0] == 'A' || value[0] == 'B')) {
      out.cls = value[0];
    } else if (key == "marks") {
      out.marks = parse_mark_list(value);
    } else {
      fail(ErrorCode::DomainError, "unrecognized option '" + token + "'");
    }
  }
  return out;
}

std::pair<std::string, std::string> split_line_tail(const std::string& line) {
  const std::size_t space = line.find(' ');
  if (space == std::string::npos) return {line, ""};
  return {line.substr(0, space), line.substr(space + 1)};
}

Path parse_word_input(const std::string& line) { return Path::parse(line); }

MarkedPath parse_marked_input(const std::string& line,
                              const BijectOptions& opt, MarkKind kind) {
  const auto [word, tail] = split_line_tail(line);
  std::vector<int> marks;
  if (!tail.empty()) marks = marks_from_text(tail);
  if (opt.marks.has_value()) {
    if (!marks.empty()) {
      fail(ErrorCode::DomainError,
           "marks given both in the input line and as an option");
    }
    marks = *opt.marks;
  }
  return MarkedPath(Path::parse(word), marks, kind);
}

std::pair<std::string, std::string> parse_pair_input(const std::string& line) {
  std::istringstream is(line);
  std::string b;
  std::string t;
  if (!(is >> b)) fail(ErrorCode::ParseError, "expected a pair line \"B T\"");
  if (!(is >> t)) fail(ErrorCode::ParseError, "expected a pair line \"B T\"");
  std::string rest;
  if (is >> rest) {
    fail(ErrorCode::ParseError, "trailing text after the pair line");
  }
  if (b == ".") b.clear();
  if (t == ".") t.clear();
  return {b, t};
}

std::string pair_line(const std::string& b, const std::string& t) {
  return (b.empty() ? "." : b) + ' ' + (t.empty() ? "." : t);
}

std::string marked_line(const MarkedPath& m) {
  std::string out = m.path().word();
  if (!m.marks().empty()) {
    out += ' ';
    out += marks_to_text(m.marks());
  }
  return out;
}

PairRole role_from_variant(const std::string& name) {
  if (name == "gv-long-interior" || name == "long-interior") {
    return PairRole::GvLongInterior;
  }
  if (name == "gv-x1-plus-x2" || name == "x1-plus-x2") {
    return PairRole::GvX1X2;
  }
  fail(ErrorCode::UnknownName, "unknown pair variant '" + name + "'");
}

std::string run_bijection(const std::string& name, const std::string& input,
                          const BijectOptions& opt, TraceSink trace) {
  const bool inv = opt.inverse;
  if (name == "du-to-dxd") {
    const Path p = parse_word_input(input);
    return (inv ? dxd_to_du(p, trace) : du_to_dxd(p, trace)).word();
  }
  if (name == "dxd-to-du") {
    const Path p = parse_word_input(input);
    return (inv ? du_to_dxd(p, trace) : dxd_to_du(p, trace)).word();
  }
  if (name == "dxd-to-du-explicit") {
    const Path p = parse_word_input(input);
    return (inv ? du_to_dxd(p, trace) : dxd_to_du_explicit(p, nullptr, trace))
        .word();
  }
  if (name == "deutsch-involution") {
    return deutsch_involution(parse_word_input(input), trace).word();
  }
  if (name == "reverse-path") {
    return reverse_path(parse_word_input(input), trace).word();
  }
  if (name == "cycle-rotate") {
    if (inv) {
      fail(ErrorCode::DomainError,
           "cycle-rotate has no registered inverse direction");
    }
    if (!opt.index.has_value()) {
      fail(ErrorCode::DomainError, "cycle-rotate needs index=<i>");
    }
    const auto [word, tail] = split_line_tail(input);
    std::vector<int> marks;
    if (!tail.empty()) marks = marks_from_text(tail);
    if (opt.marks.has_value()) {
      if (!marks.empty()) {
        fail(ErrorCode::DomainError,
             "marks given both in the input line and as an option");
      }
      marks = *opt.marks;
    }
    const RotateResult res =
        cycle_rotate(Path::parse(word), *opt.index, marks, trace);
    std::string out = res.path.word();
    if (!res.marks.empty()) {
      out += ' ';
      out += marks_to_text(res.marks);
    }
    return out;
  }
  if (name == "df-to-schroder") {
    if (inv) {
      return marked_line(schroder_to_df(SchroderPath::parse(input), trace));
    }
    return df_to_schroder(parse_marked_input(input, opt, MarkKind::DF), trace)
        .word();
  }
  if (name == "levine-to-dyck") {
    if (inv) {
      const auto [b, t] = dyck_to_levine(parse_word_input(input), trace);
      return pair_line(b, t);
    }
    const auto [b, t] = parse_pair_input(input);
    return levine_to_dyck(b, t, trace).word();
  }
  if (name == "marks-to-odd-ascents") {
    if (inv) {
      return marked_line(odd_ascents_to_marks(parse_word_input(input), trace));
    }
    return marks_to_odd_ascents(parse_marked_input(input, opt, MarkKind::DF),
                                trace)
        .word();
  }
  if (name == "dimer-to-hill") {
    const Path p = parse_word_input(input);
    return (inv ? hill_to_dimer(p, trace) : dimer_to_hill(p, trace)).word();
  }
  if (name == "finelike-to-fine") {
    if (inv) {
      return marked_line(fine_to_finelike(parse_word_input(input), trace));
    }
    return finelike_to_fine(parse_marked_input(input, opt, MarkKind::IA),
                            trace)
        .word();
  }
  if (name == "gv-adjust") {
    if (!opt.variant.has_value()) {
      fail(ErrorCode::DomainError,
           "gv-adjust needs variant=gv-long-interior or variant=gv-x1-plus-x2");
    }
    const PairRole role = role_from_variant(*opt.variant);
    const auto [b, t] = parse_pair_input(input);
    if (inv) {
      if (!opt.cls.has_value()) {
        fail(ErrorCode::DomainError,
             "the inverse adjustment needs class=A or class=B");
      }
      const auto [rb, rt] = gv_unadjust(*opt.cls, b, t, role, trace);
      return pair_line(rb, rt);
    }
    const GvAdjustResult res = gv_adjust(b, t, role, trace);
    return std::string(1, res.cls) + ' ' + pair_line(res.b, res.t);
  }
  if (name == "chain-long-interior" || name == "chain-x1-plus-x2") {
    if (inv) {
      fail(ErrorCode::DomainError,
           "the pair-to-path chain has no registered inverse direction");
    }
    const PairRole role = name == "chain-long-interior"
                              ? PairRole::GvLongInterior
                              : PairRole::GvX1X2;
    const auto [b, t] = parse_pair_input(input);
    const ChainResult res = chain_to_dyck(b, t, role, trace);
    return std::string(1, res.cls) + ' ' + res.path.word();
  }
  fail(ErrorCode::UnknownName, "unknown bijection '" + name + "'");
}

std::string bijection_report_text(const BijectionReport& rep) {
  std::ostringstream os;
  os << "bijection: " << rep.name << "\n";
  os << "size: " << rep.size << "\n";
  os << "objects: " << rep.objects << "\n";
  for (const std::string& line : rep.checks) os << "  " << line << "\n";
  if (!rep.counterexample.empty()) {
    os << "counterexample: " << rep.counterexample << "\n";
  }
  os << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";
  return os.str();
}

std::string normalize_name(const char* name) {
  std::string out;
  for (const char* p = name; *p != '\0'; ++p) {
    out += *p == '_' ? '-' : static_cast<char>(std::tolower(
                                 static_cast<unsigned char>(*p)));
  }
  return out;
}

}  // namespace

extern "C" {

struct cc_stream {
  catcomb::ObjectStream stream;
};

void cc_string_free(char* s) { std::free(s); }

const char* cc_status_name(cc_status status) {
  switch (status) {
    case CC_OK:
      return "ok";
    case CC_EOF:
      return "end of stream";
    case CC_ERR_USAGE:
      return "usage error";
    case CC_ERR_PARSE:
      return "parse error";
    case CC_ERR_DOMAIN:
      return "domain error";
    case CC_ERR_UNKNOWN_NAME:
      return "unknown name";
    case CC_ERR_BOUNDS:
      return "bounds error";
    case CC_ERR_MISMATCH:
      return "verification mismatch";
    case CC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

cc_status cc_list_families(char** out) {
  if (out == nullptr) return CC_ERR_USAGE;
  *out = nullptr;
  return guarded(nullptr, [&]() {
    std::string text;
    for (const auto& [name, fam] : family_registry()) {
      (void)fam;
      text += name;
      text += '\n';
    }
    *out = dup_string(text);
    return CC_OK;
  });
}

cc_status cc_list_statistics(char** out) {
  if (out == nullptr) return CC_ERR_USAGE;
  *out = nullptr;
  return guarded(nullptr, [&]() {
    std::string text;
    for (const auto& [name, kind] : stat_registry()) {
      (void)kind;
      text += name;
      text += '\n';
    }
    text += "nodes_adj_leaf\n";
    *out = dup_string(text);
    return CC_OK;
  });
}

cc_status cc_list_bijections(char** out) {
  if (out == nullptr) return CC_ERR_USAGE;
  *out = nullptr;
  return guarded(nullptr, [&]() {
    std::string text;
    for (const BijectionInfo& info : bijection_registry()) {
      text += info.name;
      text += '\t';
      text += info.summary;
      text += " (verified up to size ";
      text += std::to_string(info.max_size);
      text += ")\n";
    }
    *out = dup_string(text);
    return CC_OK;
  });
}

cc_status cc_list_identities(char** out) {
  if (out == nullptr) return CC_ERR_USAGE;
  *out = nullptr;
  return guarded(nullptr, [&]() {
    std::string text;
    for (const IdentityInfo& info : identity_registry()) {
      text += info.name;
      text += '\t';
      text += info.summary;
      text += " (verified up to n = ";
      text += std::to_string(info.verify_max);
      text += ")\n";
    }
    *out = dup_string(text);
    return CC_OK;
  });
}

cc_status cc_path_stat(const char* word, const char* stat_name, long long* out,
                       char** err) {
  if (word == nullptr || stat_name == nullptr || out == nullptr) {
    return CC_ERR_USAGE;
  }
  return guarded(err, [&]() {
    const Path p = Path::parse(word);
    *out = statistic(p, stat_from_name(stat_name));
    return CC_OK;
  });
}

cc_status cc_path_stats_all(const char* word, char** out, char** err) {
  if (word == nullptr || out == nullptr) return CC_ERR_USAGE;
  *out = nullptr;
  return guarded(err, [&]() {
    const Path p = Path::parse(word);
    std::string text;
    for (const auto& [name, kind] : stat_registry()) {
      text += name;
      text += '=';
      text += std::to_string(statistic(p, kind));
      text += '\n';
    }
    *out = dup_string(text);
    return CC_OK;
  });
}

cc_status cc_tree_stat(const char* parens, long long* out, char** err) {
  if (parens == nullptr || out == nullptr) return CC_ERR_USAGE;
  return guarded(err, [&]() {
    *out = nodes_adjacent_to_leaf(tree_from_parens(parens));
    return CC_OK;
  });
}

cc_status cc_stream_open(const char* family, const long long* params,
                         size_t n_params, cc_stream** out, char** err) {
  if (family == nullptr || out == nullptr) return CC_ERR_USAGE;
  *out = nullptr;
  return guarded(err, [&]() {
    const FamilySpec spec =
        make_family_spec(family, param_vector(params, n_params));
    *out = new cc_stream{ObjectStream(spec)};
    return CC_OK;
  });
}

cc_status cc_stream_next(cc_stream* s, char** line) {
  if (s == nullptr || line == nullptr) return CC_ERR_USAGE;
  *line = nullptr;
  return guarded(nullptr, [&]() {
    std::optional<std::string> next = s->stream.next_line();
    if (!next.has_value()) return CC_EOF;
    *line = dup_string(*next);
    return CC_OK;
  });
}

cc_status cc_stream_reset(cc_stream* s) {
  if (s == nullptr) return CC_ERR_USAGE;
  return guarded(nullptr, [&]() {
    s->stream.reset();
    return CC_OK;
  });
}

void cc_stream_free(cc_stream* s) { delete s; }

cc_status cc_count(const char* family, const long long* params,
                   size_t n_params, unsigned long long* out, char** err) {
  if (family == nullptr || out == nullptr) return CC_ERR_USAGE;
  return guarded(err, [&]() {
    const FamilySpec spec =
        make_family_spec(family, param_vector(params, n_params));
    *out = static_cast<unsigned long long>(family_count(spec));
    return CC_OK;
  });
}

cc_status cc_biject(const char* name, const char* input, const char* options,
                    char** out, char** err) {
  if (name == nullptr || input == nullptr || out == nullptr) {
    return CC_ERR_USAGE;
  }
  *out = nullptr;
  return guarded(err, [&]() {
    const BijectOptions opt = parse_options(options);
    std::vector<std::string> trace_lines;
    TraceSink trace = opt.trace ? &trace_lines : nullptr;
    std::string text =
        run_bijection(normalize_name(name), input, opt, trace);
    for (const std::string& line : trace_lines) {
      text += '\n';
      text += line;
    }
    *out = dup_string(text);
    return CC_OK;
  });
}

cc_status cc_verify_bijection(const char* name, long long size, char** report,
                              int* pass, char** err) {
  if (name == nullptr || report == nullptr) return CC_ERR_USAGE;
  *report = nullptr;
  return guarded(err, [&]() {
    const BijectionReport rep = verify_bijection(name, size);
    *report = dup_string(bijection_report_text(rep));
    if (pass != nullptr) *pass = rep.pass ? 1 : 0;
    return rep.pass ? CC_OK : CC_ERR_MISMATCH;
  });
}

cc_status cc_formula(const char* identity, long long n, long long k,
                     unsigned long long* out, char** err) {
  if (identity == nullptr || out == nullptr) return CC_ERR_USAGE;
  return guarded(err, [&]() {
    *out = identity_formula(identity_from_name(identity), n, k);
    return CC_OK;
  });
}

cc_status cc_formula_refined(long long n, long long j, long long k,
                             unsigned long long* out, char** err) {
  if (out == nullptr) return CC_ERR_USAGE;
  return guarded(err, [&]() {
    *out = fine_refined_formula(n, j, k);
    return CC_OK;
  });
}

cc_status cc_distribution(const char* family, const long long* params,
                          size_t n_params, const char* stat_name,
                          const char* format, char** out, char** err) {
  if (family == nullptr || stat_name == nullptr || out == nullptr) {
    return CC_ERR_USAGE;
  }
  *out = nullptr;
  return guarded(err, [&]() {
    const FamilySpec spec =
        make_family_spec(family, param_vector(params, n_params));
    const Distribution dist = distribution(spec, stat_name);
    const OutputFormat fmt =
        output_format_from_name(format == nullptr ? "text" : format);
    *out = dup_string(format_distribution(dist, fmt));
    return CC_OK;
  });
}

cc_status cc_verify_identity(const char* identity, long long n_max,
                             const char* format, char** out, int* pass,
                             char** err) {
  if (identity == nullptr || out == nullptr) return CC_ERR_USAGE;
  *out = nullptr;
  return guarded(err, [&]() {
    const VerificationReport rep =
        verify_identity(identity_from_name(identity), n_max);
    const OutputFormat fmt =
        output_format_from_name(format == nullptr ? "text" : format);
    *out = dup_string(format_report(rep, fmt));
    if (pass != nullptr) *pass = rep.pass ? 1 : 0;
    return rep.pass ? CC_OK : CC_ERR_MISMATCH;
  });
}

cc_status cc_verify_all(long long n_max, const char* format, char** out,
                        int* pass, char** err) {
  if (out == nullptr) return CC_ERR_USAGE;
  *out = nullptr;
  return guarded(err, [&]() {
    const std::vector<VerificationReport> reps = verify_all(n_max);
    const OutputFormat fmt =
        output_format_from_name(format == nullptr ? "text" : format);
    *out = dup_string(format_reports(reps, fmt));
    bool all_pass = true;
    for (const VerificationReport& r : reps) all_pass = all_pass && r.pass;
    if (pass != nullptr) *pass = all_pass ? 1 : 0;
    return all_pass ? CC_OK : CC_ERR_MISMATCH;
  });
}

cc_status cc_table(const char* identity, long long n_max, const char* format,
                   char** out, char** err) {
  if (identity == nullptr || out == nullptr) return CC_ERR_USAGE;
  *out = nullptr;
  return guarded(err, [&]() {
    const OutputFormat fmt =
        output_format_from_name(format == nullptr ? "text" : format);
    *out = dup_string(
        format_table(identity_from_name(identity), n_max, fmt));
    return CC_OK;
  });
}

cc_status cc_render(const char* kind, const char* input, const char* marks,
                    const char* style, char** out, char** err) {
  if (kind == nullptr || input == nullptr || out == nullptr) {
    return CC_ERR_USAGE;
  }
  *out = nullptr;
  return guarded(err, [&]() {
    const std::string kind_key = normalize_name(kind);
    const std::string style_key =
        normalize_name(style == nullptr ? "ascii" : style);
    if (style_key != "ascii" && style_key != "svg") {
      fail(ErrorCode::UnknownName, "unknown style '" + style_key + "'");
    }
    std::vector<int> mark_list;
    if (marks != nullptr && *marks != '\0') {
      mark_list = parse_mark_list(marks);
    }
    std::string text;
    if (kind_key == "path") {
      const Path p = Path::parse(input);
      text = style_key == "ascii" ? render_path_ascii(p, mark_list)
                                  : render_path_svg(p, mark_list);
    } else if (kind_key == "schroder") {
      if (!mark_list.empty()) {
        fail(ErrorCode::DomainError, "marks apply to plain paths");
      }
      const SchroderPath s = SchroderPath::parse(input);
      text = style_key == "ascii" ? render_schroder_ascii(s)
                                  : render_schroder_svg(s);
    } else if (kind_key == "tree") {
      if (!mark_list.empty()) {
        fail(ErrorCode::DomainError, "marks apply to plain paths");
      }
      const OrderedTree t = tree_from_parens(input);
      text = style_key == "ascii" ? render_tree_ascii(t) : render_tree_svg(t);
    } else {
      fail(ErrorCode::UnknownName, "unknown render kind '" + kind_key + "'");
    }
    *out = dup_string(text);
    return CC_OK;
  });
}

}  // extern "C"
