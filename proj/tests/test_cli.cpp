// End-to-end checks for the command-line tool. argv[1] is the binary path;
// each case shells out and checks the exit code and captured output.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;
std::string g_cli;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " 2>&1";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    std::cerr << "FATAL: popen failed for: " << cmd << "\n";
    std::exit(2);
  }
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    res.output.append(buf, got);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

RunResult run_shell(const std::string& pipeline) {
  RunResult res;
  FILE* pipe = popen(pipeline.c_str(), "r");
  if (pipe == nullptr) {
    std::cerr << "FATAL: popen failed for: " << pipeline << "\n";
    std::exit(2);
  }
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    res.output.append(buf, got);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

void expect(bool ok, const std::string& what, const std::string& detail) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n  " << detail << "\n";
  }
}

void expect_code(const std::string& args, int want) {
  const RunResult res = run(args);
  expect(res.exit_code == want, "exit code of `" + args + "`",
         "want " + std::to_string(want) + ", got " +
             std::to_string(res.exit_code) + "\noutput:\n" + res.output);
}

void expect_output(const std::string& args, const std::string& want) {
  const RunResult res = run(args);
  expect(res.exit_code == 0, "exit code of `" + args + "`",
         "want 0, got " + std::to_string(res.exit_code) + "\noutput:\n" +
             res.output);
  expect(res.output == want, "output of `" + args + "`",
         "want:\n" + want + "got:\n" + res.output);
}

void expect_contains(const std::string& args, const std::string& needle,
                     int want_code = 0) {
  const RunResult res = run(args);
  expect(res.exit_code == want_code, "exit code of `" + args + "`",
         "want " + std::to_string(want_code) + ", got " +
             std::to_string(res.exit_code) + "\noutput:\n" + res.output);
  expect(res.output.find(needle) != std::string::npos,
         "output of `" + args + "` contains \"" + needle + "\"",
         "got:\n" + res.output);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-cli-binary>\n";
    return 2;
  }
  g_cli = argv[1];

  // Statistics of a single word.
  expect_contains("stats UUDUDUUDDDUD --all", "peaks=4\n");
  expect_contains("stats UUDUDUUDDDUD --all", "valleys=3\n");
  expect_contains("stats UUDUDUUDDDUD --all", "dxd=3\n");
  expect_contains("stats UUDUDUUDDDUD --all", "hills=1\n");
  expect_contains("stats UUDUDUUDDDUD --all", "long_interior_inclines=2\n");
  expect_output("stats UUDUDUUDDDUD --stat peaks", "4\n");
  expect_output("stats '(()())' --tree", "1\n");
  expect_code("stats UUDUDUUDDDUD --all --stat peaks", 2);
  expect_code("stats UXD --stat peaks", 2);

  // Enumeration.
  expect_output("enumerate dyck 3",
                "UUUDDD\nUUDUDD\nUUDDUD\nUDUUDD\nUDUDUD\n");
  expect_output("enumerate dyck 3 --count-only", "5\n");
  expect_output("enumerate schroder 2 --count-only", "6\n");
  expect_output("enumerate marked-ia 2 1", "UUDD 1\n");
  expect_output("enumerate gv-long-interior 2 0 --count-only", "2\n");
  expect_code("enumerate dyck 31", 2);
  expect_code("enumerate nope 3", 2);
  expect_code("enumerate dyck", 2);

  // Registries.
  expect_contains("list families", "dyck");
  expect_contains("list bijections", "du-to-dxd");
  expect_contains("list identities", "long-interior");
  expect_contains("list statistics", "nodes_adj_leaf");
  expect_code("list nonsense", 2);

  // Bijections.
  expect_output("biject du-to-dxd UD", "UD\n");
  expect_output("biject du-to-dxd UDUUDD", "UUUDDD\n");
  expect_output("biject du-to-dxd UUUDDD --inverse", "UDUUDD\n");
  expect_output("biject cycle-rotate DDUU --index 2", "UUDD\n");
  expect_output("biject df-to-schroder UUDD --marks 0,1", "FF\n");
  expect_output("biject df-to-schroder UFD --inverse", "UUDD 1\n");
  expect_output("biject levine-to-dyck EENNENN NEENNEN",
                "UUDUDUUUDDDUUDDD\n");
  expect_output("biject gv-adjust EN . --variant gv-long-interior", "A E E\n");
  expect_output("biject chain-long-interior ENN N", "A UUUDDD\n");
  expect_code("biject cycle-rotate DDUU --inverse --index 1", 2);
  expect_code("biject nope UD", 2);
  expect_contains("biject du-to-dxd UDUUDD --trace", "UUUDDD\n");

  // Round trip through stdin pipelines.
  {
    const std::string base = "\"" + g_cli + "\" enumerate dyck 5";
    const RunResult plain = run_shell(base);
    const RunResult round = run_shell(
        base + " | \"" + g_cli + "\" biject du-to-dxd --stdin | \"" + g_cli +
        "\" biject du-to-dxd --inverse --stdin");
    expect(round.exit_code == 0, "stdin round trip exit code", round.output);
    expect(round.output == plain.output && !plain.output.empty(),
           "stdin round trip preserves the family", round.output);
  }

  // Verification.
  expect_contains("verify long-interior --n-max 7 --format csv",
                  "identity,n,k,j,formula,enumerated,transported,ok\n");
  expect_contains("verify long-interior --n-max 7 --format csv",
                  "long-interior,7,2,,175,175,175,true\n");
  expect_contains("verify tree-nodes --n-max 6", "verdict: pass");
  expect_contains("verify narayana --n-max 6", "erratum");
  expect_contains("verify all --n-max 6", "verdict: pass");
  expect_contains("verify bijection deutsch-involution 6", "verdict: pass");
  expect_code("verify nope --n-max 3", 2);
  expect_code("verify long-interior", 2);            // missing --n-max
  expect_code("verify long-interior --n-max 99", 2);  // beyond the cap
  expect_code("verify bijection du-to-dxd 13", 2);
  expect_code("verify bijection du-to-dxd notanumber", 2);

  // Tables and distributions.
  expect_contains("table long-interior --n-max 7", "n=7: 7 70 175 140 35 2\n");
  expect_contains("table tree-nodes --n-max 8", "n=8: 1 84 630 660 55\n");
  expect_output("table fine-manifest --n-max 6 --format bfile",
                "0 1\n1 0\n2 1\n3 2\n4 6\n5 18\n6 57\n");
  expect_code("table long-interior", 2);  // --n-max is required
  expect_output("distribution trees 6 --stat nodes_adj_leaf",
                "trees(6) nodes_adj_leaf: 1 35 84 12 (total 132)\n");
  expect_output("distribution dyck 7 --stat long_interior_inclines",
                "dyck(7) long_interior_inclines: 7 70 175 140 35 2 "
                "(total 429)\n");
  expect_code("distribution trees 6 --stat peaks", 2);

  // Rendering.
  expect_output("render path UD", "/\\\n");
  expect_output("render schroder F", "==\n");
  expect_output("render path UUDD --marks 0,4", "*   *\n /\\\n/  \\\n");
  expect_contains("render path UUDD --style svg",
                  "points=\"10,50 30,30 50,10 70,30 90,50\"");
  expect_code("render tree '(()())' --marks 1", 2);
  expect_code("render path UD --style jpeg", 2);

  // Top-level behavior.
  expect_code("--help", 0);
  expect_code("nonsense", 2);
  expect_code("", 2);

  // Byte determinism of a formatted report.
  {
    const RunResult a = run("verify tree-nodes --n-max 6 --format json");
    const RunResult b = run("verify tree-nodes --n-max 6 --format json");
    expect(a.exit_code == 0 && a.output == b.output && !a.output.empty(),
           "verify output is byte-stable", a.output);
  }

  if (g_failures == 0) {
    std::cout << "cli: all checks passed\n";
    return 0;
  }
  std::cerr << "cli: " << g_failures << " check(s) failed\n";
  return 1;
}
