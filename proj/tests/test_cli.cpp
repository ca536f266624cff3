// Drives the installed binary end to end; the path arrives as argv[1].

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
int g_failures = 0;
int g_checks = 0;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args) {
  const std::string stamp = std::to_string(getpid());
  const std::string out_path = "/tmp/treeperm_cli_out." + stamp;
  const std::string err_path = "/tmp/treeperm_cli_err." + stamp;
  const std::string command =
      "\"" + g_cli + "\" " + args + " >" + out_path + " 2>" + err_path;
  const int raw = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

void expect(bool ok, const std::string& what, const std::string& detail) {
  ++g_checks;
  if (!ok) {
    ++g_failures;
    std::fprintf(stderr, "FAILED: %s\n%s\n", what.c_str(), detail.c_str());
  }
}

void expect_output(const std::string& args, const std::string& expected_out) {
  const RunResult r = run(args);
  expect(r.exit_code == 0 && r.out == expected_out && r.err.empty(),
         args,
         "exit " + std::to_string(r.exit_code) + "\nstdout <<" + r.out +
             ">>\nstderr <<" + r.err + ">>");
}

void expect_failure(const std::string& args, const std::string& err_mark) {
  const RunResult r = run(args);
  expect(r.exit_code != 0 && r.err.find(err_mark) != std::string::npos,
         args,
         "exit " + std::to_string(r.exit_code) + "\nstderr <<" + r.err + ">>");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <cli-binary>\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];

  expect_output("p2t --d 2 --n 2 \"3,2,0,1\"",
                "kids: 1,4,3,2\n"
                "tree: (0 (1 3 2) 4)\n");
  expect_output("p2t --d 2 --n 2 --style infix \"3,2,0,1\"",
                "kids: 1,4,3,2\n"
                "tree: ((bxa)+c)\n");
  expect_output("p2t --d 2 --n 2 --style infix --unicode-times \"3,2,0,1\"",
                "kids: 1,4,3,2\n"
                "tree: ((b\xC3\x97"
                "a)+c)\n");
  expect_output("p2t --d 2 --n 2 --style functional \"3,2,0,1\"",
                "kids: 1,4,3,2\n"
                "tree: f0(f1(3,2),4)\n");
  expect_output("p2t --d 2 --n 2 --policy largest \"3,2,0,1\"",
                "kids: 2,1,3,4\n"
                "tree: (0 2 (1 3 4))\n");

  expect_output("t2p \"(0 (1 3 2) 4)\"", "perm: 3,2,0,1\n");
  expect_output("t2p --style functional \"f0(f1(3,2),4)\"", "perm: 3,2,0,1\n");
  expect_output("t2p --policy largest \"(0 2 (1 3 4))\"", "perm: 3,2,0,1\n");

  expect_output("count --d 3 --n 2", "shapes: 3, labeled: 720\n");
  expect_output("count --d 2 --n 10",
                "shapes: 16796, labeled: 2432902008176640000\n");
  expect_output("count --d 2 --n 0", "shapes: 1, labeled: 1\n");

  expect_output("enumerate --d 2 --n 1",
                "0\t0,1\t(0 1 2)\n"
                "1\t1,0\t(0 2 1)\n");

  {
    const RunResult all = run("enumerate --d 2 --n 2");
    int lines = 0;
    for (char c : all.out) lines += (c == '\n');
    expect(all.exit_code == 0 && lines == 24, "enumerate --d 2 --n 2",
           "exit " + std::to_string(all.exit_code) + ", " +
               std::to_string(lines) + " lines");
    expect(all.out.rfind("0\t0,1,2,3\t(1 (0 2 3) 4)\n", 0) == 0,
           "enumerate first row", all.out.substr(0, 40));
  }

  // Identical invocations must emit identical bytes, sampling included.
  {
    const std::string args = "sample --d 2 --n 2 --seed 42 --count 3";
    const RunResult first = run(args);
    const RunResult second = run(args);
    expect(first.exit_code == 0 && first.out == second.out &&
               first.out ==
                   "4,2,0,3\t(1 (0 4 2) 3)\n"
                   "3,4,0,2\t(1 (0 3 4) 2)\n"
                   "1,2,3,4\t(0 (1 3 4) 2)\n",
           args, "stdout <<" + first.out + ">>");
  }
  {
    const std::string args = "enumerate --d 2 --n 2 --style infix";
    const RunResult first = run(args);
    const RunResult second = run(args);
    expect(first.exit_code == 0 && first.out == second.out,
           "enumerate determinism", "outputs differ");
  }

  expect_output("verify --d 2 --n 3",
                "PASS (720 permutations, 5 shapes, 2 implementations agree)\n");
  expect_output("verify --d 2 --n 2",
                "PASS (24 permutations, 2 shapes, 2 implementations agree)\n");

  expect_failure("p2t --d 2 --n 2 \"0,0,1,2\"", "error:");
  expect_failure("p2t --d 2 --n 2 \"0,1\"", "error:");
  expect_failure("p2t --d 3 --n 1 --style infix \"0,1,2\"", "error:");
  expect_failure("t2p \"(0 (1 3 2) 4\"", "error:");
  expect_failure("enumerate --d 2 --n 7", "error:");
  expect_failure("verify --d 0 --n 2", "error:");

  // Usage problems print the synopsis, not a domain diagnostic.
  expect_failure("p2t --n 2 \"3,2,0,1\"", "Usage");
  expect_failure("bogus", "Usage");
  expect_failure("", "Usage");

  if (g_failures == 0) {
    std::printf("all %d cli checks passed\n", g_checks);
    return 0;
  }
  std::fprintf(stderr, "%d of %d cli checks failed\n", g_failures, g_checks);
  return 1;
}
