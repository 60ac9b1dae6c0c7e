// End-to-end tests of the pcsym executable.  The binary path arrives in
// the PCSYM_CLI_PATH environment variable, or failing that in a macro of
// the same name baked in by the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& input = "") {
  const char* exe = std::getenv("PCSYM_CLI_PATH");
#ifdef PCSYM_CLI_PATH
  if (exe == nullptr) exe = PCSYM_CLI_PATH;
#endif
  REQUIRE(exe != nullptr);
  auto dir = std::filesystem::temp_directory_path();
  auto tag = std::to_string(::getpid());
  auto in_path = dir / ("pcsym_cli_in_" + tag);
  auto out_path = dir / ("pcsym_cli_out_" + tag);
  auto err_path = dir / ("pcsym_cli_err_" + tag);
  {
    std::ofstream in(in_path);
    in << input;
  }
  std::string cmd = std::string("'") + exe + "' " + args + " < " +
                    in_path.string() + " > " + out_path.string() + " 2> " +
                    err_path.string();
  int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.out = slurp(out_path);
  res.err = slurp(err_path);
  std::filesystem::remove(in_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return res;
}

json term(std::vector<int> partition, long num, long den = 1) {
  json t;
  t["partition"] = partition;
  t["num"] = num;
  t["den"] = den;
  return t;
}

}  // namespace

TEST_CASE("xi prints the three-vertex path expansion") {
  RunResult res = run_cli("xi", "digraph 3\n1 2\n2 3\n");
  CHECK(res.exit_code == 0);
  json doc = json::parse(res.out);
  CHECK(doc.at("basis") == "m");
  json expected = json::array(
      {term({3}, 1), term({2, 1}, 2), term({1, 1, 1}, 6)});
  CHECK(doc.at("terms") == expected);
}

TEST_CASE("cover prints i + j for the single loop") {
  RunResult res = run_cli("cover", "digraph 1\n1 1\n");
  CHECK(res.exit_code == 0);
  json doc = json::parse(res.out);
  CHECK(doc.at("vars") == json::array({"i", "j"}));
  CHECK(doc.at("terms").size() == 2);
  RunResult pretty = run_cli("cover --pretty", "digraph 1\n1 1\n");
  CHECK(pretty.exit_code == 0);
  CHECK(pretty.out == "i + j\n");
}

TEST_CASE("xi distinguishes pure-x output from two-alphabet output") {
  // An acyclic digraph prints a one-alphabet monomial expansion.
  RunResult acyclic = run_cli("xi", "digraph 2\n1 2\n");
  json doc = json::parse(acyclic.out);
  CHECK(doc.contains("basis"));
  // A loop has a genuine cycle alphabet part.
  RunResult loop = run_cli("xi", "digraph 1\n1 1\n");
  json doc2 = json::parse(loop.out);
  CHECK(!doc2.contains("basis"));
  CHECK(doc2.at("terms").size() == 2);
  // The y0 flag projects the cycle part away.
  RunResult projected = run_cli("xi --y0", "digraph 1\n1 1\n");
  json doc3 = json::parse(projected.out);
  CHECK(doc3.at("basis") == "m");
  CHECK(doc3.at("terms") == json::array({term({1}, 1)}));
}

TEST_CASE("printed functions round-trip through expand unchanged") {
  std::string input = "graph 4\n1 2\n2 3\n3 4\n1 4\n";
  for (const std::string basis : {"m", "p", "e", "s", "xitilde"}) {
    RunResult first = run_cli("xg --basis " + basis, input);
    CHECK(first.exit_code == 0);
    RunResult cycled =
        run_cli("expand --basis " + basis, first.out);
    CHECK(cycled.exit_code == 0);
    CHECK(cycled.out == first.out);
  }
  // Via a different basis and back.
  RunResult in_s = run_cli("xg --basis s", input);
  RunResult via_p = run_cli("expand --basis p", in_s.out);
  RunResult back = run_cli("expand --basis s", via_p.out);
  CHECK(back.out == in_s.out);
}

TEST_CASE("pretty renderings match hand values") {
  RunResult xg = run_cli("xg --basis e --pretty", "graph 2\n1 2\n");
  CHECK(xg.out == "2 e[2]\n");
  RunResult rook = run_cli("rook --pretty", "digraph 2\n1 2\n2 1\n");
  CHECK(rook.out == "rook numbers: 1 2 1\nR = i^2 + i + 1\n");
  RunResult chit = run_cli("chitilde --pretty", "graph 1\n");
  CHECK(chit.out == "m\n");
}

TEST_CASE("rook JSON carries numbers and polynomial together") {
  RunResult res = run_cli("rook", "digraph 2\n1 1\n");
  CHECK(res.exit_code == 0);
  json doc = json::parse(res.out);
  CHECK(doc.at("rook_numbers") == json::array({1, 1, 0}));
  CHECK(doc.at("polynomial").at("vars") == json::array({"i", "j"}));
}

TEST_CASE("small check suite passes through the command line") {
  RunResult res = run_cli("check all --max-vertices 3");
  CHECK(res.exit_code == 0);
  int lines = 0;
  std::istringstream stream(res.out);
  std::string line;
  while (std::getline(stream, line)) {
    ++lines;
    json doc = json::parse(line);
    CHECK(doc.at("pass") == true);
    CHECK(!doc.contains("elapsed_ms"));
  }
  CHECK(lines == 52);
  // Determinism: a second run is byte-identical.
  RunResult again = run_cli("check all --max-vertices 3");
  CHECK(again.out == res.out);
  // Single named check with timings requested.
  RunResult timed =
      run_cli("check u_v_binomial_sums --max-vertices 7 --timings");
  CHECK(timed.exit_code == 0);
  CHECK(json::parse(timed.out).contains("elapsed_ms"));
}

TEST_CASE("census reports its findings and exits nonzero on failed claims") {
  RunResult res = run_cli("census");
  CHECK(res.exit_code == 1);
  json doc = json::parse(res.out);
  CHECK(doc.at("labelled_total") == 132);
  CHECK(doc.at("class_count") == 6);
  CHECK(doc.at("e_positive_classes") == 2);
  CHECK(doc.at("report").at("pass") == false);
}

TEST_CASE("usage and parse failures exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("check not_a_check").exit_code == 2);
  RunResult bad = run_cli("xi", "digraph 2\n1 3\n");
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  RunResult wrong_kind = run_cli("xg", "digraph 2\n1 2\n");
  CHECK(wrong_kind.exit_code == 2);
  RunResult bad_json = run_cli("expand --basis p", "not json");
  CHECK(bad_json.exit_code == 2);
  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
}
