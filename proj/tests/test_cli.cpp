#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + JD3_BINARY + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("jd3_cli_test_" + name);
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("--bogus") == 2);
  CHECK(run("verify") == 2);
  CHECK(run("verify odd --max-legs") == 2);
  CHECK(run("verify odd --max-legs abc") == 2);
  CHECK(run("verify odd --unknown-flag") == 2);
  CHECK(run("verify asymptotics --regime three") == 2);
  CHECK(run("verify asymptotics --abc 2 8/5 1") == 2);                 // needs a single regime
  CHECK(run("verify asymptotics --regime one --abc 3 2 1") == 2);      // violates the ordering
  CHECK(run("verify asymptotics --regime one --abc 2 x 1") == 2);
  CHECK(run("dims --parity odd --legs 4") == 2);
  CHECK(run("dims --legs 4") == 2);
  CHECK(run("verify odd --max-legs 3 --threads 0") == 2);
}

TEST_CASE("help exits with 0") {
  CHECK(run("--help") == 0);
  CHECK(run("verify odd --help") == 0);
}

TEST_CASE("passing suites exit with 0 and write reports") {
  const auto json = scratch("odd.json"), csv = scratch("odd.csv");
  REQUIRE(run("verify odd --max-legs 9 --json " + json.string() + " --csv " + csv.string()) == 0);
  const auto j = nlohmann::json::parse(slurp(json));
  CHECK(j["suite"] == "odd");
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["total"] == j["checks"].size());
  CHECK(slurp(csv).rfind("id,params,expected,actual,pass\n", 0) == 0);
  CHECK(run("verify even --max-legs 8") == 0);
  CHECK(run("verify lemma --max-d 1") == 0);
  CHECK(run("verify asymptotics --max-d 1 --regime two --abc 10 6 3") == 0);
  CHECK(run("verify asymptotics --max-d 1 --regime one") == 0);
  CHECK(run("dims --parity odd --legs 13") == 0);
  CHECK(run("dims --parity even --legs 12") == 0);
  std::filesystem::remove(json);
  std::filesystem::remove(csv);
}

TEST_CASE("failing checks exit with 1") {
  CHECK(run("all --odd-max-legs 3 --even-max-legs 4 --lemma-max-d 0 --asym-max-d 0 --corrupt-closed-form") == 1);
}

TEST_CASE("unwritable report path is a usage error") {
  CHECK(run("verify even --max-legs 0 --json /nonexistent-dir/x.json") == 2);
}
