// End-to-end checks of the relieflab binary. The path to the built CLI comes
// from the RELIEFLAB_CLI environment variable (set by ctest).

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "relieflab/experiment.hpp"

using namespace relieflab;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* path = std::getenv("RELIEFLAB_CLI");
  REQUIRE(path != nullptr);
  return path;
}

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const fs::path capture = fs::temp_directory_path() / "relieflab_cli_capture.txt";
  const std::string command = cli_path() + " " + args + " > " + capture.string() + " 2>&1";
  const int status = std::system(command.c_str());
  std::ifstream in(capture);
  std::ostringstream out;
  out << in.rdbuf();
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out.str()};
}

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "relieflab_test_cli";
  fs::create_directories(dir);
  return dir;
}

int count_lines(const fs::path& path) {
  std::ifstream in(path);
  int lines = 0;
  std::string line;
  while (std::getline(in, line)) ++lines;
  return lines;
}

}  // namespace

TEST_CASE("generate writes the dataset pair") {
  const fs::path out = work_dir() / "mod";
  const RunResult r = run_cli("generate --kind modulo-p --relevant 3 --irrelevant 6 "
                              "--instances 100 --seed 7 --out " + out.string());
  INFO(r.output);
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(work_dir() / "mod.csv"));
  CHECK(fs::exists(work_dir() / "mod.meta.json"));
  CHECK(count_lines(work_dir() / "mod.csv") == 101);  // header + 100 rows
}

TEST_CASE("generate rejects a single-instance dataset") {
  const RunResult r = run_cli("generate --kind modulo-p --relevant 1 --irrelevant 1 "
                              "--instances 1 --seed 0 --out " +
                              (work_dir() / "tiny").string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("single class") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("generate --relevant 2 --irrelevant 2").exit_code == 2);  // --kind missing
  CHECK(run_cli("").exit_code == 2);                                      // subcommand required
  CHECK(run_cli("generate --kind majority --relevant 1 --irrelevant 1 --p 5 --out " +
                (work_dir() / "x").string())
            .exit_code == 2);  // --p without modulo-p
  CHECK(run_cli("weigh").exit_code == 2);
  CHECK(run_cli("plot --mode separability").exit_code == 2);
}

TEST_CASE("weigh is deterministic and supports json") {
  const fs::path data = work_dir() / "weigh_data";
  REQUIRE(run_cli("generate --kind majority --relevant 3 --irrelevant 3 --instances 60 "
                  "--seed 3 --out " + data.string()).exit_code == 0);

  const std::string cmd = "weigh " + data.string() + ".csv --algo relieff --k 10 --seed 1";
  const RunResult first = run_cli(cmd);
  const RunResult second = run_cli(cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("separability") != std::string::npos);

  const RunResult json = run_cli(cmd + " --json");
  CHECK(json.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(json.output);
  CHECK(doc.at("algorithm") == "relieff");
  CHECK(doc.at("weights").size() == 6);
  CHECK(doc.contains("separability"));
}

TEST_CASE("weigh enforces the two-class guard for relief") {
  const fs::path data = work_dir() / "three_class";
  REQUIRE(run_cli("generate --kind modulo-p --relevant 2 --irrelevant 2 --instances 60 "
                  "--seed 5 --out " + data.string()).exit_code == 0);
  const RunResult r = run_cli("weigh " + data.string() + ".csv --algo relief");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("2 classes") != std::string::npos);

  const RunResult missing = run_cli("weigh " + (work_dir() / "nope.csv").string());
  CHECK(missing.exit_code == 1);
}

TEST_CASE("a small experiment emits records and manifest") {
  const fs::path dir = work_dir() / "exp";
  fs::remove_all(dir);
  const std::string cmd = "experiment --problems modulo-p --max-relevant 2 "
                          "--irr-multiplier 2 --iterations 1 --instances 30 --quiet "
                          "--seed 9 --out " + dir.string();
  const RunResult r = run_cli(cmd);
  INFO(r.output);
  CHECK(r.exit_code == 0);
  const auto records = read_records(dir / "records.csv");
  CHECK(records.size() == 18);
  CHECK(fs::exists(dir / "manifest.json"));

  // rerun reproduces everything except walltimes
  const fs::path dir2 = work_dir() / "exp2";
  fs::remove_all(dir2);
  std::string cmd2 = cmd;
  cmd2.replace(cmd2.find(dir.string()), dir.string().size(), dir2.string());
  REQUIRE(run_cli(cmd2).exit_code == 0);
  CHECK(same_results(records, read_records(dir2 / "records.csv")));
}

TEST_CASE("plot renders svg and data files from records") {
  const fs::path dir = work_dir() / "exp_plot";
  fs::remove_all(dir);
  REQUIRE(run_cli("experiment --problems modulo-p --max-relevant 2 --irr-multiplier 2 "
                  "--iterations 1 --instances 30 --quiet --seed 9 --out " +
                  dir.string()).exit_code == 0);
  const fs::path plots = work_dir() / "plots";
  fs::remove_all(plots);
  const RunResult r = run_cli("plot " + (dir / "records.csv").string() +
                              " --mode accumulated --out " + plots.string());
  INFO(r.output);
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(plots / "modulo-p_accumulated.svg"));
  CHECK(fs::exists(plots / "modulo-p_accumulated.dat"));

  // unknown problem filter
  const RunResult bad = run_cli("plot " + (dir / "records.csv").string() +
                                " --problem majority --out " + plots.string());
  CHECK(bad.exit_code == 1);

  // header-only records file has nothing to plot
  const fs::path empty = work_dir() / "empty.csv";
  write_records({}, empty);
  CHECK(run_cli("plot " + empty.string() + " --out " + plots.string()).exit_code == 1);
}
