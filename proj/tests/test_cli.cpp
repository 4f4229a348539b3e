#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CYCCEN_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("census of a family spec as JSON") {
    const Run r = run("census modular:p=2,n=4 --json");
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("total") == 8);
    CHECK(doc.at("alpha") == "1/2");
  }

  TEST_CASE("census and build of a corpus file") {
    const std::string file = std::string(CYCLIC_CORPUS_DIR) + "/c3wrc3.grp";
    const Run c = run("census " + file + " --json");
    CHECK(c.code == 0);
    CHECK(nlohmann::json::parse(c.out).at("total") == 29);
    const Run b = run("build " + file);
    CHECK(b.code == 0);
    CHECK(b.out.find("order 81") != std::string::npos);
  }

  TEST_CASE("parse prints a re-parsable presentation") {
    const Run r = run("parse " + std::string(CYCLIC_CORPUS_DIR) + "/q8.grp");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("group q8\n", 0) == 0);
  }

  TEST_CASE("syntax errors exit with 2") {
    const auto bad = write_temp("cyclic-cli-bad.grp", "group Bad\ngens x\nrel x^\n");
    CHECK(run("build " + bad.string()).code == 2);
    CHECK(run("parse " + bad.string()).code == 2);
    CHECK(run("build " + (std::filesystem::temp_directory_path() / "cyclic-missing.grp").string()).code == 2);
    CHECK(run("census nosuch:p=2,n=3").code == 2);
    std::filesystem::remove(bad);
  }

  TEST_CASE("resource limits exit with 2") {
    CHECK(run("build cyclic:p=2,n=12 --max-cosets 100").code == 2);
    CHECK(run("build cyclic:p=2,n=12 --max-cosets 5000").code == 0);
    const Run env = run("");  // no subcommand
    CHECK(env.code == 2);
  }

  TEST_CASE("environment cap is overridden by the flag") {
    CHECK(std::system((std::string("CYCLIC_CENSUS_MAX_COSETS=10 ") + CYCCEN_PATH +
                       " build cyclic:p=2,n=5 >/dev/null 2>&1").c_str()) != 0);
    CHECK(std::system((std::string("CYCLIC_CENSUS_MAX_COSETS=10 ") + CYCCEN_PATH +
                       " build cyclic:p=2,n=5 --max-cosets 64 >/dev/null 2>&1").c_str()) == 0);
  }

  TEST_CASE("a failing check exits with 1") {
    const auto dir = std::filesystem::temp_directory_path() / "cyclic-cli-wrong";
    std::filesystem::create_directories(dir);
    // Claims order 9 for a group of order 8.
    std::ofstream(dir / "wrong.grp") << "group wrong\ngens a\norder 9\nprime 2\nrel a^8\n";
    CHECK(run("verify global --corpus " + dir.string()).code == 1);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("verify writes CSV and JSON reports") {
    const std::string corpus = std::string(" --corpus ") + CYCLIC_CORPUS_DIR;
    const Run csv = run("verify p3 --csv" + corpus);
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("id,subject,status,expected,actual,elapsed_ms\n", 0) == 0);
    const Run eq1 = run("verify eq1 --grid 3,4 --json");
    CHECK(eq1.code == 0);
    const auto doc = nlohmann::json::parse(eq1.out);
    CHECK(doc.at("summary").at("fail") == 0);
    CHECK(doc.at("summary").at("pass") == doc.at("checks").size());
    CHECK(run("verify thm99" + corpus).code == 2);
    CHECK(run("verify all --json --csv" + corpus).code == 2);
  }
}
