#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = kneser::tools::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "kneser-cli-test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("examples are written and reproduce") {
  auto dir = (scratch() / "gallery").string();
  auto r = run({"examples", "--out", dir});
  CHECK(r.code == 0);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(fs::exists(fs::path(dir) / "z17-extendible.setl"));
  CHECK(fs::exists(fs::path(dir) / "z7.expected.json"));

  auto c = run({"classify", dir + "/z17-extendible.setl", "--pair", "A", "B"});
  REQUIRE(c.code == 0);
  auto j = nlohmann::json::parse(c.out);
  CHECK(j["conclusions"] == nlohmann::json::array({"E"}));
  CHECK(j["witnesses"]["E"]["refinement"] == "E1");

  auto p = run({"profinite", dir + "/z7.setl", "--set", "C", "--depth", "4", "--sum", "C", "C"});
  REQUIRE(p.code == 0);
  auto pj = nlohmann::json::parse(p.out);
  CHECK(pj["sum"]["depths"][3]["lower"] == "1600/2401");
  CHECK(pj["truncations"][3]["inner"] == "800/2401");

  // byte-deterministic output
  CHECK(run({"classify", dir + "/z4-null-point.setl"}).out == run({"classify", dir + "/z4-null-point.setl"}).out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"classify", "/nonexistent.setl"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  auto bad = write("bad.setl", "group G = Z/5\nset A = {0,\n");
  auto r = run({"classify", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("SyntaxError") != std::string::npos);
  CHECK(r.out.empty());
  auto sub = write("sub.setl", "group G = Z/6\nset A = {0,3}\n");
  CHECK(run({"classify", sub, "--pair", "A", "A"}).code == 2);
  CHECK(run({"check", sub, "--pair", "A", "A"}).code == 0);
  CHECK(run({"enumerate", "--family", "finite:12", "--budget", "10"}).code == 2);
  CHECK(run({"enumerate", "--family", "finite:3", "--format", "tsv"}).code == 0);
}

TEST_CASE("transform transcript") {
  auto f = write("circle.setl", "group G = T\nset A = {0}x[0,1/4]\nset B = {0}x[0,1/3]\n");
  auto r = run({"transform", f, "--pair", "A", "B", "--steps", "2"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(lines, line)) rows.push_back(nlohmann::json::parse(line));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["e"] == "(0, 1/8)");
  CHECK(rows[2]["stop"] == "max-steps");
}
