#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arcs/cli.hpp"
#include "arcs/numeric.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = arcs::cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("arcs_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}
}  // namespace

TEST_CASE("supersat-check --q 3 is exhaustive and clean") {
  const auto r = run({"supersat-check", "--q", "3"});
  CHECK(r.code == arcs::cli::kExitOk);
  const auto rec = lines(r.out);
  REQUIRE(rec.size() == 1);
  CHECK(rec[0]["violations"] == 0);
  CHECK(rec[0]["exhaustive"] == true);
  CHECK(rec[0]["trials"] == 511);
  CHECK(!r.err.empty());
}

TEST_CASE("census --q 2 is the binomial table") {
  const auto r = run({"census", "--q", "2"});
  CHECK(r.code == 0);
  const auto rec = lines(r.out);
  REQUIRE(rec.size() == 5);
  for (std::size_t m = 0; m < rec.size(); ++m) {
    CHECK(rec[m]["m"] == m);
    CHECK(rec[m]["count"] == arcs::binomial(4, m).get_str());
    CHECK(rec[m]["method"] == "exhaustive");
  }
  // Key order is fixed, not alphabetical.
  CHECK(r.out.rfind("{\"kind\":\"census\",\"q\":2,\"m\":0,\"count\":\"1\"", 0) == 0);
}

TEST_CASE("kw-verify golden run") {
  const auto r = run({"kw-verify", "--n", "12", "--instances", "50", "--seed", "7"});
  CHECK(r.code == 0);
  const auto rec = lines(r.out);
  REQUIRE(rec.size() == 50);
  for (std::size_t i = 0; i < rec.size(); ++i) {
    CHECK(rec[i]["instance"] == i);
    CHECK(rec[i]["violations"] == 0);
    if (rec[i]["assumptions_met"] == true) {
      CHECK(arcs::BigInt(rec[i]["bound_lhs"].get<std::string>()) <= arcs::BigInt(rec[i]["bound_rhs"].get<std::string>()));
    }
  }
  const std::string first = r.out.substr(0, r.out.find('\n'));
  CHECK(first.find("{\"kind\":\"kw\",\"instance\":0,\"assumptions_met\":") == 0);
}

TEST_CASE("explicit kw parameters") {
  const auto r = run({"kw-verify", "--n", "8", "--instances", "3", "--beta", "0/1", "--f", "0", "--r", "2", "--R", "8"});
  CHECK(r.code == 0);
  CHECK(run({"kw-verify", "--n", "8", "--beta", "1/2"}).code == arcs::cli::kExitUsage);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"density-check", "--q", "5", "--epsilon", "0.5"}).code == 1);
  CHECK(run({"bound-table", "--q", "121", "--epsilon", "1e-1", "--m-list", "5"}).code == 1);
  CHECK(run({"bound-table", "--q", "121", "--epsilon", "1/0", "--m-list", "5"}).code == 1);
  CHECK(run({"plane", "info", "--q", "6"}).code == 1);
  CHECK(run({"census", "--q", "128"}).code == 1);
  CHECK(run({"census", "--q", "9"}).code == 1);
  CHECK(run({"census", "--q", "5", "--format", "xml"}).code == 1);
  CHECK(run({"sample-lower", "--q", "5"}).code == 1);
  CHECK(run({"census", "--q", "9", "--m-max", "8", "--node-budget", "100"}).code == 1);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("census") != std::string::npos);
}

TEST_CASE("plane with and without info") {
  const auto a = run({"plane", "info", "--q", "9"});
  const auto b = run({"plane", "--q", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto rec = lines(a.out);
  CHECK(rec[0]["lines"] == 90);
  CHECK(rec[0]["unique_line_per_pair_ok"] == true);
}

TEST_CASE("byte-identical output across thread counts and repeats") {
  const std::vector<std::vector<std::string>> cmds = {
      {"census", "--q", "5"},
      {"supersat-check", "--q", "5", "--trials", "40", "--seed", "3"},
      {"density-check", "--q", "5,7", "--trials", "30", "--seed", "3"},
      {"kw-verify", "--n", "10", "--instances", "12", "--seed", "3"},
      {"sample-lower", "--q", "5", "--m", "4", "--trials", "5000", "--seed", "3"},
  };
  for (auto cmd : cmds) {
    CAPTURE(cmd[0]);
    auto one = cmd, four = cmd;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const auto a = run(one), b = run(four), c = run(one);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}

TEST_CASE("csv output and --out") {
  const auto dir = scratch("csv");
  const auto file = dir / "census.csv";
  const auto r = run({"census", "--q", "3", "--format", "csv", "--out", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const std::string text = slurp(file);
  CHECK(text.rfind("kind,q,m,count,method,trials,seed,ci_low,ci_high\n", 0) == 0);
  CHECK(text.find("census,3,3,72,exhaustive,,,,\n") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("bound-table rows") {
  const auto r = run({"bound-table", "--q", "121", "--epsilon", "1/1", "--m-list", "100,200", "--C", "1"});
  CHECK(r.code == 0);
  const auto rec = lines(r.out);
  REQUIRE(rec.size() == 2);
  CHECK(rec[0]["f"] == 69);
  CHECK(rec[0]["note"] == "m < 2f: chain inapplicable");
  CHECK(rec[0]["flags"]["identity_symbolic"] == true);
  CHECK(rec[1]["flags"]["m_ge_threshold"] == true);
}

TEST_CASE("theorem-check") {
  const auto r = run({"theorem-check", "--q", "5", "--m", "3"});
  CHECK(r.code == 0);
  const auto rec = lines(r.out);
  CHECK(rec[0]["census"]["count"] == "2000");
  CHECK(rec[0]["lower"] == "10");
  CHECK(rec[0]["lower_holds"] == true);
}

TEST_CASE("census cache directory from the environment") {
  const auto dir = scratch("cache");
  ::setenv("ARC_CACHE_DIR", dir.string().c_str(), 1);
  const auto first = run({"census", "--q", "4"});
  const auto second = run({"census", "--q", "4"});
  ::unsetenv("ARC_CACHE_DIR");
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(second.err.find("(cache)") != std::string::npos);
  CHECK(fs::exists(dir / "census-q4-m6.jsonl"));
  fs::remove_all(dir);
}
