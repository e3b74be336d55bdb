#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(G0_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("decide exit codes follow the verdict") {
  auto infinite = run_cli("decide --curve x^2+y^2-1 --primes 5 --format json");
  CHECK(infinite.exit_code == 0);
  json j = json::parse(infinite.out);
  CHECK(j["verdict"] == "infinite");
  CHECK(j["case"] == "I2L");
  CHECK(j["D"] == "-1");

  auto finite = run_cli("decide --curve x*y-1 --format json");
  CHECK(finite.exit_code == 1);
  json f = json::parse(finite.out);
  CHECK(f["verdict"] == "finite");
  CHECK(std::string(f["reason"]).find("unit-rank obstruction: |S| = 1") !=
        std::string::npos);
  CHECK(f["case"].is_null());

  auto unknown = run_cli("decide --curve x^2-2*y^2-3 --bound 200");
  CHECK(unknown.exit_code == 2);

  auto degenerate = run_cli("decide --curve x^2+y^2-0");
  CHECK(degenerate.exit_code == 3);

  auto badparse = run_cli("decide --curve 2x");
  CHECK(badparse.exit_code == 3);
  CHECK(badparse.out.find("position") != std::string::npos);

  auto badprime = run_cli("decide --curve x*y-1 --primes 6");
  CHECK(badprime.exit_code == 3);
}

TEST_CASE("generate emits verified points or behaves like decide") {
  auto gen = run_cli("generate --curve x*y-1 --primes 2 --count 2");
  CHECK(gen.exit_code == 0);
  CHECK(gen.out.find("x = 2, y = 1/2") != std::string::npos);
  CHECK(gen.out.find("x = 4, y = 1/4") != std::string::npos);

  auto gen_json = run_cli("generate --curve x*y-1 --primes 2 --count 2 --format json");
  json j = json::parse(gen_json.out);
  REQUIRE(j["points"].size() == 2);
  CHECK(j["points"][0][0] == json::array({"2", "1"}));
  CHECK(j["points"][0][1] == json::array({"1", "2"}));

  auto finite = run_cli("generate --curve x^2+y^2-1 --count 1 --format json");
  CHECK(finite.exit_code == 1);
  json f = json::parse(finite.out);
  CHECK(f["points"].empty());

  auto param = run_cli("generate --param t^2,t^3 --count 3 --format json");
  CHECK(param.exit_code == 0);
  json p = json::parse(param.out);
  REQUIRE(p["points"].size() == 3);
  CHECK(p["points"][2][0] == json::array({"4", "1"}));
}

TEST_CASE("enumerate lists lattice points with a count") {
  auto e = run_cli("enumerate --curve x^2+y^2-1 --bound 100");
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("count: 4") != std::string::npos);

  auto pell = run_cli("enumerate --curve x^2-2*y^2-1 --bound 100 --format json");
  json j = json::parse(pell.out);
  bool found = false;
  for (const auto& pt : j["points"])
    if (pt[0] == json::array({"17", "1"}) && pt[1] == json::array({"12", "1"})) found = true;
  CHECK(found);

  auto empty = run_cli("enumerate --curve x^2-2*y^2-3 --bound 1000 --format json");
  CHECK(json::parse(empty.out)["count"] == 0);
}

TEST_CASE("assumption flags are echoed") {
  auto v = run_cli("decide --curve x^2*y+x*y^2-1 --assert-irreducible --format json");
  CHECK(v.exit_code == 1);
  json j = json::parse(v.out);
  REQUIRE(j["assumptions"].size() == 1);
  CHECK(std::string(j["assumptions"][0]).find("irreducib") != std::string::npos);
  CHECK(j["reason"] == json("three-plus-places-at-infinity: leading form has 3 >= 3 "
                            "distinct roots, so an irreducible curve has >= 3 points "
                            "at infinity"));
}
