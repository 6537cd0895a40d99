#include "doctest.h"

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed CLI binary with the given arguments, capturing stdout
// only (stderr carries diagnostics and timings and is not part of the
// contract under test here).
CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CONTPATH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

nlohmann::json parse_json_line(const std::string& text) {
  return nlohmann::json::parse(text);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("cbinom point evaluation") {
  const CliResult r = run_cli("cbinom --x 1 --y 1");
  REQUIRE(r.exit_code == 0);
  const auto j = parse_json_line(r.out);
  CHECK(j["value"].get<double>() == doctest::Approx(7.740444313946792).epsilon(1e-12));
  CHECK(j["x"].get<double>() == 1.0);
  CHECK(j["y"].get<double>() == 1.0);
  CHECK(j["terms_used"].get<int>() > 0);
  CHECK(j["tail_bound"].get<double>() >= 0.0);

  // On the axis the closed form collapses to 2 + x + y, exactly.
  const CliResult axis = run_cli("cbinom --x 0 --y 3");
  REQUIRE(axis.exit_code == 0);
  const auto ja = parse_json_line(axis.out);
  CHECK(ja["value"].get<double>() == 5.0);
  CHECK(ja["tail_bound"].get<double>() == 0.0);
}

TEST_CASE("cbinom grid sweep emits CSV") {
  const CliResult r = run_cli("cbinom --grid x=1:2:1,y=1:1:1 --format csv");
  REQUIRE(r.exit_code == 0);
  REQUIRE(!r.out.empty());
  // Header plus one row per grid point (2 x values, 1 y value).
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 3);
  CHECK(r.out.rfind("x,y,value,tail_bound\n", 0) == 0);
  // Each data row has exactly three commas.
  const std::string body = r.out.substr(r.out.find('\n') + 1);
  std::size_t commas = 0;
  for (char c : body) commas += c == ',';
  CHECK(commas == 6);

  // Grids are CSV-only by contract.
  CHECK(run_cli("cbinom --grid x=1:2:1,y=1:1:1 --format json").exit_code == 1);
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::string args = "cbinom --x 0.7 --y 1.3";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);

  const CliResult v1 = run_cli("cmultinomial --x 0.5,1.5,2.5");
  const CliResult v2 = run_cli("cmultinomial --x 0.5,1.5,2.5");
  REQUIRE(v1.exit_code == 0);
  CHECK(v1.out == v2.out);
}

TEST_CASE("cmultinomial evaluation and cap handling") {
  const CliResult series = run_cli("cmultinomial --x 1,1 --cap 30");
  REQUIRE(series.exit_code == 0);
  const auto js = parse_json_line(series.out);
  CHECK(js["value"].get<double>() == doctest::Approx(7.740444313946792).epsilon(1e-10));
  CHECK(js["cap"].get<int>() == 30);
  CHECK(!js.contains("flag"));

  const CliResult borel = run_cli("cmultinomial --x 1,1 --cap 30 --method borel");
  REQUIRE(borel.exit_code == 0);
  const auto jb = parse_json_line(borel.out);
  CHECK(jb["value"].get<double>() ==
        doctest::Approx(js["value"].get<double>()).epsilon(1e-12));

  // Default cap is echoed back: max(d, ceil(2e) + 10) = 16 at x = (1,1,1).
  const CliResult defaulted = run_cli("cmultinomial --x 1,1,1");
  REQUIRE(defaulted.exit_code == 0);
  CHECK(parse_json_line(defaulted.out)["cap"].get<int>() == 16);

  // A cap below the dimension is a flagged zero, not an error.
  const CliResult flagged = run_cli("cmultinomial --x 1,1 --cap 1");
  REQUIRE(flagged.exit_code == 0);
  const auto jf = parse_json_line(flagged.out);
  CHECK(jf["value"].get<double>() == 0.0);
  CHECK(jf["flag"].get<std::string>() == "cap_below_dimension");
}

TEST_CASE("smirnov count and enumeration modes") {
  const CliResult count = run_cli("smirnov --nu 2,1");
  REQUIRE(count.exit_code == 0);
  CHECK(count.out == "{\"nu\":[2,1],\"count\":1}\n");

  const CliResult zero = run_cli("smirnov --nu 3,0");
  REQUIRE(zero.exit_code == 0);
  CHECK(zero.out == "{\"nu\":[3,0],\"count\":0}\n");

  const CliResult words = run_cli("smirnov --d 2 --n 3 --list");
  REQUIRE(words.exit_code == 0);
  CHECK(words.out == "{\"d\":2,\"n\":3,\"count\":2,\"words\":[\"121\",\"212\"]}\n");

  const CliResult plain = run_cli("smirnov --d 3 --n 2");
  REQUIRE(plain.exit_code == 0);
  CHECK(plain.out == "{\"d\":3,\"n\":2,\"count\":6}\n");
}

TEST_CASE("paths count is always a JSON string") {
  const CliResult r = run_cli("paths --q 2,1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "{\"count\":\"3\"}\n");

  const CliResult origin = run_cli("paths --q 0,0,0");
  REQUIRE(origin.exit_code == 0);
  CHECK(origin.out == "{\"count\":\"1\"}\n");
}

TEST_CASE("volume of a pattern polytope") {
  const CliResult cd = run_cli("volume --word 1212 --x 1,2");
  REQUIRE(cd.exit_code == 0);
  CHECK(cd.out == "{\"word\":\"1212\",\"measure\":\"cd\",\"volume\":2}\n");

  const CliResult riem = run_cli("volume --word 1212 --x 1,1 --measure riemannian");
  REQUIRE(riem.exit_code == 0);
  CHECK(riem.out ==
        "{\"word\":\"1212\",\"measure\":\"riemannian\",\"volume\":2.0000000000000004}\n");
}

TEST_CASE("todd discretization reports the matching binomial") {
  const CliResult two_sided = run_cli("todd --n 3 --x 7");
  REQUIRE(two_sided.exit_code == 0);
  CHECK(two_sided.out == "{\"count\":\"15\",\"expected\":\"C(6,2)=15\"}\n");

  const CliResult upper = run_cli("todd --n 2 --x 4 --variant upper");
  REQUIRE(upper.exit_code == 0);
  CHECK(upper.out == "{\"count\":\"6\",\"expected\":\"C(4,2)=6\"}\n");

  const CliResult lower = run_cli("todd --n 2 --x 4 --variant lower");
  REQUIRE(lower.exit_code == 0);
  CHECK(lower.out == "{\"count\":\"3\",\"expected\":\"C(3,2)=3\"}\n");
}

TEST_CASE("pde-check reports the residual and exit status") {
  const CliResult ok = run_cli("pde-check --d 2 --cap 6");
  REQUIRE(ok.exit_code == 0);
  CHECK(ok.out == "{\"ok\":true,\"trustworthy_degree\":2,\"max_residual\":\"0\"}\n");

  // cap below 2d is a usage error, not a verification failure.
  CHECK(run_cli("pde-check --d 2 --cap 3").exit_code == 1);
}

TEST_CASE("verify-all quick mode passes and reports per check") {
  const CliResult r = run_cli("verify-all --quick");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("9/9 checks passed (quick mode)") != std::string::npos);
  std::size_t passes = 0;
  std::size_t pos = 0;
  while ((pos = r.out.find("PASS  ", pos)) != std::string::npos) {
    ++passes;
    pos += 6;
  }
  CHECK(passes == 9);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with status 1") {
  CHECK(run_cli("").exit_code == 1);                          // no subcommand
  CHECK(run_cli("cbinom --x 1 --y 1 --bogus").exit_code == 1);
  CHECK(run_cli("cbinom --x 1").exit_code == 1);              // missing --y
  CHECK(run_cli("cbinom --x -1 --y 1").exit_code == 1);       // negative input
  CHECK(run_cli("cmultinomial --x 2,,1").exit_code == 1);     // malformed vector
  CHECK(run_cli("cmultinomial --x 5").exit_code == 1);        // needs d >= 2
  CHECK(run_cli("smirnov").exit_code == 1);                   // no mode selected
  CHECK(run_cli("smirnov --nu 1,1 --d 2 --n 2").exit_code == 1);  // both modes
  CHECK(run_cli("volume --word 1212 --x 1,2 --measure euclidean").exit_code == 1);
  CHECK(run_cli("volume --word 11 --x 1,1").exit_code == 1);  // invalid word
  CHECK(run_cli("todd --n 0 --x 4").exit_code == 1);
  CHECK(run_cli("paths --q 1,-2").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("cbinom --help").exit_code == 0);
}

}  // TEST_SUITE
