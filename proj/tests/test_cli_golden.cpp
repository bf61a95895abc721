#include <doctest.h>

#include "cli_runner.hpp"

namespace fs = std::filesystem;
using hgt::testing::load_cases;
using hgt::testing::read_file;
using hgt::testing::run_cli;

TEST_CASE("golden outputs") {
  const fs::path dir = HGT_FIXTURE_DIR;
  const auto cases = load_cases(dir);
  REQUIRE(cases.size() > 20);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto result = run_cli(HGT_CLI_PATH, dir, c.args);
    CHECK(result.exit_code == c.exit_code);
    CHECK(result.out == read_file(dir / (c.name + ".out")));
    CHECK(result.err == read_file(dir / (c.name + ".stderr")));
    if (c.exit_code == 0) {
      CHECK(result.err.find("error") == std::string::npos);
    } else {
      CHECK(result.out.empty());
      CHECK_FALSE(result.err.empty());
    }
  }
}

TEST_CASE("reports are byte-identical across runs") {
  const fs::path dir = HGT_FIXTURE_DIR;
  for (const char* args : {"heun --sweep 2", "x1 'x1(7/2,1,5)' --to-heun", "derive --input @dir@/derive_legendre.spec"}) {
    CAPTURE(args);
    const auto first = run_cli(HGT_CLI_PATH, dir, args);
    const auto second = run_cli(HGT_CLI_PATH, dir, args);
    CHECK(first.exit_code == 0);
    CHECK_FALSE(first.out.empty());
    CHECK(first.out == second.out);
  }
}
