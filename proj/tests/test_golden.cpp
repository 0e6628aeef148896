#include <doctest.h>

#include <fstream>
#include <sstream>

#include "symidx/cli.hpp"

// Byte-exact comparison of report output against the checked-in golden
// files. Candidate ordering and the line schemas are part of the contract;
// regenerate with the commands named below only for intentional changes.

using namespace symidx;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SYMIDX_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  REQUIRE_MESSAGE(code == 0, err.str());
  return out.str();
}

}  // namespace

TEST_CASE("golden: eliminate sp 3") {
  CHECK(run({"eliminate", "sp", "3"}) == golden("eliminate_sp3.txt"));
}

TEST_CASE("golden: table rows") {
  CHECK(run({"--format", "tabular", "table", "--samples", "0"}) == golden("table_rows.txt"));
}

TEST_CASE("golden: lagrangian r=3") {
  CHECK(run({"lagrangian", "3"}) == golden("lagrangian_r3.txt"));
}

TEST_CASE("golden: subsystems of A4") {
  CHECK(run({"subsystems", "4"}) == golden("subsystems_a4.txt"));
}
