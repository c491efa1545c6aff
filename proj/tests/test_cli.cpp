#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SOFICLAB_CLI_PATH
#error "SOFICLAB_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int         exit_code;
  std::string output;
};

RunResult run_cli(std::string const& args, std::string const& env = "") {
  std::string const out_file = "/tmp/soficlab_cli_test_out.txt";
  std::string const cmd
      = env + std::string(SOFICLAB_CLI_PATH) + " " + args + " > " + out_file
        + " 2>&1";
  int const status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::remove(out_file.c_str());
  int code = -1;
  if (WIFEXITED(status)) {
    code = WEXITSTATUS(status);
  }
  return {code, buf.str()};
}

}  // namespace

TEST_CASE("fixtures list") {
  auto const r = run_cli("fixtures list");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("bicyclic") != std::string::npos);
  CHECK(r.output.find("cosetZ") != std::string::npos);
}

TEST_CASE("analyze prints the egg-box grid") {
  auto const r = run_cli("analyze --fixture T2 --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("D0") != std::string::npos);
  CHECK(r.output.find("D1") != std::string::npos);
  CHECK(r.output.find("[units]") != std::string::npos);

  auto const j = run_cli("analyze --fixture T2 --format json");
  CHECK(j.exit_code == 0);
  CHECK(j.output.find("\"d_classes\"") != std::string::npos);
}

TEST_CASE("build then check round-trips through files") {
  std::string const witness = "/tmp/soficlab_cli_t2_witness.json";
  std::string const prov    = "/tmp/soficlab_cli_t2_prov.json";
  std::remove(witness.c_str());
  auto const build = run_cli("build-witness --fixture T2 --K all --eps 1/5"
                             " --out " + witness + " --provenance " + prov
                             + " --format json");
  CHECK(build.exit_code == 0);
  CHECK(std::filesystem::exists(witness));
  CHECK(build.output.find("\"delta\": \"1/50\"") != std::string::npos);

  auto const check = run_cli("check-witness --fixture T2 --K all --eps 1/5"
                             " --witness " + witness);
  CHECK(check.exit_code == 0);
  CHECK(check.output.find("PASS") != std::string::npos);

  // a tolerance the witness cannot meet fails honestly with exit 2
  auto const tight = run_cli("check-witness --fixture T2 --K all --eps 1/1000"
                             " --witness " + witness);
  CHECK(tight.exit_code == 2);
  CHECK(tight.output.find("FAIL") != std::string::npos);

  std::remove(witness.c_str());
  std::remove(prov.c_str());
}

TEST_CASE("refusal path: F2xS exits 2 and writes nothing") {
  std::string const witness = "/tmp/soficlab_cli_refused_witness.json";
  std::remove(witness.c_str());
  auto const r = run_cli("build-witness --fixture F2xS --K \"x,(y,0)\""
                         " --eps 1/4 --out " + witness);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("HypothesesNotMet") != std::string::npos);
  CHECK(r.output.find("non-amenable") != std::string::npos);
  CHECK(!std::filesystem::exists(witness));
}

TEST_CASE("environment variable lowers the ground cap") {
  auto const r = run_cli("build-witness --fixture T2 --K all --eps 1/5",
                         "SOFICLAB_GROUND_CAP=50 ");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("cap") != std::string::npos);
}

TEST_CASE("malformed inputs exit 1") {
  CHECK(run_cli("analyze --fixture no-such-fixture").exit_code == 1);
  CHECK(run_cli("build-witness --fixture T2 --K all --eps nonsense")
            .exit_code
        == 1);
  CHECK(run_cli("check-witness --fixture T2 --K all --eps 1/5 --witness "
                "/tmp/missing_witness_file.json")
            .exit_code
        == 1);
  CHECK(run_cli("analyze").exit_code == 1);  // no fixture or input
}

TEST_CASE("folner subcommand measures exactly") {
  auto const r = run_cli("folner --group Z --K \"1,-1\" --box 9"
                         " --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"quality\": \"4/5\"") != std::string::npos);
  CHECK(r.output.find("\"F_size\": 10") != std::string::npos);

  auto const search = run_cli("folner --group Z --K \"1,-1\" --delta 1/5");
  CHECK(search.exit_code == 0);
  CHECK(search.output.find("|F| = 11") != std::string::npos);

  // budget exhaustion is an honest refusal
  auto const tight
      = run_cli("folner --group Z --K \"1,-1\" --delta 1/1000 --budget 2");
  CHECK(tight.exit_code == 2);

  // interior of the 10x10 box in Z^2: 64/100, rendered normalized
  auto const plane = run_cli(
      "folner --group Z^2 --K \"(1,0),(-1,0),(0,1),(0,-1)\" --box 9"
      " --format json");
  CHECK(plane.exit_code == 0);
  CHECK(plane.output.find("\"quality\": \"16/25\"") != std::string::npos);
  CHECK(plane.output.find("\"F_size\": 100") != std::string::npos);
}

TEST_CASE("oracle-witness subcommand") {
  auto const r = run_cli("oracle-witness --fixture SL2 --K all --eps 1/10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n = 4") != std::string::npos);
  CHECK(r.output.find("N = 16") != std::string::npos);
  CHECK(r.output.find("1/16") != std::string::npos);
}

TEST_CASE("probe-bicyclic subcommand") {
  auto const r = run_cli("probe-bicyclic --N 100 --K \"p,q,1,qp\""
                         " --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("99/100") != std::string::npos);
}

TEST_CASE("hypotheses subcommand") {
  auto const r = run_cli("hypotheses --fixture bicyclic --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"units_equal_j_class\": \"false\"") != std::string::npos);

  auto const coset = run_cli("hypotheses --fixture cosetZ");
  CHECK(coset.exit_code == 0);
  CHECK(coset.output.find("local-amenability") != std::string::npos);

  auto const fxs = run_cli("hypotheses --fixture F2xS --K \"x,(y,0)\""
                           " --format json");
  CHECK(fxs.exit_code == 0);
  CHECK(fxs.output.find("declared-nonamenable") != std::string::npos);
}

TEST_CASE("check-witness worker counts give identical reports") {
  std::string const witness = "/tmp/soficlab_cli_workers_witness.json";
  REQUIRE(run_cli("build-witness --fixture Z2xSL2 --K all --eps 1/5 --out "
                  + witness)
              .exit_code
          == 0);
  auto const w1 = run_cli("check-witness --fixture Z2xSL2 --K all --eps 1/5"
                          " --witness " + witness + " --workers 1"
                          " --format json");
  auto const w8 = run_cli("check-witness --fixture Z2xSL2 --K all --eps 1/5"
                          " --witness " + witness + " --workers 8"
                          " --format json");
  CHECK(w1.exit_code == 0);
  CHECK(w1.output == w8.output);
  std::remove(witness.c_str());
}

TEST_CASE("probe witness files round-trip") {
  std::string const path = "/tmp/soficlab_cli_probe_witness.json";
  auto const r = run_cli("probe-bicyclic --N 50 --K \"p,q\" --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(std::filesystem::exists(path));
  // a probe witness is diagnosable through check-witness as well
  auto const check = run_cli("check-witness --fixture bicyclic --K \"p,q\""
                             " --eps 1/100 --witness " + path);
  CHECK((check.exit_code == 0 || check.exit_code == 2));
  std::remove(path.c_str());
}

#include "soficlab/builder.hpp"
#include "soficlab/fixtures.hpp"
#include "soficlab/witness_io.hpp"

TEST_CASE("CLI and library produce byte-identical witness files") {
  using namespace soficlab;
  std::string const path = "/tmp/soficlab_cli_vs_lib_witness.json";
  std::remove(path.c_str());
  auto const r = run_cli("build-witness --fixture T2 --K all --eps 1/5 --out "
                         + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();

  auto const m = get_fixture("T2");
  std::vector<Elem> k;
  for (std::uint32_t i = 0; i < m->as_finite()->size(); ++i) {
    k.push_back(finite_elem(i));
  }
  auto const direct = build_witness(*m, k, make_rational(1, 5));
  CHECK(witness_to_json(direct.witness) == buf.str());
  std::remove(path.c_str());
}

TEST_CASE("monoid files: dump then analyze --input bit-exactly") {
  std::string const path = "/tmp/soficlab_cli_t2_monoid.json";
  auto const dump = run_cli("fixtures dump --fixture T2 --out " + path);
  CHECK(dump.exit_code == 0);

  auto const through_file = run_cli("analyze --input " + path
                                    + " --format json");
  auto const direct = run_cli("analyze --fixture T2 --format json");
  CHECK(through_file.exit_code == 0);
  CHECK(through_file.output == direct.output);

  // the same file re-dumped through the loader is byte-identical
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  auto const build
      = run_cli("build-witness --input " + path + " --K all --eps 1/5");
  CHECK(build.exit_code == 0);
  std::remove(path.c_str());
}
