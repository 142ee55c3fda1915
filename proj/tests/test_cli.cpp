// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "coheng/datasets.hpp"
#include "coheng/jc_charging.hpp"

namespace fs = std::filesystem;

namespace {

const std::string cli = COHENG_CLI_PATH;

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / ("coheng_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
  const std::string command = cli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("usage errors exit with status 2") {
  CHECK(run("") == 2);
  CHECK(run("charge") == 2);                       // missing required flags
  CHECK(run("charge --beta 1 --gt five") == 2);    // unparsable value
  CHECK(run("bogus --beta 1") == 2);               // unknown subcommand
  CHECK(run("sweep --objective both") == 2);       // invalid choice
  CHECK(run("figure --preset nope") == 2);         // rejected by the library
  CHECK(run("charge --beta -3 --gt 1") == 2);      // domain error
  CHECK(run("--help") == 0);
}

TEST_CASE("charge emits one engine row matching the library") {
  Workspace ws;
  const std::string out = ws.path("charge.csv");
  REQUIRE(run("charge --beta 1 --gt 5 --out " + out) == 0);
  const std::string expected = coheng::charge_dataset(1.0, 5.0, 1, 1e-8, true).to_csv();
  CHECK(slurp(out) == expected);

  const std::string out_json = ws.path("charge.json");
  REQUIRE(run("charge --beta 1 --gt 5 --format json --out " + out_json) == 0);
  CHECK(slurp(out_json) ==
        coheng::charge_dataset(1.0, 5.0, 1, 1e-8, true).to_json());

  // the bare-series convention only changes the reported delta column
  const std::string out_off = ws.path("charge_off.csv");
  REQUIRE(run("charge --beta 1 --gt 5 --prefactor off --out " + out_off) == 0);
  CHECK(slurp(out_off) == coheng::charge_dataset(1.0, 5.0, 1, 1e-8, false).to_csv());
  CHECK(slurp(out_off) != slurp(out));
}

TEST_CASE("sweep and verify are byte-identical across runs") {
  Workspace ws;
  const std::string flags =
      " --n 2 --grid-beta 0.5:1.5:3 --grid-gt 0:6:3 --objective eta";
  const std::string a = ws.path("sweep_a.csv"), b = ws.path("sweep_b.csv");
  REQUIRE(run("sweep" + flags + " --out " + a) == 0);
  REQUIRE(run("sweep" + flags + " --out " + b) == 0);
  const std::string first = slurp(a);
  CHECK_FALSE(first.empty());
  CHECK(first == slurp(b));

  const std::string va = ws.path("verify_a.json"), vb = ws.path("verify_b.json");
  REQUIRE(run("verify --suite truncation --seed 0 --out " + va) == 0);
  REQUIRE(run("verify --suite truncation --seed 0 --out " + vb) == 0);
  CHECK(slurp(va) == slurp(vb));
  CHECK(slurp(va).find("\"passed\": true") != std::string::npos);
}

TEST_CASE("verify exercises every suite and reports success") {
  Workspace ws;
  for (const std::string suite : {"observations", "populations"}) {
    const std::string out = ws.path(suite + ".json");
    REQUIRE(run("verify --suite " + suite + " --seed 0 --out " + out) == 0);
    CHECK(slurp(out).find("\"passed\": true") != std::string::npos);
  }
  CHECK(run("verify --suite unknown") == 2);
}

TEST_CASE("the qubit cap honors the environment override") {
  Workspace ws;
  const std::string out = ws.path("capped.csv");
  const std::string base = "charge --beta 1 --gt 5 --n 6 --out " + out;
  CHECK(run(base) == 0);
  // a fresh process with a lower cap rejects the same request
  const std::string capped = "env ENGINE_MAX_QUBITS=4 " + cli + " " + base + " >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(capped.c_str())) == 2);
  const std::string raised = "env ENGINE_MAX_QUBITS=13 " + cli +
                             " charge --beta 1 --gt 5 --n 13 --out " + out +
                             " >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(raised.c_str())) == 0);
}

TEST_CASE("figure presets write datasets and agreement reports") {
  Workspace ws;
  const std::string out = ws.path("fig6.csv");
  REQUIRE(run("figure --preset fig6 --out " + out) == 0);
  const std::string content = slurp(out);
  CHECK(content.rfind("gt,rho00_series,rho00_evolved", 0) == 0);
  CHECK_FALSE(fs::exists(out + ".report.json"));

  const std::string fig3 = ws.path("fig3.csv");
  REQUIRE(run("figure --preset fig3 --out " + fig3) == 0);
  CHECK(slurp(fig3).rfind("n,beta_omega0,c_int_per_qubit", 0) == 0);
  const std::string report = slurp(fig3 + ".report.json");
  CHECK(report.find("observed_argmax_n") != std::string::npos);
  CHECK(report.find("internally_consistent") != std::string::npos);
}
