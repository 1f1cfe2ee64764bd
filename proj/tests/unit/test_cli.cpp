#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "nullcert/dual.hpp"
#include "nullcert/json_io.hpp"
#include "nullcert/primal.hpp"

using namespace nullcert;

namespace {

const std::string kCli = NULLCERT_CLI_PATH;
const std::string kData = NULLCERT_DATA_DIR;

struct Run {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto out = dir / ("nullcert_cli_out_" + std::to_string(::getpid()));
  const auto err = dir / ("nullcert_cli_err_" + std::to_string(::getpid()));
  const std::string cmd = kCli + " " + args + " >" + out.string() + " 2>" + err.string();
  const int raw = std::system(cmd.c_str());
  Run r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / (name + "_" + std::to_string(::getpid()));
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("stats and bounds") {
  const auto r = run("stats " + kData + "/c41.col");
  CHECK(r.status == 0);
  CHECK(r.out.find("vertices 41") != std::string::npos);
  CHECK(r.out.find("girth 41") != std::string::npos);
  CHECK(run("bounds " + kData + "/k4.col --k 3").status == 0);
}

TEST_CASE("primal certificate for K4 verifies") {
  const auto r = run("primal " + kData + "/k4.col --k 3 --d 1 --out -");
  REQUIRE(r.status == 0);
  const auto j = Json::parse(r.out);
  const auto g = read_dimacs_file(kData + "/k4.col");
  const auto cert = certificate_from_json<PrimeField>(j, PrimeField(2));
  CHECK(verify_certificate(cert, CertificateQuery<PrimeField>{g, 3, 1, PrimeField(2)}));
}

TEST_CASE("negative answers exit 10") {
  CHECK(run("primal " + kData + "/c41.col --k 3 --d 1").status == 10);
  CHECK(run("mindeg " + kData + "/tree10.col --k 3 --dmax 1").status == 10);
  CHECK(run("dual " + kData + "/k4.col --k 3 --d 1").status == 10);
}

TEST_CASE("dual and patch certificates verify") {
  const auto g = read_dimacs_file(kData + "/k3.col");
  const auto r = run("dual " + kData + "/k3.col --k 3 --d 0 --field gf:7 --out -");
  REQUIRE(r.status == 0);
  const auto lambda = dual_from_json<PrimeField>(Json::parse(r.out), PrimeField(7));
  CHECK(verify_dual_certificate(lambda, g));

  const auto c41 = read_dimacs_file(kData + "/c41.col");
  const auto p = run("patch " + kData + "/c41.col --k 3 --d 1 --out -");
  REQUIRE(p.status == 0);
  const auto patched = dual_from_json<PrimeField>(Json::parse(p.out), PrimeField(7));
  CHECK(verify_dual_certificate(patched, c41));
  CHECK(run("patch " + kData + "/c41.col --k 3 --d 1 --out - --serial").out == p.out);
}

TEST_CASE("patch construction failure exits 20") {
  const auto r = run("patch " + kData + "/k3.col --k 3 --d 1");
  CHECK(r.status == 20);
  CHECK(r.out.find("EssentialGraphNotForest(x_1)") != std::string::npos);
}

TEST_CASE("groebner subcommand lists leading monomials") {
  const auto r = run("groebner " + kData + "/tree10.col --k 3 --subgraph drop:2-6");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("x_4x_9\n") != std::string::npos);
  const auto edges = run("groebner " + kData + "/tree10.col --k 3 --subgraph " + kData + "/tree10_F2.edges");
  CHECK(edges.out == r.out);
}

TEST_CASE("usage errors exit 1 and name the problem") {
  const auto bad = temp_file("bad.col", "p edge 3 2\ne 1 2\ne 2 9\n");
  const auto r = run("stats " + bad);
  CHECK(r.status == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
  std::filesystem::remove(bad);
  CHECK(run("primal " + kData + "/k4.col --k 3 --field gf:3").status == 1);
  CHECK(run("primal " + kData + "/k4.col --k 1").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("primal /nonexistent.col").status == 1);
}
