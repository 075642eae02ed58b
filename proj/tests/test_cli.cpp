#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "projframe/io.hpp"
#include "projframe/projframe.hpp"

namespace projframe::testing {
namespace {

using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  json j;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(PROJFRAME_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.j = json::parse(r.out, nullptr, false);
  return r;
}

std::string data(const std::string& name) { return std::string(PROJFRAME_DATA) + "/" + name; }

TEST(Cli, DeterminantOfKleinExample) {
  const RunResult r = run("det --matrix " + data("klein_nu.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.j["status"], "ok");
  // (1 + 16 - 4 - 9)^2 = 16
  EXPECT_NEAR(r.j["determinant"][0].get<double>(), 16.0, 1e-12);
  EXPECT_NEAR(r.j["determinant"][1].get<double>(), 0.0, 1e-12);
}

TEST(Cli, DeterminantMatchesLibrary) {
  const RunResult r = run("det --matrix " + data("d8_nu.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  const GAlphaMatrix m = io::galpha_from_json(io::load_file(data("d8_nu.json")));
  const Complex lib = determinant(m, dihedral8_irreducibles());
  const Complex cli = io::complex_from_json(r.j["determinant"]);
  EXPECT_EQ(cli, lib);
}

TEST(Cli, RankMatchesLibrary) {
  const RunResult r = run("rank --matrix " + data("d8_central_rho1.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  const GAlphaMatrix m = io::galpha_from_json(io::load_file(data("d8_central_rho1.json")));
  EXPECT_EQ(r.j["rank"].get<std::size_t>(), rank(m, dihedral8_irreducibles()).rank);
  EXPECT_EQ(r.j["rank"].get<std::size_t>(), 4u);
}

TEST(Cli, CentralTightcheck) {
  const RunResult r = run("tightcheck --central rho1,rho2 --cocycle d8");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.j["tight"], true);
  const RunResult f = run("tightcheck --matrix " + data("d8_nu.json"));
  ASSERT_EQ(f.code, 0) << f.out;
  EXPECT_EQ(f.j["tight"], false);
}

TEST(Cli, ExamplesD8) {
  const RunResult r = run("examples d8");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.j["irreducibles"].size(), 2u);
  EXPECT_EQ(r.j["E"]["matrix"].size(), 8u);
}

TEST(Cli, ValidateReportsInvalidCocycle) {
  const RunResult bad = run("validate cocycle " + data("bad_cocycle.json"));
  EXPECT_EQ(bad.code, 1) << bad.out;
  EXPECT_EQ(bad.j["valid"], false);
  const RunResult good = run("validate cocycle " + data("klein_cocycle.json"));
  EXPECT_EQ(good.code, 0) << good.out;
  EXPECT_EQ(good.j["valid"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("det --matrix /nonexistent.json").code, 2);
  EXPECT_EQ(run("det").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  const RunResult g = run("validate group " + data("bad_group.json"));
  EXPECT_EQ(g.code, 1) << g.out;
  EXPECT_EQ(g.j["kind"], "invalid-group");
  const RunResult c = run("construct --matrix " + data("d8_nu.json"));
  EXPECT_EQ(c.code, 1) << c.out;
  EXPECT_EQ(c.j["kind"], "precondition-violation");
}

TEST(Cli, TransformRoundTrip) {
  const RunResult t = run("transform --f " + data("z4_f.json"));
  ASSERT_EQ(t.code, 0) << t.out;
  ASSERT_EQ(t.j["blocks"].size(), 4u);
  for (const auto& b : t.j["blocks"]) EXPECT_EQ(io::complex_from_json(b["matrix"][0][0]), Complex(1.0, 0.0));
}

TEST(Cli, ConstructCentral) {
  const RunResult r = run("construct --matrix " + data("d8_central_rho1.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.j["dimension"].get<std::size_t>(), 4u);
  EXPECT_LT(r.j["residual"].get<double>(), 1e-12);
}

TEST(Cli, ToleranceOverride) {
  EXPECT_EQ(run("--tol projection=1e-3 tightcheck --central rho1 --cocycle d8").code, 0);
  EXPECT_EQ(run("--tol bogus=1 tightcheck --central rho1 --cocycle d8").code, 2);
}

TEST(Cli, Gramian) {
  const RunResult r = run("gramian --rep klein.rho --v " + data("klein_v.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NEAR(io::complex_from_json(r.j["matrix"]["nu"][0]).real(), 0.5, 1e-15);
}

}  // namespace
}  // namespace projframe::testing
