#include "yam/cli.hpp"
#include "yam/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace yam {
namespace {

const std::string kFixtures = YAM_FIXTURE_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome yam(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 5 && a.ends_with(".json") && a.find('/') == std::string::npos) a = kFixtures + "/" + a;
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const Json& j) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << j.dump();
  return path.string();
}

TEST(Cli, CheckPassingAlgebra) {
  const Outcome o = yam({"check", "k1.json"});
  EXPECT_EQ(o.code, kExitPass);
  EXPECT_EQ(o.out, "assy: 11/11 families pass\n");
}

TEST(Cli, CheckBrokenAlgebraPrintsWitness) {
  const Outcome o = yam({"check", "k1_broken.json"});
  EXPECT_EQ(o.code, kExitFail);
  EXPECT_NE(o.out.find("FAIL AY1 at (0, 0, 0): residual [1]"), std::string::npos);
}

TEST(Cli, CohomologyOfK1Adjoint) {
  const Outcome o = yam({"cohomology", "k1.json", "k1_adjoint.json"});
  EXPECT_EQ(o.code, kExitPass);
  EXPECT_EQ(o.out, "dim_Z=2 dim_B=1 dim_H=1\n");
  const Outcome j = yam({"cohomology", "k1.json", "k1_adjoint.json", "--representatives", "--json"});
  const Json doc = Json::parse(j.out);
  EXPECT_EQ(doc["dim_H"], 1);
  EXPECT_EQ(doc["representatives"].size(), 1u);
  EXPECT_EQ(doc["status"], "pass");
}

TEST(Cli, CohomologyRejectsMismatchedAlgebra) {
  EXPECT_EQ(yam({"cohomology", "n2.json", "k1_adjoint.json"}).code, kExitError);
}

TEST(Cli, OtherFileKinds) {
  EXPECT_EQ(yam({"check", "k1_adjoint.json"}).out, "representation: 11/11 families pass\n");
  EXPECT_EQ(yam({"check", "d1.json"}).code, kExitPass);
  EXPECT_EQ(yam({"check", "k1_end_ym.json"}).code, kExitPass);
  EXPECT_EQ(yam({"check", "n2_rbo.json"}).code, kExitPass);
  EXPECT_EQ(yam({"check", "k1_extension.json"}).out, "extension: valid\n");

  const Outcome deform = yam({"deform", "k1_rescaling.json"});
  EXPECT_EQ(deform.code, kExitPass);
  EXPECT_NE(deform.out.find("infinitesimal: order 1, cocycle: true"), std::string::npos);

  const Outcome ext = yam({"extension", "k1_extension.json"});
  EXPECT_EQ(ext.code, kExitPass);
  EXPECT_NE(ext.out.find("class: nontrivial"), std::string::npos);
}

TEST(Cli, ConstructAndEnvelopeWriteAlgebraFiles) {
  const Outcome c = yam({"construct", "--to", "liey", "k1.json"});
  ASSERT_EQ(c.code, kExitPass);
  EXPECT_EQ(algebra_from_json(Json::parse(c.out)), construct(fixture_k1(), AlgebraClass::LieY));

  const Outcome e = yam({"envelope", "n2.json"});
  ASSERT_EQ(e.code, kExitPass);
  const Json doc = Json::parse(e.out);
  EXPECT_EQ(algebra_from_json(doc["total"]), envelope(fixture_n2()).total);
  EXPECT_TRUE(doc.contains("projector0") && doc.contains("projector1"));

  EXPECT_EQ(yam({"construct", "--to", "nope", "k1.json"}).code, kExitError);
}

TEST(Cli, Diagrams) {
  EXPECT_EQ(yam({"diagram", "--which", "ass", "k1_ass.json"}).out, "commutes: true\n");
  EXPECT_EQ(yam({"diagram", "--which", "diass", "d1.json"}).out, "commutes: true\n");
  EXPECT_EQ(yam({"diagram", "--which", "diass", "--random", "10"}).code, kExitPass);
  EXPECT_EQ(yam({"diagram", "--which", "ass"}).code, kExitError);
  EXPECT_EQ(yam({"diagram", "--which", "lie", "k1.json"}).code, kExitError);
}

TEST(Cli, OperadAndRotaBaxterCommands) {
  EXPECT_EQ(yam({"operad", "check", "--kind", "end", "--dim", "1"}).code, kExitPass);
  EXPECT_EQ(yam({"operad", "check", "--kind", "tree", "--dim", "1"}).code, kExitError);
  EXPECT_EQ(yam({"operad", "ym-check", "n2_dend_ym.json"}).code, kExitPass);
  EXPECT_EQ(yam({"operad", "agree", "--kind", "dend", "--random", "20"}).code, kExitPass);
  EXPECT_EQ(yam({"rb", "check", "n2_rbo.json"}).code, kExitPass);
  EXPECT_EQ(yam({"rb", "agree", "--random", "20"}).code, kExitPass);

  const Outcome induced = yam({"rb", "induce", "n2_rbo.json"});
  ASSERT_EQ(induced.code, kExitPass);
  const AlgebraPresentation d = algebra_from_json(Json::parse(induced.out));
  EXPECT_EQ(d.kind, AlgebraClass::DendY);
  EXPECT_TRUE(check_axioms(d).passed());
}

TEST(Cli, FailingRotaBaxterOperator) {
  Json j = read_json_file(kFixtures + "/n2_rbo.json");
  j["algebra"] = to_json(fixture_k1());
  j["rep"] = to_json(adjoint_representation(fixture_k1()));
  j["rep"].erase("algebra");
  j["R"] = Json::array({Json::array({1})});
  const std::string path = temp_file("yam_k1_rbo.json", j);
  EXPECT_EQ(yam({"rb", "check", path}).code, kExitFail);
  EXPECT_EQ(yam({"rb", "induce", path}).code, kExitFail);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(yam({}).code, kExitError);
  EXPECT_EQ(yam({"frobnicate", "k1.json"}).code, kExitError);
  EXPECT_EQ(yam({"check", "--bogus", "k1.json"}).code, kExitError);
  EXPECT_EQ(yam({"check", "missing.json"}).code, kExitError);
  EXPECT_EQ(yam({"--help"}).code, kExitPass);

  Json shape = to_json(fixture_k1());
  shape["dim"] = 2;
  const Outcome o = yam({"check", temp_file("yam_shape.json", shape)});
  EXPECT_EQ(o.code, kExitError);
  EXPECT_NE(o.err.find("operation '"), std::string::npos);

  Json inexact = to_json(fixture_k1());
  inexact["ops"]["dot"][0][0][0] = 0.5;
  EXPECT_EQ(yam({"check", temp_file("yam_float.json", inexact)}).code, kExitError);

  const Outcome j = yam({"--json", "check", "missing.json"});
  EXPECT_EQ(Json::parse(j.out)["status"], "error");
}

TEST(Cli, JsonReportsAreDeterministic) {
  const std::vector<std::string> args = {"--json", "--seed", "7", "operad", "agree", "--kind", "end", "--random", "30"};
  const Outcome a = yam(args), b = yam(args);
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  const Json doc = Json::parse(a.out);
  EXPECT_EQ(doc["seed"], 7);
  EXPECT_EQ(doc["agreements"], 30);
  EXPECT_EQ(pretty(Json::parse(a.out)) + "\n", a.out);

  const Outcome other = yam({"--json", "--seed", "8", "operad", "agree", "--kind", "end", "--random", "30"});
  EXPECT_NE(Json::parse(other.out)["valid"], Json());
}

TEST(Cli, SeedEnvironmentOverridesFlag) {
  ::setenv("YAM_SEED", "11", 1);
  const Outcome o = yam({"--json", "--seed", "3", "rb", "agree", "--random", "5"});
  ::setenv("YAM_SEED", "eleven", 1);
  const Outcome bad = yam({"rb", "agree", "--random", "5"});
  ::unsetenv("YAM_SEED");
  EXPECT_EQ(Json::parse(o.out)["seed"], 11);
  EXPECT_EQ(bad.code, kExitError);
}

}  // namespace
}  // namespace yam
