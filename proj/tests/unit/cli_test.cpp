#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "asimkit/model_io.hpp"
#include "asimkit/simulation.hpp"
#include "asimkit/simulation_io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = asimkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (fs::path(ASIMKIT_TEST_DATA) / name).string(); }

}  // namespace

TEST(Cli, Version) {
  const auto r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "asimkit 0.1.0\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"parse", "int", "p1", "--bogus"}).code, 2);
  EXPECT_EQ(run({"mc", data("missing.json"), "--fo", "P1(x)"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Parse) {
  auto r = run({"parse", "int", "p1 -> p2 -> p3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p1 -> (p2 -> p3)\n");
  r = run({"parse", "int", "~p1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("negation is not primitive"), std::string::npos);
  EXPECT_EQ(run({"parse", "int", "--sugar", "~p1"}).out, "p1 -> false\n");
  EXPECT_EQ(run({"parse", "modal", "[](p1 & ~p2)"}).out, "[] (p1 & ~p2)\n");
  r = run({"parse", "fo", "P1(x,y)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unary"), std::string::npos);
}

TEST(Cli, Translate) {
  const auto r = run({"translate", "st", "--var", "x", "p1 -> p2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "forall y0. (R(x,y0) -> (P1(y0) -> P2(y0)))\n");
  EXPECT_EQ(run({"translate", "tr", "--var", "z", "[] p1"}).out, "forall y0. (R(z,y0) -> P1(y0))\n");
  EXPECT_EQ(run({"translate", "st", "--var", "forall", "p1"}).code, 2);
}

TEST(Cli, ModelCheck) {
  auto r = run({"mc", data("m.json"), "--at", "a", "--fo", "exists y. (R(x,y) & P1(y))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run({"mc", data("n.json"), "--at", "d", "--fo", "exists y. (R(x,y) & P1(y))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(run({"mc", data("n1.json"), "--at", "d", "--int", "p1 -> false"}).out, "true\n");
  EXPECT_EQ(run({"mc", data("m.json"), "--at", "a", "--modal", "[] p1"}).out, "false\n");
  EXPECT_EQ(run({"mc", data("m.json"), "--fo", "forall x. exists y. R(x,y)"}).out, "false\n");
  EXPECT_EQ(run({"mc", data("m.json"), "--at", "z", "--fo", "P1(x)"}).code, 2);
  EXPECT_EQ(run({"mc", data("m.json"), "--at", "a", "--fo", "P2(x)"}).code, 2);
}

TEST(Cli, ValidateInt) {
  EXPECT_EQ(run({"validate-int", data("m1.json")}).out, "intuitionistic\n");
  const auto r = run({"validate-int", data("m.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("not reflexive at a"), std::string::npos);
}

TEST(Cli, AsimCheck) {
  auto r = run({"asim", "check", "--left", data("m.json"), "--right", data("n.json"), "--relation", data("b.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok\n");
  r = run({"asim", "check", "--left", data("m.json"), "--right", data("n.json"), "--relation",
           data("singleton_ad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "violation: StepBack at LR a -> d: successor e of d is not answered\n");
  r = run({"--json", "asim", "check", "--left", data("m.json"), "--right", data("n.json"), "--relation",
           data("singleton_ad.json")});
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "violation");
  EXPECT_EQ(doc["violation"]["kind"], "StepBack");
  EXPECT_EQ(doc["violation"]["successor"], "e");
  EXPECT_EQ(run({"asim", "check", "--left", data("m1.json"), "--right", data("n1.json"), "--relation",
                 data("c.json")})
                .code,
            0);
  EXPECT_EQ(run({"asim", "check", "--k", "5", "--left", data("m.json"), "--right", data("n.json"), "--relation",
                 data("a_tuples.json")})
                .code,
            0);
  EXPECT_EQ(run({"asim", "check", "--left", data("m.json"), "--right", data("n.json"), "--relation",
                 data("a_tuples.json")})
                .code,
            2);
}

TEST(Cli, AsimExists) {
  auto r = run({"asim", "exists", "--left", data("n.json"), "--right", data("m.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "false\n");
  r = run({"asim", "exists", "--left", data("m.json"), "--right", data("n.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  EXPECT_EQ(run({"asim", "exists", "--k", "3", "--left", data("m.json"), "--right", data("n.json")}).code, 0);
  EXPECT_EQ(run({"asim", "exists", "--left", data("m.json"), "--right", data("n.json"), "--left-point", "b",
                 "--right-point", "d"})
                .code,
            1);
}

TEST(Cli, JsonRelationsRevalidate) {
  const auto m = asimkit::load_model_file(data("m.json"));
  const auto n = asimkit::load_model_file(data("n.json"));
  auto r = run({"--json", "asim", "exists", "--left", data("m.json"), "--right", data("n.json")});
  ASSERT_EQ(r.code, 0);
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["result"], true);
  const auto rel = asimkit::load_directed_relation(doc["relation"].dump(), *m.model, *n.model);
  EXPECT_TRUE(asimkit::check_asimulation(m.pointed(), n.pointed(), rel).ok());

  r = run({"--json", "asim", "exists", "--k", "2", "--left", data("m.json"), "--right", data("n.json")});
  doc = json::parse(r.out);
  const auto tuples = asimkit::load_tuple_relation(doc["relation"].dump(), *m.model, *n.model);
  EXPECT_TRUE(asimkit::check_k_asimulation_tuples(m.pointed(), n.pointed(), tuples, 2).ok());
}

TEST(Cli, AsimGreatest) {
  const auto r = run({"asim", "greatest", "--left", data("m.json"), "--right", data("n.json")});
  EXPECT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_TRUE(doc.contains("pairs"));
}

TEST(Cli, Bisim) {
  EXPECT_EQ(run({"bisim", "check", "--left", data("m.json"), "--right", data("n.json"), "--left-point", "b",
                 "--right-point", "e", "--relation", data("bisim_be.json")})
                .code,
            0);
  const auto r = run({"bisim", "check", "--left", data("m.json"), "--right", data("n.json"), "--relation",
                      data("bisim_be.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("RootMissing"), std::string::npos);
  EXPECT_EQ(run({"bisim", "greatest", "--left", data("m.json"), "--right", data("n.json")}).code, 0);
}

TEST(Cli, Scan) {
  const std::string phi = "exists y. (R(x,y) & P1(y))";
  auto r = run({"scan", "--mode", "asim", "--fo", phi, "--models", data("family")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("counterexample: m@a -> n@d"), std::string::npos);
  r = run({"--json", "scan", "--mode", "kasim:3", "--fo", phi, "--models", data("family")});
  EXPECT_EQ(r.code, 1);
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "counterexample");
  EXPECT_EQ(doc["source"]["model"], "m");
  EXPECT_EQ(doc["target"]["point"], "d");
  r = run({"scan", "--mode", "int", "--fo", phi, "--models", data("int_family")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("m1@a -> n1@d"), std::string::npos);

  r = run({"--json", "scan", "--mode", "asim", "--fo", "forall y. (R(x,y) -> (P1(y) -> P2(y)))", "--enumerate", "2",
           "--vocab", "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["verdict"], "pass");
  r = run({"--json", "scan", "--mode", "asim", "--fo", "P1(x)", "--enumerate", "2", "--depth", "1"});
  doc = json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "pass");
  EXPECT_EQ(doc["result"], "p1");
  EXPECT_EQ(run({"scan", "--mode", "sideways", "--fo", phi, "--models", data("family")}).code, 2);
}

TEST(Cli, Synth) {
  auto r = run({"synth", "--fo", "exists y. (R(x,y) & P1(y))", "--depth", "2", "--models", data("family")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "absent\n");
  EXPECT_NE(r.err.find("relative to a family of"), std::string::npos);
  r = run({"--json", "synth", "--fo", "P1(x) & P2(x)", "--depth", "0", "--enumerate", "1", "--vocab", "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["result"], "p1 & p2");
  r = run({"--json", "synth", "--fo", "exists y. (R(x,y) & P1(y))", "--depth", "1", "--models", data("family")});
  EXPECT_TRUE(json::parse(r.out)["result"].is_null());
}

TEST(Cli, EnumModels) {
  auto r = run({"enum-models", "--max-worlds", "1", "--vocab", ""});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("2 models"), std::string::npos);
  r = run({"--json", "enum-models", "--max-worlds", "2", "--vocab", "1"});
  EXPECT_EQ(json::parse(r.out).size(), 40u);
  r = run({"enum-models", "--max-worlds", "1", "--vocab", "1", "--int"});
  EXPECT_NE(r.err.find("2 models"), std::string::npos);
  EXPECT_EQ(run({"enum-models", "--max-worlds", "2", "--vocab", "1", "--cap", "3"}).code, 2);

  const fs::path dir = fs::temp_directory_path() / "asimkit_cli_enum";
  fs::remove_all(dir);
  r = run({"enum-models", "--max-worlds", "2", "--vocab", "1", "--int", "--out", dir.string()});
  EXPECT_EQ(r.code, 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    EXPECT_NO_THROW((void)asimkit::load_model_file(entry.path()));
  }
  EXPECT_GT(files, 2u);
  fs::remove_all(dir);
}

TEST(Cli, ExportDot) {
  const auto r = run({"export-dot", data("m.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_NE(r.out.find("doublecircle"), std::string::npos);
}
