// Copyright 2026 The lambdad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the built command-line tool and checks exit codes and output.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args, bool withStderr = true) {
  std::string cmd = std::string(LAMBDAD_CLI) + " " + args + (withStderr ? " 2>&1" : " 2>/dev/null");
  Outcome r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string temp(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / ("lambdad_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, CheckCorpus) {
  Outcome r = run("check");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(count(r.out, "FAIL"), 0u);
  EXPECT_GE(count(r.out, "PASS"), 60u);
  EXPECT_NE(r.out.find("conv-prod"), std::string::npos);
  EXPECT_NE(r.out.find("0 failures"), std::string::npos);
}

TEST(Cli, TypeErrorShowsNormalForms) {
  std::string p = temp("bad.ld",
                       "flag S : * | R : br(S) {\n"
                       "  def bad [\"t\"] : R <= R^-1 := \\x,y:S. \\u:R x y. u ;\n"
                       "}\n");
  Outcome r = run("check " + p);
  EXPECT_EQ(r.status, 1) << r.out;
  EXPECT_EQ(count(r.out, "FAIL "), 1u) << r.out;
  EXPECT_NE(r.out.find("TypeMismatch"), std::string::npos);
  EXPECT_NE(r.out.find("has type (normal form): !x:S. !y:S. R x y -> R x y"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("expected (normal form)"), std::string::npos);
}

TEST(Cli, ParseErrorIsPositioned) {
  std::string p = temp("syntax.ld", "flag S : * {\n  def x : := S ;\n}\n");
  Outcome r = run("check " + p);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find(p + ":2:11: SyntaxError"), std::string::npos) << r.out;
}

TEST(Cli, ManifestErrors) {
  EXPECT_EQ(run("check --manifest /nonexistent/manifest").status, 2);
  std::string m = temp("cyc.manifest", "version 1\na.ld : b.ld ;\nb.ld : a.ld ;\n");
  Outcome r = run("check --manifest " + m);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("CyclicDependency"), std::string::npos);
  EXPECT_EQ(run("check --bare /nonexistent.ld").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Cli, TraceDoesNotChangeVerdict) {
  std::string p = temp("mixed.ld",
                       "flag A : * {\n"
                       "  def ok [\"a\"] : A -> A := \\x:A. x ;\n"
                       "  def no [\"b\"] : A := ok ;\n"
                       "}\n");
  Outcome plain = run("check " + p);
  Outcome traced = run("check --trace " + p, false);
  EXPECT_EQ(plain.status, 1);
  EXPECT_EQ(traced.status, plain.status);
  EXPECT_EQ(traced.out, plain.out);
  EXPECT_NE(run("check --trace " + p).out.find("[trace]"), std::string::npos);
}

TEST(Cli, MaxErrorsLimitsRows) {
  std::string p = temp("many.ld",
                       "flag A : * {\n"
                       "  def e1 [\"1\"] : A := A ;\n"
                       "  def e2 [\"2\"] : A := A ;\n"
                       "  def e3 [\"3\"] : A := A ;\n"
                       "}\n");
  Outcome r = run("check --max-errors 1 " + p);
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(count(r.out, "FAIL "), 1u) << r.out;
}

TEST(Cli, OracleRegistry) {
  Outcome r = run("oracle --maxN 3");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("n=3:512"), std::string::npos);
  EXPECT_NE(r.out.find("4.3.7 is strict"), std::string::npos);
  EXPECT_NE(r.out.find("35 theorems, 0 failed"), std::string::npos) << r.out;
}

TEST(Cli, OracleProbeAndErrors) {
  Outcome r = run("oracle commute --maxN 2 --json");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("\"counterexample\""), std::string::npos);
  EXPECT_NE(r.out.find("\"0x"), std::string::npos);
  EXPECT_EQ(run("oracle 9.9").status, 2);
  EXPECT_EQ(run("oracle --maxN 7").status, 2);
  Outcome a = run("oracle 4.3.9 --maxN 3 --samples 500 --seed 11");
  Outcome b = run("oracle 4.3.9 --maxN 3 --samples 500 --seed 11");
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("n=3:500~"), std::string::npos) << a.out;
}

TEST(Cli, Export) {
  Outcome r = run("export rel_thms.ld");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.rfind("\\begin{flagderiv}", 0), 0u);
  EXPECT_EQ(count(r.out, "\\assume*"), count(r.out, "\\done"));
  std::string out = (fs::temp_directory_path() / "lambdad_cli_out.tex").string();
  EXPECT_EQ(run("export --standalone -o " + out + " special.ld").status, 0);
  std::ifstream in(out);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "\\documentclass{article}");
  Outcome pretty = run("export --pretty sets.ld");
  EXPECT_EQ(pretty.status, 0);
  EXPECT_NE(pretty.out.find("def subset"), std::string::npos);
}

TEST(Cli, ExportCheckedOnly) {
  std::string bad = temp("unchecked.ld", "flag A : * {\n  have a1 : A := A ;\n}\n");
  EXPECT_EQ(run("export " + bad).status, 0);
  Outcome r = run("export --checked-only " + bad);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("NotChecked"), std::string::npos);
  EXPECT_EQ(run("export --checked-only properties.ld").status, 0);
  std::string deep;
  for (int i = 0; i < 5; ++i) deep += "flag x" + std::to_string(i) + " : * {\n";
  for (int i = 0; i < 5; ++i) deep += "}\n";
  Outcome d = run("export --max-depth 4 " + temp("deep.ld", deep));
  EXPECT_EQ(d.status, 1);
  EXPECT_NE(d.out.find("RenderDepthExceeded"), std::string::npos);
}
