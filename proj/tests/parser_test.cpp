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

#include <gtest/gtest.h>

#include "lambdad/corpus.hpp"
#include "lambdad/surface.hpp"

namespace lambdad {
namespace {

std::string codeOf(const std::string& text) {
  try {
    parseScript(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  return "";
}

// Fully bracketed shape of an expression, independent of the printer.
std::string shape(const SExprPtr& e) {
  switch (e->kind) {
    case SKind::Star: return "*";
    case SKind::Name: return e->text;
    case SKind::App: return "(" + shape(e->kids[0]) + " " + shape(e->kids[1]) + ")";
    case SKind::Infix: return "(" + shape(e->kids[0]) + " " + e->text + " " + shape(e->kids[1]) + ")";
    case SKind::Prefix: return "(" + e->text + shape(e->kids[0]) + ")";
    case SKind::Postfix: return "(" + shape(e->kids[0]) + e->text + ")";
    case SKind::Binder: {
      std::string names;
      for (const auto& n : e->names) names += (names.empty() ? "" : ",") + n;
      return "(" + e->text + " " + names + ":" + shape(e->kids[0]) + ". " + shape(e->kids[1]) + ")";
    }
    default: return printSurface(e);
  }
}

std::string show(const std::string& text) { return shape(parseExpression(text)); }

TEST(Parser, IdentityRelationScript) {
  SurfaceScript s = parseScript("flag S : * { def idS() : br(S) := \\x:S.\\y:S. x =[S] y ; }");
  ASSERT_EQ(s.items.size(), 3u);
  EXPECT_EQ(s.items[0].kind, ItemKind::OpenFlag);
  ASSERT_EQ(s.items[0].decls.size(), 1u);
  EXPECT_EQ(s.items[0].decls[0].names, std::vector<std::string>{"S"});
  EXPECT_EQ(s.items[1].kind, ItemKind::Def);
  EXPECT_EQ(s.items[1].name, "idS");
  EXPECT_TRUE(s.items[1].hasParams);
  EXPECT_TRUE(s.items[1].decls.empty());
  EXPECT_EQ(s.items[2].kind, ItemKind::CloseFlag);
  const SExprPtr& eq = s.items[1].body->kids[1]->kids[1];
  ASSERT_EQ(eq->kind, SKind::Infix);
  EXPECT_EQ(eq->text, "=");
  ASSERT_TRUE(eq->carrier);
  EXPECT_EQ(eq->carrier->text, "S");
  EXPECT_EQ(flagDepth(s), 1);
}

TEST(Parser, EmptyScript) {
  EXPECT_TRUE(parseScript("").items.empty());
  EXPECT_TRUE(parseScript("# only a comment\n\n").items.empty());
}

TEST(Parser, UnbalancedFlags) {
  EXPECT_EQ(codeOf("flag A : * {"), "UnbalancedFlag");
  EXPECT_EQ(codeOf("flag A : * { }\n}"), "UnbalancedFlag");
  EXPECT_EQ(codeOf("flag A : * { flag B : * { }"), "UnbalancedFlag");
}

TEST(Parser, SyntaxErrorsArePositioned) {
  try {
    parseScript("flag A : * {\n  def x := ;\n}");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), "SyntaxError");
    EXPECT_EQ(e.pos().line, 2);
    EXPECT_EQ(e.pos().column, 12);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_EQ(codeOf("def f : * := * "), "SyntaxError");
  EXPECT_EQ(codeOf("check (A : * ;"), "SyntaxError");
  EXPECT_EQ(codeOf("def def : * ;"), "SyntaxError");
}

TEST(Parser, Precedence) {
  EXPECT_EQ(show("A /\\ B => C"), "((A /\\ B) => C)");
  EXPECT_EQ(show("A => B => C"), "(A => (B => C))");
  EXPECT_EQ(show("A -> B -> C"), "(A -> (B -> C))");
  EXPECT_EQ(show("A <=> B => C"), "(A <=> (B => C))");
  EXPECT_EQ(show("~A /\\ B"), "((~A) /\\ B)");
  EXPECT_EQ(show("~(A /\\ B)"), "(~(A /\\ B))");
  EXPECT_EQ(show("~~A"), "(~(~A))");
  EXPECT_EQ(show("A /\\ B \\/ C"), "((A /\\ B) \\/ C)");
  EXPECT_EQ(show("A \\/ B /\\ C"), "(A \\/ (B /\\ C))");
  EXPECT_EQ(show("A /\\ B /\\ C"), "((A /\\ B) /\\ C)");
  EXPECT_EQ(show("R o Q cup P"), "((R o Q) cup P)");
  EXPECT_EQ(show("R cup Q cap P"), "(R cup (Q cap P))");
  EXPECT_EQ(show("R o Q^-1"), "(R o (Q^-1))");
  EXPECT_EQ(show("(R o Q)^-1"), "((R o Q)^-1)");
  EXPECT_EQ(show("R^-1^-1"), "((R^-1)^-1)");
  EXPECT_EQ(show("x eps R x"), "(x eps (R x))");
  EXPECT_EQ(show("R x = R y /\\ P"), "(((R x) = (R y)) /\\ P)");
  EXPECT_EQ(show("R cap Q <= id"), "((R cap Q) <= id)");
  EXPECT_EQ(show("forall x:S. P x => Q x"), "(forall x:S. ((P x) => (Q x)))");
  EXPECT_EQ(show("A => forall x:S. P x /\\ B"), "(A => (forall x:S. ((P x) /\\ B)))");
  EXPECT_EQ(show("f x y z"), "(((f x) y) z)");
}

TEST(Parser, FoldedBindersAndCalls) {
  SExprPtr e = parseExpression("\\x,y:S. R y x");
  ASSERT_EQ(e->kind, SKind::Binder);
  EXPECT_EQ(e->names, (std::vector<std::string>{"x", "y"}));
  SExprPtr c = parseExpression("conv(S, R) x");
  ASSERT_EQ(c->kind, SKind::App);
  EXPECT_EQ(c->kids[0]->kind, SKind::Call);
  // A space before the parenthesis makes it an application.
  SExprPtr a = parseExpression("f (x)");
  EXPECT_EQ(a->kind, SKind::App);
  SExprPtr k = parseExpression("[x]_(R, u)");
  EXPECT_EQ(k->kind, SKind::ClassOf);
  SExprPtr b = parseExpression("{y:S | R x y}");
  EXPECT_EQ(b->kind, SKind::SetBuilder);
}

TEST(Parser, PrintParseRoundTrip) {
  const char* text =
      "# header\n"
      "flag S : * | R, Q : br(S) {\n"
      "  # doc\n"
      "  def incl [\"4.1\"] : * := forall x,y:S. (R x y => Q x y) ;  # trailing\n"
      "  abbrev P(x : S) := \\z:S. R x z /\\ ~(Q z x) ;\n"
      "  check R^-1 o Q : br(S) ;\n"
      "}\n"
      "notation \"<=\" rel := incl ;\n";
  SurfaceScript s = parseScript(text);
  EXPECT_EQ(parseScript(printScript(s)), s);
  EXPECT_EQ(printScript(parseScript(printScript(s))), printScript(s));
}

TEST(Parser, CorpusRoundTrip) {
  for (const LoadedScript& ls : loadCorpus(defaultManifestPath())) {
    SurfaceScript again = parseScript(printScript(ls.script), ls.path);
    EXPECT_EQ(again, ls.script) << ls.path;
  }
}

}  // namespace
}  // namespace lambdad
