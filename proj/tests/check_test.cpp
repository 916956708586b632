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

#include "lambdad/check.hpp"
#include "lambdad/corpus.hpp"
#include "lambdad/print.hpp"

namespace lambdad {
namespace {

// Session holding the whole corpus, built once.
const Session& corpusSession() {
  static const Session s = [] {
    CorpusReport rep = checkCorpus(loadCorpus(defaultManifestPath()));
    EXPECT_TRUE(rep.ok());
    return rep.session;
  }();
  return s;
}

// Session holding the corpus up to and including `last`.
Session prefixSession(const std::string& last) {
  std::vector<LoadedScript> all = loadCorpus(defaultManifestPath());
  std::vector<LoadedScript> prefix;
  for (auto& ls : all) {
    prefix.push_back(ls);
    if (ls.path == last) break;
  }
  return checkCorpus(prefix).session;
}

Expr elab(const std::string& flags, const std::string& text) {
  Session s = corpusSession();
  return elaborateExpression(s, flags, text);
}

std::string elabCode(const std::string& flags, const std::string& text) {
  Session s = corpusSession();
  try {
    elaborateExpression(s, flags, text);
  } catch (const ElabError& e) {
    return e.code();
  } catch (const NotationError& e) {
    return e.code();
  } catch (const KernelError& e) {
    return toString(e.kind());
  }
  return "";
}

ScriptResult run(Session& s, const std::string& text) {
  return checkScript(s, parseScript(text, "test.ld"));
}

TEST(Desugar, ConverseIsConstApp) {
  // S is index 1, R index 0.
  EXPECT_EQ(elab("S : * | R : br(S)", "R^-1"), mkConst("conv", {mkVar(1), mkVar(0)}));
}

TEST(Desugar, ImplicationIsArrow) {
  Expr e = elab("A, B : *", "A => B");
  ASSERT_EQ(e.kind(), ExprKind::Pi);
  EXPECT_EQ(e.binderName(), "_");
  EXPECT_EQ(e, mkPi("_", mkVar(1), mkVar(1)));
  EXPECT_EQ(elab("A, B : *", "A -> B"), e);
}

TEST(Desugar, ElementOf) {
  // S, x, V at indices 2, 1, 0
  EXPECT_EQ(elab("S : * | x : S | V : ps(S)", "x eps V"),
            mkConst("element", {mkVar(2), mkVar(1), mkVar(0)}));
}

TEST(Desugar, Carriers) {
  Expr s = mkVar(2), r = mkVar(1), q = mkVar(0);
  const char* flags = "S : * | R, Q : br(S)";
  EXPECT_EQ(elab(flags, "R o Q"), mkConst("comp", {s, r, q}));
  EXPECT_EQ(elab(flags, "R cup Q"), mkConst("union", {s, r, q}));
  EXPECT_EQ(elab(flags, "R cap Q"), mkConst("inter", {s, r, q}));
  EXPECT_EQ(elab(flags, "R <= Q"), mkConst("incl", {s, r, q}));
  EXPECT_EQ(elab(flags, "R == Q"), mkConst("ex-eq", {s, r, q}));
  // Intensional equality takes the operand's type as carrier.
  EXPECT_EQ(elab("S : * | x, y : S", "x = y"), mkConst("eq", {mkVar(2), mkVar(1), mkVar(0)}));
  EXPECT_EQ(elab("S : * | x, y : S", "x =[S] y"), elab("S : * | x, y : S", "x = y"));
  // Subsets select the set-level target.
  EXPECT_EQ(elab("S : * | X, Y : ps(S)", "X <= Y"), mkConst("subset", {mkVar(2), mkVar(1), mkVar(0)}));
  EXPECT_EQ(elab("S : * | X, Y : ps(S)", "X == Y"),
            mkConst("set-ex-eq", {mkVar(2), mkVar(1), mkVar(0)}));
  // Carrier through a definition: the operand is conv(S, R) : br(S).
  EXPECT_EQ(elab(flags, "R^-1 o Q"), mkConst("comp", {s, mkConst("conv", {s, r}), q}));
}

TEST(Desugar, IsLocal) {
  const char* flags = "S : * | R, P, Q : br(S)";
  EXPECT_EQ(elab(flags, "(R o P)^-1 cap Q^-1 <= R"),
            elab(flags, "incl(S, inter(S, conv(S, comp(S, R, P)), conv(S, Q)), R)"));
  EXPECT_EQ(elab("A, B : *", "~A \\/ B <=> A /\\ ~B"),
            elab("A, B : *", "iff(or(neg(A), B), and(A, neg(B)))"));
  EXPECT_EQ(elab("S : * | P : S -> *", "forall x:S. exists y:S. P y"),
            elab("S : * | P : S -> *", "all(S, \\x:S. ex(S, \\y:S. P y))"));
}

TEST(Desugar, ImplicitArguments) {
  // A call with fewer arguments takes the leading parameters from scope.
  EXPECT_EQ(elab("S : * | R, Q : br(S)", "comp(R, Q)"), elab("S : * | R, Q : br(S)", "R o Q"));
  // A bare definition name takes all of them.
  EXPECT_EQ(elab("S : * | R : br(S)", "refl"), mkConst("refl", {mkVar(1), mkVar(0)}));
}

TEST(Desugar, Errors) {
  EXPECT_EQ(elabCode("A : *", "nope"), "UnboundName");
  EXPECT_EQ(elabCode("A : *", "A(A)"), "NotADefinition");
  EXPECT_EQ(elabCode("A, B : *", "and(A, B, A)"), "ArityMismatch");
  // Neither a relation nor a predicate.
  EXPECT_EQ(elabCode("A : * | a, b : A", "a <= b"), "CarrierInference");
  EXPECT_EQ(elabCode("A : * | a, b : A", "a o b"), "CarrierInference");
}

TEST(Desugar, UnknownNotation) {
  Session s;
  ScriptResult r = run(s, "flag A : * { check ~A : * ; }");
  EXPECT_FALSE(r.ok());
  bool found = false;
  for (const auto& it : r.items)
    if (it.code == "UnknownNotation") found = true;
  EXPECT_TRUE(found);
}

TEST(Resolve, ResolvesAfterEquality) {
  Session s = prefixSession("equality.ld");
  ScriptResult r = run(s, "flag S : * | x : S { have a : x = x := eq-refl(S, x) ; }");
  EXPECT_TRUE(r.ok()) << r.items.front().message;
}

TEST(Resolve, ForwardReference) {
  Session s = prefixSession("relations.ld");
  std::vector<LoadedScript> all = loadCorpus(defaultManifestPath());
  std::string text;
  for (const auto& ls : all)
    if (ls.path == "rel_thms.ld") text = ls.text;
  text = "flag S : * | R, Q : br(S) {\n"
         "  check conv-prod(S, R, Q) : (R o Q)^-1 == Q^-1 o R^-1 ;\n"
         "}\n" + text;
  ScriptResult r = checkScript(s, parseScript(text, "rel_thms.ld"));
  ASSERT_GE(r.items.size(), 2u);
  EXPECT_FALSE(r.items[1].ok);
  EXPECT_EQ(r.items[1].code, "ForwardReference");
  // Everything else still checks.
  EXPECT_EQ(r.failures(), 1u);
  EXPECT_TRUE(r.find("conv-prod")->ok);
}

TEST(Resolve, ForwardReferenceToLocal) {
  Session s;
  ScriptResult r = run(s,
                       "flag A : * {\n"
                       "  have a1 : A -> A := b1 ;\n"
                       "  have b1 : A -> A := \\u:A. u ;\n"
                       "}\n");
  EXPECT_EQ(r.find("a1")->code, "ForwardReference");
  EXPECT_TRUE(r.find("b1")->ok);
}

TEST(Resolve, InnermostBindingWins) {
  Session s;
  ScriptResult r = run(s,
                       "flag S, T : * | x : S {\n"
                       "  flag x : T {\n"
                       "    check x : T ;\n"
                       "    have a : T := x ;\n"
                       "  }\n"
                       "  check x : S ;\n"
                       "}\n");
  EXPECT_TRUE(r.ok());
  // a's parameters are S, T, outer x and inner x, in that order.
  const Definition* d = s.env.find(r.find("a")->global);
  ASSERT_NE(d, nullptr);
  ASSERT_EQ(d->params.size(), 4u);
  EXPECT_EQ(*d->body, mkVar(0));
}

TEST(Resolve, LocalsEndWithTheirBlock) {
  Session s;
  ScriptResult r = run(s,
                       "flag A : * { have a1 : A -> A := \\u:A. u ; }\n"
                       "flag A : * { have a2 : A -> A := a1 ; }\n");
  EXPECT_EQ(r.find("a2")->code, "UnboundName");
}

TEST(Check, PoisoningPropagates) {
  Session s;
  ScriptResult r = run(s,
                       "flag A, B : * {\n"
                       "  have a1 : A -> B := \\u:A. u ;\n"
                       "  have a2 : A -> B := a1 ;\n"
                       "  def d [\"t\"] : * := A ;\n"
                       "}\n");
  EXPECT_EQ(r.find("a1")->code, "TypeMismatch");
  EXPECT_EQ(r.find("a2")->code, "UsesFailedDefinition");
  EXPECT_TRUE(r.find("d")->ok);
}

TEST(Check, TypeMismatchShowsNormalForms) {
  Session s = prefixSession("relations.ld");
  ScriptResult r = run(s,
                       "flag S : * | R : br(S) | x, y : S | u : R x y {\n"
                       "  check u : R^-1 x y ;\n"
                       "}\n");
  ASSERT_FALSE(r.ok());
  const ItemResult& it = r.items[1];
  EXPECT_EQ(it.code, "TypeMismatch");
  EXPECT_NE(it.detail.find("R x y"), std::string::npos) << it.detail;
  EXPECT_NE(it.detail.find("R y x"), std::string::npos) << it.detail;
}

TEST(Check, FailedFlagPoisonsItsVariables) {
  Session s;
  ScriptResult r = run(s, "flag A : nope | B : A { have a : A -> A := \\u:A. u ; }");
  EXPECT_EQ(r.items[0].code, "UnboundName");
  EXPECT_EQ(r.find("a")->code, "UsesFailedDefinition");
}

TEST(Check, CheckRequiresAType) {
  Session s;
  ScriptResult r = run(s, "flag A : * | a : A { check A : a ; check a : A ; }");
  EXPECT_FALSE(r.items[1].ok);
  EXPECT_TRUE(r.items[2].ok);
}

TEST(Check, AbbreviationsWithParameters) {
  Session s = prefixSession("relations.ld");
  ScriptResult r = run(s,
                       "flag S : * | R : br(S) {\n"
                       "  abbrev P(x : S) := \\z:S. R x z ;\n"
                       "  flag x : S | u : R x x {\n"
                       "    check u : P(x) x ;\n"
                       "    check P(x, x) : * ;\n"
                       "  }\n"
                       "}\n");
  EXPECT_TRUE(r.items[3].ok) << r.items[3].message;
  EXPECT_EQ(r.items[4].code, "ArityMismatch");
}

TEST(Check, NotationBinding) {
  Session s;
  ScriptResult r = run(s,
                       "flag A : * { def neg2 [\"n\"] : * := A -> A ; }\n"
                       "notation \"~\" := neg2 ;\n"
                       "notation \"~\" := nothing ;\n");
  EXPECT_TRUE(r.items[3].ok);
  EXPECT_FALSE(r.items[4].ok);
}

TEST(Check, CorpusSessionIsComplete) {
  const Session& s = corpusSession();
  for (const auto& name : requiredExports()) EXPECT_TRUE(s.env.contains(name)) << name;
  EXPECT_TRUE(s.poisoned.empty());
}

}  // namespace
}  // namespace lambdad
