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

#include <set>

#include <json.hpp>

#include "lambdad/corpus.hpp"
#include "lambdad/oracle.hpp"

using namespace lambdad::oracle;

namespace {

FiniteRelation rel(int n, std::vector<std::pair<int, int>> pairs) {
  return FiniteRelation::of(n, pairs);
}

// Reference composition straight from the existential.
FiniteRelation slowCompose(const FiniteRelation& a, const FiniteRelation& b) {
  FiniteRelation out{a.n, 0};
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k)
        if (a.at(i, k) && b.at(k, j)) out.set(i, j);
  return out;
}

}  // namespace

TEST(Relations, Ops) {
  auto r = rel(2, {{0, 1}});
  EXPECT_EQ(evalOp(Op::Converse, {evalOp(Op::Converse, {r})}), r);
  EXPECT_EQ(evalOp(Op::Compose, {rel(2, {{0, 1}}), rel(2, {{1, 0}})}), rel(2, {{0, 0}}));
  EXPECT_EQ(evalOp(Op::Identity, {}, 3), rel(3, {{0, 0}, {1, 1}, {2, 2}}));
  EXPECT_EQ(evalOp(Op::Union, {rel(2, {{0, 1}}), rel(2, {{1, 1}})}), rel(2, {{0, 1}, {1, 1}}));
  EXPECT_EQ(evalOp(Op::Intersection, {rel(2, {{0, 1}, {1, 0}}), rel(2, {{0, 1}})}),
            rel(2, {{0, 1}}));
  EXPECT_EQ(toString(rel(2, {{0, 1}, {1, 1}})), "{(0,1),(1,1)} on n=2");
}

TEST(Relations, CarrierMismatch) {
  try {
    evalOp(Op::Union, {rel(2, {}), rel(3, {})});
    FAIL();
  } catch (const OracleError& e) {
    EXPECT_EQ(e.code(), "CarrierMismatch");
  }
  EXPECT_THROW(FiniteRelation::identity(7), OracleError);
}

TEST(Relations, EnumerationIsComplete) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::uint64_t> seen;
    std::uint64_t count = std::uint64_t{1} << (n * n);
    for (std::uint64_t b = 0; b < count; ++b) seen.insert(FiniteRelation{n, b}.bits);
    EXPECT_EQ(seen.size(), count);
  }
}

TEST(Relations, ComposeMatchesDefinition) {
  for (std::uint64_t a = 0; a < 512; a += 7)
    for (std::uint64_t b = 0; b < 512; b += 5)
      EXPECT_EQ(compose({3, a}, {3, b}), slowCompose({3, a}, {3, b}));
}

TEST(Properties, Examples) {
  EXPECT_TRUE(checkProperty(Property::Refl, FiniteRelation::identity(3)));
  EXPECT_FALSE(checkProperty(Property::Sym, rel(2, {{0, 1}})));
  EXPECT_TRUE(checkProperty(Property::WellOrd, FiniteRelation::totalOrder({0, 1, 2})));
  EXPECT_FALSE(checkProperty(Property::WellOrd, FiniteRelation::identity(2)));
  EXPECT_TRUE(checkProperty(Property::PartOrd, FiniteRelation::identity(2)));
  EXPECT_EQ(parseProperty("antisym"), Property::Antisym);
  EXPECT_THROW(parseProperty("dense"), OracleError);
}

TEST(Properties, WellOrdersAreTheTotalOrders) {
  // On a finite carrier every well-order is total; there are n! of them.
  const int factorial[] = {1, 1, 2, 6};
  for (int n = 1; n <= 3; ++n) {
    int count = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << (n * n)); ++b) {
      FiniteRelation r{n, b};
      bool total = checkProperty(Property::PartOrd, r);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) total = total && (r.at(x, y) || r.at(y, x));
      EXPECT_EQ(checkProperty(Property::WellOrd, r), total);
      count += total;
    }
    EXPECT_EQ(count, factorial[n]);
  }
}

TEST(Partition, RoundTrip) {
  EXPECT_TRUE(partitionRoundTrip(rel(3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}})));
  EXPECT_TRUE(partitionRoundTrip(FiniteRelation::identity(4)));
  EXPECT_TRUE(partitionRoundTrip(FiniteRelation::total(3)));
  try {
    partitionRoundTrip(rel(2, {{0, 1}}));
    FAIL();
  } catch (const OracleError& e) {
    EXPECT_EQ(e.code(), "NotEquivalence");
  }
  EXPECT_FALSE(isPartition(3, {0b011, 0b110, 0b100}));
  EXPECT_TRUE(isPartition(3, {0b011, 0b011, 0b100}));
}

TEST(Registry, CoversTheTheoremList) {
  std::vector<std::string> expected = {
      "4.3.1", "4.3.2", "4.3.3", "4.3.4", "4.3.5", "4.3.6", "4.3.7", "4.3.8", "4.3.9",
      "5.1.1", "5.1.2", "5.1.3", "5.1.4", "5.1.5", "5.2",   "5.3.1", "5.3.2", "5.3.3",
      "5.3.4", "5.4.1", "5.4.2", "5.4.3", "5.4.4", "5.5.1", "5.5.2", "5.6.1", "5.6.2",
      "5.6.3", "6.1.1", "6.1.2", "6.2",   "6.3.1", "6.3.2", "6.4",   "6.5"};
  EXPECT_EQ(theoremIds(), expected);
  try {
    verifyTheorem("7.1");
    FAIL();
  } catch (const OracleError& e) {
    EXPECT_EQ(e.code(), "UnknownTheorem");
  }
}

TEST(Registry, NamesMatchCorpusExports) {
  // Each registered theorem is proved in the corpus under the same anchor.
  auto scripts = lambdad::loadCorpus(lambdad::defaultManifestPath());
  std::map<std::string, std::string> anchors;
  for (const auto& s : scripts)
    for (const auto& it : s.script.items)
      if (!it.anchor.empty()) anchors[it.anchor] = it.name;
  for (const auto& info : registry()) {
    if (info.probe) continue;
    if (info.id == "6.2") {
      EXPECT_EQ(anchors["6.2.1"], "equiv-partition");
      EXPECT_EQ(anchors["6.2.2"], "partition-equiv");
      continue;
    }
    EXPECT_EQ(anchors[info.id], info.name) << info.id;
  }
}

TEST(Verify, Associativity) {
  auto r = verifyTheorem("4.3.9", {.maxN = 2});
  EXPECT_TRUE(r.holds());
  ASSERT_EQ(r.sizes.size(), 2u);
  EXPECT_EQ(r.sizes[1].instances, 4096u);
  EXPECT_TRUE(r.exhaustive());
}

TEST(Verify, SymmetryCriterion) {
  auto r = verifyTheorem("5.1.3", {.maxN = 3});
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.sizes.back().instances, 512u);
  // Symmetric relations on 3 points: 2^3 * 2^3 = 64; both sides agree.
  EXPECT_EQ(r.sizes.back().forward, 64u);
  EXPECT_EQ(r.sizes.back().backward, 64u);
}

TEST(Verify, CriteriaCountBothDirections) {
  for (const char* id : {"5.1.1", "5.1.2", "5.1.3", "5.1.4", "5.1.5"}) {
    auto r = verifyTheorem(id, {.maxN = 3});
    EXPECT_TRUE(r.holds()) << id;
    for (const auto& s : r.sizes) {
      EXPECT_GT(s.forward, 0u) << id;
      EXPECT_EQ(s.forward, s.backward) << id;
      if (s.n >= 2) EXPECT_LT(s.forward, s.instances) << id;
    }
  }
}

TEST(Verify, TransfiniteInduction) {
  auto r = verifyTheorem("6.5", {.maxN = 5});
  EXPECT_TRUE(r.holds());
  const std::uint64_t expected[] = {2, 8, 48, 384, 3840};
  for (int n = 0; n < 5; ++n) EXPECT_EQ(r.sizes[n].instances, expected[n]);
}

TEST(Verify, SampledAboveTheLimit) {
  auto r = verifyTheorem("4.3.9", {.maxN = 3, .sampleBudget = 1000});
  EXPECT_TRUE(r.holds());
  EXPECT_FALSE(r.sizes[2].exhaustive);
  EXPECT_EQ(r.sizes[2].instances, 1000u);
  EXPECT_FALSE(r.exhaustive());
}

TEST(Verify, PairsAtThreeAreExhaustive) {
  auto r = verifyTheorem("4.3.2", {.maxN = 3});
  EXPECT_TRUE(r.holds());
  EXPECT_TRUE(r.sizes[2].exhaustive);
  EXPECT_EQ(r.sizes[2].instances, 512u * 512u);
}

TEST(Verify, CommuteProbeFails) {
  auto r = verifyTheorem("commute", {.maxN = 3});
  ASSERT_FALSE(r.holds());
  const auto& c = *r.counterexample;
  EXPECT_EQ(c.n, 2);
  ASSERT_EQ(c.relations.size(), 2u);
  EXPECT_NE(compose(c.relations[0], c.relations[1]), compose(c.relations[1], c.relations[0]));
  EXPECT_TRUE(reproduces("commute", c));
  // Least index: no earlier pair at n=2 fails.
  for (std::uint64_t t = 0; t < c.index; ++t) {
    FiniteRelation a{2, t >> 4}, b{2, t & 15};
    EXPECT_EQ(compose(a, b), compose(b, a));
  }
}

TEST(Verify, Deterministic) {
  OracleOptions opts{.maxN = 3, .sampleBudget = 2000, .seed = 7};
  EXPECT_EQ(reportJson({verifyTheorem("commute", opts), verifyTheorem("4.3.5", opts)}),
            reportJson({verifyTheorem("commute", opts), verifyTheorem("4.3.5", opts)}));
  EXPECT_THROW(verifyTheorem("4.3.1", {.maxN = 0}), OracleError);
}

TEST(Verify, StrictnessOf437) {
  auto w = strictnessWitness(3);
  ASSERT_TRUE(w.has_value());
  auto lhs = compose(w->r, intersect(w->p, w->q));
  auto rhs = intersect(compose(w->r, w->p), compose(w->r, w->q));
  EXPECT_NE(lhs, rhs);
  EXPECT_TRUE(rhs.at(w->point.first, w->point.second));
  EXPECT_FALSE(lhs.at(w->point.first, w->point.second));
  EXPECT_LE(w->r.n, 3);
}

TEST(Verify, WholeRegistryHolds) {
  for (const auto& r : verifyAll({.maxN = 3}))
    EXPECT_TRUE(r.holds()) << reportLine(r);
}

TEST(Reports, Json) {
  auto j = nlohmann::json::parse(reportJson({verifyTheorem("commute", {.maxN = 2})}));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["id"], "commute");
  EXPECT_FALSE(j[0]["holds"].get<bool>());
  EXPECT_EQ(j[0]["counterexample"]["relations"][0].get<std::string>().substr(0, 2), "0x");
  auto ok = nlohmann::json::parse(reportJson({verifyTheorem("5.1.1", {.maxN = 2})}));
  EXPECT_TRUE(ok[0]["counterexample"].is_null());
  EXPECT_EQ(ok[0]["sizes"][1]["forward"], 4);  // diagonal fixed, two free bits
}

TEST(Reports, Line) {
  auto line = reportLine(verifyTheorem("5.1.3", {.maxN = 3}));
  EXPECT_NE(line.find("5.1.3"), std::string::npos);
  EXPECT_NE(line.find("PASS"), std::string::npos);
  EXPECT_NE(line.find("n=3:512"), std::string::npos);
}
