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

// Finite-model oracle: relation statements evaluated over small explicit
// carriers, by exhaustive enumeration or seeded sampling. Independent of the
// kernel; nothing here looks at proof terms.

#ifndef LAMBDAD_ORACLE_HPP
#define LAMBDAD_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lambdad::oracle {

// CarrierMismatch, NotEquivalence, UnknownTheorem, InvalidArgument.
class OracleError : public std::runtime_error {
 public:
  OracleError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

constexpr int kMaxCarrier = 6;

// Bit i*n+j set iff the relation holds at (i,j).
struct FiniteRelation {
  int n = 1;
  std::uint64_t bits = 0;

  static FiniteRelation of(int n, const std::vector<std::pair<int, int>>& pairs);
  static FiniteRelation identity(int n);
  static FiniteRelation total(int n);
  // Total order following `order` (order[0] is least).
  static FiniteRelation totalOrder(const std::vector<int>& order);

  bool at(int i, int j) const { return (bits >> (i * n + j)) & 1u; }
  void set(int i, int j, bool v = true);
  std::uint64_t row(int i) const;  // bit y set iff (i,y) holds
  std::vector<std::pair<int, int>> pairs() const;
  std::uint64_t mask() const;  // all n*n bits

  bool operator==(const FiniteRelation& o) const { return n == o.n && bits == o.bits; }
  bool operator!=(const FiniteRelation& o) const { return !(*this == o); }
};

std::string toString(const FiniteRelation& r);  // {(0,1),(1,1)} on n=2
std::string hex(std::uint64_t v);

enum class Op { Converse, Union, Intersection, Compose, Identity };

// identity takes no relation; its carrier comes from `n`.
FiniteRelation evalOp(Op op, const std::vector<FiniteRelation>& args, int n = 0);

FiniteRelation converse(const FiniteRelation& r);
FiniteRelation unite(const FiniteRelation& a, const FiniteRelation& b);
FiniteRelation intersect(const FiniteRelation& a, const FiniteRelation& b);
FiniteRelation compose(const FiniteRelation& a, const FiniteRelation& b);

enum class Property { Refl, Sym, Antisym, Trans, Equiv, PartOrd, WellOrd };

bool checkProperty(Property p, const FiniteRelation& r);
// Points violating the property; nullopt when it holds.
std::optional<std::vector<int>> propertyWitness(Property p, const FiniteRelation& r);
const char* toString(Property p);
Property parseProperty(const std::string& name);

// Blocks x -> {y | R x y} of an equivalence, the partition clauses checked
// on them, and the relation rebuilt from the blocks compared with R.
bool partitionRoundTrip(const FiniteRelation& r);
// The two partition clauses for a family x -> blocks[x].
bool isPartition(int n, const std::vector<std::uint64_t>& blocks);
FiniteRelation relationOfFamily(int n, const std::vector<std::uint64_t>& blocks);

struct Counterexample {
  int n = 0;
  std::uint64_t index = 0;  // tuple index (exhaustive) or sample number
  std::vector<FiniteRelation> relations;
  std::vector<std::uint64_t> sets;  // predicates / subsets as bitmasks
  std::vector<int> points;
  std::string direction;  // "forward", "backward", or "" for plain statements
};

struct SizeReport {
  int n = 0;
  bool exhaustive = true;
  std::uint64_t instances = 0;
  std::uint64_t forward = 0;   // instances whose left side holds
  std::uint64_t backward = 0;  // biconditionals: instances whose right side holds
};

struct TheoremReport {
  std::string id;
  std::string name;
  std::string statement;
  bool biconditional = false;
  std::vector<SizeReport> sizes;
  std::optional<Counterexample> counterexample;

  bool holds() const { return !counterexample; }
  std::uint64_t instances() const;
  bool exhaustive() const;
};

struct OracleOptions {
  int maxN = 3;
  std::uint64_t sampleBudget = 100000;
  std::uint64_t seed = 0;
  // Tuple spaces up to this size are enumerated.
  std::uint64_t exhaustiveLimit = 1000000;
};

struct TheoremInfo {
  std::string id;
  std::string name;  // corpus export
  std::string statement;
  int arity = 0;  // relations per instance
  bool biconditional = false;
  bool probe = false;  // deliberately false statements
};

// Registry in reading order, probes last.
const std::vector<TheoremInfo>& registry();
// Registered theorem ids, probes excluded.
std::vector<std::string> theoremIds();
const TheoremInfo& theorem(const std::string& id);

TheoremReport verifyTheorem(const std::string& id, const OracleOptions& opts = {});
std::vector<TheoremReport> verifyAll(const OracleOptions& opts = {});

// Re-evaluates the statement on a recorded instance; true iff it fails there.
bool reproduces(const std::string& id, const Counterexample& c);

// An instance where R o (P cap Q) is strictly below R o P cap R o Q.
struct StrictnessWitness {
  FiniteRelation r, p, q;
  std::pair<int, int> point;
};
std::optional<StrictnessWitness> strictnessWitness(int maxN = 3);

std::string reportLine(const TheoremReport& r);
std::string reportJson(const std::vector<TheoremReport>& reports, int indent = 2);

}  // namespace lambdad::oracle

#endif  // LAMBDAD_ORACLE_HPP
