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

#include "lambdad/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>

#include <json.hpp>

namespace lambdad::oracle {

// ---------------------------------------------------------------------------
// Relations

namespace {

void checkCarrier(int n) {
  if (n < 1 || n > kMaxCarrier)
    throw OracleError("InvalidArgument",
                      "carrier size " + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxCarrier));
}

void sameCarrier(const FiniteRelation& a, const FiniteRelation& b) {
  if (a.n != b.n)
    throw OracleError("CarrierMismatch", "carrier sizes " + std::to_string(a.n) + " and " +
                                             std::to_string(b.n) + " differ");
}

}  // namespace

FiniteRelation FiniteRelation::of(int n, const std::vector<std::pair<int, int>>& pairs) {
  checkCarrier(n);
  FiniteRelation r{n, 0};
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw OracleError("InvalidArgument", "pair outside the carrier");
    r.set(i, j);
  }
  return r;
}

FiniteRelation FiniteRelation::identity(int n) {
  checkCarrier(n);
  FiniteRelation r{n, 0};
  for (int i = 0; i < n; ++i) r.set(i, i);
  return r;
}

FiniteRelation FiniteRelation::total(int n) {
  checkCarrier(n);
  FiniteRelation r{n, 0};
  r.bits = r.mask();
  return r;
}

FiniteRelation FiniteRelation::totalOrder(const std::vector<int>& order) {
  int n = static_cast<int>(order.size());
  checkCarrier(n);
  FiniteRelation r{n, 0};
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) r.set(order[a], order[b]);
  return r;
}

void FiniteRelation::set(int i, int j, bool v) {
  std::uint64_t bit = std::uint64_t{1} << (i * n + j);
  bits = v ? (bits | bit) : (bits & ~bit);
}

std::uint64_t FiniteRelation::row(int i) const {
  return (bits >> (i * n)) & ((std::uint64_t{1} << n) - 1);
}

std::vector<std::pair<int, int>> FiniteRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j)) out.emplace_back(i, j);
  return out;
}

std::uint64_t FiniteRelation::mask() const {
  int k = n * n;
  return k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

std::string toString(const FiniteRelation& r) {
  std::string out = "{";
  bool first = true;
  for (auto [i, j] : r.pairs()) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return out + "} on n=" + std::to_string(r.n);
}

std::string hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

FiniteRelation converse(const FiniteRelation& r) {
  FiniteRelation out{r.n, 0};
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j)
      if (r.at(i, j)) out.set(j, i);
  return out;
}

FiniteRelation unite(const FiniteRelation& a, const FiniteRelation& b) {
  sameCarrier(a, b);
  return {a.n, a.bits | b.bits};
}

FiniteRelation intersect(const FiniteRelation& a, const FiniteRelation& b) {
  sameCarrier(a, b);
  return {a.n, a.bits & b.bits};
}

FiniteRelation compose(const FiniteRelation& a, const FiniteRelation& b) {
  sameCarrier(a, b);
  FiniteRelation out{a.n, 0};
  // (a o b)(i,j) iff some k has a(i,k) and b(k,j): OR the rows of b.
  for (int i = 0; i < a.n; ++i) {
    std::uint64_t row = 0;
    for (int k = 0; k < a.n; ++k)
      if (a.at(i, k)) row |= b.row(k);
    out.bits |= row << (i * a.n);
  }
  return out;
}

FiniteRelation evalOp(Op op, const std::vector<FiniteRelation>& args, int n) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw OracleError("InvalidArgument", "operation takes " + std::to_string(k) + " relations");
  };
  switch (op) {
    case Op::Converse: need(1); return converse(args[0]);
    case Op::Union: need(2); return unite(args[0], args[1]);
    case Op::Intersection: need(2); return intersect(args[0], args[1]);
    case Op::Compose: need(2); return compose(args[0], args[1]);
    case Op::Identity:
      need(0);
      return FiniteRelation::identity(n);
  }
  throw OracleError("InvalidArgument", "unknown operation");
}

// ---------------------------------------------------------------------------
// Properties

using Witness = std::optional<std::vector<int>>;

namespace {

Witness reflW(const FiniteRelation& r) {
  for (int x = 0; x < r.n; ++x)
    if (!r.at(x, x)) return std::vector<int>{x};
  return std::nullopt;
}

Witness symW(const FiniteRelation& r) {
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      if (r.at(x, y) && !r.at(y, x)) return std::vector<int>{x, y};
  return std::nullopt;
}

Witness antisymW(const FiniteRelation& r) {
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      if (x != y && r.at(x, y) && r.at(y, x)) return std::vector<int>{x, y};
  return std::nullopt;
}

Witness transW(const FiniteRelation& r) {
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      for (int z = 0; z < r.n; ++z)
        if (r.at(x, y) && r.at(y, z) && !r.at(x, z)) return std::vector<int>{x, y, z};
  return std::nullopt;
}

// Every nonempty subset has a least element; the witness is the subset mask.
Witness leastW(const FiniteRelation& r) {
  for (std::uint64_t X = 1; X < (std::uint64_t{1} << r.n); ++X) {
    bool found = false;
    for (int x = 0; x < r.n && !found; ++x) {
      if (!((X >> x) & 1u)) continue;
      bool least = true;
      for (int y = 0; y < r.n && least; ++y)
        if (((X >> y) & 1u) && !r.at(x, y)) least = false;
      found = least;
    }
    if (!found) return std::vector<int>{static_cast<int>(X)};
  }
  return std::nullopt;
}

Witness firstOf(std::initializer_list<std::function<Witness()>> parts) {
  for (const auto& p : parts)
    if (Witness w = p()) return w;
  return std::nullopt;
}

}  // namespace

Witness propertyWitness(Property p, const FiniteRelation& r) {
  switch (p) {
    case Property::Refl: return reflW(r);
    case Property::Sym: return symW(r);
    case Property::Antisym: return antisymW(r);
    case Property::Trans: return transW(r);
    case Property::Equiv:
      return firstOf({[&] { return reflW(r); }, [&] { return symW(r); },
                      [&] { return transW(r); }});
    case Property::PartOrd:
      return firstOf({[&] { return reflW(r); }, [&] { return antisymW(r); },
                      [&] { return transW(r); }});
    case Property::WellOrd:
      return firstOf({[&] { return reflW(r); }, [&] { return antisymW(r); },
                      [&] { return transW(r); }, [&] { return leastW(r); }});
  }
  return std::nullopt;
}

bool checkProperty(Property p, const FiniteRelation& r) { return !propertyWitness(p, r); }

const char* toString(Property p) {
  switch (p) {
    case Property::Refl: return "refl";
    case Property::Sym: return "sym";
    case Property::Antisym: return "antisym";
    case Property::Trans: return "trans";
    case Property::Equiv: return "equiv";
    case Property::PartOrd: return "partord";
    case Property::WellOrd: return "wellord";
  }
  return "?";
}

Property parseProperty(const std::string& name) {
  for (Property p : {Property::Refl, Property::Sym, Property::Antisym, Property::Trans,
                     Property::Equiv, Property::PartOrd, Property::WellOrd})
    if (name == toString(p)) return p;
  throw OracleError("InvalidArgument", "unknown property '" + name + "'");
}

// ---------------------------------------------------------------------------
// Partitions

bool isPartition(int n, const std::vector<std::uint64_t>& blocks) {
  for (int x = 0; x < n; ++x)
    if (!((blocks[x] >> x) & 1u)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((blocks[x] & blocks[y]) && blocks[x] != blocks[y]) return false;
  return true;
}

FiniteRelation relationOfFamily(int n, const std::vector<std::uint64_t>& blocks) {
  FiniteRelation r{n, 0};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((blocks[x] >> y) & 1u) r.set(x, y);
  return r;
}

namespace {

std::vector<std::uint64_t> blocksOf(const FiniteRelation& r) {
  std::vector<std::uint64_t> blocks(r.n);
  for (int x = 0; x < r.n; ++x) blocks[x] = r.row(x);
  return blocks;
}

}  // namespace

bool partitionRoundTrip(const FiniteRelation& r) {
  if (!checkProperty(Property::Equiv, r))
    throw OracleError("NotEquivalence", toString(r) + " is not an equivalence relation");
  auto blocks = blocksOf(r);
  return isPartition(r.n, blocks) && relationOfFamily(r.n, blocks) == r;
}

// ---------------------------------------------------------------------------
// Registry

namespace {

struct Instance {
  int n = 0;
  std::vector<FiniteRelation> rel;
  std::vector<std::uint64_t> sets;
};

// Each side of a statement: nullopt when it holds, else the points showing
// it does not.
struct Sides {
  Witness lhs;
  Witness rhs;
};

enum class Space { Relations, TotalOrders, Subsets };

struct Entry {
  TheoremInfo info;
  Space space = Space::Relations;
  std::function<Sides(const Instance&)> eval;
};

Witness holds() { return std::nullopt; }

Witness eqW(const FiniteRelation& a, const FiniteRelation& b) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (a.at(i, j) != b.at(i, j)) return std::vector<int>{i, j};
  return std::nullopt;
}

Witness inclW(const FiniteRelation& a, const FiniteRelation& b) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (a.at(i, j) && !b.at(i, j)) return std::vector<int>{i, j};
  return std::nullopt;
}

Witness prop(Property p, const FiniteRelation& r) { return propertyWitness(p, r); }

Witness both(Witness a, Witness b) { return a ? a : b; }

Witness either(Witness a, Witness b) { return a && b ? a : std::nullopt; }

FiniteRelation inv(const FiniteRelation& r) { return converse(r); }
FiniteRelation cup(const FiniteRelation& a, const FiniteRelation& b) { return unite(a, b); }
FiniteRelation cap(const FiniteRelation& a, const FiniteRelation& b) { return intersect(a, b); }
FiniteRelation o(const FiniteRelation& a, const FiniteRelation& b) { return compose(a, b); }
FiniteRelation id(int n) { return FiniteRelation::identity(n); }

// Plain statement: the left side is the hypothesis (empty when none).
Sides stmt(Witness conclusion) { return {holds(), std::move(conclusion)}; }
Sides implies(Witness hyp, Witness conclusion) { return {std::move(hyp), std::move(conclusion)}; }

const std::vector<Entry>& entries() {
  using P = Property;
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    auto rel = [&](std::string id, std::string name, std::string text, int arity, bool bi,
                   std::function<Sides(const Instance&)> f) {
      t.push_back({{std::move(id), std::move(name), std::move(text), arity, bi, false},
                   Space::Relations, std::move(f)});
    };
    // Operations on relations.
    rel("4.3.1", "conv-conv", "(R^-1)^-1 = R", 1, false,
        [](const Instance& I) { return stmt(eqW(inv(inv(I.rel[0])), I.rel[0])); });
    rel("4.3.2", "conv-prod", "(R o Q)^-1 = Q^-1 o R^-1", 2, false, [](const Instance& I) {
      auto& R = I.rel[0]; auto& Q = I.rel[1];
      return stmt(eqW(inv(o(R, Q)), o(inv(Q), inv(R))));
    });
    rel("4.3.3", "conv-cap", "(R cap Q)^-1 = R^-1 cap Q^-1", 2, false, [](const Instance& I) {
      auto& R = I.rel[0]; auto& Q = I.rel[1];
      return stmt(eqW(inv(cap(R, Q)), cap(inv(R), inv(Q))));
    });
    rel("4.3.4", "conv-cup", "(R cup Q)^-1 = R^-1 cup Q^-1", 2, false, [](const Instance& I) {
      auto& R = I.rel[0]; auto& Q = I.rel[1];
      return stmt(eqW(inv(cup(R, Q)), cup(inv(R), inv(Q))));
    });
    rel("4.3.5", "comp-cup-right", "R o (P cup Q) = R o P cup R o Q", 3, false,
        [](const Instance& I) {
          auto& R = I.rel[0]; auto& P = I.rel[1]; auto& Q = I.rel[2];
          return stmt(eqW(o(R, cup(P, Q)), cup(o(R, P), o(R, Q))));
        });
    rel("4.3.6", "comp-cup-left", "(P cup Q) o R = P o R cup Q o R", 3, false,
        [](const Instance& I) {
          auto& R = I.rel[0]; auto& P = I.rel[1]; auto& Q = I.rel[2];
          return stmt(eqW(o(cup(P, Q), R), cup(o(P, R), o(Q, R))));
        });
    rel("4.3.7", "comp-cap-right", "R o (P cap Q) <= R o P cap R o Q", 3, false,
        [](const Instance& I) {
          auto& R = I.rel[0]; auto& P = I.rel[1]; auto& Q = I.rel[2];
          return stmt(inclW(o(R, cap(P, Q)), cap(o(R, P), o(R, Q))));
        });
    rel("4.3.8", "comp-cap-left", "(P cap Q) o R <= P o R cap Q o R", 3, false,
        [](const Instance& I) {
          auto& R = I.rel[0]; auto& P = I.rel[1]; auto& Q = I.rel[2];
          return stmt(inclW(o(cap(P, Q), R), cap(o(P, R), o(Q, R))));
        });
    rel("4.3.9", "comp-assoc", "(R o P) o Q = R o (P o Q)", 3, false, [](const Instance& I) {
      auto& R = I.rel[0]; auto& P = I.rel[1]; auto& Q = I.rel[2];
      return stmt(eqW(o(o(R, P), Q), o(R, o(P, Q))));
    });
    // Criteria.
    rel("5.1.1", "refl-criterion", "refl(R) <=> id <= R", 1, true, [](const Instance& I) {
      auto& R = I.rel[0];
      return Sides{prop(P::Refl, R), inclW(id(I.n), R)};
    });
    rel("5.1.2", "sym-criterion1", "sym(R) <=> R^-1 <= R", 1, true, [](const Instance& I) {
      auto& R = I.rel[0];
      return Sides{prop(P::Sym, R), inclW(inv(R), R)};
    });
    rel("5.1.3", "sym-criterion", "sym(R) <=> R^-1 = R", 1, true, [](const Instance& I) {
      auto& R = I.rel[0];
      return Sides{prop(P::Sym, R), eqW(inv(R), R)};
    });
    rel("5.1.4", "antisym-criterion", "antisym(R) <=> R^-1 cap R <= id", 1, true,
        [](const Instance& I) {
          auto& R = I.rel[0];
          return Sides{prop(P::Antisym, R), inclW(cap(inv(R), R), id(I.n))};
        });
    rel("5.1.5", "trans-criterion", "trans(R) <=> R o R <= R", 1, true, [](const Instance& I) {
      auto& R = I.rel[0];
      return Sides{prop(P::Trans, R), inclW(o(R, R), R)};
    });
    rel("5.2", "id-unique", "refl(R) /\\ sym(R) /\\ antisym(R) => R = id", 1, false,
        [](const Instance& I) {
          auto& R = I.rel[0];
          return implies(both(prop(P::Refl, R), both(prop(P::Sym, R), prop(P::Antisym, R))),
                         eqW(R, id(I.n)));
        });
    // Converse and intersection preserve the properties.
    const std::pair<const char*, Property> props[] = {
        {"refl", P::Refl}, {"sym", P::Sym}, {"antisym", P::Antisym}, {"trans", P::Trans}};
    for (int k = 0; k < 4; ++k) {
      auto [pname, p] = props[k];
      rel("5.3." + std::to_string(k + 1), std::string("conv-") + pname,
          std::string(pname) + "(R) => " + pname + "(R^-1)", 1, false,
          [p = p](const Instance& I) { return implies(prop(p, I.rel[0]), prop(p, inv(I.rel[0]))); });
    }
    for (int k = 0; k < 4; ++k) {
      auto [pname, p] = props[k];
      bool anti = p == P::Antisym;
      std::string hyp = std::string(pname) + "(R) " + (anti ? "\\/" : "/\\") + " " + pname + "(Q)";
      rel("5.4." + std::to_string(k + 1), std::string("cap-") + pname,
          hyp + " => " + pname + "(R cap Q)", 2, false, [p = p, anti](const Instance& I) {
            auto& R = I.rel[0]; auto& Q = I.rel[1];
            Witness h = anti ? either(prop(p, R), prop(p, Q)) : both(prop(p, R), prop(p, Q));
            return implies(h, prop(p, cap(R, Q)));
          });
    }
    rel("5.5.1", "cup-refl", "refl(R) \\/ refl(Q) => refl(R cup Q)", 2, false,
        [](const Instance& I) {
          auto& R = I.rel[0]; auto& Q = I.rel[1];
          return implies(either(prop(P::Refl, R), prop(P::Refl, Q)), prop(P::Refl, cup(R, Q)));
        });
    rel("5.5.2", "cup-sym", "sym(R) /\\ sym(Q) => sym(R cup Q)", 2, false,
        [](const Instance& I) {
          auto& R = I.rel[0]; auto& Q = I.rel[1];
          return implies(both(prop(P::Sym, R), prop(P::Sym, Q)), prop(P::Sym, cup(R, Q)));
        });
    rel("5.6.1", "comp-conv-sym", "sym(R o R^-1)", 1, false,
        [](const Instance& I) { return stmt(prop(P::Sym, o(I.rel[0], inv(I.rel[0])))); });
    rel("5.6.2", "comp-refl", "refl(R) /\\ refl(Q) => refl(R o Q)", 2, false,
        [](const Instance& I) {
          auto& R = I.rel[0]; auto& Q = I.rel[1];
          return implies(both(prop(P::Refl, R), prop(P::Refl, Q)), prop(P::Refl, o(R, Q)));
        });
    // The biconditional only under the symmetry hypotheses; outside them
    // both sides are taken to hold.
    rel("5.6.3", "comp-sym", "sym(R) /\\ sym(Q) => (sym(R o Q) <=> R o Q = Q o R)", 2, true,
        [](const Instance& I) {
          auto& R = I.rel[0]; auto& Q = I.rel[1];
          if (both(prop(P::Sym, R), prop(P::Sym, Q))) return Sides{holds(), holds()};
          return Sides{prop(P::Sym, o(R, Q)), eqW(o(R, Q), o(Q, R))};
        });
    // Special relations.
    rel("6.1.1", "equiv-conv", "equiv(R) => equiv(R^-1)", 1, false, [](const Instance& I) {
      return implies(prop(P::Equiv, I.rel[0]), prop(P::Equiv, inv(I.rel[0])));
    });
    rel("6.1.2", "equiv-cap", "equiv(R) /\\ equiv(Q) => equiv(R cap Q)", 2, false,
        [](const Instance& I) {
          auto& R = I.rel[0]; auto& Q = I.rel[1];
          return implies(both(prop(P::Equiv, R), prop(P::Equiv, Q)), prop(P::Equiv, cap(R, Q)));
        });
    rel("6.2", "equiv-partition", "equiv(R) <=> partition(x |-> Rx)", 1, true,
        [](const Instance& I) {
          auto& R = I.rel[0];
          Witness lhs = prop(P::Equiv, R);
          Witness rhs;
          auto blocks = blocksOf(R);
          if (!isPartition(I.n, blocks)) rhs = std::vector<int>{};
          // Rebuilding must give R back whenever R is an equivalence.
          if (!lhs && !partitionRoundTrip(R)) rhs = std::vector<int>{};
          return Sides{lhs, rhs};
        });
    rel("6.3.1", "part-ord-conv", "partord(R) => partord(R^-1)", 1, false,
        [](const Instance& I) {
          return implies(prop(P::PartOrd, I.rel[0]), prop(P::PartOrd, inv(I.rel[0])));
        });
    rel("6.3.2", "part-ord-cap", "partord(R) /\\ partord(Q) => partord(R cap Q)", 2, false,
        [](const Instance& I) {
          auto& R = I.rel[0]; auto& Q = I.rel[1];
          return implies(both(prop(P::PartOrd, R), prop(P::PartOrd, Q)),
                         prop(P::PartOrd, cap(R, Q)));
        });
    // Subset inclusion on ps(S), one triple (X, Y, Z) of subsets at a time.
    t.push_back({{"6.4", "subset-part-ord", "<= is a partial order on ps(S)", 0, false, false},
                 Space::Subsets, [](const Instance& I) {
                   std::uint64_t X = I.sets[0], Y = I.sets[1], Z = I.sets[2];
                   auto sub = [](std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; };
                   Witness w;
                   if (!sub(X, X)) w = std::vector<int>{0};
                   else if (sub(X, Y) && sub(Y, X) && X != Y) w = std::vector<int>{0, 1};
                   else if (sub(X, Y) && sub(Y, Z) && !sub(X, Z)) w = std::vector<int>{0, 1, 2};
                   return stmt(w);
                 }});
    // A well-order le and a predicate P as a subset of the carrier.
    t.push_back({{"6.5", "transfinite-induction",
                  "wellord(le) /\\ (forall x. (forall y. y < x => P y) => P x) => forall x. P x", 1,
                  false, false},
                 Space::TotalOrders, [](const Instance& I) {
                   auto& le = I.rel[0];
                   std::uint64_t P = I.sets[0];
                   Witness hyp = prop(P::WellOrd, le);
                   for (int x = 0; x < I.n && !hyp; ++x) {
                     bool below = true;
                     for (int y = 0; y < I.n; ++y)
                       if (le.at(y, x) && y != x && !((P >> y) & 1u)) below = false;
                     if (below && !((P >> x) & 1u)) hyp = std::vector<int>{x};
                   }
                   Witness concl;
                   for (int x = 0; x < I.n && !concl; ++x)
                     if (!((P >> x) & 1u)) concl = std::vector<int>{x};
                   return implies(hyp, concl);
                 }});
    // Deliberately false.
    t.push_back({{"commute", "", "R o Q = Q o R", 2, false, true}, Space::Relations,
                 [](const Instance& I) { return stmt(eqW(o(I.rel[0], I.rel[1]), o(I.rel[1], I.rel[0]))); }});
    return t;
  }();
  return table;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw OracleError("UnknownTheorem", "no theorem '" + id + "' in the registry");
}

// ---------------------------------------------------------------------------
// Enumeration

struct Outcome {
  bool ok;
  std::string direction;
  Witness points;
};

Outcome judge(const Entry& e, const Instance& inst) {
  Sides s = e.eval(inst);
  bool l = !s.lhs, r = !s.rhs;
  if (l && !r) return {false, e.info.biconditional ? "forward" : "", s.rhs};
  if (e.info.biconditional && r && !l) return {false, "backward", s.lhs};
  return {true, "", std::nullopt};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

// Calls `visit(index, instance)` for each instance of size n until it
// returns false; fills in the size report.
void enumerate(const Entry& e, int n, const OracleOptions& opts, SizeReport& rep,
               const std::function<bool(std::uint64_t, const Instance&)>& visit) {
  Instance inst;
  inst.n = n;
  rep.n = n;
  switch (e.space) {
    case Space::Relations: {
      int k = e.info.arity;
      int width = n * n;
      std::uint64_t relMask = FiniteRelation{n, 0}.mask();
      inst.rel.assign(k, FiniteRelation{n, 0});
      // Tuple count 2^(k n^2); enumerate when it fits under the limit.
      int totalBits = k * width;
      bool exhaustive = totalBits < 63 && (std::uint64_t{1} << totalBits) <= opts.exhaustiveLimit;
      rep.exhaustive = exhaustive;
      if (exhaustive) {
        std::uint64_t count = std::uint64_t{1} << totalBits;
        for (std::uint64_t t = 0; t < count; ++t) {
          // First relation is the most significant digit.
          for (int a = 0; a < k; ++a)
            inst.rel[a].bits = (t >> ((k - 1 - a) * width)) & relMask;
          ++rep.instances;
          if (!visit(t, inst)) return;
        }
      } else {
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed),
                          static_cast<std::uint32_t>(opts.seed >> 32),
                          static_cast<std::uint32_t>(n),
                          static_cast<std::uint32_t>(fnv1a(e.info.id))};
        std::mt19937_64 rng(seq);
        for (std::uint64_t s = 0; s < opts.sampleBudget; ++s) {
          for (int a = 0; a < k; ++a) inst.rel[a].bits = rng() & relMask;
          ++rep.instances;
          if (!visit(s, inst)) return;
        }
      }
      return;
    }
    case Space::TotalOrders: {
      rep.exhaustive = true;
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::uint64_t preds = std::uint64_t{1} << n;
      std::uint64_t index = 0;
      do {
        inst.rel = {FiniteRelation::totalOrder(order)};
        for (std::uint64_t P = 0; P < preds; ++P, ++index) {
          inst.sets = {P};
          ++rep.instances;
          if (!visit(index, inst)) return;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    case Space::Subsets: {
      rep.exhaustive = true;
      std::uint64_t subsets = std::uint64_t{1} << n;
      std::uint64_t index = 0;
      for (std::uint64_t X = 0; X < subsets; ++X)
        for (std::uint64_t Y = 0; Y < subsets; ++Y)
          for (std::uint64_t Z = 0; Z < subsets; ++Z, ++index) {
            inst.sets = {X, Y, Z};
            ++rep.instances;
            if (!visit(index, inst)) return;
          }
      return;
    }
  }
}

Instance instanceOf(const Counterexample& c) { return Instance{c.n, c.relations, c.sets}; }

}  // namespace

std::uint64_t TheoremReport::instances() const {
  std::uint64_t total = 0;
  for (const auto& s : sizes) total += s.instances;
  return total;
}

bool TheoremReport::exhaustive() const {
  return std::all_of(sizes.begin(), sizes.end(), [](const SizeReport& s) { return s.exhaustive; });
}

const std::vector<TheoremInfo>& registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> theoremIds() {
  std::vector<std::string> out;
  for (const auto& info : registry())
    if (!info.probe) out.push_back(info.id);
  return out;
}

const TheoremInfo& theorem(const std::string& id) { return entry(id).info; }

TheoremReport verifyTheorem(const std::string& id, const OracleOptions& opts) {
  const Entry& e = entry(id);
  checkCarrier(opts.maxN);
  if (opts.sampleBudget == 0) throw OracleError("InvalidArgument", "sample budget must be positive");
  TheoremReport rep;
  rep.id = e.info.id;
  rep.name = e.info.name;
  rep.statement = e.info.statement;
  rep.biconditional = e.info.biconditional;
  for (int n = 1; n <= opts.maxN; ++n) {
    SizeReport size;
    enumerate(e, n, opts, size, [&](std::uint64_t index, const Instance& inst) {
      Sides s = e.eval(inst);
      if (!s.lhs) ++size.forward;
      if (e.info.biconditional && !s.rhs) ++size.backward;
      Outcome out = judge(e, inst);
      if (out.ok) return true;
      Counterexample c;
      c.n = n;
      c.index = index;
      c.relations = inst.rel;
      c.sets = inst.sets;
      c.points = out.points.value_or(std::vector<int>{});
      c.direction = out.direction;
      rep.counterexample = std::move(c);
      return false;
    });
    rep.sizes.push_back(size);
    if (rep.counterexample) break;
  }
  return rep;
}

std::vector<TheoremReport> verifyAll(const OracleOptions& opts) {
  std::vector<TheoremReport> out;
  for (const auto& id : theoremIds()) out.push_back(verifyTheorem(id, opts));
  return out;
}

bool reproduces(const std::string& id, const Counterexample& c) {
  return !judge(entry(id), instanceOf(c)).ok;
}

std::optional<StrictnessWitness> strictnessWitness(int maxN) {
  checkCarrier(maxN);
  for (int n = 1; n <= std::min(maxN, 3); ++n) {
    int width = n * n;
    std::uint64_t per = std::uint64_t{1} << width;
    for (std::uint64_t r = 0; r < per; ++r)
      for (std::uint64_t p = 0; p < per; ++p)
        for (std::uint64_t q = 0; q < per; ++q) {
          FiniteRelation R{n, r}, P{n, p}, Q{n, q};
          FiniteRelation lhs = o(R, cap(P, Q)), rhs = cap(o(R, P), o(R, Q));
          if (lhs != rhs) {
            Witness w = inclW(rhs, lhs);
            return StrictnessWitness{R, P, Q, {(*w)[0], (*w)[1]}};
          }
        }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reports

std::string reportLine(const TheoremReport& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%-8s %-22s %s", r.id.c_str(), r.name.c_str(),
                r.holds() ? "PASS" : "FAIL");
  std::string out = head;
  for (const auto& s : r.sizes) {
    out += "  n=" + std::to_string(s.n) + ":" + std::to_string(s.instances) +
           (s.exhaustive ? "" : "~");
    if (r.biconditional)
      out += "(fwd " + std::to_string(s.forward) + ", bwd " + std::to_string(s.backward) + ")";
  }
  if (const auto& c = r.counterexample) {
    out += "\n    counterexample at n=" + std::to_string(c->n) + " index " +
           std::to_string(c->index);
    if (!c->direction.empty()) out += " (" + c->direction + ")";
    for (const auto& rel : c->relations) out += "\n      " + toString(rel);
    for (auto s : c->sets) out += "\n      set " + hex(s);
    if (!c->points.empty()) {
      out += "\n      points";
      for (int p : c->points) out += " " + std::to_string(p);
    }
  }
  return out;
}

std::string reportJson(const std::vector<TheoremReport>& reports, int indent) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["statement"] = r.statement;
    j["holds"] = r.holds();
    j["instances"] = r.instances();
    j["exhaustive"] = r.exhaustive();
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& s : r.sizes) {
      nlohmann::json sj{{"n", s.n},
                        {"mode", s.exhaustive ? "exhaustive" : "sampled"},
                        {"instances", s.instances}};
      if (r.biconditional) {
        sj["forward"] = s.forward;
        sj["backward"] = s.backward;
      }
      sizes.push_back(sj);
    }
    j["sizes"] = sizes;
    if (const auto& c = r.counterexample) {
      nlohmann::json cj;
      cj["n"] = c->n;
      cj["index"] = c->index;
      cj["relations"] = nlohmann::json::array();
      for (const auto& rel : c->relations) cj["relations"].push_back(hex(rel.bits));
      cj["sets"] = nlohmann::json::array();
      for (auto s : c->sets) cj["sets"].push_back(hex(s));
      cj["points"] = c->points;
      cj["direction"] = c->direction;
      j["counterexample"] = cj;
    } else {
      j["counterexample"] = nullptr;
    }
    out.push_back(j);
  }
  return out.dump(indent);
}

}  // namespace lambdad::oracle
