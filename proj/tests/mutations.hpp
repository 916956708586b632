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

// Proof-term mutations on surface scripts, shared by the corpus tests and
// the acceptance suite. Each mutation edits one item inside the top-level
// block that ends with a given export.

#ifndef LAMBDAD_TESTS_MUTATIONS_HPP
#define LAMBDAD_TESTS_MUTATIONS_HPP

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lambdad/corpus.hpp"
#include "lambdad/surface.hpp"

namespace lambdad::mutation {

enum class MutOp {
  SwapCallArgs,   // swap arguments i and j of the first call to `name`
  RenameCallee,   // first call to `name` becomes a call to `other`
  SwapAppArgs,    // swap arguments i and j of the first application spine long enough
  DropLambda,     // strip the outermost lambda of the body
  RenameName,     // first reference to `name` becomes `other`
};

struct Mutation {
  std::string script;
  std::string exportName;
  std::string item;  // the item to edit; may be the export itself
  MutOp op;
  std::string name;
  std::string other;
  int i = 0;
  int j = 0;
};

inline std::string describe(const Mutation& m) {
  std::string what;
  switch (m.op) {
    case MutOp::SwapCallArgs:
      what = "swap args " + std::to_string(m.i) + "," + std::to_string(m.j) + " of " + m.name;
      break;
    case MutOp::RenameCallee: what = m.name + " -> " + m.other; break;
    case MutOp::SwapAppArgs:
      what = "swap app args " + std::to_string(m.i) + "," + std::to_string(m.j);
      break;
    case MutOp::DropLambda: what = "drop binder"; break;
    case MutOp::RenameName: what = m.name + " -> " + m.other; break;
  }
  return m.exportName + " [" + m.item + ": " + what + "]";
}

namespace detail {

inline void collectSpine(const SExprPtr& e, SExprPtr& head, std::vector<SExprPtr>& args) {
  if (e->kind == SKind::App) {
    collectSpine(e->kids[0], head, args);
    args.push_back(e->kids[1]);
  } else {
    head = e;
  }
}

// Rewrites the first matching node in pre-order; `done` stops the search.
inline SExprPtr rewrite(const SExprPtr& e, const Mutation& m, bool& done) {
  if (!e || done) return e;
  if (m.op == MutOp::SwapCallArgs && e->kind == SKind::Call && e->text == m.name &&
      static_cast<int>(e->kids.size()) > std::max(m.i, m.j)) {
    auto n = std::make_shared<SExpr>(*e);
    std::swap(n->kids[m.i], n->kids[m.j]);
    done = true;
    return n;
  }
  if (m.op == MutOp::RenameCallee && e->kind == SKind::Call && e->text == m.name) {
    auto n = std::make_shared<SExpr>(*e);
    n->text = m.other;
    done = true;
    return n;
  }
  if (m.op == MutOp::RenameName && e->kind == SKind::Name && e->text == m.name) {
    done = true;
    return sName(m.other, e->pos);
  }
  if (m.op == MutOp::SwapAppArgs && e->kind == SKind::App) {
    SExprPtr head;
    std::vector<SExprPtr> args;
    collectSpine(e, head, args);
    if (static_cast<int>(args.size()) > std::max(m.i, m.j)) {
      std::swap(args[m.i], args[m.j]);
      SExprPtr acc = head;
      for (const auto& a : args) acc = sApp(acc, a, e->pos);
      done = true;
      return acc;
    }
  }
  auto n = std::make_shared<SExpr>(*e);
  for (auto& k : n->kids) k = rewrite(k, m, done);
  return n;
}

}  // namespace detail

// Index of `m.item` in the block holding `m.exportName`.
inline std::size_t locate(const SurfaceScript& s, const Mutation& m) {
  std::size_t blockStart = 0;
  int depth = 0;
  for (std::size_t k = 0; k < s.items.size(); ++k) {
    const Item& it = s.items[k];
    if (it.kind == ItemKind::OpenFlag && depth++ == 0) blockStart = k;
    if (it.kind == ItemKind::CloseFlag) --depth;
    if (it.kind == ItemKind::Def && it.name == m.exportName) {
      for (std::size_t q = k + 1; q-- > blockStart;)
        if (s.items[q].name == m.item &&
            (s.items[q].kind == ItemKind::Have || s.items[q].kind == ItemKind::Def))
          return q;
    }
  }
  throw std::runtime_error("mutation target not found: " + describe(m));
}

inline SurfaceScript apply(const SurfaceScript& s, const Mutation& m) {
  SurfaceScript out = s;
  Item& it = out.items[locate(s, m)];
  if (m.op == MutOp::DropLambda) {
    if (!it.body || it.body->kind != SKind::Binder || it.body->text != "\\")
      throw std::runtime_error("no lambda to drop: " + describe(m));
    it.body = it.body->kids[1];
    return out;
  }
  bool done = false;
  SExprPtr body = detail::rewrite(it.body, m, done);
  if (!done) throw std::runtime_error("mutation did not apply: " + describe(m));
  it.body = body;
  return out;
}

// Exports that never feed another export, each with one mutation.
inline std::vector<Mutation> standardMutations() {
  using O = MutOp;
  return {
      {"rel_thms.ld", "conv-cap", "a1", O::RenameCallee, "and-el1", "and-el2"},
      {"rel_thms.ld", "conv-cup", "a1", O::RenameCallee, "or-in1", "or-in2"},
      {"rel_thms.ld", "comp-cup-right", "a16", O::SwapCallArgs, "prod-term", "", 3, 5},
      {"rel_thms.ld", "comp-cup-left", "a9", O::SwapCallArgs, "or-el", "", 4, 5},
      {"rel_thms.ld", "comp-cup-left", "a16", O::SwapCallArgs, "prod-term", "", 6, 7},
      {"rel_thms.ld", "comp-cap-right", "comp-cap-right", O::DropLambda},
      {"rel_thms.ld", "comp-cap-left", "a7", O::SwapCallArgs, "and-in", "", 2, 3},
      {"rel_thms.ld", "comp-assoc", "a6", O::SwapCallArgs, "prod-term", "", 6, 7},
      {"rel_thms.ld", "comp-assoc", "a17", O::SwapCallArgs, "prod-term", "", 1, 2},
      {"properties.ld", "refl-criterion", "a1", O::SwapCallArgs, "eq-subs", "", 2, 3},
      {"properties.ld", "sym-criterion1", "sym-criterion1", O::SwapCallArgs, "bi-impl", "", 2, 3},
      {"properties.ld", "sym-criterion1", "a6", O::RenameName, "a2", "a3"},
      {"properties.ld", "antisym-criterion", "a3", O::SwapAppArgs, "", "", 2, 3},
      {"properties.ld", "trans-criterion", "a3", O::SwapAppArgs, "", "", 0, 2},
      {"properties.ld", "id-unique", "a2", O::SwapAppArgs, "", "", 0, 1},
      {"properties.ld", "cup-refl", "a2", O::RenameCallee, "or-in2", "or-in1"},
      {"properties.ld", "cup-sym", "a2", O::RenameCallee, "or-in1", "or-in2"},
      {"properties.ld", "comp-conv-sym", "a3", O::SwapCallArgs, "prod-term", "", 6, 7},
      {"properties.ld", "comp-refl", "comp-refl", O::DropLambda},
      {"properties.ld", "comp-sym", "b14", O::SwapCallArgs, "eq-to-ext", "", 1, 2},
      {"special.ld", "equiv-conv", "equiv-conv", O::SwapCallArgs, "and-in", "", 0, 1},
      {"special.ld", "equiv-cap", "a10", O::SwapCallArgs, "and-in", "", 2, 3},
      {"special.ld", "equiv-partition", "b1", O::SwapAppArgs, "", "", 0, 2},
      {"special.ld", "partition-equiv", "a8", O::SwapCallArgs, "set-eq-subs", "", 2, 3},
      {"special.ld", "part-ord-conv", "a5", O::RenameCallee, "conv-antisym", "conv-sym"},
      {"special.ld", "part-ord-cap", "a9", O::RenameCallee, "or-in1", "or-in2"},
      {"special.ld", "subset-part-ord", "subset-part-ord", O::SwapCallArgs, "and-in", "", 2, 3},
      {"special.ld", "transfinite-induction", "a11", O::SwapAppArgs, "", "", 2, 3},
  };
}

struct MutationOutcome {
  bool targetFailed = false;
  std::vector<std::string> otherFailures;  // exports other than the target
};

inline MutationOutcome runMutation(const std::vector<LoadedScript>& corpus, const Mutation& m) {
  std::vector<LoadedScript> scripts = corpus;
  for (auto& ls : scripts)
    if (ls.path == m.script) ls.script = apply(ls.script, m);
  CorpusReport rep = checkCorpus(scripts);
  MutationOutcome out;
  for (const auto& row : rep.exports) {
    if (row.name == m.exportName)
      out.targetFailed = !row.ok;
    else if (!row.ok)
      out.otherFailures.push_back(row.name);
  }
  return out;
}

}  // namespace lambdad::mutation

#endif  // LAMBDAD_TESTS_MUTATIONS_HPP
