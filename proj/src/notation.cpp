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

#include "lambdad/notation.hpp"

namespace lambdad {

NotationTable::NotationTable() {
  using M = CarrierMode;
  entries_ = {
      {"<=>", "infixr", 25, 2, M::None, "\\Leftrightarrow", "", ""},
      {"\\/", "infixl", 45, 2, M::None, "\\vee", "", ""},
      {"/\\", "infixl", 50, 2, M::None, "\\wedge", "", ""},
      {"=", "infix", 60, 3, M::Type, "=", "", ""},
      {"eps", "infix", 60, 3, M::Type, "\\varepsilon", "", ""},
      {"==", "infix", 60, 3, M::RelOrSet, "=", "", ""},
      {"<=", "infix", 60, 3, M::RelOrSet, "\\subseteq", "", ""},
      {"cup", "infixl", 70, 3, M::Rel, "\\cup", "", ""},
      {"cap", "infixl", 75, 3, M::Rel, "\\cap", "", ""},
      {"o", "infixl", 80, 3, M::Rel, "\\circ", "", ""},
      {"~", "prefix", 90, 1, M::None, "\\neg", "", ""},
      {"^-1", "postfix", 110, 2, M::Rel, "^{-1}", "", ""},
      {"forall", "binder", 0, 2, M::Binder, "\\forall", "", ""},
      {"exists", "binder", 0, 2, M::Binder, "\\exists", "", ""},
      {"[]_", "closed", 120, 4, M::Rel, "[\\,]", "", ""},
  };
}

const NotationEntry* NotationTable::find(const std::string& symbol) const {
  for (const auto& e : entries_)
    if (e.symbol == symbol) return &e;
  return nullptr;
}

void NotationTable::bind(const std::string& symbol, const std::string& mode,
                         const std::string& target, Pos pos) {
  NotationEntry* entry = nullptr;
  for (auto& e : entries_)
    if (e.symbol == symbol) entry = &e;
  if (!entry)
    throw NotationError("UnknownNotation", "'" + symbol + "' is not in the notation table", pos);
  std::string* slot = &entry->target;
  if (entry->mode == CarrierMode::RelOrSet) {
    if (mode != "rel" && mode != "set")
      throw NotationError("NotationConflict", "'" + symbol + "' needs a 'rel' or 'set' binding",
                          pos);
    if (mode == "set") slot = &entry->setTarget;
  } else if (!mode.empty()) {
    throw NotationError("NotationConflict", "'" + symbol + "' takes no '" + mode + "' binding",
                        pos);
  }
  if (!slot->empty() && *slot != target)
    throw NotationError("NotationConflict",
                        "'" + symbol + "' is already bound to '" + *slot + "'", pos);
  *slot = target;
}

namespace {

SExprPtr hole(const char* mode, int ref, Pos pos) {
  auto n = std::make_shared<SExpr>();
  n->kind = SKind::Hole;
  n->text = mode;
  n->ref = ref;
  n->pos = pos;
  return n;
}

// Calls produced here remember the symbol so arity errors can point at it.
std::shared_ptr<SExpr> notationCall(const std::string& target, const std::string& symbol,
                                    std::vector<SExprPtr> args, Pos pos) {
  auto n = std::make_shared<SExpr>();
  n->kind = SKind::Call;
  n->text = target;
  n->names = {symbol};
  n->kids = std::move(args);
  n->pos = pos;
  return n;
}

class Desugarer {
 public:
  explicit Desugarer(const NotationTable& table) : table_(table) {}

  const NotationEntry& entry(const std::string& symbol, Pos pos) const {
    const NotationEntry* e = table_.find(symbol);
    if (!e || (e->target.empty() && e->setTarget.empty()))
      throw NotationError("UnknownNotation", "notation '" + symbol + "' is used before it is bound",
                          pos);
    return *e;
  }

  SExprPtr carrierArg(const SExprPtr& explicitCarrier, const char* mode, Pos pos) {
    if (explicitCarrier) return run(explicitCarrier);
    return hole(mode, 1, pos);
  }

  SExprPtr run(const SExprPtr& e) {
    switch (e->kind) {
      case SKind::Star:
      case SKind::Name:
      case SKind::Hole:
        return e;
      case SKind::Call: {
        auto n = std::make_shared<SExpr>(*e);
        for (auto& k : n->kids) k = run(k);
        return n;
      }
      case SKind::App:
        return sApp(run(e->kids[0]), run(e->kids[1]), e->pos);
      case SKind::SetBuilder:
        return sBinder("\\", e->names, run(e->kids[0]), run(e->kids[1]), e->pos);
      case SKind::Binder: {
        if (e->text == "\\" || e->text == "!")
          return sBinder(e->text, e->names, run(e->kids[0]), run(e->kids[1]), e->pos);
        const NotationEntry& n = entry(e->text, e->pos);
        SExprPtr type = run(e->kids[0]);
        SExprPtr acc = run(e->kids[1]);
        for (auto it = e->names.rbegin(); it != e->names.rend(); ++it)
          acc = notationCall(n.target, n.symbol, {type, sBinder("\\", {*it}, type, acc, e->pos)},
                             e->pos);
        return acc;
      }
      case SKind::Infix: {
        const std::string& op = e->text;
        SExprPtr l = run(e->kids[0]);
        SExprPtr r = run(e->kids[1]);
        if (op == "->" || op == "=>") return sBinder("!", {"_"}, l, r, e->pos);
        const NotationEntry& n = entry(op, e->pos);
        switch (n.mode) {
          case CarrierMode::None:
            return notationCall(n.target, op, {l, r}, e->pos);
          case CarrierMode::Type:
            return notationCall(n.target, op, {carrierArg(e->carrier, "type", e->pos), l, r},
                                e->pos);
          case CarrierMode::Rel:
            return notationCall(n.target, op, {carrierArg(e->carrier, "rel", e->pos), l, r},
                                e->pos);
          case CarrierMode::RelOrSet: {
            const char* mode = n.setTarget.empty() ? "rel" : n.target.empty() ? "set" : "relset";
            auto c = notationCall(n.target.empty() ? n.setTarget : n.target, op,
                                  {carrierArg(e->carrier, mode, e->pos), l, r}, e->pos);
            if (!n.target.empty()) c->alt = n.setTarget;
            return c;
          }
          case CarrierMode::Binder:
            break;
        }
        throw NotationError("UnknownNotation", "'" + op + "' is not an infix notation", e->pos);
      }
      case SKind::Prefix: {
        const NotationEntry& n = entry(e->text, e->pos);
        return notationCall(n.target, e->text, {run(e->kids[0])}, e->pos);
      }
      case SKind::Postfix: {
        const NotationEntry& n = entry(e->text, e->pos);
        return notationCall(n.target, e->text,
                            {carrierArg(e->carrier, "rel", e->pos), run(e->kids[0])}, e->pos);
      }
      case SKind::ClassOf: {
        const NotationEntry& n = entry("[]_", e->pos);
        return notationCall(
            n.target, "[]_",
            {hole("rel", 1, e->pos), run(e->kids[1]), run(e->kids[2]), run(e->kids[0])}, e->pos);
      }
    }
    return e;
  }

 private:
  const NotationTable& table_;
};

}  // namespace

SExprPtr desugarExpr(const SExprPtr& e, const NotationTable& table) {
  if (!e) return e;
  return Desugarer(table).run(e);
}

SurfaceScript desugar(const SurfaceScript& script, NotationTable& table) {
  SurfaceScript out = script;
  for (Item& item : out.items) {
    if (item.kind == ItemKind::Notation) {
      table.bind(item.name, item.mode, item.target, item.pos);
      continue;
    }
    for (auto& g : item.decls) g.type = desugarExpr(g.type, table);
    item.type = desugarExpr(item.type, table);
    item.body = desugarExpr(item.body, table);
  }
  return out;
}

}  // namespace lambdad
