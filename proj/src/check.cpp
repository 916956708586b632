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

#include "lambdad/check.hpp"

#include <algorithm>
#include <filesystem>

#include "lambdad/print.hpp"

namespace lambdad {

bool ScriptResult::ok() const {
  return std::all_of(items.begin(), items.end(), [](const ItemResult& r) { return r.ok; });
}

std::size_t ScriptResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const ItemResult& r) { return !r.ok; }));
}

const ItemResult* ScriptResult::find(const std::string& name) const {
  for (const auto& r : items)
    if (r.name == name) return &r;
  return nullptr;
}

namespace {

// Peels beta/delta at the head until a product shows up.
std::optional<Expr> productHead(const Environment& env, Expr t, const ReductionOptions& opts) {
  for (int i = 0; i < 256; ++i) {
    t = whnfCore(env, t, opts);
    if (t.kind() == ExprKind::Pi) return t;
    auto u = unfoldHead(env, t, opts);
    if (!u) return std::nullopt;
    t = *u;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Expr> relationCarrier(const Environment& env, const Expr& type,
                                    const ReductionOptions& opts) {
  auto pi = productHead(env, type, opts);
  if (!pi) return std::nullopt;
  Expr inner = whnf(env, pi->body(), opts);
  if (inner.kind() != ExprKind::Pi) return std::nullopt;
  if (!convertible(env, inner.binderType(), lift(pi->binderType(), 1), opts)) return std::nullopt;
  if (!whnf(env, inner.body(), opts).isStar()) return std::nullopt;
  return pi->binderType();
}

std::optional<Expr> predicateCarrier(const Environment& env, const Expr& type,
                                     const ReductionOptions& opts) {
  auto pi = productHead(env, type, opts);
  if (!pi) return std::nullopt;
  if (!whnf(env, pi->body(), opts).isStar()) return std::nullopt;
  return pi->binderType();
}

namespace {

struct AbbrevDef {
  std::size_t depth = 0;
  std::size_t nparams = 0;
  Expr body;
};

struct Entry {
  enum Kind { Var, Abbrev } kind = Var;
  std::string name;
  std::size_t ctxPos = 0;
  bool failed = false;
  std::shared_ptr<const AbbrevDef> abbrev;
};

std::string describe(const Judgment& j) {
  std::string out;
  std::vector<std::string> names;
  for (const auto& d : j.ctx.decls()) {
    if (!out.empty()) out += ", ";
    out += d.name + " : " + printExpr(d.type, names);
    names.push_back(d.name);
  }
  out = "[" + out + "] |- " + printExpr(j.subject, names);
  out += " : " + printExpr(j.classifier, names);
  return out;
}

// Adds the normal forms of both sides of a failed classification.
std::string describeMismatch(const Environment& env, const Judgment& j,
                             const ReductionOptions& opts) {
  std::string out = describe(j);
  try {
    Expr inferred = normalize(env, inferType(env, j.ctx, j.subject, opts), opts);
    Expr expected = normalize(env, j.classifier, opts);
    out += "\n  has type (normal form): " + printExpr(inferred, j.ctx);
    out += "\n  expected (normal form): " + printExpr(expected, j.ctx);
  } catch (const KernelError&) {
  }
  return out;
}

class Elaborator {
 public:
  Elaborator(Session& session, const CheckOptions& opts, const std::string& path)
      : s_(session), opts_(opts), path_(path) {
    stem_ = std::filesystem::path(path).stem().string();
    if (stem_.empty()) stem_ = "script";
  }

  ScriptResult run(const SurfaceScript& script) {
    ScriptResult out;
    out.path = path_;
    for (std::size_t i = 0; i < script.items.size(); ++i) {
      const Item& it = script.items[i];
      if (it.kind == ItemKind::Def || it.kind == ItemKind::Prim || it.kind == ItemKind::Have ||
          it.kind == ItemKind::Abbrev)
        later_[it.name] = i;
    }
    for (std::size_t i = 0; i < script.items.size(); ++i) {
      current_ = i;
      ItemResult r = item(script.items[i], i);
      if (opts_.onItem) opts_.onItem(r);
      out.items.push_back(std::move(r));
    }
    return out;
  }

  // Used by elaborateExpression.
  void openFlag(const Item& it, ItemResult& r) { flag(it, r); }
  Expr expression(const SExprPtr& e) { return elab(desugarExpr(e, s_.notations)); }

 private:
  //===--------------------------------------------------------------------===//
  // Items
  //===--------------------------------------------------------------------===//

  ItemResult item(const Item& it, std::size_t index) {
    ItemResult r;
    r.index = index;
    r.kind = it.kind;
    r.anchor = it.anchor;
    r.pos = it.pos;
    switch (it.kind) {
      case ItemKind::OpenFlag: r.name = "flag@" + std::to_string(it.pos.line); break;
      case ItemKind::CloseFlag: r.name = "close@" + std::to_string(it.pos.line); break;
      case ItemKind::Check: r.name = "check@" + std::to_string(it.pos.line); break;
      case ItemKind::Notation: r.name = "notation " + it.name; break;
      default: r.name = it.name; break;
    }
    r.global = it.kind == ItemKind::Have
                   ? it.name + "@" + stem_ + ":" + std::to_string(it.pos.line)
                   : r.name;

    if (it.kind == ItemKind::OpenFlag) {
      flag(it, r);
      return r;
    }
    if (it.kind == ItemKind::CloseFlag) {
      closeFlag();
      return r;
    }

    std::size_t scopeSave = scope_.size(), ctxSave = ctx_.size();
    try {
      switch (it.kind) {
        case ItemKind::Notation: notation(it); break;
        case ItemKind::Abbrev: abbrev(it); break;
        case ItemKind::Check: check(it, r); break;
        default: definition(it, r); break;
      }
    } catch (const ElabError& e) {
      fail(r, e.code(), e.what(), e.pos());
    } catch (const NotationError& e) {
      fail(r, e.code(), e.what(), e.pos());
    } catch (const KernelError& e) {
      fail(r, toString(e.kind()), e.what(), it.pos);
      if (e.where())
        r.detail = e.kind() == ErrorKind::TypeMismatch
                       ? describeMismatch(s_.env, *e.where(), opts_.reduction)
                       : describe(*e.where());
    }
    if (!r.ok) {
      restore(scopeSave, ctxSave);
      poison(it, r);
    }
    return r;
  }

  static void fail(ItemResult& r, const std::string& code, const std::string& msg, Pos pos) {
    r.ok = false;
    r.code = code;
    r.message = msg;
    if (pos.line > 0) r.pos = pos;
  }

  void restore(std::size_t scopeSize, std::size_t ctxSize) {
    scope_.resize(scopeSize);
    while (ctx_.size() > ctxSize) ctx_.pop();
  }

  void poison(const Item& it, const ItemResult& r) {
    switch (it.kind) {
      case ItemKind::Def:
      case ItemKind::Prim:
        s_.poisoned.insert(it.name);
        break;
      case ItemKind::Have:
        s_.poisoned.insert(r.global);
        locals_[it.name] = r.global;
        break;
      case ItemKind::Abbrev: {
        Entry e;
        e.kind = Entry::Abbrev;
        e.name = it.name;
        e.failed = true;
        scope_.push_back(e);
        break;
      }
      default:
        break;
    }
  }

  void flag(const Item& it, ItemResult& r) {
    marks_.push_back({scope_.size(), ctx_.size()});
    bool failed = false;
    for (const auto& g : it.decls) {
      for (const auto& name : g.names) {
        Expr type = mkStar();
        if (!failed) {
          try {
            type = expression(g.type);
            requireType(type);
          } catch (const ElabError& e) {
            fail(r, e.code(), e.what(), e.pos());
          } catch (const NotationError& e) {
            fail(r, e.code(), e.what(), e.pos());
          } catch (const KernelError& e) {
            fail(r, toString(e.kind()), e.what(), g.pos);
            if (e.where()) r.detail = describe(*e.where());
          }
          failed = !r.ok;
          if (failed) type = mkStar();
        }
        pushVar(name, type, failed);
      }
    }
  }

  void closeFlag() {
    if (marks_.empty()) return;
    restore(marks_.back().first, marks_.back().second);
    marks_.pop_back();
    if (marks_.empty()) locals_.clear();
  }

  void notation(const Item& it) {
    const NotationEntry* entry = s_.notations.find(it.name);
    if (!entry)
      throw ElabError("UnknownNotation", "'" + it.name + "' is not in the notation table", it.pos);
    const Definition* d = s_.env.find(it.target);
    if (!d) {
      if (s_.poisoned.count(it.target))
        throw ElabError("UsesFailedDefinition", "'" + it.target + "' failed to check", it.pos);
      throw ElabError("UnboundName", "unknown notation target '" + it.target + "'", it.pos);
    }
    if (static_cast<int>(d->params.size()) != entry->arity)
      throw ElabError("ArityMismatch",
                      "notation '" + it.name + "' needs a target with " +
                          std::to_string(entry->arity) + " parameters, '" + it.target + "' has " +
                          std::to_string(d->params.size()),
                      it.pos);
    s_.notations.bind(it.name, it.mode, it.target, it.pos);
  }

  void pushParams(const std::vector<SDeclGroup>& groups) {
    for (const auto& g : groups)
      for (const auto& name : g.names) {
        Expr type = expression(g.type);
        requireType(type);
        pushVar(name, type, false);
      }
  }

  void abbrev(const Item& it) {
    std::size_t depth = ctx_.size();
    std::size_t scopeSave = scope_.size();
    pushParams(it.decls);
    auto def = std::make_shared<AbbrevDef>();
    def->depth = depth;
    def->nparams = ctx_.size() - depth;
    def->body = expression(it.body);
    restore(scopeSave, depth);
    Entry e;
    e.kind = Entry::Abbrev;
    e.name = it.name;
    e.abbrev = def;
    scope_.push_back(e);
  }

  void definition(const Item& it, ItemResult& r) {
    std::size_t scopeSave = scope_.size(), ctxSave = ctx_.size();
    pushParams(it.decls);
    std::optional<Expr> body;
    Expr type;
    if (it.type) {
      type = expression(it.type);
    }
    if (it.body) body = expression(it.body);
    if (!it.type) {
      if (!body)
        throw KernelError(ErrorKind::MissingBody, "'" + it.name + "' has neither body nor type");
      type = inferType(s_.env, ctx_, *body, opts_.reduction);
    }
    Definition d{r.global, ctx_.decls(), body, type, it.kind == ItemKind::Prim};
    s_.env = checkDefinition(s_.env, d, opts_.reduction);
    s_.origin[r.global] = path_;
    std::vector<std::string> names;
    for (const auto& p : d.params) names.push_back(p.name);
    r.type = printExpr(type, names);
    restore(scopeSave, ctxSave);
    if (it.kind == ItemKind::Have) locals_[it.name] = r.global;
  }

  void check(const Item& it, ItemResult& r) {
    Expr subject = expression(it.body);
    Expr classifier = expression(it.type);
    requireType(classifier);
    CheckReport rep = checkType(s_.env, ctx_, subject, classifier, opts_.reduction);
    if (!rep.ok) throw KernelError(*rep.error, rep.message, rep.failing);
    r.type = printExpr(classifier, ctx_);
  }

  void requireType(const Expr& t) {
    Expr s = whnf(s_.env, inferType(s_.env, ctx_, t, opts_.reduction), opts_.reduction);
    if (s.kind() != ExprKind::Sort)
      throw KernelError(ErrorKind::NotAType,
                        "'" + printExpr(t, ctx_) + "' is not a type",
                        Judgment{ctx_, t, s});
  }

  //===--------------------------------------------------------------------===//
  // Scope
  //===--------------------------------------------------------------------===//

  void pushVar(const std::string& name, const Expr& type, bool failed) {
    Entry e;
    e.kind = Entry::Var;
    e.name = name;
    e.ctxPos = ctx_.size();
    e.failed = failed;
    scope_.push_back(e);
    ctx_.pushInPlace(name, type);
  }

  void popVar() {
    scope_.pop_back();
    ctx_.pop();
  }

  const Entry* lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == name) return &*it;
    return nullptr;
  }

  const Entry* lookupVar(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == name && it->kind == Entry::Var) return &*it;
    return nullptr;
  }

  Expr varRef(const Entry& e, Pos pos) const {
    if (e.failed)
      throw ElabError("UsesFailedDefinition", "'" + e.name + "' was declared by a failed flag", pos);
    return mkVar(static_cast<std::uint32_t>(ctx_.size() - 1 - e.ctxPos));
  }

  // Environment name for a constant reference, or an error.
  std::string resolveGlobal(const std::string& name, Pos pos) const {
    auto loc = locals_.find(name);
    std::string global = loc != locals_.end() ? loc->second : name;
    if (s_.poisoned.count(global))
      throw ElabError("UsesFailedDefinition", "'" + name + "' failed to check", pos);
    if (s_.env.contains(global)) return global;
    auto later = later_.find(name);
    if (later != later_.end() && later->second > current_)
      throw ElabError("ForwardReference", "'" + name + "' is defined later in this script", pos);
    throw ElabError("UnboundName", "unknown name '" + name + "'", pos);
  }

  //===--------------------------------------------------------------------===//
  // Expressions
  //===--------------------------------------------------------------------===//

  Expr elab(const SExprPtr& e) {
    switch (e->kind) {
      case SKind::Star:
        return mkStar();
      case SKind::Name:
        return name(e->text, e->pos);
      case SKind::Call:
        return call(*e);
      case SKind::App: {
        Expr f = elab(e->kids[0]);
        return mkApp(f, elab(e->kids[1]));
      }
      case SKind::Binder: {
        std::vector<Expr> types;
        for (const auto& n : e->names) {
          types.push_back(elab(e->kids[0]));
          pushVar(n, types.back(), false);
        }
        Expr body = elab(e->kids[1]);
        for (std::size_t i = e->names.size(); i-- > 0;) {
          popVar();
          body = e->text == "\\" ? mkLam(e->names[i], types[i], body)
                                 : mkPi(e->names[i], types[i], body);
        }
        return body;
      }
      default:
        throw ElabError("SyntaxError", "notation left after desugaring", e->pos);
    }
  }

  Expr name(const std::string& n, Pos pos) {
    if (const Entry* e = lookup(n)) {
      if (e->kind == Entry::Var) return varRef(*e, pos);
      if (e->failed)
        throw ElabError("UsesFailedDefinition", "abbreviation '" + n + "' failed to check", pos);
      if (e->abbrev->nparams > 0)
        throw ElabError("ArityMismatch",
                        "abbreviation '" + n + "' takes " + std::to_string(e->abbrev->nparams) +
                            " arguments",
                        pos);
      return lift(e->abbrev->body, static_cast<std::uint32_t>(ctx_.size() - e->abbrev->depth));
    }
    return constant(resolveGlobal(n, pos), n, {}, pos, false);
  }

  Expr call(const SExpr& e) {
    bool fromNotation = !e.names.empty();
    std::vector<std::optional<Expr>> vals(e.kids.size());
    for (std::size_t i = 0; i < e.kids.size(); ++i)
      if (e.kids[i]->kind != SKind::Hole) vals[i] = elab(e.kids[i]);

    std::string target = e.text;
    for (std::size_t i = 0; i < e.kids.size(); ++i) {
      const SExpr& h = *e.kids[i];
      if (h.kind != SKind::Hole) continue;
      const Expr& operand = *vals.at(static_cast<std::size_t>(h.ref));
      Expr t = inferType(s_.env, ctx_, operand, opts_.reduction);
      std::optional<Expr> c;
      if (h.text == "type") {
        c = t;
      } else if (h.text == "rel") {
        c = relationCarrier(s_.env, t, opts_.reduction);
      } else if (h.text == "set") {
        c = predicateCarrier(s_.env, t, opts_.reduction);
      } else {
        c = relationCarrier(s_.env, t, opts_.reduction);
        if (!c) {
          c = predicateCarrier(s_.env, t, opts_.reduction);
          if (c) target = e.alt;
        }
      }
      if (!c)
        throw ElabError("CarrierInference",
                        "cannot infer the carrier of '" + e.names.front() + "' from type '" +
                            printExpr(t, ctx_) + "'",
                        h.pos);
      vals[i] = *c;
    }

    std::vector<Expr> args;
    for (auto& v : vals) args.push_back(*v);

    if (!fromNotation) {
      if (const Entry* en = lookup(target)) {
        if (en->kind == Entry::Var)
          throw ElabError("NotADefinition",
                          "'" + target + "' is a variable; apply it by juxtaposition", e.pos);
        if (en->failed)
          throw ElabError("UsesFailedDefinition", "abbreviation '" + target + "' failed to check",
                          e.pos);
        const AbbrevDef& a = *en->abbrev;
        if (args.size() != a.nparams)
          throw ElabError("ArityMismatch",
                          "abbreviation '" + target + "' takes " + std::to_string(a.nparams) +
                              " arguments, got " + std::to_string(args.size()),
                          e.pos);
        Expr body = lift(a.body, static_cast<std::uint32_t>(ctx_.size() - a.depth),
                         static_cast<std::uint32_t>(a.nparams));
        return instantiateTelescope(body, args);
      }
    }
    return constant(resolveGlobal(target, e.pos), target, std::move(args), e.pos, fromNotation);
  }

  Expr constant(const std::string& global, const std::string& shown, std::vector<Expr> explicitArgs,
                Pos pos, bool exact) {
    const Definition* d = s_.env.find(global);
    std::size_t n = d->params.size(), k = explicitArgs.size();
    if (k > n || (exact && k != n))
      throw ElabError("ArityMismatch",
                      "'" + shown + "' takes " + std::to_string(n) + " arguments, got " +
                          std::to_string(k),
                      pos);
    std::vector<Expr> args;
    for (std::size_t i = 0; i < n - k; ++i) {
      const std::string& p = d->params[i].name;
      const Entry* v = lookupVar(p);
      if (!v)
        throw ElabError("UnboundName",
                        "cannot supply implicit argument '" + p + "' of '" + shown +
                            "': no variable of that name is in scope",
                        pos);
      args.push_back(varRef(*v, pos));
    }
    for (auto& a : explicitArgs) args.push_back(std::move(a));
    return mkConst(global, std::move(args));
  }

  Session& s_;
  const CheckOptions& opts_;
  std::string path_;
  std::string stem_;
  Context ctx_;
  std::vector<Entry> scope_;
  std::vector<std::pair<std::size_t, std::size_t>> marks_;
  std::map<std::string, std::string> locals_;
  std::map<std::string, std::size_t> later_;
  std::size_t current_ = 0;
};

}  // namespace

ScriptResult checkScript(Session& session, const SurfaceScript& script, const CheckOptions& opts) {
  Elaborator e(session, opts, script.path);
  return e.run(script);
}

Expr elaborateExpression(Session& session, const std::string& flags, const std::string& text,
                         const ReductionOptions& ropts) {
  CheckOptions opts;
  opts.reduction = ropts;
  Elaborator e(session, opts, "<expr>");
  if (!flags.empty()) {
    SurfaceScript s = parseScript("flag " + flags + " {\n}\n");
    ItemResult r;
    e.openFlag(s.items.front(), r);
    if (!r.ok) throw ElabError(r.code, r.message, r.pos);
  }
  return e.expression(parseExpression(text));
}

}  // namespace lambdad
