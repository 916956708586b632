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

#include "lambdad/expr.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace lambdad {

namespace detail {

struct ExprNode {
  ExprKind kind;
  Sort sort = Sort::Star;
  std::uint32_t index = 0;
  std::string name;  // constant name or binder name
  std::vector<Expr> args;
  Expr a;  // fun / binder type
  Expr b;  // arg / body
  std::uint32_t looseBound = 0;
  std::size_t hash = 0;
  std::size_t size = 1;
};

}  // namespace detail

namespace {

inline std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const detail::ExprNode& node(const std::shared_ptr<const detail::ExprNode>& p) {
  assert(p && "null Expr");
  return *p;
}

}  // namespace

ExprKind Expr::kind() const { return node(node_).kind; }
Sort Expr::sort() const { return node(node_).sort; }
std::uint32_t Expr::index() const { return node(node_).index; }
const std::string& Expr::name() const { return node(node_).name; }
std::span<const Expr> Expr::args() const { return node(node_).args; }
const Expr& Expr::fun() const { return node(node_).a; }
const Expr& Expr::arg() const { return node(node_).b; }
const std::string& Expr::binderName() const { return node(node_).name; }
const Expr& Expr::binderType() const { return node(node_).a; }
const Expr& Expr::body() const { return node(node_).b; }
std::uint32_t Expr::looseBound() const { return node(node_).looseBound; }
std::size_t Expr::hash() const { return node(node_).hash; }
std::size_t Expr::size() const { return node(node_).size; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size) return false;
  switch (x.kind) {
    case ExprKind::Sort:
      return x.sort == y.sort;
    case ExprKind::Var:
      return x.index == y.index;
    case ExprKind::Const:
      if (x.name != y.name || x.args.size() != y.args.size()) return false;
      for (std::size_t i = 0; i < x.args.size(); ++i)
        if (x.args[i] != y.args[i]) return false;
      return true;
    case ExprKind::App:
    case ExprKind::Lam:
    case ExprKind::Pi:
      return x.a == y.a && x.b == y.b;
  }
  return false;
}

Expr mkSort(Sort s) {
  static const Expr star = [] {
    auto n = std::make_shared<detail::ExprNode>();
    n->kind = ExprKind::Sort;
    n->sort = Sort::Star;
    n->hash = mix(1, 0);
    return Expr(n);
  }();
  static const Expr box = [] {
    auto n = std::make_shared<detail::ExprNode>();
    n->kind = ExprKind::Sort;
    n->sort = Sort::Box;
    n->hash = mix(1, 1);
    return Expr(n);
  }();
  return s == Sort::Star ? star : box;
}

Expr mkVar(std::uint32_t index) {
  auto n = std::make_shared<detail::ExprNode>();
  n->kind = ExprKind::Var;
  n->index = index;
  n->looseBound = index + 1;
  n->hash = mix(2, index);
  return Expr(n);
}

Expr mkConst(std::string name, std::vector<Expr> args) {
  auto n = std::make_shared<detail::ExprNode>();
  n->kind = ExprKind::Const;
  std::size_t h = mix(3, std::hash<std::string>{}(name));
  for (const auto& a : args) {
    n->looseBound = std::max(n->looseBound, a.looseBound());
    n->size += a.size();
    h = mix(h, a.hash());
  }
  n->name = std::move(name);
  n->args = std::move(args);
  n->hash = h;
  return Expr(n);
}

Expr mkApp(Expr fun, Expr arg) {
  auto n = std::make_shared<detail::ExprNode>();
  n->kind = ExprKind::App;
  n->looseBound = std::max(fun.looseBound(), arg.looseBound());
  n->size = 1 + fun.size() + arg.size();
  n->hash = mix(mix(4, fun.hash()), arg.hash());
  n->a = std::move(fun);
  n->b = std::move(arg);
  return Expr(n);
}

Expr mkApps(Expr fun, std::span<const Expr> args) {
  for (const auto& a : args) fun = mkApp(std::move(fun), a);
  return fun;
}

namespace {

std::shared_ptr<const detail::ExprNode> mkBinder(ExprKind kind, std::string binder, Expr type,
                                                 Expr body) {
  auto n = std::make_shared<detail::ExprNode>();
  n->kind = kind;
  n->name = std::move(binder);
  std::uint32_t bodyBound = body.looseBound() > 0 ? body.looseBound() - 1 : 0;
  n->looseBound = std::max(type.looseBound(), bodyBound);
  n->size = 1 + type.size() + body.size();
  n->hash = mix(mix(kind == ExprKind::Lam ? 5 : 6, type.hash()), body.hash());
  n->a = std::move(type);
  n->b = std::move(body);
  return n;
}

}  // namespace

Expr mkLam(std::string binder, Expr type, Expr body) {
  return Expr(mkBinder(ExprKind::Lam, std::move(binder), std::move(type), std::move(body)));
}

Expr mkPi(std::string binder, Expr type, Expr body) {
  return Expr(mkBinder(ExprKind::Pi, std::move(binder), std::move(type), std::move(body)));
}

Expr mkArrow(Expr from, Expr to) { return mkPi("_", std::move(from), lift(to, 1)); }

namespace {

// Generic structural rebuild. `onVar(index, depth)` decides what a variable
// becomes; subterms whose loose bound does not reach `depth` are shared.
template <class F>
Expr mapVars(const Expr& e, std::uint32_t depth, const F& onVar) {
  if (e.looseBound() <= depth) return e;
  switch (e.kind()) {
    case ExprKind::Sort:
      return e;
    case ExprKind::Var:
      return onVar(e.index(), depth);
    case ExprKind::Const: {
      std::vector<Expr> args;
      args.reserve(e.args().size());
      for (const auto& a : e.args()) args.push_back(mapVars(a, depth, onVar));
      return mkConst(e.name(), std::move(args));
    }
    case ExprKind::App:
      return mkApp(mapVars(e.fun(), depth, onVar), mapVars(e.arg(), depth, onVar));
    case ExprKind::Lam:
      return mkLam(e.binderName(), mapVars(e.binderType(), depth, onVar),
                   mapVars(e.body(), depth + 1, onVar));
    case ExprKind::Pi:
      return mkPi(e.binderName(), mapVars(e.binderType(), depth, onVar),
                  mapVars(e.body(), depth + 1, onVar));
  }
  return e;
}

}  // namespace

Expr lift(const Expr& e, std::uint32_t amount, std::uint32_t cutoff) {
  if (amount == 0) return e;
  return mapVars(e, cutoff, [&](std::uint32_t i, std::uint32_t) {
    return mkVar(i + amount);
  });
}

Expr instantiate(const Expr& body, const Expr& value) {
  return mapVars(body, 0, [&](std::uint32_t i, std::uint32_t depth) {
    if (i == depth) return lift(value, depth);
    return mkVar(i - 1);
  });
}

Expr instantiateTelescope(const Expr& body, std::span<const Expr> values) {
  const auto n = static_cast<std::uint32_t>(values.size());
  if (n == 0) return body;
  return mapVars(body, 0, [&](std::uint32_t i, std::uint32_t depth) {
    std::uint32_t k = i - depth;
    if (k < n) return lift(values[n - 1 - k], depth);
    return mkVar(i - n);
  });
}

bool hasLooseVar(const Expr& e, std::uint32_t index) {
  if (e.looseBound() <= index) return false;
  switch (e.kind()) {
    case ExprKind::Sort:
      return false;
    case ExprKind::Var:
      return e.index() == index;
    case ExprKind::Const:
      return std::any_of(e.args().begin(), e.args().end(),
                         [&](const Expr& a) { return hasLooseVar(a, index); });
    case ExprKind::App:
      return hasLooseVar(e.fun(), index) || hasLooseVar(e.arg(), index);
    case ExprKind::Lam:
    case ExprKind::Pi:
      return hasLooseVar(e.binderType(), index) || hasLooseVar(e.body(), index + 1);
  }
  return false;
}

Expr spineHead(const Expr& e) {
  const Expr* cur = &e;
  while (cur->kind() == ExprKind::App) cur = &cur->fun();
  return *cur;
}

std::vector<Expr> spineArgs(const Expr& e) {
  std::vector<Expr> out;
  const Expr* cur = &e;
  while (cur->kind() == ExprKind::App) {
    out.push_back(cur->arg());
    cur = &cur->fun();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace lambdad
