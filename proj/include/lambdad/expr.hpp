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

#ifndef LAMBDAD_EXPR_HPP
#define LAMBDAD_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lambdad {

enum class Sort : std::uint8_t { Star, Box };

enum class ExprKind : std::uint8_t { Sort, Var, Const, App, Lam, Pi };

class Expr;

namespace detail {
struct ExprNode;
}  // namespace detail

// Immutable term of the calculus. Variables are de Bruijn indices; binder
// names are kept for printing only and never take part in comparisons, so
// operator== is alpha-equivalence.
class Expr {
 public:
  Expr() = default;

  ExprKind kind() const;
  explicit operator bool() const { return node_ != nullptr; }

  // Sort
  Sort sort() const;
  // Var
  std::uint32_t index() const;
  // Const
  const std::string& name() const;
  std::span<const Expr> args() const;
  // App
  const Expr& fun() const;
  const Expr& arg() const;
  // Lam / Pi
  const std::string& binderName() const;
  const Expr& binderType() const;
  const Expr& body() const;

  // One past the largest free de Bruijn index; 0 for closed terms.
  std::uint32_t looseBound() const;
  std::size_t hash() const;
  std::size_t size() const;

  bool isSort(Sort s) const { return kind() == ExprKind::Sort && sort() == s; }
  bool isStar() const { return isSort(Sort::Star); }
  bool isBox() const { return isSort(Sort::Box); }

  bool sameNode(const Expr& other) const { return node_ == other.node_; }

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  explicit Expr(std::shared_ptr<const detail::ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::ExprNode> node_;

  friend Expr mkSort(Sort);
  friend Expr mkVar(std::uint32_t);
  friend Expr mkConst(std::string, std::vector<Expr>);
  friend Expr mkApp(Expr, Expr);
  friend Expr mkLam(std::string, Expr, Expr);
  friend Expr mkPi(std::string, Expr, Expr);
};

Expr mkSort(Sort s);
inline Expr mkStar() { return mkSort(Sort::Star); }
inline Expr mkBox() { return mkSort(Sort::Box); }
Expr mkVar(std::uint32_t index);
Expr mkConst(std::string name, std::vector<Expr> args = {});
Expr mkApp(Expr fun, Expr arg);
Expr mkApps(Expr fun, std::span<const Expr> args);
Expr mkLam(std::string binder, Expr type, Expr body);
Expr mkPi(std::string binder, Expr type, Expr body);
// A -> B, with B given in the outer scope (it is shifted under the binder).
Expr mkArrow(Expr from, Expr to);

// Shift free variables with index >= cutoff by `amount`.
Expr lift(const Expr& e, std::uint32_t amount, std::uint32_t cutoff = 0);

// Substitute `value` for variable 0 of `body` and lower the other free
// variables by one. `value` lives in the scope outside the binder.
Expr instantiate(const Expr& body, const Expr& value);

// Substitute a whole telescope: `body` lives under `values.size()` binders,
// values[0] being the outermost. Values live in the outer scope.
Expr instantiateTelescope(const Expr& body, std::span<const Expr> values);

bool hasLooseVar(const Expr& e, std::uint32_t index);

// Head of an application spine and its arguments, outermost first.
Expr spineHead(const Expr& e);
std::vector<Expr> spineArgs(const Expr& e);

}  // namespace lambdad

template <>
struct std::hash<lambdad::Expr> {
  std::size_t operator()(const lambdad::Expr& e) const noexcept { return e.hash(); }
};

#endif  // LAMBDAD_EXPR_HPP
