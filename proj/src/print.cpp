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

#include "lambdad/print.hpp"

#include <algorithm>
#include <sstream>

namespace lambdad {

namespace {

enum Prec { kBinder = 0, kArrow = 1, kApp = 2, kAtom = 3 };

class Printer {
 public:
  explicit Printer(std::vector<std::string> scope) : scope_(std::move(scope)) {}

  void print(const Expr& e, int prec, bool rightEdge) {
    switch (e.kind()) {
      case ExprKind::Sort:
        out_ << (e.sort() == Sort::Star ? "*" : "[]");
        return;
      case ExprKind::Var: {
        auto i = e.index();
        if (i < scope_.size())
          out_ << scope_[scope_.size() - 1 - i];
        else
          out_ << "#" << (i - scope_.size());
        return;
      }
      case ExprKind::Const: {
        out_ << e.name();
        if (!e.args().empty()) {
          out_ << "(";
          bool first = true;
          for (const auto& a : e.args()) {
            if (!first) out_ << ", ";
            first = false;
            print(a, kBinder, true);
          }
          out_ << ")";
        }
        return;
      }
      case ExprKind::App: {
        bool paren = prec > kApp;
        if (paren) out_ << "(";
        print(e.fun(), kApp, false);
        out_ << " ";
        print(e.arg(), kAtom, paren || rightEdge);
        if (paren) out_ << ")";
        return;
      }
      case ExprKind::Pi:
        if (!hasLooseVar(e.body(), 0)) {
          bool paren = prec > kArrow;
          if (paren) out_ << "(";
          print(e.binderType(), kApp, false);
          out_ << " -> ";
          scope_.push_back("_");
          print(e.body(), kArrow, paren || rightEdge);
          scope_.pop_back();
          if (paren) out_ << ")";
          return;
        }
        [[fallthrough]];
      case ExprKind::Lam: {
        bool paren = prec > kBinder || !rightEdge;
        if (paren) out_ << "(";
        std::string name = fresh(e.binderName());
        out_ << (e.kind() == ExprKind::Lam ? "\\" : "!") << name << ":";
        print(e.binderType(), kArrow, false);
        out_ << ". ";
        scope_.push_back(name);
        print(e.body(), kBinder, true);
        scope_.pop_back();
        if (paren) out_ << ")";
        return;
      }
    }
  }

  std::string str() const { return out_.str(); }

 private:
  std::string fresh(std::string base) {
    if (base.empty() || base == "_") base = "x";
    std::string name = base;
    while (std::find(scope_.begin(), scope_.end(), name) != scope_.end()) name += "'";
    return name;
  }

  std::vector<std::string> scope_;
  std::ostringstream out_;
};

}  // namespace

std::string printExpr(const Expr& e, const std::vector<std::string>& scope) {
  Printer p(scope);
  p.print(e, kBinder, true);
  return p.str();
}

std::string printExpr(const Expr& e, const Context& ctx) {
  std::vector<std::string> names;
  names.reserve(ctx.size());
  for (const auto& d : ctx.decls()) names.push_back(d.name);
  return printExpr(e, names);
}

}  // namespace lambdad
