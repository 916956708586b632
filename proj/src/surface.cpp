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

#include <sstream>

#include "lambdad/surface.hpp"
#include "syntax.hpp"

namespace lambdad {

bool sameExpr(const SExprPtr& a, const SExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const SExpr& a, const SExpr& b) {
  if (a.kind != b.kind || a.text != b.text || a.names != b.names || a.alt != b.alt ||
      a.ref != b.ref || a.kids.size() != b.kids.size() || !sameExpr(a.carrier, b.carrier))
    return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!sameExpr(a.kids[i], b.kids[i])) return false;
  return true;
}

bool operator==(const SDeclGroup& a, const SDeclGroup& b) {
  return a.names == b.names && sameExpr(a.type, b.type);
}

bool operator==(const Item& a, const Item& b) {
  return a.kind == b.kind && a.name == b.name && a.anchor == b.anchor && a.decls == b.decls &&
         a.hasParams == b.hasParams && sameExpr(a.type, b.type) && sameExpr(a.body, b.body) &&
         a.mode == b.mode && a.target == b.target && a.doc == b.doc && a.comment == b.comment;
}

bool operator==(const SurfaceScript& a, const SurfaceScript& b) {
  return a.items == b.items && a.trailing == b.trailing;
}

const char* toString(ItemKind kind) {
  switch (kind) {
    case ItemKind::OpenFlag: return "flag";
    case ItemKind::CloseFlag: return "close";
    case ItemKind::Def: return "def";
    case ItemKind::Prim: return "prim";
    case ItemKind::Have: return "have";
    case ItemKind::Check: return "check";
    case ItemKind::Abbrev: return "abbrev";
    case ItemKind::Notation: return "notation";
  }
  return "?";
}

namespace {

std::shared_ptr<SExpr> node(SKind kind, Pos pos) {
  auto n = std::make_shared<SExpr>();
  n->kind = kind;
  n->pos = pos;
  return n;
}

}  // namespace

SExprPtr sStar(Pos pos) { return node(SKind::Star, pos); }

SExprPtr sName(std::string name, Pos pos) {
  auto n = node(SKind::Name, pos);
  n->text = std::move(name);
  return n;
}

SExprPtr sCall(std::string name, std::vector<SExprPtr> args, Pos pos) {
  auto n = node(SKind::Call, pos);
  n->text = std::move(name);
  n->kids = std::move(args);
  return n;
}

SExprPtr sApp(SExprPtr fun, SExprPtr arg, Pos pos) {
  auto n = node(SKind::App, pos);
  n->kids = {std::move(fun), std::move(arg)};
  return n;
}

SExprPtr sBinder(std::string binder, std::vector<std::string> names, SExprPtr type, SExprPtr body,
                 Pos pos) {
  auto n = node(SKind::Binder, pos);
  n->text = std::move(binder);
  n->names = std::move(names);
  n->kids = {std::move(type), std::move(body)};
  return n;
}

SExprPtr sInfix(std::string op, SExprPtr lhs, SExprPtr rhs, SExprPtr carrier, Pos pos) {
  auto n = node(SKind::Infix, pos);
  n->text = std::move(op);
  n->kids = {std::move(lhs), std::move(rhs)};
  n->carrier = std::move(carrier);
  return n;
}

//===----------------------------------------------------------------------===//
// Printing
//===----------------------------------------------------------------------===//

namespace syntax {

int infixPrec(const std::string& op) {
  if (op == "<=>") return 25;
  if (op == "=>" || op == "->") return 30;
  if (op == "\\/") return 45;
  if (op == "/\\") return 50;
  if (op == "=" || op == "==" || op == "<=" || op == "eps") return 60;
  if (op == "cup") return 70;
  if (op == "cap") return 75;
  if (op == "o") return 80;
  return -1;
}

Assoc infixAssoc(const std::string& op) {
  int p = infixPrec(op);
  if (p == 25 || p == 30) return Assoc::Right;
  if (p == 60) return Assoc::None;
  return Assoc::Left;
}

int exprPrec(const SExpr& e) {
  switch (e.kind) {
    case SKind::Binder: return 0;
    case SKind::Infix: return infixPrec(e.text);
    case SKind::Prefix: return kPrefixPrec;
    case SKind::App: return kAppPrec;
    case SKind::Postfix: return kPostfixPrec;
    default: return kAtomPrec;
  }
}

}  // namespace syntax

namespace {

using namespace syntax;

void printExprTo(std::ostream& out, const SExprPtr& e, int ctx);

void printCarrier(std::ostream& out, const SExprPtr& c) {
  if (!c) return;
  out << "[";
  printExprTo(out, c, 0);
  out << "]";
}

void printNames(std::ostream& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
}

void printExprTo(std::ostream& out, const SExprPtr& e, int ctx) {
  int p = exprPrec(*e);
  bool paren = p < ctx;
  if (paren) out << "(";
  switch (e->kind) {
    case SKind::Star:
      out << "*";
      break;
    case SKind::Name:
      out << e->text;
      break;
    case SKind::Hole:
      out << "_";
      break;
    case SKind::Call:
      out << e->text << "(";
      for (std::size_t i = 0; i < e->kids.size(); ++i) {
        if (i) out << ", ";
        printExprTo(out, e->kids[i], 0);
      }
      out << ")";
      break;
    case SKind::App:
      printExprTo(out, e->kids[0], kAppPrec);
      out << " ";
      printExprTo(out, e->kids[1], kPostfixPrec);
      break;
    case SKind::Binder:
      out << e->text;
      if (e->text == "forall" || e->text == "exists") out << " ";
      printNames(out, e->names);
      out << ":";
      printExprTo(out, e->kids[0], 1);
      out << ". ";
      printExprTo(out, e->kids[1], 0);
      break;
    case SKind::SetBuilder:
      out << "{";
      printNames(out, e->names);
      out << ":";
      printExprTo(out, e->kids[0], 1);
      out << " | ";
      printExprTo(out, e->kids[1], 0);
      out << "}";
      break;
    case SKind::Infix: {
      Assoc a = infixAssoc(e->text);
      printExprTo(out, e->kids[0], a == Assoc::Left ? p : p + 1);
      out << " " << e->text;
      printCarrier(out, e->carrier);
      out << " ";
      printExprTo(out, e->kids[1], a == Assoc::Right ? p : p + 1);
      break;
    }
    case SKind::Prefix:
      out << e->text;
      printExprTo(out, e->kids[0], kPrefixPrec);
      break;
    case SKind::Postfix:
      printExprTo(out, e->kids[0], kPostfixPrec);
      out << e->text;
      printCarrier(out, e->carrier);
      break;
    case SKind::ClassOf:
      out << "[";
      printExprTo(out, e->kids[0], 0);
      out << "]_(";
      printExprTo(out, e->kids[1], 0);
      out << ", ";
      printExprTo(out, e->kids[2], 0);
      out << ")";
      break;
  }
  if (paren) out << ")";
}

void printGroups(std::ostream& out, const std::vector<SDeclGroup>& groups, const char* sep) {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out << sep;
    printNames(out, groups[i].names);
    out << " : ";
    printExprTo(out, groups[i].type, 0);
  }
}

void printComment(std::ostream& out, const std::string& text) {
  out << "#";
  if (!text.empty()) out << " " << text;
}

}  // namespace

std::string printSurface(const SExprPtr& e) {
  std::ostringstream out;
  printExprTo(out, e, 0);
  return out.str();
}

std::string printScript(const SurfaceScript& script) {
  std::ostringstream out;
  int depth = 0;
  for (const Item& item : script.items) {
    if (item.kind == ItemKind::CloseFlag && depth > 0) --depth;
    std::string indent(2 * static_cast<std::size_t>(depth), ' ');
    for (const auto& d : item.doc) {
      out << indent;
      printComment(out, d);
      out << "\n";
    }
    out << indent;
    switch (item.kind) {
      case ItemKind::OpenFlag:
        out << "flag ";
        printGroups(out, item.decls, " | ");
        out << " {";
        ++depth;
        break;
      case ItemKind::CloseFlag:
        out << "}";
        break;
      case ItemKind::Def:
      case ItemKind::Prim:
      case ItemKind::Have:
      case ItemKind::Abbrev:
        out << toString(item.kind) << " " << item.name;
        if (!item.anchor.empty()) out << " [\"" << item.anchor << "\"]";
        if (item.hasParams) {
          out << (item.anchor.empty() ? "(" : " (");
          printGroups(out, item.decls, ", ");
          out << ")";
        }
        if (item.type) {
          out << " : ";
          printExprTo(out, item.type, 0);
        }
        if (item.body) {
          out << " := ";
          printExprTo(out, item.body, 0);
        }
        out << " ;";
        break;
      case ItemKind::Check:
        out << "check ";
        printExprTo(out, item.body, 0);
        out << " : ";
        printExprTo(out, item.type, 0);
        out << " ;";
        break;
      case ItemKind::Notation:
        out << "notation \"" << item.name << "\"";
        if (!item.mode.empty()) out << " " << item.mode;
        out << " := " << item.target << " ;";
        break;
    }
    if (!item.comment.empty()) {
      out << "  ";
      printComment(out, item.comment);
    }
    out << "\n";
  }
  for (const auto& d : script.trailing) {
    printComment(out, d);
    out << "\n";
  }
  return out.str();
}

int flagDepth(const SurfaceScript& script) {
  int depth = 0, best = 0;
  for (const Item& item : script.items) {
    if (item.kind == ItemKind::OpenFlag) best = std::max(best, ++depth);
    if (item.kind == ItemKind::CloseFlag) --depth;
  }
  return best;
}

}  // namespace lambdad
