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

// Surface syntax of .ld scripts: a flat list of flag items with named
// expressions that still carry notation.

#ifndef LAMBDAD_SURFACE_HPP
#define LAMBDAD_SURFACE_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambdad {

struct Pos {
  int line = 0;
  int column = 0;
};

enum class SKind {
  Star,
  Name,
  Call,       // text(args...)
  App,        // kids = {fun, arg}
  Binder,     // text in {"\\", "!", "forall", "exists"}; kids = {type, body}
  SetBuilder, // {x:T | body}; kids = {type, body}
  Infix,      // kids = {lhs, rhs}; optional carrier
  Prefix,     // "~"
  Postfix,    // "^-1"; optional carrier
  ClassOf,    // [x]_(R, u); kids = {x, R, u}
  Hole,       // produced by desugaring only; text is the inference mode
};

struct SExpr;
using SExprPtr = std::shared_ptr<const SExpr>;

struct SExpr {
  SKind kind = SKind::Star;
  std::string text;
  std::vector<std::string> names;
  std::vector<SExprPtr> kids;
  SExprPtr carrier;
  // Desugared overloads: the set-level target when text is the relation one.
  std::string alt;
  // Hole: index of the sibling argument whose type fixes the carrier.
  int ref = 0;
  Pos pos;
};

bool operator==(const SExpr& a, const SExpr& b);
bool sameExpr(const SExprPtr& a, const SExprPtr& b);

SExprPtr sStar(Pos pos = {});
SExprPtr sName(std::string name, Pos pos = {});
SExprPtr sCall(std::string name, std::vector<SExprPtr> args, Pos pos = {});
SExprPtr sApp(SExprPtr fun, SExprPtr arg, Pos pos = {});
SExprPtr sBinder(std::string binder, std::vector<std::string> names, SExprPtr type, SExprPtr body,
                 Pos pos = {});
SExprPtr sInfix(std::string op, SExprPtr lhs, SExprPtr rhs, SExprPtr carrier = nullptr,
                Pos pos = {});

// A run of names sharing one type: `x, y : S`.
struct SDeclGroup {
  std::vector<std::string> names;
  SExprPtr type;
  Pos pos;
};

bool operator==(const SDeclGroup& a, const SDeclGroup& b);

enum class ItemKind { OpenFlag, CloseFlag, Def, Prim, Have, Check, Abbrev, Notation };

const char* toString(ItemKind kind);

struct Item {
  ItemKind kind = ItemKind::Check;
  std::string name;                  // def/prim/have/abbrev; notation symbol
  std::string anchor;                // def/prim: theorem id tag, may be empty
  std::vector<SDeclGroup> decls;     // flag declarations or explicit params
  bool hasParams = false;            // an explicit (possibly empty) list was written
  SExprPtr type;                     // stated type / check classifier
  SExprPtr body;                     // definiens / check subject
  std::string mode;                  // notation: "", "rel" or "set"
  std::string target;                // notation target constant
  std::vector<std::string> doc;      // comment lines directly above
  std::string comment;               // trailing comment on the same line
  Pos pos;
};

bool operator==(const Item& a, const Item& b);

struct SurfaceScript {
  std::string path;
  std::vector<Item> items;
  std::vector<std::string> trailing;  // comment lines after the last item
};

bool operator==(const SurfaceScript& a, const SurfaceScript& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, const std::string& message, Pos pos,
             std::vector<std::string> expected = {})
      : std::runtime_error(message),
        code_(std::move(code)),
        pos_(pos),
        expected_(std::move(expected)) {}

  // "SyntaxError" or "UnbalancedFlag".
  const std::string& code() const { return code_; }
  Pos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }
  // Script the error was found in; set by parseScript.
  const std::string& path() const { return path_; }
  void setPath(std::string path) { path_ = std::move(path); }

 private:
  std::string path_;
  std::string code_;
  Pos pos_;
  std::vector<std::string> expected_;
};

SurfaceScript parseScript(const std::string& text, const std::string& path = "<input>");
SExprPtr parseExpression(const std::string& text);

std::string printScript(const SurfaceScript& script);
std::string printSurface(const SExprPtr& e);

// Maximum flag nesting reached by the script.
int flagDepth(const SurfaceScript& script);

}  // namespace lambdad

#endif  // LAMBDAD_SURFACE_HPP
