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

// The fixed notation table. Symbols, fixities and precedences are built in;
// scripts only bind each symbol to the constant it abbreviates.

#ifndef LAMBDAD_NOTATION_HPP
#define LAMBDAD_NOTATION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lambdad/surface.hpp"

namespace lambdad {

// How the leading carrier argument of the target is found.
enum class CarrierMode {
  None,      // target takes the operands only: and(A, B)
  Type,      // carrier is the type of the left operand: eq(S, x, y)
  Rel,       // left operand is a relation on the carrier: cup(S, R, Q)
  RelOrSet,  // relation or predicate, chosen by the operand's type
  Binder,    // carrier is the binder annotation: all(S, \x:S. e)
};

struct NotationEntry {
  std::string symbol;
  std::string fixity;  // infix, infixl, infixr, prefix, postfix, binder, closed
  int precedence = 0;
  int arity = 0;       // parameter count of the target
  CarrierMode mode = CarrierMode::None;
  std::string latex;
  std::string target;     // relation-level target for RelOrSet
  std::string setTarget;  // RelOrSet only
};

// UnknownNotation, NotationConflict, ...
class NotationError : public std::runtime_error {
 public:
  NotationError(std::string code, const std::string& message, Pos pos)
      : std::runtime_error(message), code_(std::move(code)), pos_(pos) {}
  const std::string& code() const { return code_; }
  Pos pos() const { return pos_; }

 private:
  std::string code_;
  Pos pos_;
};

class NotationTable {
 public:
  // All fixed entries, none bound yet.
  NotationTable();

  const NotationEntry* find(const std::string& symbol) const;
  const std::vector<NotationEntry>& entries() const { return entries_; }

  // mode is "", "rel" or "set". Rebinding to the same target is a no-op.
  void bind(const std::string& symbol, const std::string& mode, const std::string& target,
            Pos pos = {});

 private:
  std::vector<NotationEntry> entries_;
};

// Replaces every notation by an explicit call of its target. Carriers that
// must be inferred from types become Hole nodes. Arrows become products
// with the binder "_".
SExprPtr desugarExpr(const SExprPtr& e, const NotationTable& table);

// Whole-script form: binds notation items in order and desugars every
// expression. Throws NotationError at the first problem.
SurfaceScript desugar(const SurfaceScript& script, NotationTable& table);

}  // namespace lambdad

#endif  // LAMBDAD_NOTATION_HPP
