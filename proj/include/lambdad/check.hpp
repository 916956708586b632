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

// Elaboration of surface scripts into kernel definitions: notation
// expansion, name resolution, implicit parameters from open flags, carrier
// inference, and item-by-item checking with poisoning of failed names.

#ifndef LAMBDAD_CHECK_HPP
#define LAMBDAD_CHECK_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambdad/environment.hpp"
#include "lambdad/kernel.hpp"
#include "lambdad/notation.hpp"
#include "lambdad/surface.hpp"

namespace lambdad {

// Resolution failures that are not kernel errors: UnboundName (at a
// position), ForwardReference, UsesFailedDefinition, ArityMismatch at a
// notation site, CarrierInference, NotADefinition.
class ElabError : public std::runtime_error {
 public:
  ElabError(std::string code, const std::string& message, Pos pos)
      : std::runtime_error(message), code_(std::move(code)), pos_(pos) {}
  const std::string& code() const { return code_; }
  Pos pos() const { return pos_; }

 private:
  std::string code_;
  Pos pos_;
};

struct ItemResult {
  std::size_t index = 0;
  ItemKind kind = ItemKind::Check;
  std::string name;    // source name
  std::string global;  // environment name (mangled for `have`)
  std::string anchor;
  Pos pos;
  bool ok = true;
  std::string code;     // error code on failure
  std::string message;
  std::string type;     // printed classifier on success
  std::string detail;   // failing judgment, normal forms
};

struct ScriptResult {
  std::string path;
  std::vector<ItemResult> items;

  bool ok() const;
  std::size_t failures() const;
  const ItemResult* find(const std::string& name) const;
};

struct CheckOptions {
  ReductionOptions reduction;
  // Called after every item, for --trace.
  std::function<void(const ItemResult&)> onItem;
};

// State shared by consecutive scripts.
struct Session {
  Environment env;
  NotationTable notations;
  std::set<std::string> poisoned;
  std::map<std::string, std::string> origin;  // global name -> script path
};

ScriptResult checkScript(Session& session, const SurfaceScript& script,
                         const CheckOptions& opts = {});

// A resolved kernel term for `text`, elaborated under flag declarations
// written as in a script (e.g. "S : * | R : br(S)").
Expr elaborateExpression(Session& session, const std::string& flags, const std::string& text,
                         const ReductionOptions& opts = {});

// Finds the carrier of a relation or predicate type. nullopt when the type
// does not have the shape A -> A -> * (rel) or A -> * (set).
std::optional<Expr> relationCarrier(const Environment& env, const Expr& type,
                                    const ReductionOptions& opts = {});
std::optional<Expr> predicateCarrier(const Environment& env, const Expr& type,
                                     const ReductionOptions& opts = {});

}  // namespace lambdad

#endif  // LAMBDAD_CHECK_HPP
