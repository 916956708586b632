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

#ifndef LAMBDAD_ENVIRONMENT_HPP
#define LAMBDAD_ENVIRONMENT_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lambdad/expr.hpp"

namespace lambdad {

struct Decl {
  std::string name;
  Expr type;
};

// A parameterized constant. Parameter types form a telescope: each one is
// scoped over the preceding parameters. `body` and `type` are scoped over all
// of them. A missing body on a non-primitive definition is an error the
// kernel reports (MissingBody).
struct Definition {
  std::string name;
  std::vector<Decl> params;
  std::optional<Expr> body;
  Expr type;
  bool primitive = false;

  static Definition descriptive(std::string name, std::vector<Decl> params, Expr body,
                                Expr type) {
    return Definition{std::move(name), std::move(params), std::move(body), std::move(type),
                      false};
  }
  static Definition axiom(std::string name, std::vector<Decl> params, Expr type) {
    return Definition{std::move(name), std::move(params), std::nullopt, std::move(type), true};
  }
};

// Ordered sequence of definitions. Extending returns a new environment and
// leaves the receiver untouched; prefixes are shared.
class Environment {
 public:
  Environment();

  const Definition* find(const std::string& name) const;
  // Position in definition order, or -1.
  long position(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  std::size_t size() const;
  const Definition& at(std::size_t i) const;

  // No checking; see checkDefinition in kernel.hpp for the checked route.
  Environment extendUnchecked(Definition d) const;

 private:
  struct State {
    std::vector<std::shared_ptr<const Definition>> defs;
    std::unordered_map<std::string, std::size_t> byName;
  };
  std::shared_ptr<const State> state_;
};

// Ordered declarations; the last entry is de Bruijn index 0. Each type is
// scoped over the preceding entries.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Decl> decls) : decls_(std::move(decls)) {}

  std::size_t size() const { return decls_.size(); }
  bool empty() const { return decls_.empty(); }
  const std::vector<Decl>& decls() const { return decls_; }

  // Type of variable `index`, shifted into the full context.
  Expr typeOf(std::uint32_t index) const;
  const std::string& nameOf(std::uint32_t index) const;

  Context push(std::string name, Expr type) const;
  void pushInPlace(std::string name, Expr type) { decls_.push_back({std::move(name), std::move(type)}); }
  void pop() { decls_.pop_back(); }

 private:
  std::vector<Decl> decls_;
};

struct Judgment {
  Context ctx;
  Expr subject;
  Expr classifier;
};

}  // namespace lambdad

#endif  // LAMBDAD_ENVIRONMENT_HPP
