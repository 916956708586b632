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

#include "lambdad/environment.hpp"

#include <cassert>
#include <stdexcept>

namespace lambdad {

Environment::Environment() : state_(std::make_shared<State>()) {}

const Definition* Environment::find(const std::string& name) const {
  auto it = state_->byName.find(name);
  if (it == state_->byName.end()) return nullptr;
  return state_->defs[it->second].get();
}

long Environment::position(const std::string& name) const {
  auto it = state_->byName.find(name);
  return it == state_->byName.end() ? -1 : static_cast<long>(it->second);
}

std::size_t Environment::size() const { return state_->defs.size(); }

const Definition& Environment::at(std::size_t i) const { return *state_->defs.at(i); }

Environment Environment::extendUnchecked(Definition d) const {
  if (contains(d.name)) throw std::logic_error("duplicate definition " + d.name);
  auto next = std::make_shared<State>(*state_);
  next->byName.emplace(d.name, next->defs.size());
  next->defs.push_back(std::make_shared<const Definition>(std::move(d)));
  Environment out;
  out.state_ = std::move(next);
  return out;
}

Expr Context::typeOf(std::uint32_t index) const {
  assert(index < decls_.size());
  return lift(decls_[decls_.size() - 1 - index].type, index + 1);
}

const std::string& Context::nameOf(std::uint32_t index) const {
  assert(index < decls_.size());
  return decls_[decls_.size() - 1 - index].name;
}

Context Context::push(std::string name, Expr type) const {
  Context out = *this;
  out.decls_.push_back({std::move(name), std::move(type)});
  return out;
}

}  // namespace lambdad
