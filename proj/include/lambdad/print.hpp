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

#ifndef LAMBDAD_PRINT_HPP
#define LAMBDAD_PRINT_HPP

#include <string>
#include <vector>

#include "lambdad/environment.hpp"
#include "lambdad/expr.hpp"

namespace lambdad {

// Prints a kernel term in script syntax (without notation). `scope` names
// the free variables, outermost first. Binders that would shadow a name in
// scope are primed.
std::string printExpr(const Expr& e, const std::vector<std::string>& scope = {});
std::string printExpr(const Expr& e, const Context& ctx);

}  // namespace lambdad

#endif  // LAMBDAD_PRINT_HPP
