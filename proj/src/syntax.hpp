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

// Operator table shared by the parser and the printers.

#ifndef LAMBDAD_SRC_SYNTAX_HPP
#define LAMBDAD_SRC_SYNTAX_HPP

#include <string>

#include "lambdad/surface.hpp"

namespace lambdad::syntax {

enum class Assoc { Left, Right, None };

inline constexpr int kPrefixPrec = 90;
inline constexpr int kAppPrec = 100;
inline constexpr int kPostfixPrec = 110;
inline constexpr int kAtomPrec = 120;

// -1 when `op` is not an infix operator.
int infixPrec(const std::string& op);
Assoc infixAssoc(const std::string& op);
int exprPrec(const SExpr& e);

}  // namespace lambdad::syntax

#endif  // LAMBDAD_SRC_SYNTAX_HPP
