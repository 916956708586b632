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

// The trusted core: beta/delta reduction, conversion, and the typing
// judgment of the Calculus of Constructions extended with parameterized
// definitions. Typing rules implemented here:
//
//   sort     |- * : []
//   var      x : A in ctx  =>  x : A
//   form     A : s1, (x:A) |- B : s2  =>  Pi x:A. B : s2     for all s1, s2
//   appl     f : Pi x:A. B, a : A  =>  f a : B[x := a]
//   abst     (x:A) |- b : B, Pi x:A. B : s  =>  \x:A. b : Pi x:A. B
//   conv     a : A, A =bd= B, B : s  =>  a : B
//   inst     c(params) := M : N in env, args checked against params
//            =>  c(args) : N[params := args]
//
// Environments are extended only through checkDefinition.

#ifndef LAMBDAD_KERNEL_HPP
#define LAMBDAD_KERNEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambdad/environment.hpp"
#include "lambdad/expr.hpp"

namespace lambdad {

enum class ErrorKind {
  UnboundName,
  SortOfBox,
  ApplicationMismatch,
  IllFormedProduct,
  NotAType,
  ArityMismatch,
  TypeMismatch,
  DuplicateName,
  MissingBody,
  PrimitiveUnfold,
  NonTermination,
};

const char* toString(ErrorKind kind);

class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorKind kind, const std::string& message,
              std::optional<Judgment> where = std::nullopt)
      : std::runtime_error(message), kind_(kind), where_(std::move(where)) {}

  ErrorKind kind() const { return kind_; }
  // The sub-judgment that failed, when one is available.
  const std::optional<Judgment>& where() const { return where_; }

 private:
  ErrorKind kind_;
  std::optional<Judgment> where_;
};

enum class ConversionStrategy {
  // Compare weak-head forms, unfolding definitions only when heads disagree.
  Lazy,
  // Compare full normal forms.
  Normalize,
};

struct ReductionOptions {
  std::size_t stepBudget = 1'000'000;
  ConversionStrategy conversion = ConversionStrategy::Lazy;
};

Expr whnf(const Environment& env, const Expr& e, const ReductionOptions& opts = {});
// beta only, at the head.
Expr whnfCore(const Environment& env, const Expr& e, const ReductionOptions& opts = {});
// One delta step at the head of the beta-weak-head form; nullopt when the
// head is not an unfoldable constant.
std::optional<Expr> unfoldHead(const Environment& env, const Expr& e,
                               const ReductionOptions& opts = {});
Expr normalize(const Environment& env, const Expr& e, const ReductionOptions& opts = {});
bool convertible(const Environment& env, const Expr& a, const Expr& b,
                 const ReductionOptions& opts = {});

Expr inferType(const Environment& env, const Context& ctx, const Expr& e,
               const ReductionOptions& opts = {});

struct CheckReport {
  bool ok = false;
  std::optional<ErrorKind> error;
  std::string message;
  std::optional<Judgment> failing;
  Expr inferred;
  // Filled on TypeMismatch.
  Expr inferredNormal;
  Expr expectedNormal;

  explicit operator bool() const { return ok; }
};

CheckReport checkType(const Environment& env, const Context& ctx, const Expr& e,
                      const Expr& expected, const ReductionOptions& opts = {});

// Checks `d` against `env` and returns the extended environment. Throws
// KernelError on failure.
Environment checkDefinition(const Environment& env, const Definition& d,
                            const ReductionOptions& opts = {});

// delta step: the body of `name` with `args` substituted for its parameters.
Expr instantiate(const Environment& env, const std::string& name, const std::vector<Expr>& args);

// Single-step reduction positions, for metatheory checks. The path selects
// children: Const -> argument i; App -> 0 fun, 1 arg; Lam/Pi -> 0 type, 1 body.
struct RedexSite {
  std::vector<std::uint32_t> path;
  bool delta = false;
};

std::vector<RedexSite> redexSites(const Environment& env, const Expr& e);
Expr contractAt(const Environment& env, const Expr& e, const RedexSite& site);

}  // namespace lambdad

#endif  // LAMBDAD_KERNEL_HPP
