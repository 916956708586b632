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

// Flag-style rendering of scripts: a row layout (open / step / close), a
// LaTeX body for the flagderiv package, and a plain re-sugared rendering
// that parses back to the same terms.

#ifndef LAMBDAD_EXPORT_HPP
#define LAMBDAD_EXPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lambdad/check.hpp"
#include "lambdad/notation.hpp"
#include "lambdad/surface.hpp"

namespace lambdad {

// RenderDepthExceeded, NotChecked.
class ExportError : public std::runtime_error {
 public:
  ExportError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

enum class RowKind { Open, Step, Close };

const char* toString(RowKind k);

struct FlagRow {
  int depth = 0;  // after the row: opens count themselves, closes do not
  RowKind kind = RowKind::Step;
  std::string label;
  std::string text;  // LaTeX formula, or the comment for a comment-only row
  std::string comment;
  int closes = 0;  // close rows
};

struct FlagLayout {
  std::vector<FlagRow> rows;
  int maxDepth() const;
  int finalDepth() const;
};

struct ExportOptions {
  int maxDepth = 32;
  int wrapColumn = 100;
  bool standalone = false;
};

// Calls of notation targets back to their symbols, carriers kept in
// brackets. Notation items are bound in `table` as they are met.
SExprPtr resugarExpr(const SExprPtr& e, const NotationTable& table);
SurfaceScript resugar(const SurfaceScript& script, NotationTable& table);

// `\x:S. \y:S. e` as `\x,y:S. e`, when the inner type does not mention x.
SExprPtr foldBinders(const SExprPtr& e);

// Plain text: resugared, folded, printed in script syntax.
std::string prettyExpr(const SExprPtr& e, const NotationTable& table);
std::string prettyScript(const SurfaceScript& script, NotationTable table);

std::string latexExpr(const SExprPtr& e, const NotationTable& table);

FlagLayout layoutScript(const SurfaceScript& script, NotationTable table,
                        const ExportOptions& opts = {});
std::string renderLatex(const FlagLayout& layout, const ExportOptions& opts = {});

// layoutScript + renderLatex.
std::string exportLatex(const SurfaceScript& script, const NotationTable& table,
                        const ExportOptions& opts = {});

// Checks the script in `session` first; NotChecked when any item fails.
std::string exportChecked(Session& session, const SurfaceScript& script,
                          const ExportOptions& opts = {});

std::string standaloneDocument(const std::string& body);

}  // namespace lambdad

#endif  // LAMBDAD_EXPORT_HPP
