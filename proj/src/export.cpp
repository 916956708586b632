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

#include "lambdad/export.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "syntax.hpp"

namespace lambdad {

const char* toString(RowKind k) {
  switch (k) {
    case RowKind::Open: return "open";
    case RowKind::Step: return "step";
    case RowKind::Close: return "close";
  }
  return "?";
}

int FlagLayout::maxDepth() const {
  int best = 0;
  for (const auto& r : rows) best = std::max(best, r.depth);
  return best;
}

int FlagLayout::finalDepth() const {
  int depth = 0;
  for (const auto& r : rows) {
    if (r.kind == RowKind::Open) ++depth;
    if (r.kind == RowKind::Close) depth -= r.closes;
  }
  return depth;
}

// ---------------------------------------------------------------------------
// Re-sugaring

namespace {

std::shared_ptr<SExpr> copyOf(const SExprPtr& e) { return std::make_shared<SExpr>(*e); }

std::shared_ptr<SExpr> make(SKind kind, std::string text, std::vector<SExprPtr> kids, Pos pos,
                            SExprPtr carrier = nullptr) {
  auto n = std::make_shared<SExpr>();
  n->kind = kind;
  n->text = std::move(text);
  n->kids = std::move(kids);
  n->carrier = std::move(carrier);
  n->pos = pos;
  return n;
}

const NotationEntry* entryFor(const NotationTable& table, const std::string& target) {
  for (const auto& e : table.entries())
    if (!target.empty() && (e.target == target || e.setTarget == target)) return &e;
  return nullptr;
}

SExprPtr resugarCall(const SExprPtr& e, const NotationTable& table) {
  const NotationEntry* n = entryFor(table, e->text);
  if (!n || static_cast<int>(e->kids.size()) != n->arity) return e;
  const auto& k = e->kids;
  switch (n->mode) {
    case CarrierMode::None:
      if (n->fixity == "prefix") return make(SKind::Prefix, n->symbol, {k[0]}, e->pos);
      return make(SKind::Infix, n->symbol, {k[0], k[1]}, e->pos);
    case CarrierMode::Type:
    case CarrierMode::Rel:
    case CarrierMode::RelOrSet:
      if (n->fixity == "postfix") return make(SKind::Postfix, n->symbol, {k[1]}, e->pos, k[0]);
      if (n->fixity == "closed")  // class(S, R, u, x)
        return make(SKind::ClassOf, n->symbol, {k[3], k[1], k[2]}, e->pos);
      return make(SKind::Infix, n->symbol, {k[1], k[2]}, e->pos, k[0]);
    case CarrierMode::Binder: {
      const SExprPtr& lam = k[1];
      if (lam->kind != SKind::Binder || lam->text != "\\" || lam->names.size() != 1 ||
          !sameExpr(lam->kids[0], k[0]))
        return e;
      auto b = make(SKind::Binder, n->symbol, {lam->kids[0], lam->kids[1]}, e->pos);
      b->names = lam->names;
      return b;
    }
  }
  return e;
}

void mentions(const SExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == SKind::Name || e->kind == SKind::Call) out.insert(e->text);
  for (const auto& k : e->kids) mentions(k, out);
  mentions(e->carrier, out);
}

}  // namespace

SExprPtr resugarExpr(const SExprPtr& e, const NotationTable& table) {
  if (!e) return e;
  auto n = copyOf(e);
  for (auto& k : n->kids) k = resugarExpr(k, table);
  n->carrier = resugarExpr(n->carrier, table);
  if (n->kind == SKind::Call) return resugarCall(n, table);
  return n;
}

SurfaceScript resugar(const SurfaceScript& script, NotationTable& table) {
  SurfaceScript out = script;
  for (Item& item : out.items) {
    if (item.kind == ItemKind::Notation) {
      table.bind(item.name, item.mode, item.target, item.pos);
      continue;
    }
    for (auto& g : item.decls) g.type = foldBinders(resugarExpr(g.type, table));
    item.type = foldBinders(resugarExpr(item.type, table));
    item.body = foldBinders(resugarExpr(item.body, table));
  }
  return out;
}

SExprPtr foldBinders(const SExprPtr& e) {
  if (!e) return e;
  auto n = copyOf(e);
  for (auto& k : n->kids) k = foldBinders(k);
  n->carrier = foldBinders(n->carrier);
  if (n->kind != SKind::Binder) return n;
  const SExprPtr& inner = n->kids[1];
  if (inner->kind != SKind::Binder || inner->text != n->text || !sameExpr(inner->kids[0], n->kids[0]))
    return n;
  std::set<std::string> used;
  mentions(inner->kids[0], used);
  for (const auto& x : n->names)
    if (x == "_" || used.count(x)) return n;
  for (const auto& x : inner->names)
    if (x == "_") return n;
  n->names.insert(n->names.end(), inner->names.begin(), inner->names.end());
  n->kids[1] = inner->kids[1];
  return n;
}

std::string prettyExpr(const SExprPtr& e, const NotationTable& table) {
  return printSurface(foldBinders(resugarExpr(e, table)));
}

std::string prettyScript(const SurfaceScript& script, NotationTable table) {
  return printScript(resugar(script, table));
}

// ---------------------------------------------------------------------------
// LaTeX

namespace {

using namespace syntax;

std::string escapeText(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '#': case '$': case '%': case '&': case '_': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

std::string latexName(const std::string& s) {
  if (s.empty()) return s;
  bool letters = std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c); });
  std::size_t digitsFrom = s.find_first_of("0123456789");
  bool indexed = digitsFrom != std::string::npos && digitsFrom > 0 &&
                 std::all_of(s.begin(), s.begin() + digitsFrom,
                             [](unsigned char c) { return std::isalpha(c); }) &&
                 std::all_of(s.begin() + digitsFrom, s.end(),
                             [](unsigned char c) { return std::isdigit(c); });
  if (letters && s.size() == 1) return s;
  if (indexed && digitsFrom == 1) return s.substr(0, 1) + "_{" + s.substr(1) + "}";
  if (letters) return "\\mathit{" + s + "}";
  return "\\textsf{" + escapeText(s) + "}";
}

class Latex {
 public:
  explicit Latex(const NotationTable& table) : table_(table) {}

  std::string symbol(const std::string& op) const {
    if (op == "->") return "\\to";
    if (op == "=>") return "\\Rightarrow";
    if (const NotationEntry* n = table_.find(op)) return n->latex;
    return op;
  }

  void names(std::ostream& out, const std::vector<std::string>& ns) {
    for (std::size_t i = 0; i < ns.size(); ++i) out << (i ? "," : "") << latexName(ns[i]);
  }

  void expr(std::ostream& out, const SExprPtr& e, int ctx) {
    int p = exprPrec(*e);
    bool paren = p < ctx;
    if (paren) out << "(";
    switch (e->kind) {
      case SKind::Star: out << "*"; break;
      case SKind::Hole: out << "\\_"; break;
      case SKind::Name: out << latexName(e->text); break;
      case SKind::Call:
        out << latexName(e->text) << "(";
        for (std::size_t i = 0; i < e->kids.size(); ++i) {
          if (i) out << ", ";
          expr(out, e->kids[i], 0);
        }
        out << ")";
        break;
      case SKind::App:
        expr(out, e->kids[0], kAppPrec);
        out << "\\,";
        expr(out, e->kids[1], kPostfixPrec);
        break;
      case SKind::Binder: {
        const std::string& b = e->text;
        out << (b == "\\" ? "\\lambda " : b == "!" ? "\\Pi " : b == "forall" ? "\\forall " : "\\exists ");
        names(out, e->names);
        out << ":";
        expr(out, e->kids[0], 1);
        out << ".\\,";
        expr(out, e->kids[1], 0);
        break;
      }
      case SKind::SetBuilder:
        out << "\\{";
        names(out, e->names);
        out << ":";
        expr(out, e->kids[0], 1);
        out << " \\mid ";
        expr(out, e->kids[1], 0);
        out << "\\}";
        break;
      case SKind::Infix: {
        Assoc a = infixAssoc(e->text);
        expr(out, e->kids[0], a == Assoc::Left ? p : p + 1);
        out << " \\mathrel{" << symbol(e->text) << "}";
        if (e->text == "=" && e->carrier) {
          out << "_{";
          expr(out, e->carrier, 0);
          out << "}";
        }
        out << " ";
        expr(out, e->kids[1], a == Assoc::Right ? p : p + 1);
        break;
      }
      case SKind::Prefix:
        out << symbol(e->text) << " ";
        expr(out, e->kids[0], kPrefixPrec);
        break;
      case SKind::Postfix:
        // Braces keep stacked converses from forming a double superscript.
        out << "{";
        expr(out, e->kids[0], kPostfixPrec);
        out << "}" << symbol(e->text);
        break;
      case SKind::ClassOf:
        out << "[";
        expr(out, e->kids[0], 0);
        out << "]_{";
        expr(out, e->kids[1], 0);
        out << "}";
        break;
    }
    if (paren) out << ")";
  }

  std::string operator()(const SExprPtr& e) {
    std::ostringstream out;
    expr(out, foldBinders(resugarExpr(e, table_)), 0);
    return out.str();
  }

  std::string decls(const std::vector<SDeclGroup>& groups) {
    std::string out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (i) out += ", ";
      std::ostringstream ns;
      names(ns, groups[i].names);
      out += ns.str() + ":" + (*this)(groups[i].type);
    }
    return out;
  }

 private:
  const NotationTable& table_;
};

std::string joinComments(const Item& item) {
  std::string out;
  for (const auto& d : item.doc) {
    if (d.empty()) continue;
    out += (out.empty() ? "" : " ") + d;
  }
  if (!item.comment.empty()) out += (out.empty() ? "" : " ") + item.comment;
  return escapeText(out);
}

std::string plainGroups(const std::vector<SDeclGroup>& groups, const NotationTable& table) {
  std::string out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out += ", ";
    for (std::size_t k = 0; k < groups[i].names.size(); ++k)
      out += (k ? "," : "") + groups[i].names[k];
    out += " : " + prettyExpr(groups[i].type, table);
  }
  return out;
}

}  // namespace

std::string latexExpr(const SExprPtr& e, const NotationTable& table) { return Latex(table)(e); }

FlagLayout layoutScript(const SurfaceScript& script, NotationTable table,
                        const ExportOptions& opts) {
  FlagLayout layout;
  int depth = 0;
  for (const Item& item : script.items) {
    Latex tex(table);
    std::string comment = joinComments(item);
    switch (item.kind) {
      case ItemKind::Notation:
        table.bind(item.name, item.mode, item.target, item.pos);
        if (!comment.empty()) layout.rows.push_back({depth, RowKind::Step, "", "", comment, 0});
        break;
      case ItemKind::OpenFlag:
        // One box per flag block, its declaration groups side by side.
        if (++depth > opts.maxDepth)
          throw ExportError("RenderDepthExceeded",
                            "flag nesting " + std::to_string(depth) + " exceeds the limit of " +
                                std::to_string(opts.maxDepth) + " at line " +
                                std::to_string(item.pos.line));
        layout.rows.push_back({depth, RowKind::Open, "", tex.decls(item.decls), comment, 0});
        break;
      case ItemKind::CloseFlag:
        depth -= 1;
        layout.rows.push_back({depth, RowKind::Close, "", "", comment, 1});
        break;
      default: {
        std::string label, head, plainHead;
        if (item.kind == ItemKind::Have) {
          label = latexName(item.name);
          head = label;
          plainHead = item.name;
        } else if (item.kind != ItemKind::Check) {
          label = item.kind == ItemKind::Def || item.kind == ItemKind::Prim
                      ? escapeText(item.anchor)
                      : "";
          head = latexName(item.name);
          plainHead = item.name;
          if (item.hasParams) {
            head += "(" + tex.decls(item.decls) + ")";
            plainHead += "(" + plainGroups(item.decls, table) + ")";
          }
        }
        std::string body, plainBody;
        if (item.kind == ItemKind::Check) {
          body = tex(item.body);
          plainBody = prettyExpr(item.body, table);
        } else if (item.kind == ItemKind::Prim) {
          body = head + " := \\bot\\!\\!\\!\\bot";
          plainBody = plainHead + " := prim";
        } else if (item.body) {
          body = head + " := " + tex(item.body);
          plainBody = plainHead + " := " + prettyExpr(item.body, table);
        } else {
          body = head;
          plainBody = plainHead;
        }
        std::string text = body;
        if (item.type) {
          std::string plain = plainBody + " : " + prettyExpr(item.type, table);
          if (static_cast<int>(plain.size() + 2 * depth) > opts.wrapColumn)
            text = "\\begin{array}[t]{@{}l@{}}" + body + " \\\\ \\quad : " + tex(item.type) +
                   "\\end{array}";
          else
            text = body + " : " + tex(item.type);
        }
        layout.rows.push_back({depth, RowKind::Step, label, text, comment, 0});
      }
    }
  }
  return layout;
}

std::string renderLatex(const FlagLayout& layout, const ExportOptions& opts) {
  std::ostringstream out;
  out << "\\begin{flagderiv}\n";
  for (const auto& row : layout.rows) {
    int indent = row.kind == RowKind::Open ? row.depth - 1 : row.depth;
    std::string pad(2 * static_cast<std::size_t>(std::max(indent, 0)), ' ');
    switch (row.kind) {
      case RowKind::Open:
        out << pad << "\\assume*{}{" << row.text << "}{" << row.comment << "}\n";
        break;
      case RowKind::Close:
        if (!row.comment.empty()) out << pad << "  % " << row.comment << "\n";
        for (int i = 0; i < row.closes; ++i) {
          std::string p(2 * static_cast<std::size_t>(row.depth + row.closes - 1 - i), ' ');
          out << p << "\\done\n";
        }
        break;
      case RowKind::Step:
        if (row.text.empty())
          out << pad << "% " << row.comment << "\n";
        else
          out << pad << "\\step*{" << row.label << "}{" << row.text << "}{" << row.comment
              << "}\n";
        break;
    }
  }
  out << "\\end{flagderiv}\n";
  std::string body = out.str();
  return opts.standalone ? standaloneDocument(body) : body;
}

std::string exportLatex(const SurfaceScript& script, const NotationTable& table,
                        const ExportOptions& opts) {
  return renderLatex(layoutScript(script, table, opts), opts);
}

std::string exportChecked(Session& session, const SurfaceScript& script,
                          const ExportOptions& opts) {
  NotationTable before = session.notations;
  ScriptResult r = checkScript(session, script);
  if (!r.ok()) {
    std::string first;
    for (const auto& it : r.items)
      if (!it.ok) {
        first = (it.name.empty() ? std::string(toString(it.kind)) : it.name) + ": " + it.code;
        break;
      }
    throw ExportError("NotChecked", script.path + " does not check (" + first + ")");
  }
  return exportLatex(script, before, opts);
}

std::string standaloneDocument(const std::string& body) {
  return "\\documentclass{article}\n"
         "\\usepackage{amsmath,amssymb}\n"
         "\\usepackage{flagderiv}\n"
         "\\begin{document}\n" +
         body + "\\end{document}\n";
}

}  // namespace lambdad
