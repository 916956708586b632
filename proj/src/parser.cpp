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

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "lambdad/surface.hpp"
#include "syntax.hpp"

namespace lambdad {

namespace {

using namespace syntax;

enum class Tok { End, Ident, String, Sym };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Pos pos;
  bool spaceBefore = true;
};

struct Comment {
  Pos pos;
  bool ownLine = false;
  std::string text;
};

const std::set<std::string> kKeywords = {"flag", "def", "prim", "have",   "check", "abbrev",
                                         "notation", "forall", "exists", "eps", "o", "cap",
                                         "cup"};

// Longest first.
const std::array<const char*, 26> kSymbols = {
    "<=>", "^-1", ":=", "->", "=>", "==", "<=", "/\\", "\\/", "=", "\\", "!", "~",
    "*",   "(",   ")",  "{",  "}",  "[",  "]",  ",",   ":",   ";", "|",  ".", "_"};

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool identChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  void run(std::vector<Token>& tokens, std::vector<Comment>& comments) {
    bool space = true;
    bool lineHasToken = false;
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '\n') {
        advance();
        space = true;
        lineHasToken = false;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
        space = true;
        continue;
      }
      Pos at{line_, col_};
      if (c == '#') {
        std::size_t end = s_.find('\n', i_);
        if (end == std::string::npos) end = s_.size();
        std::string text = s_.substr(i_ + 1, end - i_ - 1);
        if (!text.empty() && text[0] == ' ') text.erase(0, 1);
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
          text.pop_back();
        comments.push_back({at, !lineHasToken, text});
        while (i_ < end) advance();
        space = true;
        continue;
      }
      Token t;
      t.pos = at;
      t.spaceBefore = space;
      if (identStart(c)) {
        std::size_t j = i_;
        while (j < s_.size()) {
          if (identChar(s_[j])) {
            ++j;
          } else if (s_[j] == '-' && j + 1 < s_.size() &&
                     std::isalnum(static_cast<unsigned char>(s_[j + 1]))) {
            j += 2;
          } else {
            break;
          }
        }
        t.kind = Tok::Ident;
        t.text = s_.substr(i_, j - i_);
      } else if (c == '"') {
        std::size_t end = s_.find('"', i_ + 1);
        std::size_t nl = s_.find('\n', i_ + 1);
        if (end == std::string::npos || (nl != std::string::npos && nl < end))
          throw ParseError("SyntaxError", "unterminated string literal", at, {"\""});
        t.kind = Tok::String;
        t.text = s_.substr(i_ + 1, end - i_ - 1);
      } else {
        for (const char* sym : kSymbols) {
          std::string_view v(sym);
          if (s_.compare(i_, v.size(), v) == 0) {
            t.kind = Tok::Sym;
            t.text = std::string(v);
            break;
          }
        }
        if (t.kind != Tok::Sym)
          throw ParseError("SyntaxError", std::string("unexpected character '") + c + "'", at);
      }
      std::size_t len = t.kind == Tok::String ? t.text.size() + 2 : t.text.size();
      for (std::size_t k = 0; k < len; ++k) advance();
      tokens.push_back(std::move(t));
      space = false;
      lineHasToken = true;
    }
    Token end;
    end.kind = Tok::End;
    end.pos = {line_, col_};
    tokens.push_back(end);
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  const std::string& s_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SurfaceScript script(const std::string& path, std::vector<Comment> comments) {
    SurfaceScript out;
    out.path = path;
    std::vector<Pos> ends;
    int depth = 0;
    std::vector<Pos> opens;
    while (peek().kind != Tok::End) {
      Item item = parseItem();
      if (item.kind == ItemKind::OpenFlag) {
        ++depth;
        opens.push_back(item.pos);
      } else if (item.kind == ItemKind::CloseFlag) {
        if (depth == 0) throw ParseError("UnbalancedFlag", "'}' without an open flag", item.pos);
        --depth;
        opens.pop_back();
      }
      out.items.push_back(std::move(item));
      ends.push_back(last_.pos);
    }
    if (depth > 0)
      throw ParseError("UnbalancedFlag",
                       "flag opened at line " + std::to_string(opens.back().line) +
                           " is never closed",
                       peek().pos, {"}"});
    attachComments(out, ends, comments);
    return out;
  }

  SExprPtr standalone() {
    SExprPtr e = expr(0);
    expectEnd();
    return e;
  }

 private:
  //===--------------------------------------------------------------------===//
  // Token helpers
  //===--------------------------------------------------------------------===//

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }

  const Token& next() {
    last_ = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return last_;
  }

  bool isSym(const std::string& s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Sym && peek(k).text == s;
  }
  bool isWord(const std::string& s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Ident && peek(k).text == s;
  }

  bool accept(const std::string& s) {
    if (isSym(s)) {
      next();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    std::string msg = "unexpected " + got + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      msg += (i ? (i + 1 == expected.size() ? " or " : ", ") : "") + expected[i];
    throw ParseError("SyntaxError", msg, t.pos, std::move(expected));
  }

  void expect(const std::string& s) {
    if (!accept(s)) fail({"'" + s + "'"});
  }

  void expectEnd() {
    if (peek().kind != Tok::End) fail({"end of input"});
  }

  std::string ident(const char* what = "identifier") {
    if (peek().kind != Tok::Ident || kKeywords.count(peek().text)) fail({what});
    return next().text;
  }

  //===--------------------------------------------------------------------===//
  // Items
  //===--------------------------------------------------------------------===//

  Item parseItem() {
    Item item;
    item.pos = peek().pos;
    if (isSym("}")) {
      next();
      item.kind = ItemKind::CloseFlag;
      return item;
    }
    if (peek().kind != Tok::Ident)
      fail({"'flag'", "'def'", "'prim'", "'have'", "'check'", "'abbrev'", "'notation'", "'}'"});
    const std::string kw = peek().text;
    if (kw == "flag") {
      next();
      item.kind = ItemKind::OpenFlag;
      item.decls.push_back(group());
      while (accept("|")) item.decls.push_back(group());
      expect("{");
    } else if (kw == "def" || kw == "prim" || kw == "have" || kw == "abbrev") {
      next();
      item.kind = kw == "def"    ? ItemKind::Def
                  : kw == "prim" ? ItemKind::Prim
                  : kw == "have" ? ItemKind::Have
                                 : ItemKind::Abbrev;
      item.name = ident("a name");
      if ((item.kind == ItemKind::Def || item.kind == ItemKind::Prim) && isSym("[")) {
        next();
        if (peek().kind != Tok::String) fail({"an anchor string"});
        item.anchor = next().text;
        expect("]");
      }
      if (isSym("(")) {
        next();
        item.hasParams = true;
        if (!isSym(")")) {
          item.decls.push_back(group());
          while (accept(",")) item.decls.push_back(group());
        }
        expect(")");
      }
      if (item.kind != ItemKind::Abbrev && accept(":")) item.type = expr(0);
      if (item.kind == ItemKind::Prim) {
        if (!item.type) fail({"':'"});
      } else if (accept(":=")) {
        item.body = expr(0);
      } else if (item.kind != ItemKind::Def) {
        fail({"':='"});
      }
      if (!isSym(";")) fail(item.body || item.kind == ItemKind::Prim ? std::vector<std::string>{"';'"}
                                                                      : std::vector<std::string>{"':='", "';'"});
      next();
    } else if (kw == "check") {
      next();
      item.kind = ItemKind::Check;
      item.body = expr(0);
      expect(":");
      item.type = expr(0);
      expect(";");
    } else if (kw == "notation") {
      next();
      item.kind = ItemKind::Notation;
      if (peek().kind != Tok::String) fail({"a notation symbol string"});
      item.name = next().text;
      if (isWord("rel") || isWord("set")) item.mode = next().text;
      expect(":=");
      item.target = ident("a target constant");
      expect(";");
    } else {
      fail({"'flag'", "'def'", "'prim'", "'have'", "'check'", "'abbrev'", "'notation'", "'}'"});
    }
    return item;
  }

  SDeclGroup group() {
    SDeclGroup g;
    g.pos = peek().pos;
    g.names.push_back(ident("a variable name"));
    while (accept(",")) g.names.push_back(ident("a variable name"));
    expect(":");
    g.type = expr(0);
    return g;
  }

  //===--------------------------------------------------------------------===//
  // Expressions
  //===--------------------------------------------------------------------===//

  bool binderStart() const {
    return isSym("\\") || isSym("!") || isWord("forall") || isWord("exists");
  }

  bool atomStart() const {
    const Token& t = peek();
    if (t.kind == Tok::Ident) return !kKeywords.count(t.text);
    return isSym("*") || isSym("(") || isSym("[");
  }

  std::string infixAt() const {
    const Token& t = peek();
    if (t.kind != Tok::Sym && t.kind != Tok::Ident) return {};
    if (infixPrec(t.text) < 0) return {};
    return t.text;
  }

  SExprPtr carrierOpt() {
    if (isSym("[") && !peek().spaceBefore) {
      next();
      SExprPtr c = expr(0);
      expect("]");
      return c;
    }
    return nullptr;
  }

  SExprPtr expr(int minPrec) {
    SExprPtr lhs = prefix();
    for (;;) {
      std::string op = infixAt();
      if (op.empty()) break;
      int p = infixPrec(op);
      if (p < minPrec) break;
      Pos at = peek().pos;
      next();
      SExprPtr carrier = carrierOpt();
      Assoc a = infixAssoc(op);
      SExprPtr rhs = expr(a == Assoc::Right ? p : p + 1);
      lhs = sInfix(op, lhs, rhs, carrier, at);
      if (a == Assoc::None) {
        std::string again = infixAt();
        if (!again.empty() && infixPrec(again) == p)
          throw ParseError("SyntaxError",
                           "'" + again + "' is non-associative; add parentheses", peek().pos,
                           {"')'", "';'"});
      }
    }
    return lhs;
  }

  SExprPtr prefix() {
    if (binderStart()) return binder();
    if (isSym("~")) {
      Pos at = next().pos;
      auto n = std::make_shared<SExpr>();
      n->kind = SKind::Prefix;
      n->text = "~";
      n->pos = at;
      n->kids = {prefix()};
      return n;
    }
    return application();
  }

  SExprPtr binder() {
    const Token& t = next();
    std::string b = t.text;
    Pos at = t.pos;
    std::vector<std::string> names{ident("a binder name")};
    while (accept(",")) names.push_back(ident("a binder name"));
    expect(":");
    SExprPtr type = expr(0);
    expect(".");
    SExprPtr body = expr(0);
    return sBinder(b, std::move(names), type, body, at);
  }

  SExprPtr application() {
    SExprPtr head;
    if (isSym("{")) {
      head = setBuilder();
    } else {
      if (!atomStart()) fail({"an expression"});
      head = postfixAtom();
    }
    while (atomStart()) {
      Pos at = peek().pos;
      head = sApp(head, postfixAtom(), at);
    }
    return head;
  }

  SExprPtr setBuilder() {
    Pos at = next().pos;
    auto n = std::make_shared<SExpr>();
    n->kind = SKind::SetBuilder;
    n->pos = at;
    n->names.push_back(ident("a binder name"));
    expect(":");
    SExprPtr type = expr(0);
    expect("|");
    SExprPtr body = expr(0);
    expect("}");
    n->kids = {type, body};
    return n;
  }

  SExprPtr postfixAtom() {
    SExprPtr e = atom();
    while (isSym("^-1")) {
      Pos at = next().pos;
      auto n = std::make_shared<SExpr>();
      n->kind = SKind::Postfix;
      n->text = "^-1";
      n->pos = at;
      n->kids = {e};
      n->carrier = carrierOpt();
      e = n;
    }
    return e;
  }

  SExprPtr atom() {
    const Token& t = peek();
    Pos at = t.pos;
    if (isSym("*")) {
      next();
      return sStar(at);
    }
    if (isSym("(")) {
      next();
      SExprPtr e = expr(0);
      expect(")");
      return e;
    }
    if (isSym("[")) {
      next();
      auto n = std::make_shared<SExpr>();
      n->kind = SKind::ClassOf;
      n->pos = at;
      SExprPtr x = expr(0);
      expect("]");
      expect("_");
      expect("(");
      SExprPtr r = expr(0);
      expect(",");
      SExprPtr u = expr(0);
      expect(")");
      n->kids = {x, r, u};
      return n;
    }
    std::string name = ident("an expression");
    if (isSym("(") && !peek().spaceBefore) {
      next();
      std::vector<SExprPtr> args;
      if (!isSym(")")) {
        args.push_back(expr(0));
        while (accept(",")) args.push_back(expr(0));
      }
      expect(")");
      return sCall(name, std::move(args), at);
    }
    return sName(name, at);
  }

  //===--------------------------------------------------------------------===//
  // Comments
  //===--------------------------------------------------------------------===//

  static bool before(Pos a, Pos b) {
    return a.line < b.line || (a.line == b.line && a.column < b.column);
  }

  static void attachComments(SurfaceScript& out, const std::vector<Pos>& ends,
                             const std::vector<Comment>& comments) {
    for (const Comment& c : comments) {
      if (!c.ownLine) {
        // trailing: the last item ending on this line before the comment
        long owner = -1;
        for (std::size_t i = 0; i < ends.size(); ++i)
          if (ends[i].line == c.pos.line && before(ends[i], c.pos)) owner = static_cast<long>(i);
        if (owner >= 0) {
          std::string& dst = out.items[static_cast<std::size_t>(owner)].comment;
          dst += dst.empty() ? c.text : " " + c.text;
          continue;
        }
      }
      auto it = std::find_if(ends.begin(), ends.end(), [&](Pos e) { return before(c.pos, e); });
      if (it == ends.end())
        out.trailing.push_back(c.text);
      else
        out.items[static_cast<std::size_t>(it - ends.begin())].doc.push_back(c.text);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Token last_;
};

}  // namespace

SurfaceScript parseScript(const std::string& text, const std::string& path) {
  try {
    std::vector<Token> tokens;
    std::vector<Comment> comments;
    Lexer(text).run(tokens, comments);
    Parser p(std::move(tokens));
    return p.script(path, std::move(comments));
  } catch (ParseError& e) {
    e.setPath(path);
    throw;
  }
}

SExprPtr parseExpression(const std::string& text) {
  std::vector<Token> tokens;
  std::vector<Comment> comments;
  Lexer(text).run(tokens, comments);
  Parser p(std::move(tokens));
  return p.standalone();
}

}  // namespace lambdad
