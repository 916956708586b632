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

#include "lambdad/kernel.hpp"

#include <cassert>
#include <sstream>

#include "lambdad/print.hpp"

namespace lambdad {

const char* toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnboundName: return "UnboundName";
    case ErrorKind::SortOfBox: return "SortOfBox";
    case ErrorKind::ApplicationMismatch: return "ApplicationMismatch";
    case ErrorKind::IllFormedProduct: return "IllFormedProduct";
    case ErrorKind::NotAType: return "NotAType";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::MissingBody: return "MissingBody";
    case ErrorKind::PrimitiveUnfold: return "PrimitiveUnfold";
    case ErrorKind::NonTermination: return "NonTermination";
  }
  return "?";
}

namespace {

class TypeChecker {
 public:
  TypeChecker(const Environment& env, const ReductionOptions& opts) : env_(env), opts_(opts) {}

  //===------------------------------------------------------------------===//
  // Reduction
  //===------------------------------------------------------------------===//

  void tick() {
    if (++steps_ > opts_.stepBudget)
      throw KernelError(ErrorKind::NonTermination,
                        "reduction step budget of " + std::to_string(opts_.stepBudget) +
                            " exhausted");
  }

  const Definition& lookup(const Expr& c) const {
    const Definition* d = env_.find(c.name());
    if (!d) throw KernelError(ErrorKind::UnboundName, "unknown constant '" + c.name() + "'");
    if (d->params.size() != c.args().size())
      throw KernelError(ErrorKind::ArityMismatch,
                        "'" + c.name() + "' expects " + std::to_string(d->params.size()) +
                            " arguments, got " + std::to_string(c.args().size()));
    return *d;
  }

  bool unfoldable(const Expr& head) const {
    if (head.kind() != ExprKind::Const) return false;
    const Definition* d = env_.find(head.name());
    return d && d->body.has_value() && d->params.size() == head.args().size();
  }

  Expr unfold(const Expr& c) {
    const Definition& d = lookup(c);
    if (!d.body) throw KernelError(ErrorKind::PrimitiveUnfold, "'" + c.name() + "' is primitive");
    tick();
    return instantiateTelescope(*d.body, c.args());
  }

  // beta only
  Expr whnfCore(Expr e) {
    while (e.kind() == ExprKind::App) {
      Expr head = spineHead(e);
      if (head.kind() != ExprKind::Lam) break;
      auto args = spineArgs(e);
      tick();
      Expr reduced = instantiate(head.body(), args[0]);
      e = mkApps(std::move(reduced), std::span<const Expr>(args).subspan(1));
    }
    return e;
  }

  Expr unfoldHead(const Expr& e) {
    Expr head = spineHead(e);
    auto args = spineArgs(e);
    return mkApps(unfold(head), args);
  }

  Expr whnf(Expr e) {
    for (;;) {
      e = whnfCore(std::move(e));
      if (!unfoldable(spineHead(e))) return e;
      e = unfoldHead(e);
    }
  }

  Expr normalize(const Expr& e) {
    Expr w = whnf(e);
    switch (w.kind()) {
      case ExprKind::Sort:
      case ExprKind::Var:
        return w;
      case ExprKind::Const: {
        std::vector<Expr> args;
        for (const auto& a : w.args()) args.push_back(normalize(a));
        return mkConst(w.name(), std::move(args));
      }
      case ExprKind::App: {
        Expr head = normalize(spineHead(w));
        for (const auto& a : spineArgs(w)) head = mkApp(std::move(head), normalize(a));
        return head;
      }
      case ExprKind::Lam:
        return mkLam(w.binderName(), normalize(w.binderType()), normalize(w.body()));
      case ExprKind::Pi:
        return mkPi(w.binderName(), normalize(w.binderType()), normalize(w.body()));
    }
    return w;
  }

  //===------------------------------------------------------------------===//
  // Conversion
  //===------------------------------------------------------------------===//

  bool convertible(const Expr& a, const Expr& b) {
    if (opts_.conversion == ConversionStrategy::Normalize) return normalize(a) == normalize(b);
    return defEq(a, b);
  }

  bool argsDefEq(std::span<const Expr> xs, std::span<const Expr> ys) {
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!defEq(xs[i], ys[i])) return false;
    return true;
  }

  bool spinesDefEq(const Expr& a, const Expr& b) {
    Expr ha = spineHead(a), hb = spineHead(b);
    auto aa = spineArgs(a), ab = spineArgs(b);
    if (aa.size() != ab.size()) return false;
    if (ha.kind() != ExprKind::Const || hb.kind() != ExprKind::Const || ha.name() != hb.name())
      return false;
    return argsDefEq(ha.args(), hb.args()) && argsDefEq(aa, ab);
  }

  bool defEq(Expr a, Expr b) {
    if (a == b) return true;
    a = whnfCore(std::move(a));
    b = whnfCore(std::move(b));
    if (a == b) return true;

    // Lazy delta: unfold only the side whose head is defined later, and
    // try argument-wise comparison first when both heads agree.
    for (;;) {
      Expr ha = spineHead(a), hb = spineHead(b);
      bool ua = unfoldable(ha), ub = unfoldable(hb);
      if (!ua && !ub) break;
      if (ua && ub && ha.name() == hb.name()) {
        if (spinesDefEq(a, b)) return true;
        a = unfoldHead(a);
        b = unfoldHead(b);
      } else if (ua && (!ub || env_.position(ha.name()) >= env_.position(hb.name()))) {
        a = unfoldHead(a);
      } else {
        b = unfoldHead(b);
      }
      a = whnfCore(std::move(a));
      b = whnfCore(std::move(b));
      if (a == b) return true;
    }

    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case ExprKind::Sort:
        return a.sort() == b.sort();
      case ExprKind::Var:
        return a.index() == b.index();
      case ExprKind::Const:
        return a.name() == b.name() && argsDefEq(a.args(), b.args());
      case ExprKind::App: {
        auto aa = spineArgs(a), ab = spineArgs(b);
        if (aa.size() != ab.size()) return false;
        return defEq(spineHead(a), spineHead(b)) && argsDefEq(aa, ab);
      }
      case ExprKind::Lam:
      case ExprKind::Pi:
        return defEq(a.binderType(), b.binderType()) && defEq(a.body(), b.body());
    }
    return false;
  }

  //===------------------------------------------------------------------===//
  // Typing
  //===------------------------------------------------------------------===//

  [[noreturn]] void fail(ErrorKind kind, const std::string& msg, const Context& ctx,
                         const Expr& subject, const Expr& classifier = Expr()) {
    throw KernelError(kind, msg, Judgment{ctx, subject, classifier});
  }

  std::string show(const Expr& e, const Context& ctx) { return printExpr(e, ctx); }

  // Type of `type` must reduce to a sort.
  Sort sortOf(Context& ctx, const Expr& type, ErrorKind onFailure) {
    if (type.isBox()) fail(onFailure, "[] has no type", ctx, type);
    Expr s = whnf(infer(ctx, type));
    if (s.kind() != ExprKind::Sort)
      fail(onFailure, "'" + show(type, ctx) + "' is not a type: its type is '" + show(s, ctx) + "'",
           ctx, type, s);
    return s.sort();
  }

  Expr infer(Context& ctx, const Expr& e) {
    switch (e.kind()) {
      case ExprKind::Sort:
        if (e.sort() == Sort::Box) fail(ErrorKind::SortOfBox, "[] has no type", ctx, e);
        return mkBox();
      case ExprKind::Var:
        if (e.index() >= ctx.size())
          fail(ErrorKind::UnboundName, "variable #" + std::to_string(e.index()) + " is not bound",
               ctx, e);
        return ctx.typeOf(e.index());
      case ExprKind::Const:
        return inferConst(ctx, e);
      case ExprKind::App: {
        Expr ft = whnf(infer(ctx, e.fun()));
        if (ft.kind() != ExprKind::Pi)
          fail(ErrorKind::ApplicationMismatch,
               "'" + show(e.fun(), ctx) + "' is applied but its type '" + show(ft, ctx) +
                   "' is not a product",
               ctx, e.fun(), ft);
        Expr at = infer(ctx, e.arg());
        if (!convertible(at, ft.binderType()))
          fail(ErrorKind::ApplicationMismatch,
               "argument '" + show(e.arg(), ctx) + "' has type '" + show(at, ctx) +
                   "' but the function expects '" + show(ft.binderType(), ctx) + "'",
               ctx, e.arg(), ft.binderType());
        return instantiate(ft.body(), e.arg());
      }
      case ExprKind::Lam: {
        sortOf(ctx, e.binderType(), ErrorKind::NotAType);
        ctx.pushInPlace(e.binderName(), e.binderType());
        Expr bodyType;
        try {
          bodyType = infer(ctx, e.body());
          if (bodyType.isBox())
            fail(ErrorKind::IllFormedProduct, "abstraction over a kind-level body", ctx, e.body());
          sortOf(ctx, bodyType, ErrorKind::IllFormedProduct);
        } catch (...) {
          ctx.pop();
          throw;
        }
        ctx.pop();
        return mkPi(e.binderName(), e.binderType(), bodyType);
      }
      case ExprKind::Pi: {
        sortOf(ctx, e.binderType(), ErrorKind::IllFormedProduct);
        ctx.pushInPlace(e.binderName(), e.binderType());
        Sort s2;
        try {
          s2 = sortOf(ctx, e.body(), ErrorKind::IllFormedProduct);
        } catch (...) {
          ctx.pop();
          throw;
        }
        ctx.pop();
        return mkSort(s2);
      }
    }
    fail(ErrorKind::UnboundName, "malformed term", ctx, e);
  }

  Expr inferConst(Context& ctx, const Expr& e) {
    const Definition* d = env_.find(e.name());
    if (!d) fail(ErrorKind::UnboundName, "unknown constant '" + e.name() + "'", ctx, e);
    if (d->params.size() != e.args().size())
      fail(ErrorKind::ArityMismatch,
           "'" + e.name() + "' expects " + std::to_string(d->params.size()) + " arguments, got " +
               std::to_string(e.args().size()),
           ctx, e);
    auto args = e.args();
    for (std::size_t k = 0; k < args.size(); ++k) {
      Expr expected = instantiateTelescope(d->params[k].type, args.subspan(0, k));
      Expr actual = infer(ctx, args[k]);
      if (!convertible(actual, expected))
        fail(ErrorKind::TypeMismatch,
             "argument " + std::to_string(k + 1) + " of '" + e.name() + "' (parameter '" +
                 d->params[k].name + "') has type '" + show(actual, ctx) + "', expected '" +
                 show(expected, ctx) + "'",
             ctx, args[k], expected);
    }
    return instantiateTelescope(d->type, args);
  }

  const Environment& env() const { return env_; }

 private:
  const Environment& env_;
  ReductionOptions opts_;
  std::size_t steps_ = 0;
};

void collectSites(const Environment& env, const Expr& e, std::vector<std::uint32_t>& path,
                  std::vector<RedexSite>& out) {
  switch (e.kind()) {
    case ExprKind::Sort:
    case ExprKind::Var:
      return;
    case ExprKind::Const: {
      const Definition* d = env.find(e.name());
      if (d && d->body && d->params.size() == e.args().size()) out.push_back({path, true});
      for (std::uint32_t i = 0; i < e.args().size(); ++i) {
        path.push_back(i);
        collectSites(env, e.args()[i], path, out);
        path.pop_back();
      }
      return;
    }
    case ExprKind::App:
      if (e.fun().kind() == ExprKind::Lam) out.push_back({path, false});
      path.push_back(0);
      collectSites(env, e.fun(), path, out);
      path.back() = 1;
      collectSites(env, e.arg(), path, out);
      path.pop_back();
      return;
    case ExprKind::Lam:
    case ExprKind::Pi:
      path.push_back(0);
      collectSites(env, e.binderType(), path, out);
      path.back() = 1;
      collectSites(env, e.body(), path, out);
      path.pop_back();
      return;
  }
}

Expr contract(const Environment& env, const Expr& e, const RedexSite& site, std::size_t at) {
  if (at == site.path.size()) {
    if (site.delta) {
      if (e.kind() != ExprKind::Const) throw std::invalid_argument("no delta redex at path");
      std::vector<Expr> args(e.args().begin(), e.args().end());
      return instantiate(env, e.name(), args);
    }
    if (e.kind() != ExprKind::App || e.fun().kind() != ExprKind::Lam)
      throw std::invalid_argument("no beta redex at path");
    return instantiate(e.fun().body(), e.arg());
  }
  std::uint32_t i = site.path[at];
  switch (e.kind()) {
    case ExprKind::Const: {
      std::vector<Expr> args(e.args().begin(), e.args().end());
      args.at(i) = contract(env, args.at(i), site, at + 1);
      return mkConst(e.name(), std::move(args));
    }
    case ExprKind::App:
      return i == 0 ? mkApp(contract(env, e.fun(), site, at + 1), e.arg())
                    : mkApp(e.fun(), contract(env, e.arg(), site, at + 1));
    case ExprKind::Lam:
      return i == 0 ? mkLam(e.binderName(), contract(env, e.binderType(), site, at + 1), e.body())
                    : mkLam(e.binderName(), e.binderType(), contract(env, e.body(), site, at + 1));
    case ExprKind::Pi:
      return i == 0 ? mkPi(e.binderName(), contract(env, e.binderType(), site, at + 1), e.body())
                    : mkPi(e.binderName(), e.binderType(), contract(env, e.body(), site, at + 1));
    default:
      throw std::invalid_argument("path leaves the term");
  }
}

}  // namespace

Expr whnf(const Environment& env, const Expr& e, const ReductionOptions& opts) {
  TypeChecker tc(env, opts);
  return tc.whnf(e);
}

Expr whnfCore(const Environment& env, const Expr& e, const ReductionOptions& opts) {
  TypeChecker tc(env, opts);
  return tc.whnfCore(e);
}

std::optional<Expr> unfoldHead(const Environment& env, const Expr& e,
                               const ReductionOptions& opts) {
  TypeChecker tc(env, opts);
  Expr w = tc.whnfCore(e);
  if (!tc.unfoldable(spineHead(w))) return std::nullopt;
  return tc.unfoldHead(w);
}

Expr normalize(const Environment& env, const Expr& e, const ReductionOptions& opts) {
  TypeChecker tc(env, opts);
  return tc.normalize(e);
}

bool convertible(const Environment& env, const Expr& a, const Expr& b,
                 const ReductionOptions& opts) {
  TypeChecker tc(env, opts);
  return tc.convertible(a, b);
}

Expr inferType(const Environment& env, const Context& ctx, const Expr& e,
               const ReductionOptions& opts) {
  TypeChecker tc(env, opts);
  Context scratch = ctx;
  return tc.infer(scratch, e);
}

CheckReport checkType(const Environment& env, const Context& ctx, const Expr& e,
                      const Expr& expected, const ReductionOptions& opts) {
  CheckReport report;
  TypeChecker tc(env, opts);
  Context scratch = ctx;
  try {
    report.inferred = tc.infer(scratch, e);
    if (tc.convertible(report.inferred, expected)) {
      report.ok = true;
      return report;
    }
    report.error = ErrorKind::TypeMismatch;
    report.failing = Judgment{ctx, e, expected};
    try {
      TypeChecker nf(env, opts);
      report.inferredNormal = nf.normalize(report.inferred);
      report.expectedNormal = nf.normalize(expected);
    } catch (const KernelError&) {
      report.inferredNormal = report.inferred;
      report.expectedNormal = expected;
    }
    report.message = "type mismatch: term has type '" + printExpr(report.inferredNormal, ctx) +
                     "' but is expected to have type '" +
                     printExpr(report.expectedNormal, ctx) + "' (normal forms)";
  } catch (const KernelError& err) {
    report.error = err.kind();
    report.message = err.what();
    report.failing = err.where();
  }
  return report;
}

Environment checkDefinition(const Environment& env, const Definition& d,
                            const ReductionOptions& opts) {
  if (env.contains(d.name))
    throw KernelError(ErrorKind::DuplicateName, "'" + d.name + "' is already defined");
  if (!d.primitive && !d.body)
    throw KernelError(ErrorKind::MissingBody, "descriptive definition '" + d.name +
                                                  "' has no body");

  TypeChecker tc(env, opts);
  Context ctx;
  for (const auto& p : d.params) {
    tc.sortOf(ctx, p.type, ErrorKind::NotAType);
    ctx.pushInPlace(p.name, p.type);
  }
  if (!d.type.isBox()) tc.sortOf(ctx, d.type, ErrorKind::NotAType);
  if (d.body) {
    CheckReport r = checkType(env, ctx, *d.body, d.type, opts);
    if (!r.ok) throw KernelError(*r.error, r.message, r.failing);
  }
  return env.extendUnchecked(d);
}

Expr instantiate(const Environment& env, const std::string& name, const std::vector<Expr>& args) {
  const Definition* d = env.find(name);
  if (!d) throw KernelError(ErrorKind::UnboundName, "unknown constant '" + name + "'");
  if (d->params.size() != args.size())
    throw KernelError(ErrorKind::ArityMismatch,
                      "'" + name + "' expects " + std::to_string(d->params.size()) +
                          " arguments, got " + std::to_string(args.size()));
  if (!d->body) throw KernelError(ErrorKind::PrimitiveUnfold, "'" + name + "' is primitive");
  return instantiateTelescope(*d->body, args);
}

std::vector<RedexSite> redexSites(const Environment& env, const Expr& e) {
  std::vector<RedexSite> out;
  std::vector<std::uint32_t> path;
  collectSites(env, e, path, out);
  return out;
}

Expr contractAt(const Environment& env, const Expr& e, const RedexSite& site) {
  return contract(env, e, site, 0);
}

}  // namespace lambdad
