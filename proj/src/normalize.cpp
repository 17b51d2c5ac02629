// Copyright 2026 The tom Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tom/normalize.hpp"

#include <utility>
#include <vector>

#include "tom/error.hpp"

namespace tom {

Symbol NameSupply::fresh(SymbolKind kind, Type type) {
  std::string name = "_";
  name += prefix_;
  name += std::to_string(next_++);
  return Symbol::make(std::move(name), kind, std::move(type));
}

namespace {

class Substituter {
 public:
  Substituter(const Symbol& x, const Term& u)
      : x_(x), u_(u), fv_u_(free_symbols(u)) {}

  Term run(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVar:
        return t.symbol() == x_ ? u_ : t;
      case Term::Kind::kApp: {
        Term f = run(t.fn());
        Term a = run(t.arg());
        if (f.same_node(t.fn()) && a.same_node(t.arg())) return t;
        return Term::app(std::move(f), std::move(a));
      }
      case Term::Kind::kLam: {
        const Symbol& y = t.symbol();
        if (y == x_) return t;
        if (fv_u_.count(y) != 0) {
          if (!occurs_free(x_, t.body())) return t;
          Symbol renamed = Symbol::make(y.name(), y.kind(), y.type());
          Term body = Substituter(y, Term::var(renamed)).run(t.body());
          return Term::lam(std::move(renamed), run(body));
        }
        Term body = run(t.body());
        if (body.same_node(t.body())) return t;
        return Term::lam(y, std::move(body));
      }
    }
    return t;
  }

 private:
  const Symbol& x_;
  const Term& u_;
  SymbolSet fv_u_;
};

Term beta_normal_order(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t;
    case Term::Kind::kLam: {
      Term body = beta_normal_order(t.body());
      if (body.same_node(t.body())) return t;
      return Term::lam(t.symbol(), std::move(body));
    }
    case Term::Kind::kApp: {
      std::vector<Term> args;
      Term head = app_head(t, &args);
      if (head.is_lam()) {
        Term reduct = Substituter(head.symbol(), args[0]).run(head.body());
        reduct = apply_all(std::move(reduct),
                       std::span<const Term>(args).subspan(1));
        return beta_normal_order(reduct);
      }
      bool changed = false;
      for (Term& a : args) {
        Term n = beta_normal_order(a);
        if (!n.same_node(a)) {
          changed = true;
          a = std::move(n);
        }
      }
      if (!changed) return t;
      return apply_all(std::move(head), args);
    }
  }
  return t;
}

Term beta_innermost(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t;
    case Term::Kind::kLam:
      return Term::lam(t.symbol(), beta_innermost(t.body()));
    case Term::Kind::kApp: {
      Term f = beta_innermost(t.fn());
      Term a = beta_innermost(t.arg());
      if (f.is_lam()) {
        return beta_innermost(Substituter(f.symbol(), a).run(f.body()));
      }
      return Term::app(std::move(f), std::move(a));
    }
  }
  return t;
}

Term expand(const Term& t, const Type& type, NameSupply& names) {
  if (t.is_lam()) {
    if (!type.is_arrow() || type.domain() != t.symbol().type()) {
      throw IllTyped("abstraction " + debug_string(t) +
                     " does not have type " + type.to_string());
    }
    return Term::lam(t.symbol(), expand(t.body(), type.codomain(), names));
  }
  std::vector<Term> args;
  Term head = app_head(t, &args);
  if (head.is_lam()) {
    throw NotNormal("term " + debug_string(t) + " has a beta redex");
  }
  const Type* head_type = &head.symbol().type();
  for (Term& a : args) {
    if (!head_type->is_arrow()) {
      throw IllTyped("head of " + debug_string(t) + " is over-applied");
    }
    a = expand(a, head_type->domain(), names);
    head_type = &head_type->codomain();
  }
  if (*head_type != type) {
    throw IllTyped("term " + debug_string(t) + " does not have type " +
                   type.to_string());
  }
  std::vector<Symbol> extra;
  const Type* rest = &type;
  while (rest->is_arrow()) {
    Symbol w = names.fresh_local(rest->domain());
    args.push_back(expand(Term::var(w), rest->domain(), names));
    extra.push_back(std::move(w));
    rest = &rest->codomain();
  }
  return abstract(extra, apply_all(std::move(head), args));
}

bool long_normal_rec(const Term& t) {
  const Term* cur = &t;
  while (cur->is_lam()) cur = &cur->body();
  std::vector<Term> args;
  Term head = app_head(*cur, &args);
  if (!head.is_var()) return false;
  if (static_cast<int>(args.size()) != head.symbol().type().arity()) {
    return false;
  }
  for (const Term& a : args) {
    if (!long_normal_rec(a)) return false;
  }
  return true;
}

Term freshen_rec(const Term& t, std::vector<std::pair<Symbol, Symbol>>& env) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == t.symbol()) return Term::var(it->second);
      }
      return t;
    case Term::Kind::kApp:
      return Term::app(freshen_rec(t.fn(), env), freshen_rec(t.arg(), env));
    case Term::Kind::kLam: {
      const Symbol& y = t.symbol();
      Symbol renamed = Symbol::make(y.name(), y.kind(), y.type());
      env.emplace_back(y, renamed);
      Term body = freshen_rec(t.body(), env);
      env.pop_back();
      return Term::lam(std::move(renamed), std::move(body));
    }
  }
  return t;
}

}  // namespace

Term substitute(const Term& t, const Symbol& x, const Term& u) {
  if (infer_type(u) != x.type()) {
    throw TypeMismatch("cannot substitute " + debug_string(u) + " for " +
                       x.name() + ": type " + infer_type(u).to_string() +
                       " differs from " + x.type().to_string());
  }
  return Substituter(x, u).run(t);
}

Term beta_normal(const Term& t, Strategy strategy) {
  return strategy == Strategy::kNormalOrder ? beta_normal_order(t)
                                            : beta_innermost(t);
}

Term eta_contract(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t;
    case Term::Kind::kApp: {
      Term f = eta_contract(t.fn());
      Term a = eta_contract(t.arg());
      if (f.same_node(t.fn()) && a.same_node(t.arg())) return t;
      return Term::app(std::move(f), std::move(a));
    }
    case Term::Kind::kLam: {
      Term body = eta_contract(t.body());
      if (body.is_app() && body.arg().is_var() &&
          body.arg().symbol() == t.symbol() &&
          !occurs_free(t.symbol(), body.fn())) {
        return body.fn();
      }
      if (body.same_node(t.body())) return t;
      return Term::lam(t.symbol(), std::move(body));
    }
  }
  return t;
}

Term normalize(const Term& t, Strategy strategy) {
  return eta_contract(beta_normal(t, strategy));
}

Term eta_long(const Term& t) {
  NameSupply names;
  return expand(t, infer_type(t), names);
}

Term long_normal(const Term& t) { return eta_long(beta_normal(t)); }

bool is_long_normal(const Term& t) { return long_normal_rec(t); }

Term freshen(const Term& t) {
  std::vector<std::pair<Symbol, Symbol>> env;
  return freshen_rec(t, env);
}

}  // namespace tom
