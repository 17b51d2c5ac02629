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

#include "tom/term.hpp"

#include <algorithm>
#include <functional>

#include "tom/error.hpp"

namespace tom {

const char* to_string(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::kConstant:
      return "constant";
    case SymbolKind::kInstantiable:
      return "instantiable";
    case SymbolKind::kLocal:
      return "local";
  }
  return "?";
}

Symbol Symbol::make(std::string name, SymbolKind kind, Type type) {
  Symbol s;
  s.data_ = std::make_shared<const Data>(
      Data{std::move(name), kind, std::move(type)});
  return s;
}

bool SymbolLess::operator()(const Symbol& a, const Symbol& b) const {
  if (a.name() != b.name()) return a.name() < b.name();
  return std::less<const void*>()(a.id(), b.id());
}

Term Term::var(Symbol s) {
  Term t;
  t.node_ = std::make_shared<const Node>(
      Node{Kind::kVar, std::move(s), Term(), Term()});
  return t;
}

Term Term::app(Term fn, Term arg) {
  Term t;
  t.node_ = std::make_shared<const Node>(
      Node{Kind::kApp, Symbol(), std::move(fn), std::move(arg)});
  return t;
}

Term Term::lam(Symbol binder, Term body) {
  Term t;
  t.node_ = std::make_shared<const Node>(
      Node{Kind::kLam, std::move(binder), std::move(body), Term()});
  return t;
}

Term apply_all(Term head, std::span<const Term> args) {
  for (const Term& a : args) head = Term::app(std::move(head), a);
  return head;
}

Term abstract(std::span<const Symbol> binders, Term body) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
    body = Term::lam(*it, std::move(body));
  }
  return body;
}

Term app_head(const Term& t, std::vector<Term>* args) {
  const Term* cur = &t;
  std::vector<const Term*> rev;
  while (cur->is_app()) {
    rev.push_back(&cur->arg());
    cur = &cur->fn();
  }
  if (args) {
    args->clear();
    args->reserve(rev.size());
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) args->push_back(**it);
  }
  return *cur;
}

Spine spine(const Term& t) {
  Spine s;
  const Term* cur = &t;
  while (cur->is_lam()) {
    s.binders.push_back(cur->symbol());
    cur = &cur->body();
  }
  s.head = app_head(*cur, &s.args);
  return s;
}

namespace {

bool occurs_free_rec(const Symbol& s, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t.symbol() == s;
    case Term::Kind::kApp:
      return occurs_free_rec(s, t.fn()) || occurs_free_rec(s, t.arg());
    case Term::Kind::kLam:
      return t.symbol() != s && occurs_free_rec(s, t.body());
  }
  return false;
}

void collect_free(const Term& t, std::vector<Symbol>& bound, SymbolSet& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (std::find(bound.begin(), bound.end(), t.symbol()) == bound.end()) {
        out.insert(t.symbol());
      }
      return;
    case Term::Kind::kApp:
      collect_free(t.fn(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
    case Term::Kind::kLam:
      bound.push_back(t.symbol());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

bool occurs_free(const Symbol& s, const Term& t) {
  return occurs_free_rec(s, t);
}

SymbolSet free_symbols(const Term& t) {
  SymbolSet out;
  std::vector<Symbol> bound;
  collect_free(t, bound, out);
  return out;
}

std::vector<Symbol> instantiables_of(const Term& t) {
  std::vector<Symbol> out;
  for (const Symbol& s : free_symbols(t)) {
    if (s.is_instantiable()) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), SymbolLess());
  return out;
}

std::vector<Symbol> free_locals(const Term& t) {
  std::vector<Symbol> out;
  for (const Symbol& s : free_symbols(t)) {
    if (s.is_local()) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), SymbolLess());
  return out;
}

bool is_ground(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return !t.symbol().is_instantiable();
    case Term::Kind::kApp:
      return is_ground(t.fn()) && is_ground(t.arg());
    case Term::Kind::kLam:
      return is_ground(t.body());
  }
  return true;
}

Type infer_type(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      return t.symbol().type();
    case Term::Kind::kLam:
      return Type::arrow(t.symbol().type(), infer_type(t.body()));
    case Term::Kind::kApp: {
      Type f = infer_type(t.fn());
      if (!f.is_arrow()) {
        throw IllTyped("ill-typed application " + debug_string(t) +
                       ": function side has atomic type " + f.to_string());
      }
      Type a = infer_type(t.arg());
      if (f.domain() != a) {
        throw IllTyped("ill-typed application " + debug_string(t) +
                       ": expected argument of type " +
                       f.domain().to_string() + ", got " + a.to_string());
      }
      return f.codomain();
    }
  }
  throw IllTyped("unreachable");
}

namespace {

// Compares with two binder stacks: a bound occurrence matches iff both
// sides resolve to the same depth.
bool alpha_rec(const Term& a, const Term& b, std::vector<Symbol>& env_a,
               std::vector<Symbol>& env_b) {
  if (a.same_node(b) && env_a.empty() && env_b.empty()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kVar: {
      int ia = -1;
      int ib = -1;
      for (int i = static_cast<int>(env_a.size()) - 1; i >= 0; --i) {
        if (env_a[i] == a.symbol()) {
          ia = i;
          break;
        }
      }
      for (int i = static_cast<int>(env_b.size()) - 1; i >= 0; --i) {
        if (env_b[i] == b.symbol()) {
          ib = i;
          break;
        }
      }
      if (ia != ib) return false;
      if (ia >= 0) return true;
      return a.symbol() == b.symbol();
    }
    case Term::Kind::kApp:
      return alpha_rec(a.fn(), b.fn(), env_a, env_b) &&
             alpha_rec(a.arg(), b.arg(), env_a, env_b);
    case Term::Kind::kLam: {
      if (a.symbol().type() != b.symbol().type()) return false;
      env_a.push_back(a.symbol());
      env_b.push_back(b.symbol());
      bool eq = alpha_rec(a.body(), b.body(), env_a, env_b);
      env_a.pop_back();
      env_b.pop_back();
      return eq;
    }
  }
  return false;
}

void key_rec(const Term& t, std::vector<Symbol>& env, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::kVar: {
      for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i) {
        if (env[i] == t.symbol()) {
          out += '#';
          out += std::to_string(env.size() - 1 - i);
          return;
        }
      }
      out += t.symbol().is_constant()       ? 'c'
             : t.symbol().is_instantiable() ? 'i'
                                            : 'l';
      out += ':';
      out += t.symbol().name();
      return;
    }
    case Term::Kind::kApp:
      out += '(';
      key_rec(t.fn(), env, out);
      out += ' ';
      key_rec(t.arg(), env, out);
      out += ')';
      return;
    case Term::Kind::kLam:
      out += "\\";
      out += t.symbol().type().to_string();
      out += '.';
      env.push_back(t.symbol());
      key_rec(t.body(), env, out);
      env.pop_back();
      return;
  }
}

void debug_rec(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      out += t.symbol().name();
      return;
    case Term::Kind::kApp: {
      std::vector<Term> args;
      Term head = app_head(t, &args);
      out += '(';
      debug_rec(head, out);
      for (const Term& a : args) {
        out += ' ';
        debug_rec(a, out);
      }
      out += ')';
      return;
    }
    case Term::Kind::kLam:
      out += "\\";
      out += t.symbol().name();
      out += ':';
      out += t.symbol().type().to_string();
      out += ". ";
      debug_rec(t.body(), out);
      return;
  }
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  std::vector<Symbol> env_a;
  std::vector<Symbol> env_b;
  return alpha_rec(a, b, env_a, env_b);
}

std::string nameless_key(const Term& t) {
  std::string out;
  std::vector<Symbol> env;
  key_rec(t, env, out);
  return out;
}

std::string debug_string(const Term& t) {
  std::string out;
  debug_rec(t, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << debug_string(t);
}

}  // namespace tom
