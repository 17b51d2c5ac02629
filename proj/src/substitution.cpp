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

#include "tom/substitution.hpp"

#include "tom/error.hpp"
#include "tom/normalize.hpp"

namespace tom {

void Substitution::set(const Symbol& x, Term t) {
  if (!x.is_instantiable()) {
    throw InvalidSubstitution("cannot bind " + std::string(to_string(x.kind())) +
                              " '" + x.name() + "'");
  }
  Type ty = infer_type(t);
  if (ty != x.type()) {
    throw TypeMismatch("binding for " + x.name() + " has type " +
                       ty.to_string() + ", expected " + x.type().to_string());
  }
  auto locals = free_locals(t);
  if (!locals.empty()) {
    throw InvalidSubstitution("local variable '" + locals.front().name() +
                              "' occurs free in the binding for " + x.name());
  }
  map_.insert_or_assign(x, std::move(t));
}

void Substitution::bind(const Symbol& x, Term t) {
  if (binds(x)) {
    throw InvalidSubstitution("variable " + x.name() + " is already bound");
  }
  set(x, std::move(t));
}

const Term* Substitution::find(const Symbol& x) const {
  auto it = map_.find(x);
  if (it == map_.end()) return nullptr;
  return &it->second;
}

Substitution Substitution::restricted(std::span<const Symbol> vars) const {
  Substitution out;
  for (const Symbol& v : vars) {
    if (const Term* t = find(v)) out.map_.emplace(v, *t);
  }
  return out;
}

namespace {

// Images carry no free locals and lambdas only bind locals, so no capture
// can happen here.
Term graft_all(const Substitution& sigma, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVar:
      if (t.symbol().is_instantiable()) {
        if (const Term* u = sigma.find(t.symbol())) return *u;
      }
      return t;
    case Term::Kind::kApp: {
      Term f = graft_all(sigma, t.fn());
      Term a = graft_all(sigma, t.arg());
      if (f.same_node(t.fn()) && a.same_node(t.arg())) return t;
      return Term::app(std::move(f), std::move(a));
    }
    case Term::Kind::kLam: {
      Term body = graft_all(sigma, t.body());
      if (body.same_node(t.body())) return t;
      return Term::lam(t.symbol(), std::move(body));
    }
  }
  return t;
}

}  // namespace

Term apply_subst(const Substitution& sigma, const Term& t) {
  if (sigma.empty()) return t;
  return graft_all(sigma, t);
}

Substitution compose(const Substitution& tau, const Substitution& sigma) {
  Substitution out;
  for (const auto& [x, t] : sigma) {
    out.set(x, long_normal(apply_subst(tau, t)));
  }
  for (const auto& [x, t] : tau) {
    if (!sigma.binds(x)) out.set(x, t);
  }
  return out;
}

bool alpha_equal(const Substitution& a, const Substitution& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [x, t] : a) {
    const Term* u = b.find(x);
    if (!u || !alpha_equal(t, *u)) return false;
  }
  return true;
}

}  // namespace tom
