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

#include "tom/bohm.hpp"

#include <algorithm>

#include "tom/error.hpp"
#include "tom/normalize.hpp"

namespace tom {

std::string to_string(const Occurrence& occ) {
  std::string out = "<";
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(occ[i]);
  }
  return out + ">";
}

bool operator==(const BohmTree& a, const BohmTree& b) {
  return a.binders == b.binders && a.head == b.head &&
         a.children == b.children;
}

BohmTree to_bohm(const Term& t) {
  Spine s = spine(t);
  if (!s.head.is_var()) {
    throw NotNormal("term " + debug_string(t) + " is not beta-normal");
  }
  if (static_cast<int>(s.args.size()) != s.head.symbol().type().arity()) {
    throw NotNormal("term " + debug_string(t) + " is not eta-long");
  }
  BohmTree bt(std::move(s.binders), s.head.symbol());
  bt.children.reserve(s.args.size());
  for (const Term& a : s.args) bt.children.push_back(to_bohm(a));
  return bt;
}

Type bohm_type(const BohmTree& bt) {
  const Type& head_type = bt.head.type();
  if (head_type.arity() != static_cast<int>(bt.children.size())) {
    throw IllTyped("head " + bt.head.name() + " of type " +
                   head_type.to_string() + " has " +
                   std::to_string(bt.children.size()) + " sons");
  }
  const Type* cur = &head_type;
  for (const BohmTree& child : bt.children) {
    if (bohm_type(child) != cur->domain()) {
      throw IllTyped("son of " + bt.head.name() + " has the wrong type");
    }
    cur = &cur->codomain();
  }
  std::vector<Type> binder_types;
  for (const Symbol& b : bt.binders) binder_types.push_back(b.type());
  return Type::curried(binder_types, *cur);
}

namespace {

Term from_bohm_unchecked(const BohmTree& bt) {
  std::vector<Term> args;
  args.reserve(bt.children.size());
  for (const BohmTree& c : bt.children) args.push_back(from_bohm_unchecked(c));
  return abstract(bt.binders, apply_all(Term::var(bt.head), args));
}

void domain_rec(const BohmTree& bt, Occurrence& cur,
                std::vector<Occurrence>& out) {
  out.push_back(cur);
  for (std::size_t i = 0; i < bt.children.size(); ++i) {
    cur.push_back(static_cast<int>(i) + 1);
    domain_rec(bt.children[i], cur, out);
    cur.pop_back();
  }
}

}  // namespace

Term from_bohm(const BohmTree& bt) {
  bohm_type(bt);
  return from_bohm_unchecked(bt);
}

int depth(const BohmTree& bt) {
  int d = 0;
  for (const BohmTree& c : bt.children) d = std::max(d, 1 + depth(c));
  return d;
}

int depth(const Term& t) { return depth(to_bohm(long_normal(t))); }

std::vector<Occurrence> domain(const BohmTree& bt) {
  std::vector<Occurrence> out;
  Occurrence cur;
  domain_rec(bt, cur, out);
  return out;
}

bool is_tree_domain(const std::set<Occurrence>& occs) {
  if (occs.empty()) return false;
  for (const Occurrence& o : occs) {
    if (o.empty()) continue;
    Occurrence parent(o.begin(), o.end() - 1);
    if (!occs.count(parent)) return false;
    if (o.back() != 1) {
      Occurrence left = o;
      --left.back();
      if (!occs.count(left)) return false;
    }
  }
  return true;
}

const BohmTree& subtree_at(const BohmTree& bt, const Occurrence& occ) {
  const BohmTree* cur = &bt;
  for (int n : occ) {
    if (n < 1 || n > static_cast<int>(cur->children.size())) {
      throw InvalidOccurrence("occurrence " + to_string(occ) +
                              " is not in the tree domain");
    }
    cur = &cur->children[n - 1];
  }
  return *cur;
}

BohmTree graft(const BohmTree& bt, const Occurrence& occ,
               const BohmTree& replacement) {
  const BohmTree& old = subtree_at(bt, occ);
  if (bohm_type(old) != bohm_type(replacement)) {
    throw IllTyped("graft at " + to_string(occ) + ": replacement has type " +
                   bohm_type(replacement).to_string() + ", expected " +
                   bohm_type(old).to_string());
  }
  BohmTree out = bt;
  BohmTree* cur = &out;
  for (int n : occ) cur = &cur->children[n - 1];
  *cur = replacement;
  return out;
}

bool relevant_in(const Term& c, int i) {
  Spine s = spine(c);
  if (i < 1 || i > static_cast<int>(s.binders.size())) {
    throw IndexOutOfRange("term " + debug_string(c) + " has " +
                          std::to_string(s.binders.size()) +
                          " top binders, asked for #" + std::to_string(i));
  }
  const Symbol& z = s.binders[i - 1];
  // A later binder with the same symbol would shadow z.
  for (std::size_t k = i; k < s.binders.size(); ++k) {
    if (s.binders[k] == z) return false;
  }
  Term body = apply_all(s.head, s.args);
  return occurs_free(z, body);
}

Term trivial_ground_term(const Type& type, const Signature& sig) {
  auto c = sig.least_constant(type.target());
  if (!c) {
    throw Error("no constant of atomic type " + type.target().name());
  }
  NameSupply names;
  std::vector<Symbol> binders;
  for (const Type& a : type.args()) binders.push_back(names.fresh_local(a));
  return abstract(binders, Term::var(*c));
}

}  // namespace tom
