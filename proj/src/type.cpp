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

#include "tom/type.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace tom {

struct Type::Node {
  std::string name;  // empty for arrows
  std::optional<Type> domain;
  std::optional<Type> codomain;
  // Cached on construction.
  int arity = 0;
  int order = 1;
  const Node* target = nullptr;
};

Type Type::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->name = std::move(name);
  node->target = node.get();
  return Type(std::move(node));
}

Type Type::arrow(Type domain, Type codomain) {
  auto node = std::make_shared<Node>();
  node->arity = 1 + codomain.node_->arity;
  node->order = std::max(1 + domain.node_->order, codomain.node_->order);
  node->target = codomain.node_->target;
  node->domain = std::move(domain);
  node->codomain = std::move(codomain);
  return Type(std::move(node));
}

Type Type::curried(std::span<const Type> args, Type result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    result = arrow(*it, std::move(result));
  }
  return result;
}

bool Type::is_atom() const { return !node_->domain.has_value(); }

const std::string& Type::name() const { return node_->name; }

const Type& Type::domain() const {
  assert(is_arrow());
  return *node_->domain;
}

const Type& Type::codomain() const {
  assert(is_arrow());
  return *node_->codomain;
}

int Type::arity() const { return node_->arity; }

std::vector<Type> Type::args() const {
  std::vector<Type> out;
  out.reserve(arity());
  const Type* t = this;
  while (t->is_arrow()) {
    out.push_back(t->domain());
    t = &t->codomain();
  }
  return out;
}

const Type& Type::target() const {
  const Type* t = this;
  while (t->is_arrow()) t = &t->codomain();
  return *t;
}

int Type::order() const { return node_->order; }

std::string Type::to_string() const {
  if (is_atom()) return name();
  std::string lhs = domain().to_string();
  if (domain().is_arrow()) lhs = "(" + lhs + ")";
  return lhs + "->" + codomain().to_string();
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->arity != b.node_->arity || a.node_->order != b.node_->order) {
    return false;
  }
  if (a.is_atom()) return a.name() == b.name();
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

bool operator<(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return false;
  if (a.is_atom() != b.is_atom()) return a.is_atom();
  if (a.is_atom()) return a.name() < b.name();
  if (a.domain() != b.domain()) return a.domain() < b.domain();
  return a.codomain() < b.codomain();
}

std::ostream& operator<<(std::ostream& os, const Type& t) {
  return os << t.to_string();
}

}  // namespace tom
