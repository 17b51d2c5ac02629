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

#include "tom/signature.hpp"

#include <algorithm>

#include "tom/error.hpp"

namespace tom {

Type Signature::add_atomic_type(const std::string& name) {
  if (auto existing = atomic_type(name)) return *existing;
  atomic_types_.push_back(Type::atom(name));
  return atomic_types_.back();
}

Symbol Signature::insert(Symbol s) {
  auto [it, inserted] = by_name_.emplace(s.name(), s);
  if (!inserted) {
    throw Error("symbol '" + s.name() + "' is already declared as a " +
                to_string(it->second.kind()));
  }
  switch (s.kind()) {
    case SymbolKind::kConstant:
      constants_.push_back(s);
      break;
    case SymbolKind::kInstantiable:
      instantiables_.push_back(s);
      break;
    case SymbolKind::kLocal:
      locals_.push_back(s);
      break;
  }
  return s;
}

Symbol Signature::add_constant(const std::string& name, Type type) {
  return insert(Symbol::make(name, SymbolKind::kConstant, std::move(type)));
}

Symbol Signature::add_instantiable(const std::string& name, Type type) {
  return insert(
      Symbol::make(name, SymbolKind::kInstantiable, std::move(type)));
}

Symbol Signature::add_local(const std::string& name, Type type) {
  return insert(Symbol::make(name, SymbolKind::kLocal, std::move(type)));
}

void Signature::add(const Symbol& s) { insert(s); }

void Signature::complete() {
  for (const Type& atom : atomic_types_) {
    if (!least_constant(atom)) add_constant("_default_" + atom.name(), atom);
  }
}

bool Signature::has_atomic_type(const std::string& name) const {
  return atomic_type(name).has_value();
}

std::optional<Type> Signature::atomic_type(const std::string& name) const {
  for (const Type& t : atomic_types_) {
    if (t.name() == name) return t;
  }
  return std::nullopt;
}

std::optional<Symbol> Signature::lookup(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<Symbol> Signature::constants() const {
  std::vector<Symbol> out = constants_;
  std::sort(out.begin(), out.end(), SymbolLess());
  return out;
}

std::optional<Symbol> Signature::least_constant(const Type& atom) const {
  std::optional<Symbol> best;
  for (const Symbol& c : constants_) {
    if (c.type() != atom) continue;
    if (!best || c.name() < best->name()) best = c;
  }
  return best;
}

std::vector<std::string> Signature::names() const {
  std::vector<std::string> out;
  for (const Type& t : atomic_types_) out.push_back(t.name());
  for (const auto& [name, sym] : by_name_) out.push_back(name);
  return out;
}

}  // namespace tom
