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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tom/term.hpp"

namespace tom {

// Declared atomic types, constants, instantiable variables and free local
// variables of a problem. Each name is bound to exactly one symbol.
class Signature {
 public:
  Type add_atomic_type(const std::string& name);
  Symbol add_constant(const std::string& name, Type type);
  Symbol add_instantiable(const std::string& name, Type type);
  Symbol add_local(const std::string& name, Type type);
  // Registers an already-built symbol under its own name.
  void add(const Symbol& s);

  // Adds a constant _default_<U> for every atomic type U that has none.
  // Idempotent.
  void complete();

  bool has_atomic_type(const std::string& name) const;
  std::optional<Type> atomic_type(const std::string& name) const;
  std::optional<Symbol> lookup(const std::string& name) const;

  const std::vector<Type>& atomic_types() const { return atomic_types_; }
  // Sorted by name.
  std::vector<Symbol> constants() const;
  const std::vector<Symbol>& instantiables() const { return instantiables_; }
  const std::vector<Symbol>& locals() const { return locals_; }

  // Least constant by name whose type is `atom`; empty when there is none.
  std::optional<Symbol> least_constant(const Type& atom) const;

  // Every name in use, for callers that need to stay clear of them.
  std::vector<std::string> names() const;

 private:
  Symbol insert(Symbol s);

  std::vector<Type> atomic_types_;
  std::vector<Symbol> constants_;
  std::vector<Symbol> instantiables_;
  std::vector<Symbol> locals_;
  std::map<std::string, Symbol> by_name_;
};

}  // namespace tom
