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
#include <span>

#include "tom/term.hpp"

namespace tom {

// Finite map from instantiable variables to terms of the same type in which
// no local variable occurs free.
class Substitution {
 public:
  using Map = std::map<Symbol, Term, SymbolLess>;

  Substitution() = default;

  // Throws InvalidSubstitution if x is not instantiable, already bound, or
  // t has a free local; TypeMismatch if the types differ.
  void bind(const Symbol& x, Term t);
  // bind without the "already bound" check.
  void set(const Symbol& x, Term t);
  // set without any check. The caller guarantees the invariants.
  void set_trusted(const Symbol& x, Term t) {
    map_.insert_or_assign(x, std::move(t));
  }

  const Term* find(const Symbol& x) const;
  bool binds(const Symbol& x) const { return find(x) != nullptr; }
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

  Map::const_iterator begin() const { return map_.begin(); }
  Map::const_iterator end() const { return map_.end(); }

  // Bindings of the given variables only.
  Substitution restricted(std::span<const Symbol> vars) const;

 private:
  Map map_;
};

// Replaces every occurrence of every bound variable at once. The result is
// not normalized.
Term apply_subst(const Substitution& sigma, const Term& t);

// tau o sigma = {x <- tau t | x <- t in sigma} plus the bindings of tau for
// variables sigma leaves unbound. Images are brought to long normal form.
Substitution compose(const Substitution& tau, const Substitution& sigma);

// Binding-wise alpha equality.
bool alpha_equal(const Substitution& a, const Substitution& b);

}  // namespace tom
