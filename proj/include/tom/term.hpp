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

#include <functional>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "tom/type.hpp"

namespace tom {

enum class SymbolKind { kConstant, kInstantiable, kLocal };

const char* to_string(SymbolKind kind);

// A typed symbol. Identity is the declaration: two symbols compare equal
// only if they come from the same call to Symbol::make. Names are for
// display and lookup; they are not used to decide equality.
class Symbol {
 public:
  Symbol() = default;
  static Symbol make(std::string name, SymbolKind kind, Type type);

  const std::string& name() const { return data_->name; }
  SymbolKind kind() const { return data_->kind; }
  const Type& type() const { return data_->type; }

  bool is_constant() const { return kind() == SymbolKind::kConstant; }
  bool is_instantiable() const { return kind() == SymbolKind::kInstantiable; }
  bool is_local() const { return kind() == SymbolKind::kLocal; }

  explicit operator bool() const { return data_ != nullptr; }
  const void* id() const { return data_.get(); }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.data_ == b.data_;
  }
  friend bool operator!=(const Symbol& a, const Symbol& b) {
    return a.data_ != b.data_;
  }

 private:
  struct Data {
    std::string name;
    SymbolKind kind;
    Type type;
  };
  std::shared_ptr<const Data> data_;
};

// Orders by name, then by identity. Deterministic whenever the names of the
// symbols being compared are distinct.
struct SymbolLess {
  bool operator()(const Symbol& a, const Symbol& b) const;
};

struct SymbolHash {
  std::size_t operator()(const Symbol& s) const {
    return std::hash<const void*>()(s.id());
  }
};

using SymbolSet = std::unordered_set<Symbol, SymbolHash>;

// Simply typed lambda term. Immutable, shared structure.
class Term {
 public:
  enum class Kind { kVar, kApp, kLam };

  Term() = default;
  static Term var(Symbol s);
  static Term app(Term fn, Term arg);
  static Term lam(Symbol binder, Term body);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::kVar; }
  bool is_app() const { return kind() == Kind::kApp; }
  bool is_lam() const { return kind() == Kind::kLam; }

  // Variable symbol for kVar, binder for kLam.
  const Symbol& symbol() const;
  const Term& fn() const;
  const Term& arg() const;
  const Term& body() const;

  explicit operator bool() const { return node_ != nullptr; }
  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  Symbol symbol;
  Term left;
  Term right;
};

inline Term::Kind Term::kind() const { return node_->kind; }
inline const Symbol& Term::symbol() const { return node_->symbol; }
inline const Term& Term::fn() const { return node_->left; }
inline const Term& Term::arg() const { return node_->right; }
inline const Term& Term::body() const { return node_->left; }

// (head a1 ... an)
Term apply_all(Term head, std::span<const Term> args);
// \x1. ... \xn. body
Term abstract(std::span<const Symbol> binders, Term body);

// A term viewed as \binders. (head args...).
struct Spine {
  std::vector<Symbol> binders;
  Term head;
  std::vector<Term> args;
};
Spine spine(const Term& t);
// Head and arguments of an application chain (no binder stripping).
Term app_head(const Term& t, std::vector<Term>* args = nullptr);

bool occurs_free(const Symbol& s, const Term& t);
SymbolSet free_symbols(const Term& t);
// Instantiable variables occurring in t, sorted with SymbolLess.
std::vector<Symbol> instantiables_of(const Term& t);
// Locals occurring free in t.
std::vector<Symbol> free_locals(const Term& t);

// True iff no instantiable variable occurs in t.
bool is_ground(const Term& t);

// Unique type of t, or IllTyped.
Type infer_type(const Term& t);

// Equality up to renaming of bound variables.
bool alpha_equal(const Term& a, const Term& b);

// A string that two terms share iff they are alpha-equal, provided their
// free symbols have distinct names. Bound variables are written as binder
// indices.
std::string nameless_key(const Term& t);

// Debug rendering with raw symbol names. For output meant to be re-read use
// print_term from syntax.hpp.
std::string debug_string(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace tom
