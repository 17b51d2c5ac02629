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

#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace tom {

// Simple type: either an atomic type or an arrow. Immutable and cheap to
// copy; equality is structural.
class Type {
 public:
  static Type atom(std::string name);
  static Type arrow(Type domain, Type codomain);
  // U1 -> ... -> Un -> result
  static Type curried(std::span<const Type> args, Type result);

  bool is_atom() const;
  bool is_arrow() const { return !is_atom(); }

  // Only meaningful on atoms.
  const std::string& name() const;
  // Only meaningful on arrows.
  const Type& domain() const;
  const Type& codomain() const;

  // For U1 -> ... -> Un -> U with U atomic: n, [U1..Un] and U.
  int arity() const;
  std::vector<Type> args() const;
  const Type& target() const;

  // order(atom) = 1, order(A -> B) = max(1 + order(A), order(B)).
  int order() const;

  std::string to_string() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
  // Total order used for canonical keys; atoms before arrows.
  friend bool operator<(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline int order(const Type& t) { return t.order(); }

std::ostream& operator<<(std::ostream& os, const Type& t);

}  // namespace tom
