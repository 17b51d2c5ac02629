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

#include <set>
#include <string>
#include <vector>

#include "tom/signature.hpp"
#include "tom/term.hpp"

namespace tom {

// Path from the root: the n-th son is written n, starting at 1.
using Occurrence = std::vector<int>;

std::string to_string(const Occurrence& occ);

// Finite Boehm tree of a beta-normal eta-long term. Each node is labelled with
// the binders at the top of the subterm and its head symbol.
struct BohmTree {
  std::vector<Symbol> binders;
  Symbol head;
  std::vector<BohmTree> children;

  BohmTree() = default;
  BohmTree(std::vector<Symbol> binders, Symbol head,
           std::vector<BohmTree> children = {})
      : binders(std::move(binders)),
        head(std::move(head)),
        children(std::move(children)) {}

  static BohmTree leaf(Symbol head) { return BohmTree({}, std::move(head)); }

  // Structural equality: same binder and head symbols everywhere.
  friend bool operator==(const BohmTree& a, const BohmTree& b);
};

// Throws NotNormal unless t is beta-normal and eta-long.
BohmTree to_bohm(const Term& t);
// Throws IllTyped if the head arities or argument types do not line up.
Term from_bohm(const BohmTree& bt);
// Type of a well-typed tree; throws IllTyped otherwise.
Type bohm_type(const BohmTree& bt);

// Length of the longest occurrence (a lone node has depth 0).
int depth(const BohmTree& bt);
// Depth of the Boehm tree of the long normal form of t.
int depth(const Term& t);

// Every occurrence of the tree, in preorder.
std::vector<Occurrence> domain(const BohmTree& bt);
// Prefix and left-sibling closure.
bool is_tree_domain(const std::set<Occurrence>& occs);

const BohmTree& subtree_at(const BohmTree& bt, const Occurrence& occ);
// bt[occ <- replacement]. Throws InvalidOccurrence or IllTyped.
BohmTree graft(const BohmTree& bt, const Occurrence& occ,
               const BohmTree& replacement);

// True iff the i-th top binder (1-based) of c occurs in its body. Throws
// IndexOutOfRange when c has fewer than i top binders.
bool relevant_in(const Term& c, int i);

// \x1:U1. ... \xn:Un. c where c is the least constant of the target atom.
// Throws Error when the signature has no such constant.
Term trivial_ground_term(const Type& type, const Signature& sig);

}  // namespace tom
