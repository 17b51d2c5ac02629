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

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tom/normalize.hpp"
#include "tom/signature.hpp"
#include "tom/substitution.hpp"
#include "tom/term.hpp"

namespace tom {

struct Equation {
  Term lhs;
  Term rhs;
};

struct MatchingProblem {
  Signature signature;
  std::vector<Equation> equations;
};

// Type checks every equation, requires ground right-hand sides and
// instantiable variables of order at most 3, and brings both sides to long
// normal form. Throws IllTyped, TypeMismatch, RhsNotGround or NotThirdOrder.
MatchingProblem validate(const MatchingProblem& p);

// Instantiable variables occurring in the left-hand sides, sorted by name.
std::vector<Symbol> problem_variables(const MatchingProblem& p);

// (n + 1)(h + 1) - 1
int depth_bound(int n, int h);
// Largest right-hand side depth; 0 without equations.
int problem_h(const MatchingProblem& p);

using BoundMap = std::map<Symbol, int, SymbolLess>;
// depth_bound(arity(x), problem_h(p)) for every problem variable, or the
// override for all of them.
BoundMap depth_bounds(const MatchingProblem& p,
                      std::optional<int> override_bound = std::nullopt);

// True iff every lhs instance normalizes to its rhs up to alpha. Images may
// still contain instantiable variables.
bool verify_solution(const MatchingProblem& p, const Substitution& sigma);

// Clash, or the flex equations (x e1 ... en) = b that remain after
// stripping shared binders and splitting rigid pairs with equal heads.
struct Decomposition {
  bool clash = false;
  std::vector<Equation> flex;
};
Decomposition decompose(const std::vector<Equation>& equations);
inline Decomposition decompose(const MatchingProblem& p) {
  return decompose(p.equations);
}

// Huet's elementary bindings for x against a rigid head: projections onto
// each binder of x whose type ends in the right atom, in binder order, then
// the imitation when rhs_head is a constant. Fresh variables are allocated
// from `fresh` and every binding is in long normal form.
std::vector<Substitution> flex_rigid_bindings(const Symbol& x,
                                              const Symbol& rhs_head,
                                              NameSupply& fresh);

enum class Verdict { kSolved, kUnsolvable };

struct SearchStats {
  std::uint64_t candidates_tested = 0;
  std::uint64_t nodes_expanded = 0;
  int max_depth_used = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  Verdict verdict = Verdict::kUnsolvable;
  Substitution solution;
  SearchStats stats;
  bool solved() const { return verdict == Verdict::kSolved; }
};

struct SolveOptions {
  // Replaces the proved bound for every variable. Below it the search is
  // no longer complete.
  std::optional<int> max_depth;
  int threads = 1;
};

// Tries every ground substitution within the bounds in canonical order and
// returns the first one that verifies.
SolveResult solve_brute(const MatchingProblem& p,
                        const SolveOptions& options = {});

// Depth-first Huet search that cuts every branch where some variable's
// partial image is already deeper than its bound.
SolveResult solve_huet_pruned(const MatchingProblem& p,
                              const SolveOptions& options = {});

// Maps every instantiable variable left in the images of sigma to its
// trivial ground term, and adds those bindings.
Substitution ground_extend(const Substitution& sigma,
                           const MatchingProblem& p);

struct CompleteSetOptions {
  // Stop after expanding this many search nodes; 0 means no limit.
  std::uint64_t node_limit = 0;
};

// Breadth-first walk of Huet's tree that drops every node whose residual
// problem has no solution. Each success leaf yields the substitution built
// along its branch, restricted to the problem variables.
class CompleteSetStream {
 public:
  CompleteSetStream(const MatchingProblem& p, CompleteSetOptions options);
  ~CompleteSetStream();
  CompleteSetStream(CompleteSetStream&&) noexcept;
  CompleteSetStream& operator=(CompleteSetStream&&) noexcept;

  std::optional<Substitution> next();
  // True once the whole (pruned) tree has been explored.
  bool finished() const;
  // True when next() stopped because of the node limit.
  bool limit_reached() const;
  const SearchStats& stats() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

CompleteSetStream enumerate_complete_set(const MatchingProblem& p,
                                         CompleteSetOptions options = {});

}  // namespace tom
