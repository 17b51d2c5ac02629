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

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tom/bohm.hpp"
#include "tom/matcher.hpp"

// Executable versions of the constructions behind the depth bound. They all
// take a known solution as input and are meant for checking, not for
// deciding.
namespace tom {

// (x c1 ... cn) = rhs with every ci and rhs free of instantiable variables.
struct InterpolationEquation {
  Symbol x;
  std::vector<Term> args;
  Term rhs;
};
using InterpolationProblem = std::vector<InterpolationEquation>;

// Maximum rhs depth.
int interpolation_h(const InterpolationProblem& phi);
bool solves(const InterpolationProblem& phi, const Substitution& sigma);
// Instantiable variables heading some equation, sorted by name.
std::vector<Symbol> interpolation_variables(const InterpolationProblem& phi);

struct KeyLemmaReport {
  bool y_occurs = false;
  int depth_u = 0;
  int depth_c = 0;
  int depth_result = 0;
  bool corollary_applies = false;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks on one instance, with r the normal form of u[y <- c]:
//   part 1: if y occurs in u then |c| <= |r|;
//   part 2: every occurrence of u with no y on its path is an occurrence of
//           r with the same label;
//   corollary: if c is relevant in all its arguments and |c| != 0 then
//           |u| <= |r|.
// Throws TypeMismatch, NotNormal or Error when the inputs do not meet the
// lemma's hypotheses.
KeyLemmaReport key_lemma_check(const Term& u, const Symbol& y, const Term& c);

struct KeyLemmaSweep {
  std::uint64_t triples = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> examples;
};

// key_lemma_check over every u of each type in u_types (y in scope) and
// every ground c of y's type, both of depth at most `depth`.
KeyLemmaSweep key_lemma_sweep(const Signature& sig, const Symbol& y,
                              const std::vector<Type>& u_types, int depth);

// Occurrences of the Boehm tree of t (an image for eq.x) reachable from the
// root: sons of a node headed by a top binder yi only where ci is relevant,
// every son otherwise. Throws TypeMismatch when t does not have one top
// binder per argument.
std::set<Occurrence> accessible_occurrences(const Term& t,
                                            const InterpolationEquation& eq);

// Replaces every subtree that is not accessible with respect to any
// equation of x by the trivial ground term of its type. Throws
// NotASolution if sigma does not solve phi.
Substitution accessible_solution(const Substitution& sigma,
                                 const InterpolationProblem& phi,
                                 const Signature& sig);

// Replaces each occurrence of a top binder yi that is the (h+2)-th or later
// yi on its path by the projection onto the son taken at the first yi of
// that path. Throws NotAccessible when some non-leaf occurrence is not
// accessible, and InvariantViolation when an equation where the occurrence
// is accessible does not use that projection for ci.
Substitution compact_accessible_solution(const Substitution& sigma_hat,
                                         const InterpolationProblem& phi);

// Largest number of nodes on one path of t whose head is not a top binder.
int max_foreign_on_path(const Term& t);
// Largest number of occurrences of a single top binder on one path of t.
int max_binder_repeats_on_path(const Term& t);

// The interpolation problem read off a validated problem and a ground
// solution. An argument di of a flexible head x is kept as sigma(di) when a
// fresh z put in its place survives in the normal form of the instance,
// and replaced by a fresh local zi otherwise. Throws NotASolution.
InterpolationProblem build_interpolation(const MatchingProblem& p,
                                         const Substitution& sigma);

// For (x d1 ... dn) under sigma: none of the fresh locals of the argument
// choice above occurs in the normal form of (sigma(x) c1 ... cn).
bool fresh_local_absence_check(const Symbol& x, const std::vector<Term>& args,
                               const Substitution& sigma);

}  // namespace tom
