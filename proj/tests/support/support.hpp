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

// Shared helpers for the test binaries: the worked examples, a random
// problem generator with planted solutions, and a naive term oracle.

#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tom/enumerator.hpp"
#include "tom/matcher.hpp"
#include "tom/proofkit.hpp"
#include "tom/syntax.hpp"

namespace tom::testing {

// parse_problem followed by validate.
MatchingProblem problem(const std::string& text);
// Declarations only; the signature is completed.
Signature signature(const std::string& decls);
Term term(const Signature& sig, const std::string& text);
// long_normal(parse_term(...))
Term normal(const Signature& sig, const std::string& text);
Symbol symbol(const Signature& sig, const std::string& name);
Substitution binding(const Signature& sig, const std::string& var,
                     const std::string& text);

// The three worked examples and the unsolvable instance.
std::string example1_text();
std::string example2_text();
std::string example3_text();
// Example 3 with constants a, b, c, d (for the non-compact solution).
std::string example3_wide_text();
std::string unsolvable_text();

// Problem file text that parse_problem reads back to p.
std::string problem_text(const MatchingProblem& p);

struct CorpusProblem {
  MatchingProblem problem;  // validated
  Substitution planted;     // ground, solves problem
};

struct CorpusOptions {
  int count = 200;
  std::uint32_t seed = 20261014;
  int max_planted_depth = 3;
  int max_h = 2;
  // Resample when the brute-force candidate product exceeds this.
  std::uint64_t max_candidates = 6000;
};

std::vector<CorpusProblem> generate_corpus(const CorpusOptions& options = {});

// Copies of p with one occurrence of a nullary rhs constant swapped for
// another constant of the same type, one per occurrence.
std::vector<MatchingProblem> constant_swaps(const MatchingProblem& p);

// Every long normal term of the context, built by plain recursion over
// "depth at most d" with no ordering or exact-depth bookkeeping.
std::vector<Term> naive_terms(const EnumContext& ctx);
std::set<std::string> keys(const std::vector<Term>& terms);

// Random order <= 3 enumeration contexts with budget <= 2.
std::vector<EnumContext> random_contexts(int count, std::uint32_t seed);

// Bound replay: Phi from the ground-extended planted solution, then the
// accessible and compact solutions. Variables that are absent from Phi get
// their trivial ground term.
struct Replay {
  InterpolationProblem phi;
  Substitution ground;
  Substitution hat;
  Substitution compact;
};
Replay replay(const CorpusProblem& cp);

}  // namespace tom::testing
