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

#include <gtest/gtest.h>

#include "support.hpp"
#include "tom/bohm.hpp"
#include "tom/error.hpp"
#include "tom/matcher.hpp"

namespace tom {
namespace {

using testing::binding;
using testing::normal;
using testing::problem;
using testing::symbol;

const std::vector<testing::CorpusProblem>& corpus() {
  static const std::vector<testing::CorpusProblem> c = [] {
    testing::CorpusOptions o;
    o.count = 80;
    o.seed = 99;
    return testing::generate_corpus(o);
  }();
  return c;
}

Term image(const Substitution& s, const MatchingProblem& p,
           const std::string& name) {
  const Term* t = s.find(symbol(p.signature, name));
  if (!t) throw std::runtime_error("unbound " + name);
  return *t;
}

TEST(Validate, ExampleOneIsThirdOrder) {
  MatchingProblem p = problem(testing::example1_text());
  EXPECT_EQ(symbol(p.signature, "x").type().order(), 3);
  ASSERT_EQ(p.equations.size(), 1u);
  EXPECT_TRUE(is_long_normal(p.equations[0].lhs));
}

TEST(Validate, FourthOrderRejected) {
  EXPECT_THROW(problem("types: T\nconsts: c : T\nvars: x : ((T -> T) -> T) -> T\n"
                       "solve:\n (x \\h:T -> T. (h c)) = c\n"),
               NotThirdOrder);
}

TEST(Validate, NonGroundRhsRejected) {
  EXPECT_THROW(problem("types: T\nvars: x : T, y : T\nsolve:\n x = y\n"),
               RhsNotGround);
}

TEST(Validate, SideTypesMustAgree) {
  EXPECT_THROW(problem("types: T\nconsts: c : T, f : T -> T\nvars: x : T\n"
                       "solve:\n x = f\n"),
               TypeMismatch);
}

TEST(Validate, IllTypedEquationNamed) {
  try {
    problem("types: T\nconsts: c : T\nvars: x : T\nsolve:\n x = c\n (c c) = c\n");
    FAIL() << "expected IllTyped";
  } catch (const IllTyped& e) {
    EXPECT_NE(std::string(e.what()).find("equation 2"), std::string::npos);
  }
}

TEST(Bounds, DepthBoundFormula) {
  EXPECT_EQ(depth_bound(1, 0), 1);
  EXPECT_EQ(depth_bound(0, 0), 0);
  EXPECT_EQ(depth_bound(2, 0), 2);
  EXPECT_EQ(depth_bound(2, 2), 8);
}

TEST(Bounds, ProblemH) {
  EXPECT_EQ(problem_h(problem(testing::example1_text())), 0);
  EXPECT_EQ(problem_h(problem(testing::example3_text())), 0);
  EXPECT_EQ(problem_h(problem("types: T\nconsts: a : T, f : T -> T\n"
                              "vars: x : T\nsolve:\n x = (f (f a))\n")),
            2);
  EXPECT_EQ(problem_h(problem("types: T\nsolve:\n")), 0);
}

TEST(Bounds, PerVariable) {
  MatchingProblem p = problem(testing::example1_text());
  BoundMap b = depth_bounds(p);
  EXPECT_EQ(b.at(symbol(p.signature, "x")), 2);
  EXPECT_EQ(depth_bounds(p, 5).at(symbol(p.signature, "x")), 5);
}

TEST(Verify, ExampleOne) {
  MatchingProblem p = problem(testing::example1_text());
  EXPECT_TRUE(verify_solution(
      p, binding(p.signature, "x", "\\o:T. \\s:T -> T. (s o)")));
}

TEST(Verify, ExampleThree) {
  MatchingProblem p = problem(testing::example3_text());
  EXPECT_TRUE(verify_solution(
      p, binding(p.signature, "x", "\\h:T -> T -> T. (h a b)")));
  EXPECT_FALSE(verify_solution(p, binding(p.signature, "x", "\\h:T -> T -> T. b")));
}

TEST(Brute, ExampleOneCanonicalFirst) {
  MatchingProblem p = problem(testing::example1_text());
  SolveResult r = solve_brute(p);
  ASSERT_TRUE(r.solved());
  EXPECT_TRUE(alpha_equal(image(r.solution, p, "x"),
                          normal(p.signature, "\\o:T. \\s:T -> T. o")));
  EXPECT_EQ(r.stats.candidates_tested, 1u);
  EXPECT_EQ(r.stats.max_depth_used, 2);
}

TEST(Brute, ExampleTwo) {
  MatchingProblem p = problem(testing::example2_text());
  SolveResult r = solve_brute(p);
  ASSERT_TRUE(r.solved());
  EXPECT_TRUE(alpha_equal(image(r.solution, p, "x"),
                          normal(p.signature, "\\o:T. \\s:T -> T. b")));
}

TEST(Brute, ExampleThree) {
  MatchingProblem p = problem(testing::example3_text());
  SolveResult r = solve_brute(p);
  ASSERT_TRUE(r.solved());
  EXPECT_TRUE(alpha_equal(image(r.solution, p, "x"),
                          normal(p.signature, "\\h:T -> T -> T. (h a b)")));
  EXPECT_EQ(r.stats.candidates_tested, 4u);
}

TEST(Brute, Unsolvable) {
  MatchingProblem p = problem(testing::unsolvable_text());
  SolveResult r = solve_brute(p);
  EXPECT_FALSE(r.solved());
  EXPECT_EQ(r.stats.candidates_tested,
            count_terms({p.signature, {}, symbol(p.signature, "x").type(), 1}));
}

TEST(Brute, EmptyProblemIsSolved) {
  SolveResult r = solve_brute(problem("types: T\nsolve:\n"));
  EXPECT_TRUE(r.solved());
  EXPECT_TRUE(r.solution.empty());
  EXPECT_TRUE(solve_huet_pruned(problem("types: T\nsolve:\n")).solved());
}

TEST(Brute, GroundEquations) {
  MatchingProblem same = problem("types: T\nconsts: a : T, f : T -> T\n"
                                 "solve:\n (f a) = (f a)\n");
  EXPECT_TRUE(solve_brute(same).solved());
  EXPECT_TRUE(solve_huet_pruned(same).solved());
  MatchingProblem differ = problem("types: T\nconsts: a : T, b : T\n"
                                   "solve:\n a = b\n");
  EXPECT_FALSE(solve_brute(differ).solved());
  EXPECT_FALSE(solve_huet_pruned(differ).solved());
}

TEST(Brute, OverrideBelowBoundIsNotComplete) {
  MatchingProblem p = problem(testing::example3_text());
  SolveOptions o;
  o.max_depth = 0;
  EXPECT_FALSE(solve_brute(p, o).solved());
  EXPECT_FALSE(solve_huet_pruned(p, o).solved());
}

TEST(Brute, ThreadsKeepCanonicalWitness) {
  SolveOptions par;
  par.threads = 4;
  for (const auto& cp : corpus()) {
    SolveResult one = solve_brute(cp.problem);
    SolveResult many = solve_brute(cp.problem, par);
    ASSERT_EQ(one.verdict, many.verdict);
    ASSERT_TRUE(alpha_equal(one.solution, many.solution));
  }
}

TEST(Huet, Examples) {
  for (const std::string& text : {testing::example1_text(),
                                  testing::example2_text(),
                                  testing::example3_text()}) {
    MatchingProblem p = problem(text);
    SolveResult r = solve_huet_pruned(p);
    ASSERT_TRUE(r.solved()) << text;
    EXPECT_TRUE(verify_solution(p, r.solution));
    EXPECT_GT(r.stats.nodes_expanded, 0u);
  }
  EXPECT_FALSE(solve_huet_pruned(problem(testing::unsolvable_text())).solved());
}

TEST(Huet, ExampleTwoWitnessWithinBound) {
  MatchingProblem p = problem(testing::example2_text());
  SolveResult r = solve_huet_pruned(p);
  ASSERT_TRUE(r.solved());
  EXPECT_LE(depth(image(r.solution, p, "x")), 2);
  EXPECT_TRUE(is_ground(image(r.solution, p, "x")));
}

TEST(Decompose, DropsCommonAbstraction) {
  MatchingProblem p = problem("types: T\nvars: x : T\nsolve:\n \\y:T. x = \\y:T. y\n");
  Decomposition d = decompose(p);
  ASSERT_FALSE(d.clash);
  ASSERT_EQ(d.flex.size(), 1u);
  EXPECT_EQ(d.flex[0].lhs.symbol(), symbol(p.signature, "x"));
  EXPECT_TRUE(d.flex[0].rhs.is_var());
  EXPECT_TRUE(d.flex[0].rhs.symbol().is_local());
}

TEST(Decompose, RigidHeads) {
  MatchingProblem p = problem("types: T\nconsts: a : T, b : T, f : T -> T, "
                              "g : T -> T\nvars: x : T\nsolve:\n (f x) = (f b)\n");
  Decomposition d = decompose(p);
  ASSERT_FALSE(d.clash);
  ASSERT_EQ(d.flex.size(), 1u);
  EXPECT_TRUE(alpha_equal(d.flex[0].rhs, normal(p.signature, "b")));
  EXPECT_TRUE(decompose(problem("types: T\nconsts: a : T, b : T, f : T -> T\n"
                                "solve:\n (f a) = (f b)\n"))
                  .clash);
  EXPECT_TRUE(decompose(problem("types: T\nconsts: a : T, f : T -> T, g : T -> T\n"
                                "solve:\n (f a) = (g a)\n"))
                  .clash);
}

TEST(Decompose, ClashMeansUnsolvable) {
  for (const auto& cp : corpus()) {
    for (const MatchingProblem& q : testing::constant_swaps(cp.problem)) {
      if (decompose(q).clash) {
        ASSERT_FALSE(solve_brute(q).solved());
      }
    }
  }
}

TEST(Decompose, PreservesSolutions) {
  for (const auto& cp : corpus()) {
    Decomposition d = decompose(cp.problem);
    ASSERT_FALSE(d.clash);
    MatchingProblem flex{cp.problem.signature, d.flex};
    ASSERT_TRUE(verify_solution(flex, cp.planted));
    SolveResult r = solve_brute(cp.problem);
    ASSERT_TRUE(verify_solution(flex, r.solution));
  }
}

TEST(Bindings, ImitationAndProjections) {
  MatchingProblem p = problem(testing::example2_text());
  NameSupply fresh('x');
  std::vector<Substitution> bs =
      flex_rigid_bindings(symbol(p.signature, "x"), symbol(p.signature, "a"), fresh);
  ASSERT_EQ(bs.size(), 3u);
  Symbol x = symbol(p.signature, "x");
  EXPECT_TRUE(alpha_equal(*bs[0].find(x), normal(p.signature, "\\o:T. \\s:T -> T. o")));
  Term second = *bs[1].find(x);
  EXPECT_EQ(to_bohm(second).head, to_bohm(second).binders[1]);
  std::vector<Symbol> fresh_vars = instantiables_of(second);
  ASSERT_EQ(fresh_vars.size(), 1u);
  EXPECT_EQ(fresh_vars[0].type().to_string(), "T->(T->T)->T");
  EXPECT_TRUE(alpha_equal(*bs[2].find(x), normal(p.signature, "\\o:T. \\s:T -> T. a")));
}

TEST(Bindings, NullaryImitatesOnly) {
  MatchingProblem p = problem("types: T\nconsts: c : T\nvars: x : T\nsolve:\n x = c\n");
  NameSupply fresh('x');
  std::vector<Substitution> bs =
      flex_rigid_bindings(symbol(p.signature, "x"), symbol(p.signature, "c"), fresh);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_TRUE(alpha_equal(*bs[0].find(symbol(p.signature, "x")),
                          normal(p.signature, "c")));
}

TEST(Bindings, LocalHeadProjectsOnly) {
  Signature sig = testing::signature("types: T\nconsts: c : T\nvars: x : T -> T\n");
  Symbol l = Symbol::make("l", SymbolKind::kLocal, symbol(sig, "c").type());
  NameSupply fresh('x');
  std::vector<Substitution> bs = flex_rigid_bindings(symbol(sig, "x"), l, fresh);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_TRUE(alpha_equal(*bs[0].find(symbol(sig, "x")), normal(sig, "\\p:T. p")));
}

TEST(GroundExtend, AlreadyGround) {
  MatchingProblem p = problem(testing::example3_text());
  Substitution s = binding(p.signature, "x", "\\h:T -> T -> T. (h a b)");
  EXPECT_TRUE(alpha_equal(ground_extend(s, p), s));
}

TEST(GroundExtend, ResidualVariablesGetTrivialTerms) {
  MatchingProblem p = problem("types: T\nconsts: c : T, f : T -> T\n"
                              "vars: x : T, y : T\nsolve:\n x = (f c)\n");
  Substitution s = binding(p.signature, "x", "(f y)");
  Substitution g = ground_extend(s, p);
  EXPECT_TRUE(alpha_equal(image(g, p, "x"), normal(p.signature, "(f c)")));
  EXPECT_TRUE(alpha_equal(image(g, p, "y"), normal(p.signature, "c")));
  EXPECT_TRUE(verify_solution(p, g));
}

TEST(MatcherProperties, EnginesSoundAndComplete) {
  for (const auto& cp : corpus()) {
    const MatchingProblem& p = cp.problem;
    BoundMap bounds = depth_bounds(p);
    for (SolveResult r : {solve_brute(p), solve_huet_pruned(p)}) {
      ASSERT_TRUE(r.solved()) << testing::problem_text(p);
      ASSERT_TRUE(verify_solution(p, r.solution));
      for (const auto& [x, b] : bounds) {
        const Term* t = r.solution.find(x);
        ASSERT_TRUE(t);
        ASSERT_TRUE(is_ground(*t));
        ASSERT_LE(depth(*t), b);
      }
      ASSERT_EQ(r.solution.size(), bounds.size());
    }
  }
}

TEST(MatcherProperties, EnginesAgreeOnPerturbations) {
  int unsolvable = 0;
  for (const auto& cp : corpus()) {
    for (const MatchingProblem& q : testing::constant_swaps(cp.problem)) {
      SolveResult b = solve_brute(q);
      SolveResult h = solve_huet_pruned(q);
      ASSERT_EQ(b.verdict, h.verdict) << testing::problem_text(q);
      if (h.solved()) {
        ASSERT_TRUE(verify_solution(q, h.solution));
      }
      if (!b.solved()) ++unsolvable;
    }
  }
  EXPECT_GT(unsolvable, 10);
}

TEST(MatcherProperties, GroundExtendKeepsSolutions) {
  for (const auto& cp : corpus()) {
    CompleteSetStream s = enumerate_complete_set(cp.problem, {2000});
    if (auto sigma = s.next()) {
      ASSERT_TRUE(verify_solution(cp.problem, *sigma));
      Substitution g = ground_extend(*sigma, cp.problem);
      ASSERT_TRUE(verify_solution(cp.problem, g));
    }
  }
}

TEST(CompleteSet, ExampleOneFamily) {
  MatchingProblem p = problem(testing::example1_text());
  CompleteSetStream s = enumerate_complete_set(p, {100000});
  std::string chain = "o";
  for (int k = 0; k < 5; ++k) {
    std::optional<Substitution> sigma = s.next();
    ASSERT_TRUE(sigma);
    EXPECT_TRUE(alpha_equal(image(*sigma, p, "x"),
                            normal(p.signature, "\\o:T. \\s:T -> T. " + chain)));
    chain = "(s " + chain + ")";
  }
  EXPECT_FALSE(s.finished());
}

TEST(CompleteSet, UnsolvableIsEmptyAndTerminates) {
  CompleteSetStream s =
      enumerate_complete_set(problem(testing::unsolvable_text()), {100000});
  EXPECT_FALSE(s.next());
  EXPECT_TRUE(s.finished());
  EXPECT_FALSE(s.limit_reached());
}

TEST(CompleteSet, FirstOutputsVerifyOnCorpus) {
  for (const auto& cp : corpus()) {
    CompleteSetStream s = enumerate_complete_set(cp.problem, {5000});
    for (int k = 0; k < 3; ++k) {
      std::optional<Substitution> sigma = s.next();
      if (!sigma) break;
      ASSERT_TRUE(verify_solution(cp.problem, *sigma))
          << testing::problem_text(cp.problem);
    }
  }
}

TEST(CompleteSet, ExampleThreeContainsTheCompactSolution) {
  MatchingProblem p = problem(testing::example3_text());
  CompleteSetStream s = enumerate_complete_set(p, {20000});
  bool seen = false;
  for (int k = 0; k < 50 && !seen; ++k) {
    std::optional<Substitution> sigma = s.next();
    if (!sigma) break;
    ASSERT_TRUE(verify_solution(p, *sigma));
    seen = alpha_equal(image(ground_extend(*sigma, p), p, "x"),
                       normal(p.signature, "\\h:T -> T -> T. (h a b)"));
  }
  EXPECT_TRUE(seen);
}

TEST(CompleteSet, NodeLimitIsReported) {
  MatchingProblem p = problem(testing::example1_text());
  CompleteSetStream s = enumerate_complete_set(p, {3});
  while (s.next()) {
  }
  EXPECT_TRUE(s.limit_reached());
  EXPECT_FALSE(s.finished());
}

TEST(BoundTightness, ExampleThree) {
  MatchingProblem p = problem(testing::example3_text());
  Symbol x = symbol(p.signature, "x");
  std::vector<Term> shallow = enum_terms({p.signature, {}, x.type(), 0});
  ASSERT_EQ(shallow.size(), 2u);
  for (const Term& t : shallow) {
    Substitution s;
    s.set(x, t);
    EXPECT_FALSE(verify_solution(p, s));
  }
  bool found = false;
  for (const Term& t : enum_terms({p.signature, {}, x.type(), depth_bound(1, 0)})) {
    Substitution s;
    s.set(x, t);
    if (verify_solution(p, s)) {
      found = true;
      EXPECT_EQ(depth(t), 1);
    }
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace tom
