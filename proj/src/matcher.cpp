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

#include "tom/matcher.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <thread>

#include "tom/bohm.hpp"
#include "tom/enumerator.hpp"
#include "tom/error.hpp"

namespace tom {
namespace {

using Clock = std::chrono::steady_clock;

std::string equation_label(std::size_t i) {
  return "equation " + std::to_string(i + 1);
}

bool matches(const Equation& eq, const Substitution& sigma) {
  return alpha_equal(long_normal(apply_subst(sigma, eq.lhs)), eq.rhs);
}

}  // namespace

MatchingProblem validate(const MatchingProblem& p) {
  MatchingProblem out;
  out.signature = p.signature;
  for (std::size_t i = 0; i < p.equations.size(); ++i) {
    const Equation& eq = p.equations[i];
    auto typed = [&](const Term& t) {
      try {
        return infer_type(t);
      } catch (const IllTyped& e) {
        throw IllTyped(equation_label(i) + ": " + e.what());
      }
    };
    Type lt = typed(eq.lhs);
    Type rt = typed(eq.rhs);
    if (lt != rt) {
      throw TypeMismatch(equation_label(i) + ": left side has type " +
                         lt.to_string() + ", right side has type " +
                         rt.to_string());
    }
    if (!is_ground(eq.rhs)) {
      throw RhsNotGround(equation_label(i) + ": variable " +
                         instantiables_of(eq.rhs).front().name() +
                         " occurs in the right side");
    }
    for (const Symbol& v : instantiables_of(eq.lhs)) {
      if (v.type().order() > 3) {
        throw NotThirdOrder("variable " + v.name() + " has type " +
                            v.type().to_string() + " of order " +
                            std::to_string(v.type().order()));
      }
    }
    out.equations.push_back({long_normal(eq.lhs), long_normal(eq.rhs)});
  }
  return out;
}

std::vector<Symbol> problem_variables(const MatchingProblem& p) {
  std::set<Symbol, SymbolLess> vars;
  for (const Equation& eq : p.equations) {
    for (const Symbol& v : instantiables_of(eq.lhs)) vars.insert(v);
  }
  return {vars.begin(), vars.end()};
}

int depth_bound(int n, int h) { return (n + 1) * (h + 1) - 1; }

int problem_h(const MatchingProblem& p) {
  int h = 0;
  for (const Equation& eq : p.equations) h = std::max(h, depth(eq.rhs));
  return h;
}

BoundMap depth_bounds(const MatchingProblem& p,
                      std::optional<int> override_bound) {
  BoundMap out;
  int h = problem_h(p);
  for (const Symbol& x : problem_variables(p)) {
    out[x] = override_bound ? *override_bound
                            : depth_bound(x.type().arity(), h);
  }
  return out;
}

bool verify_solution(const MatchingProblem& p, const Substitution& sigma) {
  for (const Equation& eq : p.equations) {
    if (!alpha_equal(long_normal(apply_subst(sigma, eq.lhs)),
                     long_normal(eq.rhs))) {
      return false;
    }
  }
  return true;
}

Decomposition decompose(const std::vector<Equation>& equations) {
  Decomposition out;
  std::vector<Equation> work(equations.rbegin(), equations.rend());
  while (!work.empty()) {
    Equation eq = std::move(work.back());
    work.pop_back();
    Term a = eq.lhs;
    Term b = eq.rhs;
    while (a.is_lam()) {
      if (!b.is_lam() || b.symbol().type() != a.symbol().type()) {
        out.clash = true;
        return out;
      }
      a = substitute(a.body(), a.symbol(), Term::var(b.symbol()));
      b = b.body();
    }
    if (b.is_lam()) {
      out.clash = true;
      return out;
    }
    std::vector<Term> a_args;
    Term a_head = app_head(a, &a_args);
    if (a_head.is_var() && a_head.symbol().is_instantiable()) {
      out.flex.push_back({a, b});
      continue;
    }
    std::vector<Term> b_args;
    Term b_head = app_head(b, &b_args);
    if (!a_head.is_var() || !b_head.is_var() ||
        a_head.symbol() != b_head.symbol() ||
        a_args.size() != b_args.size()) {
      out.clash = true;
      return out;
    }
    for (std::size_t i = a_args.size(); i-- > 0;) {
      work.push_back({a_args[i], b_args[i]});
    }
  }
  return out;
}

SolveResult solve_brute(const MatchingProblem& p, const SolveOptions& options) {
  auto start = Clock::now();
  SolveResult result;
  BoundMap bounds = depth_bounds(p, options.max_depth);
  std::vector<Symbol> vars = problem_variables(p);
  for (const auto& [x, b] : bounds) {
    result.stats.max_depth_used = std::max(result.stats.max_depth_used, b);
  }
  SubstitutionStream stream = enum_substitutions(
      vars, [&](const Symbol& x) { return bounds.at(x); }, p.signature);
  const std::uint64_t total = stream.size();
  auto check = [&](std::uint64_t i) {
    Substitution sigma = stream.at(i);
    for (const Equation& eq : p.equations) {
      if (!matches(eq, sigma)) return false;
    }
    return true;
  };

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t found = kNone;
  int threads = std::max(1, options.threads);
  if (threads == 1 || total < 2) {
    for (std::uint64_t i = 0; i < total; ++i) {
      ++result.stats.candidates_tested;
      if (check(i)) {
        found = i;
        break;
      }
    }
  } else {
    // Workers claim blocks in index order and stop once every index they
    // could still find is past the best one seen so far.
    constexpr std::uint64_t kBlock = 64;
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best{kNone};
    std::atomic<std::uint64_t> tested{0};
    auto worker = [&] {
      std::uint64_t local_tested = 0;
      while (true) {
        std::uint64_t begin = next_block.fetch_add(kBlock);
        if (begin >= total || begin > best.load()) break;
        std::uint64_t end = std::min(total, begin + kBlock);
        for (std::uint64_t i = begin; i < end && i < best.load(); ++i) {
          ++local_tested;
          if (check(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      }
      tested.fetch_add(local_tested);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    found = best.load();
    result.stats.candidates_tested = tested.load();
  }

  if (found != kNone) {
    result.verdict = Verdict::kSolved;
    result.solution = stream.at(found);
  }
  result.stats.elapsed = Clock::now() - start;
  return result;
}

Substitution ground_extend(const Substitution& sigma,
                           const MatchingProblem& p) {
  Substitution tau;
  for (const auto& [x, t] : sigma) {
    for (const Symbol& y : instantiables_of(t)) {
      if (!tau.binds(y)) {
        tau.set(y, trivial_ground_term(y.type(), p.signature));
      }
    }
  }
  if (tau.empty()) return sigma;
  return compose(tau, sigma);
}

}  // namespace tom
