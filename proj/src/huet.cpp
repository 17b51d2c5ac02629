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

#include <algorithm>
#include <deque>

#include "tom/bohm.hpp"
#include "tom/error.hpp"
#include "tom/matcher.hpp"

namespace tom {
namespace {

using Clock = std::chrono::steady_clock;

// A node of Huet's tree: the residual flex equations and the image built so
// far for every problem variable.
struct Node {
  std::vector<Equation> flex;
  std::vector<Term> images;
  NameSupply fresh{'x'};
};

// Depth of t where nodes headed by an instantiable variable count as
// leaves. Later bindings only grow the tree below those leaves, so this is a
// lower bound on the depth of every instance.
int partial_depth(const Term& t) {
  Spine s = spine(t);
  if (s.head.is_var() && s.head.symbol().is_instantiable()) return 0;
  int d = 0;
  for (const Term& a : s.args) d = std::max(d, 1 + partial_depth(a));
  return d;
}

class Search {
 public:
  explicit Search(const MatchingProblem& p) : problem_(p) {
    vars_ = problem_variables(p);
  }

  std::optional<Node> root() const {
    Decomposition d = decompose(problem_.equations);
    if (d.clash) return std::nullopt;
    Node n;
    n.flex = std::move(d.flex);
    for (const Symbol& x : vars_) n.images.push_back(long_normal(Term::var(x)));
    return n;
  }

  // Children of a node with at least one flex equation, in the order
  // projections (binder order) then imitation. Clashing children are
  // dropped.
  std::vector<Node> expand(const Node& node) const {
    const Equation& eq = node.flex.front();
    Symbol x = app_head(eq.lhs).symbol();
    Symbol g = app_head(eq.rhs).symbol();
    NameSupply fresh = node.fresh;
    std::vector<Substitution> bindings = flex_rigid_bindings(x, g, fresh);
    std::vector<Node> out;
    for (const Substitution& theta : bindings) {
      std::vector<Equation> eqs;
      eqs.reserve(node.flex.size());
      for (const Equation& e : node.flex) {
        eqs.push_back({long_normal(apply_subst(theta, e.lhs)), e.rhs});
      }
      Decomposition d = decompose(eqs);
      if (d.clash) continue;
      Node child;
      child.flex = std::move(d.flex);
      child.fresh = fresh;
      for (const Term& img : node.images) {
        child.images.push_back(long_normal(apply_subst(theta, img)));
      }
      out.push_back(std::move(child));
    }
    return out;
  }

  Substitution images_of(const Node& node) const {
    Substitution sigma;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      sigma.set_trusted(vars_[i], node.images[i]);
    }
    return sigma;
  }

  const std::vector<Symbol>& vars() const { return vars_; }
  const MatchingProblem& problem() const { return problem_; }

 private:
  const MatchingProblem& problem_;
  std::vector<Symbol> vars_;
};

class PrunedDfs {
 public:
  PrunedDfs(const MatchingProblem& p, const BoundMap& bounds, SearchStats& stats)
      : search_(p), stats_(stats) {
    for (const Symbol& x : search_.vars()) bounds_.push_back(bounds.at(x));
  }

  std::optional<Substitution> run() {
    std::optional<Node> r = search_.root();
    if (!r || !within_bounds(*r)) return std::nullopt;
    return visit(*r);
  }

 private:
  bool within_bounds(const Node& n) {
    for (std::size_t i = 0; i < n.images.size(); ++i) {
      int d = partial_depth(n.images[i]);
      stats_.max_depth_used = std::max(stats_.max_depth_used, d);
      if (d > bounds_[i]) return false;
    }
    return true;
  }

  std::optional<Substitution> visit(const Node& node) {
    ++stats_.nodes_expanded;
    if (node.flex.empty()) {
      ++stats_.candidates_tested;
      Substitution sigma =
          ground_extend(search_.images_of(node), search_.problem())
              .restricted(search_.vars());
      if (!verify_solution(search_.problem(), sigma)) {
        throw InvariantViolation("a success node of the search tree does not "
                                 "yield a solution");
      }
      return sigma;
    }
    for (const Node& child : search_.expand(node)) {
      if (!within_bounds(child)) continue;
      if (auto found = visit(child)) return found;
    }
    return std::nullopt;
  }

  Search search_;
  SearchStats& stats_;
  std::vector<int> bounds_;
};

}  // namespace

std::vector<Substitution> flex_rigid_bindings(const Symbol& x,
                                              const Symbol& rhs_head,
                                              NameSupply& fresh) {
  const Type& type = x.type();
  std::vector<Type> arg_types = type.args();
  const Type& atom = type.target();
  NameSupply binder_names('w');
  std::vector<Symbol> binders;
  std::vector<Term> binder_vars;
  for (const Type& a : arg_types) {
    binders.push_back(binder_names.fresh_local(a));
    binder_vars.push_back(Term::var(binders.back()));
  }

  auto binding = [&](const Symbol& head) {
    std::vector<Term> args;
    for (const Type& v : head.type().args()) {
      Symbol h = fresh.fresh(SymbolKind::kInstantiable,
                             Type::curried(arg_types, v));
      args.push_back(apply_all(Term::var(h), binder_vars));
    }
    Substitution s;
    s.set(x, long_normal(abstract(binders,
                                  apply_all(Term::var(head), args))));
    return s;
  };

  std::vector<Substitution> out;
  for (const Symbol& w : binders) {
    if (w.type().target() == atom) out.push_back(binding(w));
  }
  if (rhs_head.is_constant() && rhs_head.type().target() == atom) {
    out.push_back(binding(rhs_head));
  }
  return out;
}

SolveResult solve_huet_pruned(const MatchingProblem& p,
                              const SolveOptions& options) {
  auto start = Clock::now();
  SolveResult result;
  BoundMap bounds = depth_bounds(p, options.max_depth);
  PrunedDfs dfs(p, bounds, result.stats);
  if (auto sigma = dfs.run()) {
    result.verdict = Verdict::kSolved;
    result.solution = std::move(*sigma);
  }
  result.stats.elapsed = Clock::now() - start;
  return result;
}

struct CompleteSetStream::State {
  MatchingProblem problem;
  CompleteSetOptions options;
  std::unique_ptr<Search> search;
  std::deque<Node> queue;
  SearchStats stats;
  bool limit_reached = false;

  // Residual problems keep third-order variables because bindings of a
  // third-order variable only introduce variables of order at most 3.
  bool residual_solvable(const Node& n) {
    MatchingProblem residual;
    residual.signature = problem.signature;
    residual.equations = n.flex;
    for (const Symbol& v : problem_variables(residual)) {
      if (v.type().order() > 3) {
        throw InvariantViolation("residual variable " + v.name() +
                                 " has order " +
                                 std::to_string(v.type().order()));
      }
    }
    return solve_brute(residual).solved();
  }
};

CompleteSetStream::CompleteSetStream(const MatchingProblem& p,
                                     CompleteSetOptions options)
    : state_(std::make_unique<State>()) {
  state_->problem = p;
  state_->options = options;
  state_->search = std::make_unique<Search>(state_->problem);
  if (auto r = state_->search->root()) {
    if (state_->residual_solvable(*r)) state_->queue.push_back(std::move(*r));
  }
}

CompleteSetStream::~CompleteSetStream() = default;
CompleteSetStream::CompleteSetStream(CompleteSetStream&&) noexcept = default;
CompleteSetStream& CompleteSetStream::operator=(CompleteSetStream&&) noexcept =
    default;

std::optional<Substitution> CompleteSetStream::next() {
  State& s = *state_;
  auto start = Clock::now();
  std::optional<Substitution> out;
  while (!s.queue.empty()) {
    if (s.options.node_limit && s.stats.nodes_expanded >= s.options.node_limit) {
      s.limit_reached = true;
      break;
    }
    Node node = std::move(s.queue.front());
    s.queue.pop_front();
    ++s.stats.nodes_expanded;
    if (node.flex.empty()) {
      ++s.stats.candidates_tested;
      out = s.search->images_of(node);
      break;
    }
    for (Node& child : s.search->expand(node)) {
      if (s.residual_solvable(child)) s.queue.push_back(std::move(child));
    }
  }
  s.stats.elapsed += Clock::now() - start;
  return out;
}

bool CompleteSetStream::finished() const { return state_->queue.empty(); }
bool CompleteSetStream::limit_reached() const { return state_->limit_reached; }
const SearchStats& CompleteSetStream::stats() const { return state_->stats; }

CompleteSetStream enumerate_complete_set(const MatchingProblem& p,
                                         CompleteSetOptions options) {
  return CompleteSetStream(p, options);
}

}  // namespace tom
