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

#include "support.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tom/bohm.hpp"
#include "tom/normalize.hpp"

namespace tom::testing {

MatchingProblem problem(const std::string& text) {
  return validate(parse_problem(text));
}

Signature signature(const std::string& decls) {
  return parse_problem(decls + "\nsolve:\n").signature;
}

Term term(const Signature& sig, const std::string& text) {
  return parse_term(text, sig);
}

Term normal(const Signature& sig, const std::string& text) {
  return long_normal(parse_term(text, sig));
}

Symbol symbol(const Signature& sig, const std::string& name) {
  auto s = sig.lookup(name);
  if (!s) throw std::runtime_error("no symbol " + name);
  return *s;
}

Substitution binding(const Signature& sig, const std::string& var,
                     const std::string& text) {
  Substitution s;
  s.set(symbol(sig, var), normal(sig, text));
  return s;
}

std::string example1_text() {
  return "types: T\n"
         "vars: x : T -> (T -> T) -> T\n"
         "solve:\n"
         "  \\a:T. (x a \\z:T. z) = \\a:T. a\n";
}

std::string example2_text() {
  return "types: T\n"
         "consts: a : T, b : T, f : T -> T\n"
         "vars: x : T -> (T -> T) -> T\n"
         "solve:\n"
         "  (x a \\z:T. b) = b\n";
}

std::string example3_text() {
  return "types: T\n"
         "consts: a : T, b : T\n"
         "vars: x : (T -> T -> T) -> T\n"
         "solve:\n"
         "  (x \\y:T. \\z:T. y) = a\n"
         "  (x \\y:T. \\z:T. z) = b\n";
}

std::string example3_wide_text() {
  return "types: T\n"
         "consts: a : T, b : T, c : T, d : T\n"
         "vars: x : (T -> T -> T) -> T\n"
         "solve:\n"
         "  (x \\y:T. \\z:T. y) = a\n"
         "  (x \\y:T. \\z:T. z) = b\n";
}

std::string unsolvable_text() {
  return "types: T\n"
         "consts: c : T\n"
         "vars: x : T -> T\n"
         "solve:\n"
         "  \\y:T. (x c) = \\y:T. y\n";
}

std::string problem_text(const MatchingProblem& p) {
  const Signature& sig = p.signature;
  std::string out = "types:";
  for (std::size_t i = 0; i < sig.atomic_types().size(); ++i) {
    out += (i == 0 ? " " : ", ") + sig.atomic_types()[i].name();
  }
  auto section = [&](const char* name, const std::vector<Symbol>& syms) {
    std::string body;
    for (const Symbol& s : syms) {
      if (s.name()[0] == '_') continue;
      body += "\n  " + s.name() + " : " + s.type().to_string();
    }
    if (!body.empty()) out += std::string("\n") + name + ":" + body;
  };
  section("consts", sig.constants());
  section("vars", sig.instantiables());
  section("locals", sig.locals());
  out += "\nsolve:\n";
  for (const Equation& eq : p.equations) {
    out += "  " + print_term(eq.lhs, &sig) + " = " + print_term(eq.rhs, &sig) +
           "\n";
  }
  return out;
}

namespace {

const char* const kBaseDecls =
    "types: T\n"
    "consts: a : T, b : T, f : T -> T\n";

const char* const kVarTypes[] = {
    "(T -> T) -> T",
    "T -> (T -> T) -> T",
    "(T -> T) -> T -> T",
    "T -> T",
    "(T -> T -> T) -> T",
};

class Generator {
 public:
  explicit Generator(const CorpusOptions& options)
      : options_(options), rng_(options.seed), base_(signature(kBaseDecls)) {}

  std::vector<CorpusProblem> run() {
    std::vector<CorpusProblem> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < options_.count) {
      if (++attempts > options_.count * 1000) {
        throw std::runtime_error("corpus generator gave up");
      }
      if (auto cp = attempt()) out.push_back(std::move(*cp));
    }
    return out;
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::optional<CorpusProblem> attempt() {
    // One base signature so the cached ground terms share its constants.
    Signature sig = base_;
    int nvars = 1 + pick(2);
    vars_.clear();
    for (int i = 0; i < nvars; ++i) {
      Type t = parse_type(kVarTypes[pick(5)], sig);
      vars_.push_back(sig.add_instantiable(i == 0 ? "x" : "y", t));
    }
    t_ = *sig.atomic_type("T");
    f_ = *sig.lookup("f");
    consts_ = {*sig.lookup("a"), *sig.lookup("b")};
    binder_count_ = 0;

    MatchingProblem raw;
    raw.signature = sig;
    int neqs = 1 + pick(2);
    for (int e = 0; e < neqs; ++e) {
      std::vector<Symbol> scope;
      std::vector<Symbol> top;
      if (chance(0.3)) {
        top.push_back(fresh_binder(t_));
        scope = top;
      }
      Term body = atomic(scope, 3);
      raw.equations.push_back({abstract(top, body), Term()});
    }

    Substitution planted;
    for (const Symbol& x : vars_) {
      const std::vector<Term>& pool =
          ground_terms(sig, x.type(), pick(options_.max_planted_depth + 1));
      planted.set(x, pool[pick(static_cast<int>(pool.size()))]);
    }
    for (Equation& eq : raw.equations) {
      eq.rhs = long_normal(apply_subst(planted, eq.lhs));
    }
    MatchingProblem p = validate(raw);
    if (problem_variables(p).size() != vars_.size()) return std::nullopt;
    if (problem_h(p) > options_.max_h) return std::nullopt;
    std::uint64_t product = 1;
    for (const auto& [x, bound] : depth_bounds(p)) {
      product *= count_terms({sig, {}, x.type(), bound});
      if (product > options_.max_candidates) return std::nullopt;
    }
    return CorpusProblem{p, planted};
  }

  Symbol fresh_binder(const Type& t) {
    return Symbol::make("w" + std::to_string(++binder_count_),
                        SymbolKind::kLocal, t);
  }

  Term of_type(const Type& type, std::vector<Symbol> scope, int budget) {
    std::vector<Symbol> binders;
    for (const Type& a : type.args()) binders.push_back(fresh_binder(a));
    scope.insert(scope.end(), binders.begin(), binders.end());
    return abstract(binders, atomic(scope, budget));
  }

  Term atomic(const std::vector<Symbol>& scope, int budget) {
    int roll = pick(100);
    if (budget > 0 && roll < 45) {
      const Symbol& x = vars_[pick(static_cast<int>(vars_.size()))];
      std::vector<Term> args;
      for (const Type& a : x.type().args()) {
        args.push_back(of_type(a, scope, budget - 1));
      }
      return apply_all(Term::var(x), args);
    }
    if (budget > 0 && roll < 65) {
      Term arg = atomic(scope, budget - 1);
      return Term::app(Term::var(f_), arg);
    }
    std::vector<Symbol> atoms;
    for (const Symbol& s : scope) {
      if (s.type().is_atom()) atoms.push_back(s);
    }
    if (!atoms.empty() && roll < 85) {
      return Term::var(atoms[pick(static_cast<int>(atoms.size()))]);
    }
    return Term::var(consts_[pick(2)]);
  }

  const std::vector<Term>& ground_terms(const Signature& sig, const Type& t,
                                        int depth) {
    std::string key = t.to_string() + "/" + std::to_string(depth);
    auto it = pool_.find(key);
    if (it != pool_.end()) return it->second;
    return pool_.emplace(key, enum_terms({sig, {}, t, depth})).first->second;
  }

  CorpusOptions options_;
  std::mt19937 rng_;
  Signature base_;
  std::vector<Symbol> vars_;
  std::vector<Symbol> consts_;
  Type t_ = Type::atom("T");
  Symbol f_;
  int binder_count_ = 0;
  std::map<std::string, std::vector<Term>> pool_;
};

std::vector<Term> naive_rec(const std::vector<Symbol>& constants,
                            const std::vector<Symbol>& scope, const Type& type,
                            int budget, int& counter) {
  std::vector<Symbol> binders;
  for (const Type& a : type.args()) {
    binders.push_back(Symbol::make("n" + std::to_string(++counter),
                                   SymbolKind::kLocal, a));
  }
  std::vector<Symbol> inner = scope;
  inner.insert(inner.end(), binders.begin(), binders.end());
  std::vector<Symbol> heads = inner;
  heads.insert(heads.end(), constants.begin(), constants.end());

  std::vector<Term> out;
  for (const Symbol& h : heads) {
    if (h.type().target() != type.target()) continue;
    std::vector<Type> args = h.type().args();
    if (args.empty()) {
      out.push_back(abstract(binders, Term::var(h)));
      continue;
    }
    if (budget == 0) continue;
    std::vector<Term> partial = {Term::var(h)};
    for (const Type& a : args) {
      std::vector<Term> sons = naive_rec(constants, inner, a, budget - 1,
                                         counter);
      std::vector<Term> next;
      for (const Term& p : partial) {
        for (const Term& s : sons) next.push_back(Term::app(p, s));
      }
      partial = std::move(next);
    }
    for (const Term& p : partial) out.push_back(abstract(binders, p));
  }
  return out;
}

}  // namespace

std::vector<CorpusProblem> generate_corpus(const CorpusOptions& options) {
  return Generator(options).run();
}

std::vector<MatchingProblem> constant_swaps(const MatchingProblem& p) {
  std::vector<MatchingProblem> out;
  std::vector<Symbol> constants = p.signature.constants();
  for (std::size_t e = 0; e < p.equations.size(); ++e) {
    BohmTree bt = to_bohm(p.equations[e].rhs);
    for (const Occurrence& occ : domain(bt)) {
      const BohmTree& node = subtree_at(bt, occ);
      if (!node.head.is_constant() || !node.children.empty()) continue;
      for (const Symbol& other : constants) {
        if (other == node.head || other.type() != node.head.type()) continue;
        MatchingProblem q = p;
        q.equations[e].rhs =
            from_bohm(graft(bt, occ, BohmTree(node.binders, other)));
        out.push_back(std::move(q));
        break;
      }
    }
  }
  return out;
}

std::vector<Term> naive_terms(const EnumContext& ctx) {
  int counter = 0;
  return naive_rec(ctx.signature.constants(), ctx.locals, ctx.target,
                   ctx.depth_budget, counter);
}

std::set<std::string> keys(const std::vector<Term>& terms) {
  std::set<std::string> out;
  for (const Term& t : terms) out.insert(nameless_key(t));
  return out;
}

std::vector<EnumContext> random_contexts(int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  const char* const constant_pool[] = {
      "a : T", "b : T", "c : U", "f : T -> T", "g : T -> T -> T",
      "h : U -> T", "k : (T -> T) -> T", "m : T -> U"};
  const char* const local_pool[] = {"o : T", "s : T -> T", "u : U"};
  const char* const targets[] = {"T", "U", "T -> T", "U -> T", "(T -> T) -> T",
                                 "T -> (T -> T) -> T", "(T -> T) -> T -> T",
                                 "T -> T -> T", "(U -> T) -> U"};
  std::vector<EnumContext> out;
  while (static_cast<int>(out.size()) < count) {
    std::string consts;
    for (const char* c : constant_pool) {
      if (chance(0.5)) consts += std::string("\n  ") + c;
    }
    std::string locals;
    for (const char* l : local_pool) {
      if (chance(0.4)) locals += std::string("\n  ") + l;
    }
    std::string decls = "types: T, U";
    if (!consts.empty()) decls += "\nconsts:" + consts;
    if (!locals.empty()) decls += "\nlocals:" + locals;
    Signature sig = signature(decls);
    std::uniform_int_distribution<int> tdist(0, 8);
    std::uniform_int_distribution<int> bdist(0, 2);
    EnumContext ctx{sig, sig.locals(), parse_type(targets[tdist(rng)], sig),
                    bdist(rng)};
    if (count_terms(ctx) > 20000) continue;
    out.push_back(std::move(ctx));
  }
  return out;
}

Replay replay(const CorpusProblem& cp) {
  const MatchingProblem& p = cp.problem;
  Replay r;
  r.ground = ground_extend(cp.planted, p);
  r.phi = build_interpolation(p, r.ground);
  r.hat = accessible_solution(r.ground, r.phi, p.signature);
  r.compact = compact_accessible_solution(r.hat, r.phi);
  std::vector<Symbol> in_phi = interpolation_variables(r.phi);
  for (const Symbol& x : problem_variables(p)) {
    if (std::find(in_phi.begin(), in_phi.end(), x) == in_phi.end()) {
      r.compact.set(x, trivial_ground_term(x.type(), p.signature));
    }
  }
  return r;
}

}  // namespace tom::testing
