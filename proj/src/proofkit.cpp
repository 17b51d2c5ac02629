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

#include "tom/proofkit.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "tom/enumerator.hpp"
#include "tom/error.hpp"
#include "tom/syntax.hpp"

namespace tom {
namespace {

Term instance(const Term& image, const std::vector<Term>& args) {
  return long_normal(apply_all(image, args));
}

int top_binder_index(const std::vector<Symbol>& ys, const Symbol& s) {
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] == s) return static_cast<int>(i);
  }
  return -1;
}

Occurrence extend(const Occurrence& occ, int k) {
  Occurrence out = occ;
  out.push_back(k);
  return out;
}

// Labels compared without names: binder types, and for the head either its
// position among the binders above or its own identity when free.
class Labeler {
 public:
  struct Label {
    std::vector<Type> binder_types;
    int bound_index = -1;
    const void* free_id = nullptr;
    bool operator==(const Label&) const = default;
  };

  Label enter(const BohmTree& n) {
    Label l;
    for (const Symbol& b : n.binders) {
      l.binder_types.push_back(b.type());
      env_.push_back(b);
    }
    for (std::size_t i = env_.size(); i-- > 0;) {
      if (env_[i] == n.head) {
        l.bound_index = static_cast<int>(i);
        return l;
      }
    }
    l.free_id = n.head.id();
    return l;
  }
  void leave(const BohmTree& n) { env_.resize(env_.size() - n.binders.size()); }

 private:
  std::vector<Symbol> env_;
};

void check_part2(const BohmTree& u, const BohmTree& r, const Symbol& y,
                 Labeler& lu, Labeler& lr, Occurrence& occ,
                 std::vector<std::string>& violations) {
  if (u.head == y) return;
  Labeler::Label a = lu.enter(u);
  Labeler::Label b = lr.enter(r);
  if (!(a == b) || u.children.size() != r.children.size()) {
    violations.push_back("part 2: label at " + to_string(occ) + " changed");
  } else {
    for (std::size_t k = 0; k < u.children.size(); ++k) {
      occ.push_back(static_cast<int>(k) + 1);
      check_part2(u.children[k], r.children[k], y, lu, lr, occ, violations);
      occ.pop_back();
    }
  }
  lu.leave(u);
  lr.leave(r);
}

void accessible_rec(const BohmTree& node, const Occurrence& occ,
                    const std::vector<Symbol>& ys,
                    const InterpolationEquation& eq,
                    std::set<Occurrence>& out) {
  out.insert(occ);
  int i = top_binder_index(ys, node.head);
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    int j = static_cast<int>(k) + 1;
    if (i >= 0 && !relevant_in(eq.args[i], j)) continue;
    accessible_rec(node.children[k], extend(occ, j), ys, eq, out);
  }
}

std::vector<const InterpolationEquation*> equations_of(
    const InterpolationProblem& phi, const Symbol& x) {
  std::vector<const InterpolationEquation*> out;
  for (const InterpolationEquation& eq : phi) {
    if (eq.x == x) out.push_back(&eq);
  }
  return out;
}

// A leaf that is already a ground term of depth 0.
bool closed_leaf(const BohmTree& node) {
  if (!node.children.empty()) return false;
  if (node.head.is_constant()) return true;
  return std::find(node.binders.begin(), node.binders.end(), node.head) !=
         node.binders.end();
}

BohmTree prune(const BohmTree& node, const Occurrence& occ,
               const std::set<Occurrence>& keep, const Signature& sig) {
  BohmTree out(node.binders, node.head);
  std::vector<Type> arg_types = node.head.type().args();
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    Occurrence child = extend(occ, static_cast<int>(k) + 1);
    if (keep.count(child)) {
      out.children.push_back(prune(node.children[k], child, keep, sig));
    } else if (closed_leaf(node.children[k])) {
      out.children.push_back(node.children[k]);
    } else {
      out.children.push_back(
          to_bohm(trivial_ground_term(arg_types[k], sig)));
    }
  }
  return out;
}

Term projection(const Type& type, int j) {
  NameSupply names;
  std::vector<Symbol> zs;
  for (const Type& a : type.args()) zs.push_back(names.fresh_local(a));
  return long_normal(abstract(zs, Term::var(zs[j - 1])));
}

struct Compactor {
  const std::vector<Symbol>& ys;
  std::vector<std::pair<const InterpolationEquation*, std::set<Occurrence>>>
      access;
  int h;

  // counts[i]: occurrences of yi on the original path so far; first_dir[i]:
  // the son taken at the first of them.
  BohmTree rebuild(const BohmTree& node, const Occurrence& occ,
                   std::vector<int> counts, std::vector<int> first_dir) const {
    int i = top_binder_index(ys, node.head);
    if (i >= 0) {
      ++counts[i];
      if (counts[i] > h + 1) {
        int j = first_dir[i];
        check_projection(occ, i, j);
        const BohmTree& son = node.children[j - 1];
        BohmTree inner = rebuild(son, extend(occ, j), counts, first_dir);
        std::vector<Symbol> binders = node.binders;
        binders.insert(binders.end(), inner.binders.begin(),
                       inner.binders.end());
        return BohmTree(binders, inner.head, std::move(inner.children));
      }
    }
    BohmTree out(node.binders, node.head);
    for (std::size_t k = 0; k < node.children.size(); ++k) {
      int j = static_cast<int>(k) + 1;
      std::vector<int> dirs = first_dir;
      if (i >= 0 && counts[i] == 1) dirs[i] = j;
      out.children.push_back(
          rebuild(node.children[k], extend(occ, j), counts, dirs));
    }
    return out;
  }

  void check_projection(const Occurrence& occ, int i, int j) const {
    bool any = false;
    for (const auto& [eq, acc] : access) {
      if (!acc.count(occ)) continue;
      any = true;
      const Term& ci = eq->args[i];
      if (!alpha_equal(ci, projection(infer_type(ci), j))) {
        throw InvariantViolation(
            "occurrence " + to_string(occ) + " of " + ys[i].name() +
            " is accessible for an equation whose argument " +
            std::to_string(i + 1) + " is " + print_term(ci) +
            ", not the projection onto " + std::to_string(j));
      }
    }
    if (!any) {
      throw NotAccessible("occurrence " + to_string(occ) +
                          " is accessible for no equation");
    }
  }
};

void foreign_rec(const BohmTree& n, const std::vector<Symbol>& ys, int count,
                 int& best) {
  if (top_binder_index(ys, n.head) < 0) ++count;
  best = std::max(best, count);
  for (const BohmTree& c : n.children) foreign_rec(c, ys, count, best);
}

void repeats_rec(const BohmTree& n, const std::vector<Symbol>& ys,
                 std::vector<int> counts, int& best) {
  int i = top_binder_index(ys, n.head);
  if (i >= 0) best = std::max(best, ++counts[i]);
  for (const BohmTree& c : n.children) repeats_rec(c, ys, counts, best);
}

class InterpolationBuilder {
 public:
  explicit InterpolationBuilder(const Substitution& sigma) : sigma_(sigma) {}

  void run(Term a, Term b, InterpolationProblem& out) {
    while (a.is_lam()) {
      if (!b.is_lam()) throw NotASolution("shapes of the two sides differ");
      a = substitute(a.body(), a.symbol(), Term::var(b.symbol()));
      b = b.body();
    }
    std::vector<Term> ds;
    Term head = app_head(a, &ds);
    if (head.symbol().is_instantiable()) {
      flex(head.symbol(), ds, b, out);
      return;
    }
    std::vector<Term> es;
    Term b_head = app_head(b, &es);
    if (b_head.symbol() != head.symbol() || es.size() != ds.size()) {
      throw NotASolution("rigid heads differ");
    }
    for (std::size_t i = 0; i < ds.size(); ++i) run(ds[i], es[i], out);
  }

  // c_i for (x d1 ... dn), together with the indices that were kept.
  std::vector<Term> arguments(const Symbol& x, const std::vector<Term>& ds,
                              std::vector<bool>& kept,
                              std::vector<Symbol>& fresh) {
    const Term* image = sigma_.find(x);
    if (!image) throw NotASolution("variable " + x.name() + " is unbound");
    std::vector<Term> sds;
    for (const Term& d : ds) sds.push_back(long_normal(apply_subst(sigma_, d)));
    std::vector<Term> cs;
    kept.assign(ds.size(), false);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      Symbol z = names_.fresh_local(infer_type(sds[i]));
      std::vector<Term> probe = sds;
      probe[i] = long_normal(Term::var(z));
      if (occurs_free(z, instance(*image, probe))) {
        kept[i] = true;
        cs.push_back(sds[i]);
      } else {
        Symbol zi = names_.fresh_local(z.type());
        fresh.push_back(zi);
        cs.push_back(long_normal(Term::var(zi)));
      }
    }
    return cs;
  }

 private:
  void flex(const Symbol& x, const std::vector<Term>& ds, const Term& b,
            InterpolationProblem& out) {
    std::vector<bool> kept;
    std::vector<Symbol> fresh;
    std::vector<Term> cs = arguments(x, ds, kept, fresh);
    out.push_back({x, cs, b});
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (kept[i]) run(ds[i], cs[i], out);
    }
  }

  const Substitution& sigma_;
  NameSupply names_{'z'};
};

}  // namespace

int interpolation_h(const InterpolationProblem& phi) {
  int h = 0;
  for (const InterpolationEquation& eq : phi) h = std::max(h, depth(eq.rhs));
  return h;
}

bool solves(const InterpolationProblem& phi, const Substitution& sigma) {
  for (const InterpolationEquation& eq : phi) {
    const Term* image = sigma.find(eq.x);
    if (!image) return false;
    if (!alpha_equal(instance(*image, eq.args), long_normal(eq.rhs))) {
      return false;
    }
  }
  return true;
}

std::vector<Symbol> interpolation_variables(const InterpolationProblem& phi) {
  std::set<Symbol, SymbolLess> vars;
  for (const InterpolationEquation& eq : phi) vars.insert(eq.x);
  return {vars.begin(), vars.end()};
}

KeyLemmaReport key_lemma_check(const Term& u, const Symbol& y, const Term& c) {
  if (y.type().order() > 2) {
    throw Error("variable " + y.name() + " has order " +
                std::to_string(y.type().order()) + ", at most 2 expected");
  }
  if (infer_type(c) != y.type()) {
    throw TypeMismatch("c does not have the type of " + y.name());
  }
  if (!is_ground(c)) throw Error("c is not ground");
  if (!is_long_normal(u) || !is_long_normal(c)) {
    throw NotNormal("key lemma inputs must be in long normal form");
  }

  KeyLemmaReport rep;
  Term r = long_normal(substitute(u, y, c));
  BohmTree bu = to_bohm(u);
  BohmTree br = to_bohm(r);
  rep.y_occurs = occurs_free(y, u);
  rep.depth_u = depth(bu);
  rep.depth_c = depth(c);
  rep.depth_result = depth(br);

  if (rep.y_occurs && rep.depth_c > rep.depth_result) {
    rep.violations.push_back("part 1: |c| = " + std::to_string(rep.depth_c) +
                             " > |u[y <- c]| = " +
                             std::to_string(rep.depth_result));
  }

  Labeler lu, lr;
  Occurrence occ;
  check_part2(bu, br, y, lu, lr, occ, rep.violations);

  int p = static_cast<int>(spine(c).binders.size());
  bool relevant = true;
  for (int i = 1; i <= p; ++i) relevant = relevant && relevant_in(c, i);
  rep.corollary_applies = relevant && rep.depth_c != 0;
  if (rep.corollary_applies && rep.depth_u > rep.depth_result) {
    rep.violations.push_back("corollary: |u| = " + std::to_string(rep.depth_u) +
                             " > |u[y <- c]| = " +
                             std::to_string(rep.depth_result));
  }
  return rep;
}

KeyLemmaSweep key_lemma_sweep(const Signature& sig, const Symbol& y,
                              const std::vector<Type>& u_types, int depth) {
  KeyLemmaSweep sweep;
  std::vector<Term> cs = enum_terms({sig, {}, y.type(), depth});
  for (const Type& ut : u_types) {
    for (const Term& u : enum_terms({sig, {y}, ut, depth})) {
      for (const Term& c : cs) {
        ++sweep.triples;
        KeyLemmaReport rep = key_lemma_check(u, y, c);
        if (!rep.ok()) {
          ++sweep.violations;
          if (sweep.examples.size() < 10) {
            sweep.examples.push_back("u = " + print_term(u) + ", c = " +
                                     print_term(c) + ": " +
                                     rep.violations.front());
          }
        }
      }
    }
  }
  return sweep;
}

std::set<Occurrence> accessible_occurrences(const Term& t,
                                            const InterpolationEquation& eq) {
  BohmTree bt = to_bohm(freshen(t));
  if (bt.binders.size() != eq.args.size()) {
    throw TypeMismatch("image has " + std::to_string(bt.binders.size()) +
                       " top binders but the equation has " +
                       std::to_string(eq.args.size()) + " arguments");
  }
  std::set<Occurrence> out;
  accessible_rec(bt, {}, bt.binders, eq, out);
  return out;
}

Substitution accessible_solution(const Substitution& sigma,
                                 const InterpolationProblem& phi,
                                 const Signature& sig) {
  if (!solves(phi, sigma)) {
    throw NotASolution("the substitution does not solve the problem");
  }
  Substitution out = sigma;
  for (const Symbol& x : interpolation_variables(phi)) {
    Term t = freshen(*sigma.find(x));
    std::set<Occurrence> keep;
    for (const InterpolationEquation* eq : equations_of(phi, x)) {
      std::set<Occurrence> acc = accessible_occurrences(t, *eq);
      keep.insert(acc.begin(), acc.end());
    }
    out.set(x, from_bohm(prune(to_bohm(t), {}, keep, sig)));
  }
  return out;
}

Substitution compact_accessible_solution(const Substitution& sigma_hat,
                                         const InterpolationProblem& phi) {
  int h = interpolation_h(phi);
  Substitution out = sigma_hat;
  for (const Symbol& x : interpolation_variables(phi)) {
    const Term* image = sigma_hat.find(x);
    if (!image) throw NotAccessible("variable " + x.name() + " is unbound");
    Term t = freshen(*image);
    BohmTree bt = to_bohm(t);
    Compactor comp{bt.binders, {}, h};
    std::set<Occurrence> all;
    for (const InterpolationEquation* eq : equations_of(phi, x)) {
      comp.access.emplace_back(eq, accessible_occurrences(t, *eq));
      all.insert(comp.access.back().second.begin(),
                 comp.access.back().second.end());
    }
    for (const Occurrence& o : domain(bt)) {
      if (!subtree_at(bt, o).children.empty() && !all.count(o)) {
        throw NotAccessible("non-leaf occurrence " + to_string(o) + " of " +
                            x.name() + "'s image is not accessible");
      }
    }
    std::size_t n = bt.binders.size();
    BohmTree compact = comp.rebuild(bt, {}, std::vector<int>(n, 0),
                                    std::vector<int>(n, 0));
    out.set(x, from_bohm(compact));
  }
  return out;
}

int max_foreign_on_path(const Term& t) {
  BohmTree bt = to_bohm(freshen(long_normal(t)));
  int best = 0;
  foreign_rec(bt, bt.binders, 0, best);
  return best;
}

int max_binder_repeats_on_path(const Term& t) {
  BohmTree bt = to_bohm(freshen(long_normal(t)));
  int best = 0;
  repeats_rec(bt, bt.binders, std::vector<int>(bt.binders.size(), 0), best);
  return best;
}

InterpolationProblem build_interpolation(const MatchingProblem& p,
                                         const Substitution& sigma) {
  if (!verify_solution(p, sigma)) {
    throw NotASolution("the substitution does not solve the problem");
  }
  InterpolationProblem out;
  InterpolationBuilder builder(sigma);
  for (const Equation& eq : p.equations) {
    builder.run(long_normal(eq.lhs), long_normal(eq.rhs), out);
  }
  return out;
}

bool fresh_local_absence_check(const Symbol& x, const std::vector<Term>& args,
                               const Substitution& sigma) {
  InterpolationBuilder builder(sigma);
  std::vector<bool> kept;
  std::vector<Symbol> fresh;
  std::vector<Term> cs = builder.arguments(x, args, kept, fresh);
  Term nf = instance(*sigma.find(x), cs);
  for (const Symbol& z : fresh) {
    if (occurs_free(z, nf)) return false;
  }
  return true;
}

}  // namespace tom
