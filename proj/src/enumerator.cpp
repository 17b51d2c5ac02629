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

#include "tom/enumerator.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "tom/normalize.hpp"

namespace tom {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

struct Ranked {
  Term term;
  int depth;
};

// Steps a mixed-radix counter, last digit fastest. False once it wraps.
template <typename Lists>
bool advance(std::vector<std::size_t>& idx, const Lists& lists) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < lists[pos]->size()) return true;
    idx[pos] = 0;
  }
  return false;
}

class TermEnumerator {
 public:
  explicit TermEnumerator(const Signature& sig) : names_('z') {
    for (const Symbol& c : sig.constants()) constants_.push_back(c);
  }

  const std::vector<Ranked>& terms(const std::vector<Symbol>& scope,
                                   const Type& type, int budget) {
    std::string key = std::to_string(budget) + "|" + type.to_string();
    for (const Symbol& s : scope) {
      key += '|';
      key += std::to_string(reinterpret_cast<std::uintptr_t>(s.id()));
    }
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Ranked> out = build(scope, type, budget);
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  std::vector<Ranked> build(const std::vector<Symbol>& scope, const Type& type,
                            int budget) {
    std::vector<Symbol> binders;
    for (const Type& a : type.args()) binders.push_back(names_.fresh_local(a));
    std::vector<Symbol> inner = scope;
    inner.insert(inner.end(), binders.begin(), binders.end());

    const Type& atom = type.target();
    std::vector<Symbol> heads;
    for (const Symbol& s : inner) {
      if (s.type().target() == atom) heads.push_back(s);
    }
    for (const Symbol& c : constants_) {
      if (c.type().target() == atom) heads.push_back(c);
    }

    std::vector<Ranked> out;
    for (int d = 0; d <= budget; ++d) {
      for (const Symbol& head : heads) {
        std::vector<Type> arg_types = head.type().args();
        if (arg_types.empty()) {
          if (d == 0) out.push_back({abstract(binders, Term::var(head)), 0});
          continue;
        }
        if (d == 0) continue;
        std::vector<const std::vector<Ranked>*> lists;
        bool empty = false;
        for (const Type& a : arg_types) {
          lists.push_back(&terms(inner, a, d - 1));
          if (lists.back()->empty()) empty = true;
        }
        if (empty) continue;
        // Odometer over the son lists, leftmost son most significant.
        std::vector<std::size_t> idx(lists.size(), 0);
        while (true) {
          int max_depth = 0;
          for (std::size_t i = 0; i < idx.size(); ++i) {
            max_depth = std::max(max_depth, (*lists[i])[idx[i]].depth);
          }
          if (max_depth == d - 1) {
            std::vector<Term> args;
            args.reserve(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) {
              args.push_back((*lists[i])[idx[i]].term);
            }
            out.push_back(
                {abstract(binders, apply_all(Term::var(head), args)), d});
          }
          if (!advance(idx, lists)) break;
        }
      }
    }
    return out;
  }

  NameSupply names_;
  std::vector<Symbol> constants_;
  std::map<std::string, std::vector<Ranked>> memo_;
};

// Counts by "depth at most d" rather than exact depth, over types only.
class TermCounter {
 public:
  explicit TermCounter(const Signature& sig) {
    for (const Symbol& c : sig.constants()) constants_.push_back(c.type());
  }

  std::uint64_t count(const std::vector<Type>& scope, const Type& type,
                      int budget) {
    std::string key = std::to_string(budget) + "|" + type.to_string();
    for (const Type& s : scope) key += "|" + s.to_string();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<Type> inner = scope;
    for (const Type& a : type.args()) inner.push_back(a);
    std::vector<Type> heads;
    for (const Type& s : inner) {
      if (s.target() == type.target()) heads.push_back(s);
    }
    for (const Type& c : constants_) {
      if (c.target() == type.target()) heads.push_back(c);
    }
    std::uint64_t total = 0;
    for (const Type& h : heads) {
      if (h.arity() == 0) {
        total = sat_add(total, 1);
      } else if (budget > 0) {
        std::uint64_t prod = 1;
        for (const Type& a : h.args()) {
          prod = sat_mul(prod, count(inner, a, budget - 1));
        }
        total = sat_add(total, prod);
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<Type> constants_;
  std::map<std::string, std::uint64_t> memo_;
};

}  // namespace

std::vector<Term> enum_terms(const EnumContext& ctx) {
  if (ctx.depth_budget < 0) return {};
  TermEnumerator e(ctx.signature);
  const std::vector<Ranked>& ranked =
      e.terms(ctx.locals, ctx.target, ctx.depth_budget);
  std::vector<Term> out;
  out.reserve(ranked.size());
  for (const Ranked& r : ranked) out.push_back(r.term);
  return out;
}

std::uint64_t count_terms(const EnumContext& ctx) {
  if (ctx.depth_budget < 0) return 0;
  TermCounter c(ctx.signature);
  std::vector<Type> scope;
  for (const Symbol& s : ctx.locals) scope.push_back(s.type());
  return c.count(scope, ctx.target, ctx.depth_budget);
}

SubstitutionStream::SubstitutionStream(std::vector<Symbol> vars,
                                       std::vector<std::vector<Term>> candidates)
    : vars_(std::move(vars)), candidates_(std::move(candidates)) {
  for (const auto& c : candidates_) {
    size_ = sat_mul(size_, static_cast<std::uint64_t>(c.size()));
  }
}

Substitution SubstitutionStream::at(std::uint64_t index) const {
  Substitution out;
  for (std::size_t i = vars_.size(); i-- > 0;) {
    const auto& c = candidates_[i];
    out.set_trusted(vars_[i], c[index % c.size()]);
    index /= c.size();
  }
  return out;
}

std::optional<Substitution> SubstitutionStream::next() {
  if (next_ >= size_) return std::nullopt;
  return at(next_++);
}

SubstitutionStream enum_substitutions(
    const std::vector<Symbol>& vars,
    const std::function<int(const Symbol&)>& bound_fn, const Signature& sig) {
  std::vector<std::vector<Term>> candidates;
  for (const Symbol& x : vars) {
    candidates.push_back(enum_terms({sig, {}, x.type(), bound_fn(x)}));
  }
  return SubstitutionStream(vars, std::move(candidates));
}

}  // namespace tom
