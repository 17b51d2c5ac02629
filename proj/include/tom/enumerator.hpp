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
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "tom/signature.hpp"
#include "tom/substitution.hpp"
#include "tom/term.hpp"

namespace tom {

struct EnumContext {
  Signature signature;
  // Locals in scope, in binding order. They may appear as heads.
  std::vector<Symbol> locals;
  Type target;
  int depth_budget = 0;
};

// All long normal terms of type ctx.target with Boehm depth at most
// ctx.depth_budget whose heads are constants of the signature, locals in
// scope, or binders introduced on the way. Instantiable variables never
// appear. Order: ascending depth, then head (locals in binding order before
// constants by name), then sons lexicographically by their own rank.
std::vector<Term> enum_terms(const EnumContext& ctx);

// Number of terms enum_terms yields, computed by a separate recurrence.
// Saturates at UINT64_MAX.
std::uint64_t count_terms(const EnumContext& ctx);

// Lazy Cartesian product of per-variable candidate lists. Index 0 is the
// first candidate of every variable; the first variable is the most
// significant digit.
class SubstitutionStream {
 public:
  SubstitutionStream(std::vector<Symbol> vars,
                     std::vector<std::vector<Term>> candidates);

  // Saturates at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  Substitution at(std::uint64_t index) const;
  std::optional<Substitution> next();

  const std::vector<Symbol>& vars() const { return vars_; }
  const std::vector<Term>& candidates(std::size_t var) const {
    return candidates_[var];
  }

 private:
  std::vector<Symbol> vars_;
  std::vector<std::vector<Term>> candidates_;
  std::uint64_t size_ = 1;
  std::uint64_t next_ = 0;
};

// Ground candidates for each variable with depth at most bound_fn(var).
SubstitutionStream enum_substitutions(
    const std::vector<Symbol>& vars,
    const std::function<int(const Symbol&)>& bound_fn, const Signature& sig);

}  // namespace tom
