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

#include "tom/term.hpp"

namespace tom {

// Allocates fresh local symbols named _z1, _z2, ... The counter lives in the
// supply, so each call site threads its own.
class NameSupply {
 public:
  explicit NameSupply(char prefix = 'z') : prefix_(prefix) {}
  Symbol fresh(SymbolKind kind, Type type);
  Symbol fresh_local(Type type) {
    return fresh(SymbolKind::kLocal, std::move(type));
  }

 private:
  char prefix_;
  int next_ = 1;
};

// Capture-avoiding t[x <- u]. Throws TypeMismatch when u's type differs from
// x's.
Term substitute(const Term& t, const Symbol& x, const Term& u);

enum class Strategy {
  kNormalOrder,  // leftmost-outermost
  kInnermost,    // arguments and function bodies first
};

// Beta normal form (no eta step).
Term beta_normal(const Term& t, Strategy strategy = Strategy::kNormalOrder);

// Contracts every eta redex \x.(f x) with x not free in f, bottom-up.
Term eta_contract(const Term& t);

// The unique beta-eta normal form.
Term normalize(const Term& t, Strategy strategy = Strategy::kNormalOrder);

// Fully eta-expanded form of a beta-normal term. Throws NotNormal when the
// input still has a beta redex.
Term eta_long(const Term& t);

// eta_long(beta_normal(t)): the beta-normal eta-long form every module past
// the kernel works with.
Term long_normal(const Term& t);

// True iff t is beta-normal and eta-long.
bool is_long_normal(const Term& t);

// Alpha-renames every binder of t to a brand-new symbol, so that no binder
// object occurs twice and no binder shadows another.
Term freshen(const Term& t);

}  // namespace tom
