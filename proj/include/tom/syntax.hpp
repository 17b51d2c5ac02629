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

#include <string>
#include <string_view>

#include "tom/matcher.hpp"
#include "tom/signature.hpp"
#include "tom/substitution.hpp"
#include "tom/term.hpp"

namespace tom {

// Problem files:
//
//   types:  T, U
//   consts: a : T, f : T -> T
//   vars:   x : T -> (T -> T) -> T
//   locals: y : T
//   solve:
//     \a:T. (x a \z:T. z) = \a:T. a
//
// Entries are separated by commas or newlines, `#` starts a comment, and
// every equation sits on its own line. Names starting with `_` are reserved.
// The signature is completed when the solve section starts. Throws
// ParseError on malformed input.
MatchingProblem parse_problem(std::string_view text);

// Atoms must be declared in sig.
Type parse_type(std::string_view text, const Signature& sig);
// Free identifiers are looked up in sig.
Term parse_term(std::string_view text, const Signature& sig);

std::string print_type(const Type& type);
// Output that parse_term reads back to an alpha-equal term. Binders are
// renamed when their name is reserved or would clash with a name of sig or
// a free symbol of t.
std::string print_term(const Term& t, const Signature* sig = nullptr);
// One `x <- term` line per binding.
std::string print_substitution(const Substitution& sigma,
                               const Signature* sig = nullptr);

}  // namespace tom
