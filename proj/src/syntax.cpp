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

#include "tom/syntax.hpp"

#include <cctype>
#include <set>
#include <utility>
#include <vector>

#include "tom/error.hpp"

namespace tom {
namespace {

enum class Tok {
  kIdent,
  kBackslash,
  kColon,
  kDot,
  kLParen,
  kRParen,
  kArrow,
  kEquals,
  kComma,
  kNewline,
  kEnd,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent:
      return "identifier";
    case Tok::kBackslash:
      return "'\\'";
    case Tok::kColon:
      return "':'";
    case Tok::kDot:
      return "'.'";
    case Tok::kLParen:
      return "'('";
    case Tok::kRParen:
      return "')'";
    case Tok::kArrow:
      return "'->'";
    case Tok::kEquals:
      return "'='";
    case Tok::kComma:
      return "','";
    case Tok::kNewline:
      return "end of line";
    case Tok::kEnd:
      return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s, int c) {
    out.push_back({k, std::move(s), line, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i, ++col;
      continue;
    }
    if (c == '\n') {
      push(Tok::kNewline, "", col);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    int start = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      push(Tok::kIdent, std::string(text.substr(i, j - i)), start);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Tok::kArrow, "->", start);
      i += 2;
      col += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '\\':
        k = Tok::kBackslash;
        break;
      case ':':
        k = Tok::kColon;
        break;
      case '.':
        k = Tok::kDot;
        break;
      case '(':
        k = Tok::kLParen;
        break;
      case ')':
        k = Tok::kRParen;
        break;
      case '=':
        k = Tok::kEquals;
        break;
      case ',':
        k = Tok::kComma;
        break;
      default:
        throw ParseError(line, start, "a token",
                         std::string("unexpected character '") + c + "'");
    }
    push(k, std::string(1, c), start);
    ++i;
    ++col;
  }
  push(Tok::kEnd, "", col);
  return out;
}

const std::set<std::string>& section_names() {
  static const std::set<std::string> names = {"types", "consts", "vars",
                                              "locals", "solve"};
  return names;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, Signature* sig)
      : tokens_(std::move(tokens)), sig_(sig) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  const Token& expect(Tok k, const std::string& what = "") {
    if (!at(k)) fail(what.empty() ? describe(k) : what);
    return take();
  }
  [[noreturn]] void fail(const std::string& expected,
                         const std::string& detail = "") const {
    const Token& t = peek();
    std::string found = t.kind == Tok::kIdent ? "'" + t.text + "'"
                                              : std::string(describe(t.kind));
    throw ParseError(t.line, t.column, expected,
                     detail.empty() ? "found " + found : detail);
  }

  void skip_newlines() {
    while (at(Tok::kNewline)) take();
  }

  Type type() {
    Type lhs = type_atom();
    if (at(Tok::kArrow)) {
      take();
      return Type::arrow(lhs, type());
    }
    return lhs;
  }

  Term term() {
    std::vector<Term> items;
    while (true) {
      if (at(Tok::kIdent)) {
        items.push_back(identifier());
      } else if (at(Tok::kLParen)) {
        take();
        items.push_back(term());
        expect(Tok::kRParen);
      } else if (at(Tok::kBackslash)) {
        items.push_back(lambda());
        break;
      } else {
        break;
      }
    }
    if (items.empty()) fail("a term");
    Term out = items.front();
    for (std::size_t i = 1; i < items.size(); ++i) {
      out = Term::app(out, items[i]);
    }
    return out;
  }

  bool at_section_header() const {
    return peek().kind == Tok::kIdent && section_names().count(peek().text) &&
           peek(1).kind == Tok::kColon;
  }

  MatchingProblem problem() {
    MatchingProblem p;
    while (true) {
      skip_newlines();
      if (at(Tok::kEnd)) break;
      if (!at_section_header()) fail("a section header");
      std::string section = take().text;
      take();
      if (section == "solve") {
        sig_->complete();
        equations(p);
        break;
      }
      if (section == "types") {
        list([&] {
          const Token& name = declared_name();
          sig_->add_atomic_type(name.text);
        });
      } else {
        list([&] { declaration(section); });
      }
    }
    p.signature = *sig_;
    return p;
  }

 private:
  Type type_atom() {
    if (at(Tok::kLParen)) {
      take();
      Type t = type();
      expect(Tok::kRParen);
      return t;
    }
    const Token& name = peek();
    if (name.kind != Tok::kIdent) fail("a type");
    auto atom = sig_->atomic_type(name.text);
    if (!atom) fail("a declared atomic type", "unknown type '" + name.text + "'");
    take();
    return *atom;
  }

  Term identifier() {
    const Token& tok = peek();
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == tok.text) {
        take();
        return Term::var(it->second);
      }
    }
    auto sym = sig_->lookup(tok.text);
    if (!sym) {
      fail("a declared identifier", "undeclared identifier '" + tok.text + "'");
    }
    take();
    return Term::var(*sym);
  }

  Term lambda() {
    expect(Tok::kBackslash);
    const Token& name = declared_name();
    std::string binder = name.text;
    expect(Tok::kColon);
    Type ty = type();
    expect(Tok::kDot);
    Symbol s = Symbol::make(binder, SymbolKind::kLocal, ty);
    scope_.emplace_back(binder, s);
    Term body = term();
    scope_.pop_back();
    return Term::lam(s, body);
  }

  const Token& declared_name() {
    const Token& name = peek();
    if (name.kind != Tok::kIdent) fail("a name");
    if (name.text[0] == '_') {
      fail("a name", "names starting with '_' are reserved");
    }
    return take();
  }

  // Entries separated by commas or newlines, up to the next header.
  template <typename F>
  void list(F entry) {
    while (true) {
      while (at(Tok::kNewline) || at(Tok::kComma)) take();
      if (at(Tok::kEnd) || at_section_header()) return;
      entry();
      if (!at(Tok::kNewline) && !at(Tok::kComma) && !at(Tok::kEnd)) {
        fail("',' or end of line");
      }
    }
  }

  void declaration(const std::string& section) {
    const Token& name = declared_name();
    std::string id = name.text;
    int line = name.line;
    int column = name.column;
    expect(Tok::kColon);
    Type ty = type();
    try {
      if (section == "consts") {
        sig_->add_constant(id, ty);
      } else if (section == "vars") {
        sig_->add_instantiable(id, ty);
      } else {
        sig_->add_local(id, ty);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line, column, "a fresh name", e.what());
    }
  }

  void equations(MatchingProblem& p) {
    while (true) {
      skip_newlines();
      if (at(Tok::kEnd)) return;
      if (at_section_header()) {
        fail("an equation", "declarations must precede the solve section");
      }
      Term lhs = term();
      expect(Tok::kEquals);
      Term rhs = term();
      if (!at(Tok::kNewline) && !at(Tok::kEnd)) fail("end of line");
      p.equations.push_back({lhs, rhs});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Signature* sig_;
  std::vector<std::pair<std::string, Symbol>> scope_;
};

class Printer {
 public:
  Printer(const Signature* sig, const Term& t) {
    if (sig) {
      for (const std::string& n : sig->names()) reserved_.insert(n);
    }
    for (const Symbol& s : free_symbols(t)) reserved_.insert(s.name());
  }

  std::string term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVar:
        return name_of(t.symbol());
      case Term::Kind::kLam: {
        std::string name = pick(t.symbol());
        std::string out = "\\" + name + ":" + t.symbol().type().to_string() +
                          ". ";
        scope_.emplace_back(t.symbol(), name);
        out += term(t.body());
        scope_.pop_back();
        return out;
      }
      case Term::Kind::kApp: {
        std::vector<Term> args;
        Term head = app_head(t, &args);
        std::string out = "(";
        out += head.is_lam() ? "(" + term(head) + ")" : term(head);
        for (std::size_t i = 0; i < args.size(); ++i) {
          out += ' ';
          bool wrap = args[i].is_lam() && i + 1 < args.size();
          out += wrap ? "(" + term(args[i]) + ")" : term(args[i]);
        }
        return out + ")";
      }
    }
    return "?";
  }

 private:
  std::string name_of(const Symbol& s) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == s) return it->second;
    }
    return s.name();
  }

  bool taken(const std::string& name) const {
    if (reserved_.count(name)) return true;
    for (const auto& [sym, n] : scope_) {
      if (n == name) return true;
    }
    return false;
  }

  std::string pick(const Symbol& binder) const {
    const std::string& own = binder.name();
    if (!own.empty() && own[0] != '_' && !taken(own)) return own;
    static const char* const kFunctional[] = {"f", "g", "h", "k"};
    static const char* const kAtomic[] = {"y", "z", "w", "u", "v"};
    bool fn = binder.type().is_arrow();
    for (int round = 0;; ++round) {
      std::string suffix = round == 0 ? "" : std::to_string(round);
      if (fn) {
        for (const char* base : kFunctional) {
          if (!taken(base + suffix)) return base + suffix;
        }
      } else {
        for (const char* base : kAtomic) {
          if (!taken(base + suffix)) return base + suffix;
        }
      }
    }
  }

  std::set<std::string> reserved_;
  std::vector<std::pair<Symbol, std::string>> scope_;
};

}  // namespace

MatchingProblem parse_problem(std::string_view text) {
  Signature sig;
  Parser parser(lex(text), &sig);
  return parser.problem();
}

Type parse_type(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  Parser parser(lex(text), &copy);
  Type t = parser.type();
  parser.skip_newlines();
  if (!parser.at(Tok::kEnd)) parser.fail("end of input");
  return t;
}

Term parse_term(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  Parser parser(lex(text), &copy);
  Term t = parser.term();
  parser.skip_newlines();
  if (!parser.at(Tok::kEnd)) parser.fail("end of input");
  return t;
}

std::string print_type(const Type& type) { return type.to_string(); }

std::string print_term(const Term& t, const Signature* sig) {
  return Printer(sig, t).term(t);
}

std::string print_substitution(const Substitution& sigma,
                               const Signature* sig) {
  std::string out;
  for (const auto& [x, t] : sigma) {
    out += x.name() + " <- " + print_term(t, sig) + "\n";
  }
  return out;
}

}  // namespace tom
