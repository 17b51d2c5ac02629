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

#include "tom/cli.hpp"

#include <json.hpp>
#include <sstream>
#include <vector>

#include "tom/bohm.hpp"
#include "tom/error.hpp"
#include "tom/proofkit.hpp"
#include "tom/syntax.hpp"

namespace tom {
namespace {

using Json = nlohmann::ordered_json;

const char* verdict_name(Verdict v) {
  return v == Verdict::kSolved ? "solved" : "unsolvable";
}

Json stats_json(const SearchStats& s) {
  Json j;
  j["candidates_tested"] = s.candidates_tested;
  j["nodes_expanded"] = s.nodes_expanded;
  j["max_depth_used"] = s.max_depth_used;
  j["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(s.elapsed).count();
  return j;
}

std::string stats_line(const char* engine, const SearchStats& s) {
  std::ostringstream os;
  os << "stats " << engine << ": candidates_tested=" << s.candidates_tested
     << " nodes_expanded=" << s.nodes_expanded
     << " max_depth_used=" << s.max_depth_used << " elapsed_ms="
     << std::chrono::duration<double, std::milli>(s.elapsed).count() << "\n";
  return os.str();
}

Json substitution_json(const Substitution& sigma, const Signature& sig) {
  Json j = Json::object();
  for (const auto& [x, t] : sigma) j[x.name()] = print_term(t, &sig);
  return j;
}

std::vector<std::string> bound_warnings(const MatchingProblem& p,
                                        const RunConfig& config) {
  std::vector<std::string> out;
  if (!config.max_depth) return out;
  BoundMap proved = depth_bounds(p);
  for (const auto& [x, b] : proved) {
    if (*config.max_depth < b) {
      out.push_back("--max-depth " + std::to_string(*config.max_depth) +
                    " is below the proved bound " + std::to_string(b) +
                    " for " + x.name() +
                    "; an UNSOLVABLE verdict is not conclusive");
    } else if (*config.max_depth > b) {
      out.push_back("--max-depth " + std::to_string(*config.max_depth) +
                    " departs from the proved bound " + std::to_string(b) +
                    " for " + x.name());
    }
  }
  return out;
}

RunOutput decide(const RunConfig& config, const MatchingProblem& p) {
  RunOutput r;
  SolveOptions opts;
  opts.max_depth = config.max_depth;
  opts.threads = config.threads;
  std::vector<std::string> warnings = bound_warnings(p, config);

  std::vector<std::pair<const char*, SolveResult>> results;
  if (config.engine != Engine::kHuet) {
    results.emplace_back("brute", solve_brute(p, opts));
  }
  if (config.engine != Engine::kBrute) {
    results.emplace_back("huet", solve_huet_pruned(p, opts));
  }
  const SolveResult& first = results.front().second;
  for (const auto& [name, res] : results) {
    if (res.solved() && !verify_solution(p, res.solution)) {
      r.err += std::string("error: the ") + name +
               " engine returned a substitution that does not verify\n";
      return r;
    }
  }
  bool agree = true;
  for (const auto& [name, res] : results) {
    agree = agree && res.verdict == first.verdict;
  }

  if (config.json) {
    Json j;
    j["verdict"] = agree ? verdict_name(first.verdict) : "disagreement";
    j["engines"] = Json::array();
    for (const auto& [name, res] : results) {
      Json e;
      e["engine"] = name;
      e["verdict"] = verdict_name(res.verdict);
      e["stats"] = stats_json(res.stats);
      j["engines"].push_back(e);
    }
    Json bounds = Json::object();
    for (const auto& [x, b] : depth_bounds(p)) bounds[x.name()] = b;
    j["h"] = problem_h(p);
    j["bounds"] = bounds;
    j["max_depth_override"] =
        config.max_depth ? Json(*config.max_depth) : Json(nullptr);
    j["substitution"] = first.solved()
                            ? substitution_json(first.solution, p.signature)
                            : Json(nullptr);
    j["warnings"] = warnings;
    r.out = j.dump(2) + "\n";
  } else {
    for (const std::string& w : warnings) r.err += "warning: " + w + "\n";
    if (first.solved()) {
      r.out = print_substitution(first.solution, &p.signature);
    } else {
      r.out = "UNSOLVABLE\n";
    }
    if (config.stats) {
      for (const auto& [name, res] : results) {
        r.out += stats_line(name, res.stats);
      }
    }
  }
  if (!agree) {
    r.err += "error: engines disagree on the verdict\n";
    r.exit_code = kExitError;
    return r;
  }
  r.exit_code = first.solved() ? kExitSolved : kExitUnsolvable;
  return r;
}

RunOutput enumerate(const RunConfig& config, const MatchingProblem& p) {
  RunOutput r;
  CompleteSetOptions opts;
  opts.node_limit = config.node_limit;
  CompleteSetStream stream = enumerate_complete_set(p, opts);
  Json solutions = Json::array();
  int found = 0;
  while (found < config.enumerate_k) {
    std::optional<Substitution> sigma = stream.next();
    if (!sigma) break;
    ++found;
    if (config.json) {
      solutions.push_back(substitution_json(*sigma, p.signature));
    } else {
      r.out += "solution " + std::to_string(found) + "\n";
      r.out += print_substitution(*sigma, &p.signature);
    }
  }
  const char* status = stream.finished()        ? "complete"
                       : stream.limit_reached() ? "node-limit"
                                                : "more";
  if (config.json) {
    Json j;
    j["verdict"] = found > 0 ? "solved" : (stream.finished() ? "unsolvable"
                                                             : "unknown");
    j["solutions"] = solutions;
    j["status"] = status;
    j["stats"] = stats_json(stream.stats());
    r.out = j.dump(2) + "\n";
  } else {
    if (found == 0 && stream.finished()) r.out += "UNSOLVABLE\n";
    r.out += std::string("status: ") + status + "\n";
    if (config.stats) r.out += stats_line("enumerate", stream.stats());
  }
  if (found > 0) {
    r.exit_code = kExitSolved;
  } else if (stream.finished()) {
    r.exit_code = kExitUnsolvable;
  } else {
    r.err += "error: node limit reached before any solution was found\n";
    r.exit_code = kExitError;
  }
  return r;
}

RunOutput proofkit(const RunConfig& config, const MatchingProblem& p) {
  RunOutput r;
  SolveOptions opts;
  opts.threads = config.threads;
  SolveResult res = solve_brute(p, opts);
  bool ok = true;
  auto check = [&](const std::string& what, bool passed) {
    r.out += (passed ? "ok     " : "FAILED ") + what + "\n";
    ok = ok && passed;
  };
  if (res.solved()) {
    Substitution sigma = ground_extend(res.solution, p);
    r.out += "solution\n" + print_substitution(sigma, &p.signature);
    InterpolationProblem phi = build_interpolation(p, sigma);
    r.out += "interpolation problem\n";
    for (const InterpolationEquation& eq : phi) {
      std::string line = "  (" + eq.x.name();
      for (const Term& c : eq.args) line += " " + print_term(c, &p.signature);
      r.out += line + ") = " + print_term(eq.rhs, &p.signature) + "\n";
    }
    check("the solution solves the interpolation problem", solves(phi, sigma));
    int h = problem_h(p);
    bool rhs_ok = interpolation_h(phi) <= h;
    check("every interpolation rhs has depth <= " + std::to_string(h), rhs_ok);
    Substitution hat = accessible_solution(sigma, phi, p.signature);
    Substitution compact = compact_accessible_solution(hat, phi);
    r.out += "compact accessible solution\n" +
             print_substitution(compact, &p.signature);
    check("it solves the problem", verify_solution(p, compact));
    bool bounded = true;
    for (const auto& [x, b] : depth_bounds(p)) {
      if (const Term* t = compact.find(x)) bounded = bounded && depth(*t) <= b;
    }
    check("every image is within its depth bound", bounded);
  } else {
    r.out += "UNSOLVABLE\n";
  }
  if (!p.signature.atomic_types().empty()) {
    Type u = p.signature.atomic_types().front();
    Symbol y = Symbol::make("y", SymbolKind::kLocal, Type::arrow(u, u));
    KeyLemmaSweep sweep = key_lemma_sweep(p.signature, y, {u}, 2);
    check("key lemma on " + std::to_string(sweep.triples) + " triples",
          sweep.violations == 0);
    for (const std::string& e : sweep.examples) r.out += "  " + e + "\n";
  }
  r.exit_code = !ok ? kExitError : res.solved() ? kExitSolved : kExitUnsolvable;
  return r;
}

}  // namespace

RunOutput run(const RunConfig& config, const MatchingProblem& parsed) {
  try {
    MatchingProblem p = validate(parsed);
    switch (config.mode) {
      case Mode::kDecide:
        return decide(config, p);
      case Mode::kEnumerate:
        return enumerate(config, p);
      case Mode::kProofkit:
        return proofkit(config, p);
    }
  } catch (const Error& e) {
    RunOutput r;
    r.err = std::string("error: ") + e.what() + "\n";
    return r;
  }
  return {};
}

RunOutput run_text(const RunConfig& config, std::string_view text) {
  MatchingProblem p;
  try {
    p = parse_problem(text);
  } catch (const Error& e) {
    RunOutput r;
    r.err = std::string("error: ") + e.what() + "\n";
    return r;
  }
  return run(config, p);
}

}  // namespace tom
