#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "homfib/lattice.hpp"

namespace homfib {

/// Stable machine-readable tags for the results a verdict rests on.
enum class Rule {
  DEF_KUNNETH,
  OBS_DISCONNECTED_FIBER,
  LEM_CONNECTED_FIBER_COVER,
  LEM_UNIPOTENT_HOMOTOPY,
  LEM_ROSENLICHT,
  PROP_CONNECTED_KERNEL_GROUP,
  THM_CONNECTED_KERNEL,
  COR_SPLIT_PRIMITIVE,
  COR_S0_CRITERION,
  RED_SOLVABLE_TORI,
  THM_CONVERSE,
  FACT_WEYL_INVARIANTS,
  THM_CENTRAL_TORUS,
  THM_CHARACTER_SURJECTIVE,
  THM_SEMIABELIAN,
  REM_ISOGENY_DECOMPOSITION,
  TABLE_SYMMETRIC_SPACE,
  NORMALIZE_CHARACTER_DESCENT,
  TABLE_MISS,
};

const std::vector<Rule>& all_rules();
std::string rule_name(Rule r);
/// Throws InputError for an unknown name.
Rule parse_rule(const std::string& name);
/// One-line statement of the result.
std::string rule_citation(Rule r);
/// Whether a justification chain may end with this rule.
bool is_terminal(Rule r);

struct JustificationStep {
  Rule rule;
  std::string citation;
  std::string witness;
  friend bool operator==(const JustificationStep&, const JustificationStep&) = default;
};

inline JustificationStep step(Rule r, std::string witness) {
  return {r, rule_citation(r), std::move(witness)};
}

enum class Result { trivial, not_trivial, undecidable_with_table };

std::string result_name(Result r);
Result parse_result(const std::string& name);

struct Verdict {
  Result result = Result::undecidable_with_table;
  std::vector<JustificationStep> justification;
  /// Smallest degree where the Kunneth identity fails; set for not_trivial.
  std::optional<std::size_t> failing_degree;
  /// Degree of the finite cover after which the fibration splits.
  std::optional<Integer> cover_degree;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace homfib
