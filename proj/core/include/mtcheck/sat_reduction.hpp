#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtcheck/analyzer.hpp"
#include "mtcheck/term.hpp"
#include "mtcheck/trace.hpp"

namespace mtc::sat {

struct Literal {
  /// 1-based variable index.
  std::uint32_t variable = 1;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// A 3-CNF formula: exactly three literals per clause.
struct CnfFormula3 {
  std::uint32_t num_vars = 0;
  std::vector<Clause> clauses;

  /// Throws MalformedFormula unless num_vars >= 1, clauses non-empty and
  /// every variable index lies in [1, num_vars].
  void validate() const;
  /// True if no clause repeats a literal.
  bool duplicate_free() const;
  std::string to_string() const;
};

/// Assignment of v1..vp, index 0 holding v1.
using Assignment = std::vector<bool>;

constexpr std::uint32_t kMaxBruteForceVars = 24;

/// Whether every clause has exactly one true literal, counting repeated
/// literals as many times as they occur.
bool satisfies_1in3(const CnfFormula3& formula, const Assignment& rho);

/// First satisfying assignment in lexicographic order over v1, v2, ...,
/// with true tried before false. Throws TooLarge above kMaxBruteForceVars
/// variables.
std::optional<Assignment> brute_force_1in3(const CnfFormula3& formula);

/// Every satisfying assignment, in the same order.
std::vector<Assignment> all_1in3_solutions(const CnfFormula3& formula);

/// Membership instance equivalent to the 1-in-3 problem of a formula:
/// lifelines l1..lq, one message m, the interaction par over variables of
/// alt(positive branch, negative branch), each branch a right-folded seq
/// over clauses, and the multi-trace (l1!m, ..., lq!m).
struct Instance {
  Signature signature;
  Term term;
  MultiTrace mu;
};

Instance reduce(const CnfFormula3& formula);

struct ReductionCheck {
  std::optional<Assignment> assignment;
  GlobalVerdict verdict = GlobalVerdict::Fail;

  bool satisfiable() const { return assignment.has_value(); }
  /// Oracle and membership analysis agree.
  bool consistent() const {
    return satisfiable() == (verdict == GlobalVerdict::Pass);
  }
};

ReductionCheck check_reduction(const CnfFormula3& formula,
                               const SearchConfig& config = {});

inline bool verify_reduction(const CnfFormula3& formula) {
  return check_reduction(formula).consistent();
}

/// DIMACS restricted to three literals per clause line:
///   c comment
///   p cnf <vars> <clauses>
///   1 -2 4 0
/// Throws MalformedFormula.
CnfFormula3 parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfFormula3& formula);

std::string to_string(const Assignment& rho);

}  // namespace mtc::sat
