#include "mtcheck/sat_reduction.hpp"

#include <sstream>

#include "mtcheck/error.hpp"

namespace mtc::sat {

namespace {

std::string lifeline_name(std::size_t clause) {
  return "l" + std::to_string(clause + 1);
}

constexpr const char* kMessage = "m";

bool literal_value(const Literal& lit, const Assignment& rho) {
  return rho[lit.variable - 1] == lit.positive;
}

// Emissions l_j!m contributed by `lit` to clause j: one per occurrence.
Term clause_part(const Clause& clause, std::size_t j, const Literal& lit) {
  std::vector<Term> leaves;
  for (const auto& candidate : clause) {
    if (candidate == lit) {
      leaves.push_back(Term::action(Action::emit(lifeline_name(j), kMessage)));
    }
  }
  return Term::fold(Op::Seq, leaves);
}

Term branch(const CnfFormula3& formula, const Literal& lit) {
  std::vector<Term> parts;
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    parts.push_back(clause_part(formula.clauses[j], j, lit));
  }
  return Term::fold(Op::Seq, parts);
}

std::optional<Assignment> search(const CnfFormula3& formula, bool all,
                                 std::vector<Assignment>* sink) {
  formula.validate();
  if (formula.num_vars > kMaxBruteForceVars) {
    throw Error(Errc::TooLarge, std::to_string(formula.num_vars) +
                                    " variables exceed the brute-force limit of " +
                                    std::to_string(kMaxBruteForceVars));
  }
  const std::uint64_t count = std::uint64_t{1} << formula.num_vars;
  Assignment rho(formula.num_vars);
  // Lexicographic in v1, v2, ..., trying true before false.
  const std::uint32_t last = formula.num_vars - 1;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    for (std::uint32_t v = 0; v < formula.num_vars; ++v) {
      rho[v] = ((bits >> (last - v)) & 1u) == 0;
    }
    if (satisfies_1in3(formula, rho)) {
      if (!all) return rho;
      sink->push_back(rho);
    }
  }
  return std::nullopt;
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(Errc::MalformedFormula,
              "line " + std::to_string(line) + ": " + what);
}

}  // namespace

void CnfFormula3::validate() const {
  if (num_vars < 1) throw Error(Errc::MalformedFormula, "no variables");
  if (clauses.empty()) throw Error(Errc::MalformedFormula, "no clauses");
  for (const auto& clause : clauses) {
    for (const auto& lit : clause) {
      if (lit.variable < 1 || lit.variable > num_vars) {
        throw Error(Errc::MalformedFormula,
                    "variable " + std::to_string(lit.variable) +
                        " outside [1, " + std::to_string(num_vars) + "]");
      }
    }
  }
}

bool CnfFormula3::duplicate_free() const {
  for (const auto& c : clauses) {
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) return false;
  }
  return true;
}

std::string CnfFormula3::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    if (j) out += " & ";
    out += "(";
    for (std::size_t k = 0; k < 3; ++k) {
      if (k) out += " | ";
      if (!clauses[j][k].positive) out += "~";
      out += "v" + std::to_string(clauses[j][k].variable);
    }
    out += ")";
  }
  return out;
}

bool satisfies_1in3(const CnfFormula3& formula, const Assignment& rho) {
  if (rho.size() != formula.num_vars) return false;
  for (const auto& clause : formula.clauses) {
    int true_literals = 0;
    for (const auto& lit : clause) true_literals += literal_value(lit, rho);
    if (true_literals != 1) return false;
  }
  return true;
}

std::optional<Assignment> brute_force_1in3(const CnfFormula3& formula) {
  return search(formula, false, nullptr);
}

std::vector<Assignment> all_1in3_solutions(const CnfFormula3& formula) {
  std::vector<Assignment> out;
  search(formula, true, &out);
  return out;
}

Instance reduce(const CnfFormula3& formula) {
  formula.validate();
  std::vector<std::string> lifelines;
  std::vector<GlobalTrace> components;
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    lifelines.push_back(lifeline_name(j));
    components.push_back({Action::emit(lifeline_name(j), kMessage)});
  }
  std::vector<Term> choices;
  for (std::uint32_t v = 1; v <= formula.num_vars; ++v) {
    choices.push_back(Term::alt(branch(formula, Literal{v, true}),
                                branch(formula, Literal{v, false})));
  }
  return Instance{Signature(std::move(lifelines), {kMessage}),
                  Term::fold(Op::Par, choices),
                  MultiTrace(std::move(components))};
}

ReductionCheck check_reduction(const CnfFormula3& formula,
                               const SearchConfig& config) {
  ReductionCheck check;
  check.assignment = brute_force_1in3(formula);
  auto instance = reduce(formula);
  check.verdict = omega(instance.term, instance.mu, config);
  return check;
}

CnfFormula3 parse_dimacs(const std::string& text) {
  CnfFormula3 formula;
  std::optional<std::size_t> declared_clauses;
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first == "c" || first.front() == 'c') continue;
    if (first == "p") {
      std::string format;
      long long vars = 0, count = 0;
      if (declared_clauses) malformed(number, "duplicate header");
      if (!(tokens >> format >> vars >> count) || format != "cnf") {
        malformed(number, "expected 'p cnf <vars> <clauses>'");
      }
      std::string extra;
      if (tokens >> extra) malformed(number, "trailing tokens in header");
      if (vars < 1 || count < 1) malformed(number, "empty formula");
      formula.num_vars = static_cast<std::uint32_t>(vars);
      declared_clauses = static_cast<std::size_t>(count);
      continue;
    }
    if (!declared_clauses) malformed(number, "clause before header");

    std::vector<long long> values;
    std::istringstream all(line);
    std::string token;
    while (all >> token) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        malformed(number, "bad literal '" + token + "'");
      }
    }
    if (values.empty() || values.back() != 0) {
      malformed(number, "clause must be terminated by 0");
    }
    values.pop_back();
    if (values.size() != 3) {
      malformed(number, "expected exactly 3 literals, got " +
                            std::to_string(values.size()));
    }
    Clause clause;
    for (std::size_t k = 0; k < 3; ++k) {
      long long v = values[k];
      if (v == 0) malformed(number, "literal 0 inside clause");
      auto magnitude = static_cast<std::uint64_t>(v < 0 ? -v : v);
      if (magnitude > formula.num_vars) {
        malformed(number, "variable " + std::to_string(magnitude) +
                              " exceeds declared count");
      }
      clause[k] = Literal{static_cast<std::uint32_t>(magnitude), v > 0};
    }
    formula.clauses.push_back(clause);
  }
  if (!declared_clauses) throw Error(Errc::MalformedFormula, "missing header");
  if (formula.clauses.size() != *declared_clauses) {
    throw Error(Errc::MalformedFormula,
                "header declares " + std::to_string(*declared_clauses) +
                    " clauses, found " + std::to_string(formula.clauses.size()));
  }
  formula.validate();
  return formula;
}

std::string to_dimacs(const CnfFormula3& formula) {
  std::string out = "p cnf " + std::to_string(formula.num_vars) + " " +
                    std::to_string(formula.clauses.size()) + "\n";
  for (const auto& clause : formula.clauses) {
    for (const auto& lit : clause) {
      out += (lit.positive ? "" : "-") + std::to_string(lit.variable) + " ";
    }
    out += "0\n";
  }
  return out;
}

std::string to_string(const Assignment& rho) {
  std::string out;
  for (std::size_t v = 0; v < rho.size(); ++v) {
    if (v) out += " ";
    out += "v" + std::to_string(v + 1) + "=" + (rho[v] ? "T" : "F");
  }
  return out;
}

}  // namespace mtc::sat
