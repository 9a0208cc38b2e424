#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace aims {

enum class CnfErrorKind {
  MissingHeader,
  VariableOutOfRange,
  ClauseTooLong,
  EmptyClause,
  TautologicalClause,
  LengthMismatch,
  IndexOutOfRange,
};

class CnfError : public std::runtime_error {
 public:
  CnfError(CnfErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  CnfErrorKind kind() const { return kind_; }

 private:
  CnfErrorKind kind_;
};

/// One literal. Variables are 0-based internally; DIMACS I/O converts
/// to/from the 1-based convention.
struct Literal {
  int var = 0;
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

/// Disjunction of 1..3 literals over distinct variables.
struct Clause {
  std::vector<Literal> lits;

  bool operator==(const Clause&) const = default;
};

using Assignment = std::vector<uint8_t>;  // values in {0,1}

/// Immutable CNF formula with clauses of at most 3 literals.
class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(int num_vars, std::vector<Clause> clauses);

  int num_vars() const { return num_vars_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Clause indices containing each variable.
  const std::vector<std::vector<int>>& occurrences() const { return occ_; }

  bool operator==(const CnfFormula& o) const {
    return num_vars_ == o.num_vars_ && clauses_ == o.clauses_;
  }

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> occ_;
};

/// Parse a DIMACS CNF byte stream. Clauses with more than 3 literals are
/// rejected (this is a 3-SAT machine). Tautological clauses are rejected;
/// duplicate literals within a clause are deduplicated, with a note
/// appended to `warnings` when given.
CnfFormula parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
CnfFormula parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr);
CnfFormula parse_dimacs_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

void write_dimacs(const CnfFormula& f, std::ostream& out);
std::string to_dimacs(const CnfFormula& f);

bool literal_satisfied(const Literal& l, const Assignment& a);

/// Number of clauses unsatisfied under `a`; 0 iff `a` satisfies `f`.
int count_unsat(const CnfFormula& f, const Assignment& a);

struct MakeBreak {
  int make = 0;   // clauses flipping var would newly satisfy
  int brk = 0;    // clauses flipping var would newly unsatisfy
};

/// Make/break counts for flipping variable `var` (0-based) under `a`.
MakeBreak make_break_counts(const CnfFormula& f, const Assignment& a, int var);

/// Make/break counts for every variable in one pass over the clauses.
std::vector<MakeBreak> all_make_break(const CnfFormula& f, const Assignment& a);

}  // namespace aims
