#include "aims/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace aims {

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)), occ_(num_vars) {
  for (int ci = 0; ci < static_cast<int>(clauses_.size()); ++ci) {
    const Clause& c = clauses_[ci];
    if (c.lits.empty())
      throw CnfError(CnfErrorKind::EmptyClause, "empty clause");
    if (c.lits.size() > 3)
      throw CnfError(CnfErrorKind::ClauseTooLong,
                     "clause size must be 1..3, got " + std::to_string(c.lits.size()));
    for (const Literal& l : c.lits) {
      if (l.var < 0 || l.var >= num_vars_)
        throw CnfError(CnfErrorKind::VariableOutOfRange,
                       "variable index " + std::to_string(l.var + 1) + " out of range");
      occ_[l.var].push_back(ci);
    }
    for (size_t i = 0; i < c.lits.size(); ++i)
      for (size_t j = i + 1; j < c.lits.size(); ++j)
        if (c.lits[i].var == c.lits[j].var)
          throw CnfError(CnfErrorKind::TautologicalClause,
                         "duplicate variable in clause " + std::to_string(ci + 1));
  }
}

CnfFormula parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  int num_vars = -1;
  int num_clauses = -1;
  std::vector<Clause> clauses;
  std::vector<int> cur;  // pending DIMACS literals of the current clause

  auto flush_clause = [&](int clause_no) {
    if (cur.empty())
      throw CnfError(CnfErrorKind::EmptyClause,
                     "empty clause " + std::to_string(clause_no) +
                         ": formula is trivially unsatisfiable");
    // dedup identical literals, reject x together with -x
    std::vector<int> uniq;
    for (int lit : cur) {
      if (std::find(uniq.begin(), uniq.end(), -lit) != uniq.end())
        throw CnfError(CnfErrorKind::TautologicalClause,
                       "clause " + std::to_string(clause_no) +
                           " contains variable " + std::to_string(std::abs(lit)) +
                           " in both polarities");
      if (std::find(uniq.begin(), uniq.end(), lit) != uniq.end()) {
        if (warnings)
          warnings->push_back("clause " + std::to_string(clause_no) +
                              ": duplicate literal " + std::to_string(lit) +
                              " removed");
        continue;
      }
      uniq.push_back(lit);
    }
    if (uniq.size() > 3)
      throw CnfError(CnfErrorKind::ClauseTooLong,
                     "clause " + std::to_string(clause_no) + " has " +
                         std::to_string(uniq.size()) + " literals (max 3)");
    Clause c;
    for (int lit : uniq) {
      int v = std::abs(lit) - 1;
      if (v >= num_vars)
        throw CnfError(CnfErrorKind::VariableOutOfRange,
                       "literal " + std::to_string(lit) + " exceeds declared " +
                           std::to_string(num_vars) + " variables");
      c.lits.push_back({v, lit < 0});
    }
    clauses.push_back(std::move(c));
    cur.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok.empty() || tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      ls >> fmt >> num_vars >> num_clauses;
      if (fmt != "cnf" || num_vars < 0 || num_clauses < 0 || ls.fail())
        throw CnfError(CnfErrorKind::MissingHeader, "malformed problem line: " + line);
      continue;
    }
    if (tok == "%") break;  // SATLIB trailer
    if (num_vars < 0)
      throw CnfError(CnfErrorKind::MissingHeader, "clause data before 'p cnf' header");
    std::istringstream rest(line);
    int lit;
    while (rest >> lit) {
      if (lit == 0)
        flush_clause(static_cast<int>(clauses.size()) + 1);
      else
        cur.push_back(lit);
    }
  }
  if (num_vars < 0)
    throw CnfError(CnfErrorKind::MissingHeader, "no 'p cnf' header found");
  if (!cur.empty()) flush_clause(static_cast<int>(clauses.size()) + 1);
  if (num_clauses >= 0 && static_cast<int>(clauses.size()) != num_clauses && warnings)
    warnings->push_back("header declares " + std::to_string(num_clauses) +
                        " clauses, found " + std::to_string(clauses.size()));
  return CnfFormula(num_vars, std::move(clauses));
}

CnfFormula parse_dimacs(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_dimacs(in, warnings);
}

CnfFormula parse_dimacs_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dimacs(in, warnings);
}

void write_dimacs(const CnfFormula& f, std::ostream& out) {
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const Clause& c : f.clauses()) {
    for (const Literal& l : c.lits) out << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
    out << "0\n";
  }
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  write_dimacs(f, out);
  return out.str();
}

bool literal_satisfied(const Literal& l, const Assignment& a) {
  return (a[l.var] != 0) != l.negated;
}

static void check_len(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.num_vars())
    throw CnfError(CnfErrorKind::LengthMismatch,
                   "assignment length " + std::to_string(a.size()) +
                       " != num_vars " + std::to_string(f.num_vars()));
}

int count_unsat(const CnfFormula& f, const Assignment& a) {
  check_len(f, a);
  int unsat = 0;
  for (const Clause& c : f.clauses()) {
    bool sat = false;
    for (const Literal& l : c.lits)
      if (literal_satisfied(l, a)) { sat = true; break; }
    if (!sat) ++unsat;
  }
  return unsat;
}

MakeBreak make_break_counts(const CnfFormula& f, const Assignment& a, int var) {
  check_len(f, a);
  if (var < 0 || var >= f.num_vars())
    throw CnfError(CnfErrorKind::IndexOutOfRange,
                   "variable index " + std::to_string(var) + " out of range");
  MakeBreak mb;
  for (int ci : f.occurrences()[var]) {
    const Clause& c = f.clauses()[ci];
    int true_count = 0;
    bool own_true = false;
    for (const Literal& l : c.lits) {
      if (literal_satisfied(l, a)) {
        ++true_count;
        if (l.var == var) own_true = true;
      }
    }
    if (true_count == 0)
      ++mb.make;  // unsat clause containing var: flipping var satisfies it
    else if (true_count == 1 && own_true)
      ++mb.brk;   // var is the sole satisfying literal
  }
  return mb;
}

std::vector<MakeBreak> all_make_break(const CnfFormula& f, const Assignment& a) {
  check_len(f, a);
  std::vector<MakeBreak> mb(f.num_vars());
  for (const Clause& c : f.clauses()) {
    int true_count = 0;
    int crit = -1;
    for (const Literal& l : c.lits) {
      if (literal_satisfied(l, a)) {
        ++true_count;
        crit = l.var;
      }
    }
    if (true_count == 0)
      for (const Literal& l : c.lits) ++mb[l.var].make;
    else if (true_count == 1)
      ++mb[crit].brk;
  }
  return mb;
}

}  // namespace aims
