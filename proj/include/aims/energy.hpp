#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aims/cnf.hpp"

namespace aims {

using PairKey = std::pair<int, int>;          // i < j
using TripleKey = std::array<int, 3>;         // i < j < k

/// Cubic pseudo-Boolean energy in the convention
///   H(v) = constant - sum_n l_n v_n - sum_{n<j} q_nj v_n v_j
///                   - sum_{n<j<k} c_njk v_n v_j v_k.
/// Zero coefficients are never stored.
class PuboPolynomial {
 public:
  PuboPolynomial() = default;
  explicit PuboPolynomial(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  double constant() const { return constant_; }
  const std::map<int, double>& linear() const { return linear_; }
  const std::map<PairKey, double>& quadratic() const { return quadratic_; }
  const std::map<TripleKey, double>& cubic() const { return cubic_; }

  double linear_at(int n) const;
  double quadratic_at(int n, int j) const;
  double cubic_at(int n, int j, int k) const;

  void set_constant(double c) { constant_ = c; }
  /// Adds `coeff * v_n` worth of monomial to H (stored as l_n -= coeff etc.).
  void add_monomial_linear(int n, double coeff);
  void add_monomial_quadratic(int n, double coeff, int j);
  void add_monomial_cubic(int n, int j, int k, double coeff);
  void add_monomial_constant(double coeff) { constant_ += coeff; }

  bool operator==(const PuboPolynomial&) const = default;

 private:
  int num_vars_ = 0;
  double constant_ = 0.0;
  std::map<int, double> linear_;
  std::map<PairKey, double> quadratic_;
  std::map<TripleKey, double> cubic_;
};

/// Quadratic-only problem in plain monomial convention
///   E(x) = constant + sum_i linear_i x_i + sum_{i<j} quad_ij x_i x_j,
/// with auxiliary-variable bookkeeping from quadratization. Auxiliary
/// variable a (index >= num_original) substitutes either the pair product
/// aux_map[a] (Rosenberg) or an entire cubic term (KZFD).
struct QuboProblem {
  int num_vars = 0;       // originals + auxiliaries
  int num_original = 0;
  double constant = 0.0;
  std::map<int, double> linear;
  std::map<PairKey, double> quadratic;
  std::map<int, PairKey> aux_map;
  double penalty_k = 0.0;  // Rosenberg only; 0 for KZFD

  void add_linear(int i, double c);
  void add_quadratic(int i, int j, double c);
};

/// Spin model H(sigma) = constant - sum_{i<j} J_ij s_i s_j - sum_i h_i s_i,
/// sigma in {-1,+1}^n. No self-couplings stored.
struct IsingProblem {
  int num_spins = 0;
  double constant = 0.0;
  std::map<int, double> h;
  std::map<PairKey, double> J;
};

/// Expand each clause product (1 - l1)(1 - l2)(1 - l3) so that for every
/// binary assignment the polynomial value equals the unsat-clause count.
PuboPolynomial pubo_from_cnf(const CnfFormula& f);

double evaluate(const PuboPolynomial& p, const std::vector<double>& v);

/// Component n is dH/dv_n = -l_n - sum_j q_nj v_j - sum_{j<k} c_njk v_j v_k.
std::vector<double> gradient(const PuboPolynomial& p, const std::vector<double>& v);

double evaluate(const QuboProblem& q, const std::vector<double>& x);
double evaluate(const IsingProblem& i, const std::vector<int>& sigma);

/// Rosenberg substitution with penalty weight k > 1. Cubic terms sharing a
/// substituted pair share one auxiliary.
QuboProblem quadratize_rosenberg(const PuboPolynomial& p, double k = 2.0);

/// KZFD sign-dependent substitution; one fresh auxiliary per cubic term.
QuboProblem quadratize_kzfd(const PuboPolynomial& p);

IsingProblem qubo_to_ising(const QuboProblem& q);
QuboProblem ising_to_qubo(const IsingProblem& i);

std::string pubo_to_json(const PuboPolynomial& p);
PuboPolynomial pubo_from_json(const std::string& text);
std::string qubo_to_json(const QuboProblem& q);
QuboProblem qubo_from_json(const std::string& text);

}  // namespace aims
