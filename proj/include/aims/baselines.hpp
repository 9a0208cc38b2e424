#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "aims/energy.hpp"

namespace aims {

enum class SaSchedule { geometric, linear };

struct SaConfig {
  double t_initial = 2.0;
  double t_final = 0.05;
  int sweeps = 1000;
  SaSchedule schedule = SaSchedule::geometric;
  uint64_t seed = 0;
  bool stop_on_solution = true;  // only when a target formula is given
  bool keep_trace = false;
};

struct SaResult {
  Assignment best_bits;
  double best_energy = 0.0;
  bool success = false;            // decoded originals satisfy the target CNF
  long first_solution_sweep = -1;  // 0-based sweep index, -1 = never
  long sweeps_done = 0;
  std::vector<double> energy_trace;  // current energy after each sweep
};

/// Metropolis single-flip chain over a degree-<=3 energy, with incremental
/// delta-H from per-variable incidence lists. Drives sa_solve and the
/// fixed-temperature sampling tests.
class SaChain {
 public:
  explicit SaChain(const PuboPolynomial& p, uint64_t seed = 0);
  explicit SaChain(const QuboProblem& q, uint64_t seed = 0);

  int num_vars() const { return static_cast<int>(state_.size()); }
  const Assignment& state() const { return state_; }
  double energy() const { return energy_; }

  void randomize_state();
  void set_state(const Assignment& a);
  /// n random-site Metropolis attempts at temperature T.
  void sweep(double T);
  /// Delta H of flipping variable n from the current state.
  double flip_delta(int n) const;

 private:
  // stored H-convention coefficients, flattened per variable
  double constant_ = 0.0;
  std::vector<double> lin_;
  std::vector<std::vector<std::pair<int, double>>> quad_;
  std::vector<std::vector<std::array<int, 2>>> cubic_partner_;
  std::vector<std::vector<double>> cubic_coef_;
  Assignment state_;
  double energy_ = 0.0;
  std::mt19937_64 rng_;

  void init_from_stored(int n);
  void recompute_energy();
};

/// Simulated annealing over the cubic energy directly (SAc) or over a
/// quadratized QUBO (SAq). When `target` is given, success means the
/// decoded original variables satisfy it (auxiliaries unconstrained).
SaResult sa_solve(const PuboPolynomial& p, const SaConfig& cfg,
                  const CnfFormula* target = nullptr);
SaResult sa_solve(const QuboProblem& q, const SaConfig& cfg,
                  const CnfFormula* target = nullptr);

struct SlsResult {
  bool success = false;
  Assignment assignment;
  long flips = 0;
  int restarts_used = 0;
};

/// Schoening-style local search: random assignment, 3N random flips drawn
/// from random unsatisfied clauses, wrapped in a restart loop.
SlsResult schoning_solve(const CnfFormula& f, int max_restarts, uint64_t seed);

struct WalkSatConfig {
  long max_flips = 500000;
  double noise = 0.5;  // probability of a random pick instead of min-break
  int restarts = 1;
  uint64_t seed = 0;
};

/// WalkSAT with the SKC variable pick: inside a random unsatisfied clause,
/// a zero-break variable is taken outright; otherwise random with
/// probability `noise`, else the minimal-break variable.
SlsResult walksat_skc_solve(const CnfFormula& f, const WalkSatConfig& cfg);

/// Complete satisfiability check (DPLL with unit propagation). Used to
/// filter generated benchmark instances; at the critical clause ratio
/// roughly half of random instances are unsatisfiable.
bool dpll_satisfiable(const CnfFormula& f);

}  // namespace aims
