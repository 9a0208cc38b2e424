#pragma once

#include "aims/cnf.hpp"
#include "aims/dynsys.hpp"

namespace aims {

struct TmbConfig {
  double c_m = 0.3;          // make gain (> 0)
  double c_b = 0.3;          // break gain (> 0); defaults picked by grid
                             // sweep on uf20/uf50 (see README)
  double eval_period = 0.5;  // one decision per clamp window by default
  double clamp_duration = 0.5;
  bool latch = true;
};

struct RandomFlipConfig {
  double p0 = 0.05;          // initial per-node flip probability
  double decay = 1.0;        // multiplicative decay per evaluation
  double eval_period = 0.5;
  double clamp_duration = 0.5;
  bool latch = false;
};

/// Flip probability p = tanh(c_m * make) * (1 - tanh(c_b * break)).
double tmb_probability(int make, int brk, const TmbConfig& cfg);

/// Semantic-aware controller: per unclamped node, Bernoulli flip with the
/// tanh-make-break probability. Reports latched when every make count is
/// zero, i.e. the formula is satisfied.
class TmbController : public AnnealController {
 public:
  TmbController(const CnfFormula& f, const TmbConfig& cfg);

  double eval_period() const override { return cfg_.eval_period; }
  bool latch_enabled() const override { return cfg_.latch; }
  ControllerOutput observe(const ProgrammedMachine& m, const SystemState& s,
                           std::mt19937_64& rng) override;

 private:
  const CnfFormula& formula_;
  TmbConfig cfg_;
};

/// Baseline controller: flip every node with probability p, decayed
/// multiplicatively after each evaluation.
class RandomFlipController : public AnnealController {
 public:
  RandomFlipController(const CnfFormula& f, const RandomFlipConfig& cfg);

  double eval_period() const override { return cfg_.eval_period; }
  bool latch_enabled() const override { return cfg_.latch; }
  ControllerOutput observe(const ProgrammedMachine& m, const SystemState& s,
                           std::mt19937_64& rng) override;
  void reset() override { p_current_ = cfg_.p0; }
  double current_probability() const { return p_current_; }

 private:
  const CnfFormula& formula_;
  RandomFlipConfig cfg_;
  double p_current_;
};

/// Hardware-style recovery of the make count from the incoming current:
/// M_n = -x_n/alpha * dv_n/dt + R_{\n}, where R_{\n} is the part of the
/// clauses-containing-n energy with no v_n dependence. Verification
/// routine; the controllers compute counts from the formula directly.
double make_count_from_current(const CnfFormula& f, const std::vector<double>& v,
                               double dvdt_n, double alpha, int n);

}  // namespace aims
