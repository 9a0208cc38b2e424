#include "aims/anneal.hpp"

#include <cmath>
#include <stdexcept>

namespace aims {

double tmb_probability(int make, int brk, const TmbConfig& cfg) {
  if (make < 0 || brk < 0) throw std::invalid_argument("counts must be >= 0");
  return std::tanh(cfg.c_m * make) * (1.0 - std::tanh(cfg.c_b * brk));
}

TmbController::TmbController(const CnfFormula& f, const TmbConfig& cfg)
    : formula_(f), cfg_(cfg) {
  if (cfg.c_m <= 0 || cfg.c_b <= 0)
    throw std::invalid_argument("TMB gains must be positive");
}

ControllerOutput TmbController::observe(const ProgrammedMachine& m,
                                        const SystemState& s,
                                        std::mt19937_64& rng) {
  ControllerOutput out;
  Assignment bits = s.bits(m.num_original());
  std::vector<MakeBreak> mb = all_make_break(formula_, bits);
  out.latched = true;
  for (const MakeBreak& x : mb)
    if (x.make > 0) { out.latched = false; break; }
  if (out.latched) return out;  // satisfied: no flips

  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int n = 0; n < formula_.num_vars(); ++n) {
    if (s.clamped(n)) continue;
    TmbConfig g = cfg_;
    g.c_m *= m.gain_mult_make(n);
    g.c_b *= m.gain_mult_break(n);
    double p = tmb_probability(mb[n].make, mb[n].brk, g);
    if (uni(rng) < p)
      out.flips.push_back({n, static_cast<uint8_t>(1 - bits[n]), cfg_.clamp_duration});
  }
  return out;
}

RandomFlipController::RandomFlipController(const CnfFormula& f,
                                           const RandomFlipConfig& cfg)
    : formula_(f), cfg_(cfg), p_current_(cfg.p0) {
  if (cfg.p0 < 0 || cfg.p0 > 1 || cfg.decay <= 0 || cfg.decay > 1)
    throw std::invalid_argument("invalid random-flip config");
}

ControllerOutput RandomFlipController::observe(const ProgrammedMachine& m,
                                               const SystemState& s,
                                               std::mt19937_64& rng) {
  ControllerOutput out;
  Assignment bits = s.bits(m.num_original());
  out.latched = count_unsat(formula_, bits) == 0;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  if (!(out.latched && cfg_.latch)) {
    for (int n = 0; n < formula_.num_vars(); ++n) {
      if (s.clamped(n)) continue;
      if (uni(rng) < p_current_)
        out.flips.push_back({n, static_cast<uint8_t>(1 - bits[n]), cfg_.clamp_duration});
    }
  }
  p_current_ *= cfg_.decay;
  return out;
}

double make_count_from_current(const CnfFormula& f, const std::vector<double>& v,
                               double dvdt_n, double alpha, int n) {
  // R_{\n}: evaluate the clauses containing n with v_n forced to 0, which
  // kills every term carrying v_n.
  double r_rest = 0.0;
  for (int ci : f.occurrences()[n]) {
    double prod = 1.0;
    for (const Literal& l : f.clauses()[ci].lits) {
      double x = (l.var == n) ? 0.0 : v[l.var];
      prod *= l.negated ? x : (1.0 - x);
    }
    r_rest += prod;
  }
  double x_n = v[n] >= 0.5 ? 1.0 : 0.0;
  return -x_n / alpha * dvdt_n + r_rest;
}

}  // namespace aims
