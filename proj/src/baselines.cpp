#include "aims/baselines.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace aims {

SaChain::SaChain(const PuboPolynomial& p, uint64_t seed) : rng_(seed) {
  const int n = p.num_vars();
  init_from_stored(n);
  constant_ = p.constant();
  for (const auto& [i, l] : p.linear()) lin_[i] = l;
  for (const auto& [ij, q] : p.quadratic()) {
    quad_[ij.first].push_back({ij.second, q});
    quad_[ij.second].push_back({ij.first, q});
  }
  for (const auto& [t, c] : p.cubic()) {
    cubic_partner_[t[0]].push_back({t[1], t[2]});
    cubic_coef_[t[0]].push_back(c);
    cubic_partner_[t[1]].push_back({t[0], t[2]});
    cubic_coef_[t[1]].push_back(c);
    cubic_partner_[t[2]].push_back({t[0], t[1]});
    cubic_coef_[t[2]].push_back(c);
  }
  randomize_state();
}

SaChain::SaChain(const QuboProblem& q, uint64_t seed) : rng_(seed) {
  init_from_stored(q.num_vars);
  // plain convention -> stored convention
  constant_ = q.constant;
  for (const auto& [i, a] : q.linear) lin_[i] = -a;
  for (const auto& [ij, b] : q.quadratic) {
    quad_[ij.first].push_back({ij.second, -b});
    quad_[ij.second].push_back({ij.first, -b});
  }
  randomize_state();
}

void SaChain::init_from_stored(int n) {
  lin_.assign(n, 0.0);
  quad_.assign(n, {});
  cubic_partner_.assign(n, {});
  cubic_coef_.assign(n, {});
  state_.assign(n, 0);
}

void SaChain::randomize_state() {
  std::uniform_int_distribution<int> bit(0, 1);
  for (auto& b : state_) b = static_cast<uint8_t>(bit(rng_));
  recompute_energy();
}

void SaChain::set_state(const Assignment& a) {
  if (a.size() != state_.size()) throw std::invalid_argument("state length mismatch");
  state_ = a;
  recompute_energy();
}

void SaChain::recompute_energy() {
  double h = constant_;
  const int n = num_vars();
  for (int i = 0; i < n; ++i) {
    if (!state_[i]) continue;
    h -= lin_[i];
    for (const auto& [j, q] : quad_[i])
      if (j > i && state_[j]) h -= q;
    for (size_t s = 0; s < cubic_partner_[i].size(); ++s) {
      const auto& [j, k] = cubic_partner_[i][s];
      if (j > i && k > i && state_[j] && state_[k]) h -= cubic_coef_[i][s];
    }
  }
  energy_ = h;
}

double SaChain::flip_delta(int n) const {
  double field = lin_[n];
  for (const auto& [j, q] : quad_[n]) field += q * state_[j];
  for (size_t s = 0; s < cubic_partner_[n].size(); ++s) {
    const auto& [j, k] = cubic_partner_[n][s];
    if (state_[j] && state_[k]) field += cubic_coef_[n][s];
  }
  const double delta = state_[n] ? -1.0 : 1.0;  // new - old
  return -delta * field;
}

void SaChain::sweep(double T) {
  const int n = num_vars();
  std::uniform_int_distribution<int> site(0, n - 1);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    int s = site(rng_);
    double dh = flip_delta(s);
    if (dh <= 0.0 || uni(rng_) < std::exp(-dh / T)) {
      state_[s] ^= 1;
      energy_ += dh;
    }
  }
}

namespace {

SaResult sa_run(SaChain& chain, const SaConfig& cfg, int num_original,
                const CnfFormula* target) {
  if (cfg.t_initial < cfg.t_final || cfg.t_final <= 0 || cfg.sweeps < 1)
    throw std::invalid_argument("invalid SA config");
  SaResult res;
  res.best_bits = chain.state();
  res.best_energy = chain.energy();
  const double ratio = cfg.t_final / cfg.t_initial;
  for (int sw = 0; sw < cfg.sweeps; ++sw) {
    double frac = cfg.sweeps > 1 ? static_cast<double>(sw) / (cfg.sweeps - 1) : 0.0;
    double T = cfg.schedule == SaSchedule::geometric
                   ? cfg.t_initial * std::pow(ratio, frac)
                   : cfg.t_initial + (cfg.t_final - cfg.t_initial) * frac;
    chain.sweep(T);
    ++res.sweeps_done;
    if (chain.energy() < res.best_energy) {
      res.best_energy = chain.energy();
      res.best_bits = chain.state();
    }
    if (cfg.keep_trace) res.energy_trace.push_back(chain.energy());
    if (target && !res.success) {
      Assignment decoded(chain.state().begin(), chain.state().begin() + num_original);
      if (count_unsat(*target, decoded) == 0) {
        res.success = true;
        res.first_solution_sweep = sw;
        res.best_bits = chain.state();
        res.best_energy = chain.energy();
        if (cfg.stop_on_solution) break;
      }
    }
  }
  return res;
}

}  // namespace

SaResult sa_solve(const PuboPolynomial& p, const SaConfig& cfg, const CnfFormula* target) {
  SaChain chain(p, cfg.seed);
  return sa_run(chain, cfg, p.num_vars(), target);
}

SaResult sa_solve(const QuboProblem& q, const SaConfig& cfg, const CnfFormula* target) {
  SaChain chain(q, cfg.seed);
  return sa_run(chain, cfg, q.num_original, target);
}

SlsResult schoning_solve(const CnfFormula& f, int max_restarts, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> bit(0, 1);
  SlsResult res;
  const int n = f.num_vars();
  for (int r = 0; r < max_restarts; ++r) {
    ++res.restarts_used;
    Assignment a(n);
    for (auto& b : a) b = static_cast<uint8_t>(bit(rng));
    for (int i = 0; i <= 3 * n; ++i) {
      std::vector<int> unsat;
      for (int ci = 0; ci < f.num_clauses(); ++ci) {
        bool sat = false;
        for (const Literal& l : f.clauses()[ci].lits)
          if (literal_satisfied(l, a)) { sat = true; break; }
        if (!sat) unsat.push_back(ci);
      }
      if (unsat.empty()) {
        res.success = true;
        res.assignment = a;
        return res;
      }
      if (i == 3 * n) break;
      std::uniform_int_distribution<size_t> pick(0, unsat.size() - 1);
      const Clause& c = f.clauses()[unsat[pick(rng)]];
      std::uniform_int_distribution<size_t> vpick(0, c.lits.size() - 1);
      a[c.lits[vpick(rng)].var] ^= 1;
      ++res.flips;
    }
  }
  return res;
}

namespace {

// Incremental clause bookkeeping for WalkSAT: per-clause count of true
// literals and the critical variable when exactly one is true.
struct WatchState {
  const CnfFormula& f;
  Assignment a;
  std::vector<int> true_count;
  std::vector<int> crit;         // valid when true_count == 1
  std::vector<int> unsat;        // clause indices
  std::vector<int> unsat_pos;    // position in `unsat`, -1 if satisfied

  explicit WatchState(const CnfFormula& formula, Assignment init)
      : f(formula), a(std::move(init)),
        true_count(formula.num_clauses(), 0),
        crit(formula.num_clauses(), -1),
        unsat_pos(formula.num_clauses(), -1) {
    for (int ci = 0; ci < f.num_clauses(); ++ci) {
      for (const Literal& l : f.clauses()[ci].lits)
        if (literal_satisfied(l, a)) { ++true_count[ci]; crit[ci] = l.var; }
      if (true_count[ci] == 0) {
        unsat_pos[ci] = static_cast<int>(unsat.size());
        unsat.push_back(ci);
      }
    }
  }

  int break_count(int var) const {
    int b = 0;
    for (int ci : f.occurrences()[var])
      if (true_count[ci] == 1 && crit[ci] == var) ++b;
    return b;
  }

  void flip(int var) {
    a[var] ^= 1;
    for (int ci : f.occurrences()[var]) {
      const Clause& c = f.clauses()[ci];
      bool now_true = false;
      for (const Literal& l : c.lits)
        if (l.var == var) { now_true = literal_satisfied(l, a); break; }
      if (now_true) {
        if (++true_count[ci] == 1) {
          crit[ci] = var;
          int pos = unsat_pos[ci];
          int last = unsat.back();
          unsat[pos] = last;
          unsat_pos[last] = pos;
          unsat.pop_back();
          unsat_pos[ci] = -1;
        }
      } else {
        if (--true_count[ci] == 0) {
          unsat_pos[ci] = static_cast<int>(unsat.size());
          unsat.push_back(ci);
        } else if (true_count[ci] == 1) {
          for (const Literal& l : c.lits)
            if (literal_satisfied(l, a)) { crit[ci] = l.var; break; }
        }
      }
    }
  }
};

}  // namespace

SlsResult walksat_skc_solve(const CnfFormula& f, const WalkSatConfig& cfg) {
  if (cfg.noise < 0 || cfg.noise > 1) throw std::invalid_argument("noise must be in [0,1]");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  SlsResult res;
  for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
    ++res.restarts_used;
    Assignment init(f.num_vars());
    for (auto& b : init) b = static_cast<uint8_t>(bit(rng));
    WatchState ws(f, std::move(init));
    for (long fl = 0; fl < cfg.max_flips; ++fl) {
      if (ws.unsat.empty()) break;
      std::uniform_int_distribution<size_t> pick(0, ws.unsat.size() - 1);
      const Clause& c = f.clauses()[ws.unsat[pick(rng)]];
      int chosen = -1;
      int min_break = -1;
      bool freebie = false;
      for (size_t i = 0; i < c.lits.size(); ++i) {
        int b = ws.break_count(c.lits[i].var);
        if (b == 0) { chosen = c.lits[i].var; freebie = true; break; }
        if (min_break < 0 || b < min_break) {
          min_break = b;
          chosen = c.lits[i].var;
        }
      }
      if (!freebie && uni(rng) < cfg.noise) {
        std::uniform_int_distribution<size_t> vpick(0, c.lits.size() - 1);
        chosen = c.lits[vpick(rng)].var;
      }
      ws.flip(chosen);
      ++res.flips;
    }
    if (ws.unsat.empty()) {
      res.success = true;
      res.assignment = ws.a;
      return res;
    }
  }
  return res;
}

namespace {

// values: 0 = false, 1 = true, -1 = unassigned
bool dpll(const CnfFormula& f, std::vector<int>& val) {
  // unit propagation to fixpoint
  std::vector<int> trail;
  for (;;) {
    int unit_var = -1, unit_val = 0;
    for (const Clause& c : f.clauses()) {
      int unassigned = 0, last_var = -1, last_val = 0;
      bool sat = false;
      for (const Literal& l : c.lits) {
        if (val[l.var] == -1) {
          ++unassigned;
          last_var = l.var;
          last_val = l.negated ? 0 : 1;
        } else if (val[l.var] == (l.negated ? 0 : 1)) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      if (unassigned == 0) {
        for (int v : trail) val[v] = -1;
        return false;  // conflict
      }
      if (unassigned == 1) { unit_var = last_var; unit_val = last_val; break; }
    }
    if (unit_var < 0) break;
    val[unit_var] = unit_val;
    trail.push_back(unit_var);
  }
  int branch = -1;
  for (int v = 0; v < f.num_vars(); ++v)
    if (val[v] == -1) { branch = v; break; }
  if (branch < 0) return true;  // every clause satisfied by propagation
  for (int b = 1; b >= 0; --b) {
    val[branch] = b;
    if (dpll(f, val)) return true;
    val[branch] = -1;
  }
  for (int v : trail) val[v] = -1;
  return false;
}

}  // namespace

bool dpll_satisfiable(const CnfFormula& f) {
  std::vector<int> val(f.num_vars(), -1);
  return dpll(f, val);
}

}  // namespace aims
