#include "aims/dynsys.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace aims {

namespace {

bool is_integral(double x) { return std::abs(x - std::round(x)) < 1e-9; }

uint64_t hash_bits(const Assignment& bits) {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (uint8_t b : bits) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Assignment SystemState::bits(int count) const {
  if (count < 0) count = static_cast<int>(v.size());
  Assignment a(count);
  for (int n = 0; n < count; ++n) a[n] = bit(n);
  return a;
}

ProgrammedMachine::ProgrammedMachine(const PuboPolynomial& p, const MachineConfig& cfg)
    : cfg_(cfg) {
  if (cfg.alpha <= 0 || cfg.dt <= 0 || cfg.fan_in_limit < 0 ||
      cfg.clamp_duration < 0 || cfg.noise_sigma < 0)
    throw std::invalid_argument("invalid machine config");
  num_original_ = p.num_vars();
  num_nodes_ = p.num_vars();

  struct Term {
    TripleKey t;
    double c;        // stored-convention coefficient
    int instances;   // coupler instances it occupies per incident node
    bool active = true;
  };
  std::vector<Term> terms;
  for (const auto& [t, c] : p.cubic())
    terms.push_back({t, c, std::max(1, static_cast<int>(std::ceil(std::abs(c)))), true});

  const int d = cfg.fan_in_limit;
  std::vector<Term> reduced;
  std::vector<int> reduced_aux;
  if (d > 0) {
    for (const Term& tm : terms)
      if (!is_integral(tm.c))
        throw std::invalid_argument(
            "fan-in limited machine requires integer cubic coefficients");
    std::vector<int> incidence(num_original_, 0);
    std::vector<std::vector<int>> by_node(num_original_);
    for (int i = 0; i < static_cast<int>(terms.size()); ++i)
      for (int v : terms[i].t) {
        incidence[v] += terms[i].instances;
        by_node[v].push_back(i);
      }
    // Peel excess terms off overloaded nodes, newest first; each peeled
    // term is KZFD-reduced with a fresh auxiliary node.
    for (int n = 0; n < num_original_; ++n) {
      while (incidence[n] > d) {
        int victim = -1;
        for (auto it = by_node[n].rbegin(); it != by_node[n].rend(); ++it)
          if (terms[*it].active) { victim = *it; break; }
        if (victim < 0) break;  // unreachable: incidence counts active terms
        terms[victim].active = false;
        for (int v : terms[victim].t) incidence[v] -= terms[victim].instances;
        reduced.push_back(terms[victim]);
        reduced_aux.push_back(num_nodes_++);
      }
    }
  }

  // Effective energy over the enlarged node set.
  PuboPolynomial eff(num_nodes_);
  eff.set_constant(p.constant());
  for (const auto& [n, l] : p.linear()) eff.add_monomial_linear(n, -l);
  for (const auto& [nj, q] : p.quadratic())
    eff.add_monomial_quadratic(nj.first, -q, nj.second);
  for (const Term& tm : terms)
    if (tm.active) eff.add_monomial_cubic(tm.t[0], tm.t[1], tm.t[2], -tm.c);
  for (size_t i = 0; i < reduced.size(); ++i) {
    const TripleKey& t = reduced[i].t;
    const double m = -reduced[i].c;  // plain monomial coefficient
    const double a = std::abs(m);
    const int z = reduced_aux[i];
    if (m < 0.0) {
      eff.add_monomial_linear(z, 2.0 * a);
      for (int v : t) eff.add_monomial_quadratic(v, -a, z);
    } else {
      eff.add_monomial_linear(z, a);
      eff.add_monomial_quadratic(t[0], a, z);
      eff.add_monomial_quadratic(t[1], -a, z);
      eff.add_monomial_quadratic(t[2], -a, z);
      eff.add_monomial_quadratic(t[1], a, t[2]);
    }
  }

  // Device variation: perturb every coupler instance, then rebuild the
  // effective coefficients from the perturbed instances.
  std::mt19937_64 rng(cfg.seed);
  const double csig = cfg.variation ? cfg.variation->coupling_sigma : 0.0;
  const double gsig = cfg.variation ? cfg.variation->gain_sigma : 0.0;
  std::normal_distribution<double> gauss(0.0, 1.0);

  PuboPolynomial pert(num_nodes_);
  pert.set_constant(eff.constant());
  auto jitter = [&](double w) { return csig > 0 ? w * (1.0 + csig * gauss(rng)) : w; };
  for (const auto& [n, l] : eff.linear()) pert.add_monomial_linear(n, -jitter(l));
  for (const auto& [nj, q] : eff.quadratic())
    pert.add_monomial_quadratic(nj.first, -jitter(q), nj.second);

  slots_.assign(num_nodes_, {});
  for (const auto& [t, c] : eff.cubic()) {
    // A coefficient of magnitude m occupies ceil(m) unit-weight coupler
    // instances per incident node; each instance is perturbed on its own.
    int instances = 1;
    double unit = c;
    if (is_integral(c) && std::abs(c) > 1.5) {
      instances = static_cast<int>(std::round(std::abs(c)));
      unit = c > 0 ? 1.0 : -1.0;
    }
    double total = 0.0;
    for (int i = 0; i < instances; ++i) {
      double w = jitter(unit);
      total += w;
      slots_[t[0]].push_back({t[1], t[2], w});
      slots_[t[1]].push_back({t[0], t[2], w});
      slots_[t[2]].push_back({t[0], t[1], w});
    }
    pert.add_monomial_cubic(t[0], t[1], t[2], -total);
  }
  if (gsig > 0) {
    gain_m_.resize(num_original_);
    gain_b_.resize(num_original_);
    for (int n = 0; n < num_original_; ++n) {
      gain_m_[n] = std::max(0.0, 1.0 + gsig * gauss(rng));
      gain_b_[n] = std::max(0.0, 1.0 + gsig * gauss(rng));
    }
  }
  effective_ = std::move(pert);
  compile();
}

void ProgrammedMachine::compile() {
  lin_.assign(num_nodes_, 0.0);
  quad_.assign(num_nodes_, {});
  for (const auto& [n, l] : effective_.linear()) lin_[n] = l;
  for (const auto& [nj, q] : effective_.quadratic()) {
    quad_[nj.first].push_back({nj.second, q});
    quad_[nj.second].push_back({nj.first, q});
  }
}

void ProgrammedMachine::derivative_into(const SystemState& s,
                                        const std::vector<double>& v,
                                        std::vector<double>& out) const {
  const bool and_gate = cfg_.multiplier_mode == MultiplierMode::and_gate;
  out.resize(num_nodes_);
  for (int n = 0; n < num_nodes_; ++n) {
    if (s.clamped(n)) {
      out[n] = 0.0;
      continue;
    }
    double d = lin_[n];
    for (const auto& [j, q] : quad_[n]) d += q * v[j];
    if (and_gate) {
      for (const CubicSlot& sl : slots_[n])
        d += sl.weight * ((v[sl.j] >= 0.5 && v[sl.k] >= 0.5) ? 1.0 : 0.0);
    } else {
      for (const CubicSlot& sl : slots_[n]) d += sl.weight * v[sl.j] * v[sl.k];
    }
    out[n] = cfg_.alpha * d;
  }
}

std::vector<double> ProgrammedMachine::derivative(const SystemState& s) const {
  if (static_cast<int>(s.v.size()) != num_nodes_)
    throw std::invalid_argument("state dimension mismatch");
  std::vector<double> out;
  derivative_into(s, s.v, out);
  return out;
}

SystemState make_initial_state(const ProgrammedMachine& m, std::mt19937_64& rng,
                               const std::optional<std::vector<double>>& init) {
  SystemState s(m.num_nodes());
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int n = 0; n < m.num_nodes(); ++n) s.v[n] = uni(rng);
  if (init) {
    if (static_cast<int>(init->size()) != m.num_original() &&
        static_cast<int>(init->size()) != m.num_nodes())
      throw std::invalid_argument("initial voltage vector has wrong length");
    for (size_t n = 0; n < init->size(); ++n)
      s.v[n] = std::clamp((*init)[n], 0.0, 1.0);
  }
  return s;
}

void step(const ProgrammedMachine& m, SystemState& s, std::mt19937_64& rng) {
  const int n = m.num_nodes();
  const double dt = m.config().dt;
  static thread_local std::vector<double> k1, k2, k3, k4, tmp;
  // Stage states are saturated to the rails too; evaluating the field
  // beyond the box would feed phantom slopes into neighboring nodes.
  m.derivative_into(s, s.v, k1);
  tmp.resize(n);
  for (int i = 0; i < n; ++i) tmp[i] = std::clamp(s.v[i] + 0.5 * dt * k1[i], 0.0, 1.0);
  m.derivative_into(s, tmp, k2);
  for (int i = 0; i < n; ++i) tmp[i] = std::clamp(s.v[i] + 0.5 * dt * k2[i], 0.0, 1.0);
  m.derivative_into(s, tmp, k3);
  for (int i = 0; i < n; ++i) tmp[i] = std::clamp(s.v[i] + dt * k3[i], 0.0, 1.0);
  m.derivative_into(s, tmp, k4);

  const double sigma = m.config().noise_sigma;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    double slope = (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) / 6.0;
    if (sigma > 0 && !s.clamped(i)) slope += sigma * gauss(rng);
    s.v[i] = std::clamp(s.v[i] + dt * slope, 0.0, 1.0);
    if (s.clamped(i)) s.v[i] = s.clamp_target[i] ? 1.0 : 0.0;
  }
  s.t += dt;
  for (int i = 0; i < n; ++i)
    if (s.clamp_until[i] != 0.0 && s.t >= s.clamp_until[i]) s.clamp_until[i] = 0.0;
}

void clamp_node(SystemState& s, int n, uint8_t target, double duration) {
  if (n < 0 || n >= static_cast<int>(s.v.size()))
    throw CnfError(CnfErrorKind::IndexOutOfRange, "clamp node out of range");
  s.v[n] = target ? 1.0 : 0.0;
  s.clamp_target[n] = target;
  s.clamp_until[n] = s.t + duration;
}

Trajectory run(const ProgrammedMachine& m, AnnealController* controller,
               const RunOptions& opts) {
  if (opts.budget <= 0) throw std::invalid_argument("budget must be positive");
  std::mt19937_64 rng(opts.seed);
  if (controller) controller->reset();
  SystemState s = make_initial_state(m, rng, opts.init);

  Trajectory traj;
  std::unordered_set<uint64_t> visited;
  Assignment bits = s.bits(m.num_original());
  visited.insert(hash_bits(bits));

  const double dt = m.config().dt;
  double next_eval = 0.0;
  const double eval_period =
      controller ? std::max(controller->eval_period(), dt) : 0.0;
  bool done = false;

  while (!done && s.t < opts.budget - 0.5 * dt) {
    if (controller && s.t >= next_eval - 0.5 * dt) {
      ControllerOutput out = controller->observe(m, s, rng);
      if (out.latched) {
        if (!traj.success) {
          traj.success = true;
          traj.first_sat_time = s.t;
          traj.witness = s.bits(m.num_original());
        }
        if (controller->latch_enabled()) done = true;
      }
      if (!done) {
        for (const FlipDecision& fd : out.flips) {
          if (s.clamped(fd.node)) continue;
          clamp_node(s, fd.node, fd.target, fd.duration);
          ++traj.flips_heuristic;
        }
      }
      next_eval += eval_period;
    }
    if (done) break;

    Assignment before = s.bits(m.num_original());
    step(m, s, rng);
    ++traj.steps;
    int changed = 0;
    for (int n = 0; n < m.num_original(); ++n)
      if (s.bit(n) != before[n] && !s.clamped(n)) ++changed;
    traj.flips_natural += changed;
    visited.insert(hash_bits(s.bits(m.num_original())));

    if (opts.sample_stride > 0 && traj.steps % opts.sample_stride == 0) {
      traj.samples.push_back({s.t, evaluate(m.effective(), s.v),
                              traj.flips_heuristic, traj.flips_natural,
                              visited.size()});
    }
  }

  traj.final_state = s;
  traj.final_bits = s.bits(m.num_original());
  traj.t_end = s.t;
  traj.phase_points = visited.size();
  return traj;
}

}  // namespace aims
