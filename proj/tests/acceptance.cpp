// Acceptance gate: one pass/fail line per criterion, exit code = number
// of failures. Heavier statistical checks live here rather than in the
// unit suite; all randomness is fixed-seed.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <vector>

#include "aims/bench.hpp"

using namespace aims;

namespace {

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
  std::printf("%-4s %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Assignment bits_of(int mask, int n) {
  Assignment a(n);
  for (int i = 0; i < n; ++i) a[i] = (mask >> i) & 1;
  return a;
}

long long ieval_pubo(const PuboPolynomial& p, const Assignment& a) {
  std::vector<double> v(a.begin(), a.end());
  return std::llround(evaluate(p, v));
}

// Exact min over auxiliary variables. Relies on auxiliaries never being
// coupled to each other (checked); each contributes independently.
bool qubo_min_over_aux(const QuboProblem& q, const Assignment& x, long long* out) {
  std::vector<double> delta(q.num_vars - q.num_original, 0.0);
  double base = q.constant;
  for (const auto& [i, c] : q.linear) {
    if (i < q.num_original)
      base += c * x[i];
    else
      delta[i - q.num_original] += c;
  }
  for (const auto& [key, c] : q.quadratic) {
    auto [i, j] = key;
    if (i >= q.num_original && j >= q.num_original) return false;  // aux-aux coupling
    if (j >= q.num_original)
      delta[j - q.num_original] += c * x[i];
    else if (i >= q.num_original)
      delta[i - q.num_original] += c * x[j];
    else
      base += c * x[i] * x[j];
  }
  for (double d : delta) base += std::min(0.0, d);
  *out = std::llround(base);
  return true;
}

std::vector<std::pair<std::string, CnfFormula>> sat_instances(int n, int count,
                                                              uint64_t seed0) {
  std::vector<std::pair<std::string, CnfFormula>> v;
  GeneratorConfig gc;
  gc.n_vars = n;
  for (int i = 0; i < count; ++i) {
    gc.seed = seed0 + static_cast<uint64_t>(i) * 37;
    v.emplace_back("n" + std::to_string(n) + "-" + std::to_string(i),
                   generate_satisfiable(gc));
  }
  return v;
}

void c1_quadratization() {
  std::mt19937_64 rng(11);
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GeneratorConfig gc;
    gc.n_vars = 4 + static_cast<int>(rng() % 7);  // N in 4..10
    gc.seed = 1000 + trial;
    CnfFormula f = gen_uniform(gc);
    PuboPolynomial p = pubo_from_cnf(f);
    QuboProblem qk = quadratize_kzfd(p);
    QuboProblem qr = quadratize_rosenberg(p, 2.0);
    int n = p.num_vars();
    for (int mask = 0; mask < (1 << n); ++mask) {
      Assignment x = bits_of(mask, n);
      long long h = ieval_pubo(p, x);
      long long mk = 0, mr = 0;
      if (!qubo_min_over_aux(qk, x, &mk) || !qubo_min_over_aux(qr, x, &mr) ||
          mk != h || mr != h || mk < h || mr < h) {
        ++bad;
        break;
      }
    }
  }
  report("C1 quadratization oracle equivalence", bad == 0,
         "200 PUBOs, KZFD + Rosenberg(k=2), exact min-over-aux; " +
             std::to_string(bad) + " mismatches");
}

void c2_cnf_to_pubo() {
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    GeneratorConfig gc;
    gc.n_vars = 6 + (trial % 7);  // N in 6..12
    gc.seed = 2000 + trial;
    CnfFormula f = gen_uniform(gc);
    PuboPolynomial p = pubo_from_cnf(f);
    for (int mask = 0; mask < (1 << f.num_vars()); ++mask) {
      Assignment a = bits_of(mask, f.num_vars());
      if (ieval_pubo(p, a) != count_unsat(f, a)) {
        ++bad;
        break;
      }
    }
  }
  report("C2 CNF-to-PUBO exhaustive equivalence", bad == 0,
         "100 instances N<=12; " + std::to_string(bad) + " mismatches");
}

void c3_gradient() {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double worst_fd = 0.0, worst_machine = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    GeneratorConfig gc;
    gc.n_vars = 10;
    gc.seed = 3000 + trial;
    CnfFormula f = gen_uniform(gc);
    PuboPolynomial p = pubo_from_cnf(f);
    MachineConfig mc;
    mc.alpha = 1.7;
    ProgrammedMachine m(p, mc);
    for (int pt = 0; pt < 100; ++pt) {
      SystemState s(10);
      for (auto& v : s.v) v = uni(rng);
      std::vector<double> g = gradient(p, s.v);
      std::vector<double> d = m.derivative(s);
      const double h = 1e-5;
      for (int n = 0; n < 10; ++n) {
        worst_machine = std::max(worst_machine, std::fabs(d[n] + mc.alpha * g[n]));
        auto vp = s.v, vm = s.v;
        vp[n] += h;
        vm[n] -= h;
        double fd = (evaluate(p, vp) - evaluate(p, vm)) / (2 * h);
        double rel = std::fabs(g[n] - fd) / std::max(1.0, std::fabs(fd));
        worst_fd = std::max(worst_fd, rel);
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max |deriv + alpha*grad| = %.2e, max FD rel err = %.2e",
                worst_machine, worst_fd);
  report("C3 gradient vs finite differences", worst_machine < 1e-12 && worst_fd < 1e-6, buf);
}

void c4_make_break_identity() {
  std::mt19937_64 rng(44);
  double worst = 0.0;
  auto check_state = [&](const CnfFormula& f, const ProgrammedMachine& m,
                         const Assignment& a) {
    SystemState s(f.num_vars());
    for (int i = 0; i < f.num_vars(); ++i) s.v[i] = a[i];
    std::vector<double> d = m.derivative(s);
    std::vector<MakeBreak> mb = all_make_break(f, a);
    double alpha = m.config().alpha;
    for (int n = 0; n < f.num_vars(); ++n) {
      double expect = alpha * (1 - 2 * a[n]) * (mb[n].make - mb[n].brk);
      worst = std::max(worst, std::fabs(d[n] - expect));
    }
  };
  for (int inst = 0; inst < 3; ++inst) {
    GeneratorConfig gc;
    gc.n_vars = 12;
    gc.seed = 4000 + inst;
    CnfFormula f = gen_uniform(gc);
    MachineConfig mc;
    mc.alpha = 1.3;
    ProgrammedMachine m(pubo_from_cnf(f), mc);
    for (int mask = 0; mask < (1 << 12); ++mask) check_state(f, m, bits_of(mask, 12));
  }
  {
    GeneratorConfig gc;
    gc.n_vars = 50;
    gc.seed = 4500;
    CnfFormula f = gen_uniform(gc);
    MachineConfig mc;
    mc.alpha = 0.8;
    ProgrammedMachine m(pubo_from_cnf(f), mc);
    for (int t = 0; t < 1000; ++t) {
      Assignment a(50);
      for (auto& b : a) b = static_cast<uint8_t>(rng() & 1);
      check_state(f, m, a);
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max |dv/dt - alpha(1-2x)(M-B)| = %.2e", worst);
  report("C4 make/break current identity", worst < 1e-9, buf);
}

void c5_energy_descent() {
  std::mt19937_64 rng(55);
  int descent_bad = 0, not_converged = 0;
  for (int inst = 0; inst < 20; ++inst) {
    GeneratorConfig gc;
    gc.n_vars = 20;
    gc.seed = 5000 + inst;
    CnfFormula f = gen_uniform(gc);
    PuboPolynomial p = pubo_from_cnf(f);
    ProgrammedMachine m(p, {});
    SystemState s = make_initial_state(m, rng);
    double h = evaluate(p, s.v);
    bool fixed = false;
    std::vector<double> prev;
    for (int i = 0; i < 10000; ++i) {
      prev = s.v;
      step(m, s, rng);
      double h2 = evaluate(p, s.v);
      if (h2 > h + 1e-9) ++descent_bad;
      h = h2;
      double dv = 0.0;
      for (size_t n = 0; n < prev.size(); ++n)
        dv = std::max(dv, std::fabs(s.v[n] - prev[n]));
      if (dv <= 1e-12) {
        fixed = true;
        break;
      }
    }
    if (!fixed) ++not_converged;
  }
  report("C5 energy descent to fixed point", descent_bad == 0 && not_converged == 0,
         "20 uf20 trajectories; dH>1e-9 steps: " + std::to_string(descent_bad) +
             ", unconverged: " + std::to_string(not_converged));
}

void c6_solving_power() {
  // documented sweep over (c_m, c_b, clamp) selected 0.3 / 0.3 / 0.5,
  // the library defaults; budget 1e6 steps = 1e4 RC at dt = 0.01
  SolverSpec spec;
  spec.id = "aims";
  spec.budget = 1e4;
  auto uf20 = sat_instances(20, 50, 60000);
  auto uf50 = sat_instances(50, 20, 61000);
  int ok20 = 0, ok50 = 0;
  uint64_t seed = 1;
  for (const auto& [id, f] : uf20) {
    RunRecord r = run_one(spec, id, f, seed++);
    if (r.success && count_unsat(f, r.witness) == 0) ++ok20;
  }
  for (const auto& [id, f] : uf50) {
    RunRecord r = run_one(spec, id, f, seed++);
    if (r.success && count_unsat(f, r.witness) == 0) ++ok50;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "uf20 %d/50 (need 48), uf50 %d/20 (need 16)", ok20, ok50);
  report("C6 TMB solving power", ok20 >= 48 && ok50 >= 16, buf);
}

double bootstrap_ratio_low(const std::vector<double>& num,
                           const std::vector<double>& den, uint64_t seed) {
  std::mt19937_64 rng(seed);
  size_t n = num.size();
  std::vector<double> ratios;
  for (int b = 0; b < 2000; ++b) {
    std::vector<double> rn, rd;
    for (size_t i = 0; i < n; ++i) {
      size_t j = rng() % n;
      rn.push_back(num[j]);
      rd.push_back(den[j]);
    }
    ratios.push_back(geometric_mean(rn) / geometric_mean(rd));
  }
  std::sort(ratios.begin(), ratios.end());
  return ratios[static_cast<size_t>(0.025 * ratios.size())];
}

void c7_sac_vs_saq() {
  auto uf20 = sat_instances(20, 20, 70000);
  SaConfig sc;
  sc.sweeps = 200000;
  std::vector<double> sac, saq_k, saq_r;
  uint64_t seed = 9;
  for (const auto& [id, f] : uf20) {
    PuboPolynomial p = pubo_from_cnf(f);
    sc.seed = seed++;
    SaResult rc = sa_solve(p, sc, &f);
    sc.seed = seed++;
    SaResult rk = sa_solve(quadratize_kzfd(p), sc, &f);
    sc.seed = seed++;
    SaResult rr = sa_solve(quadratize_rosenberg(p, 2.0), sc, &f);
    auto sweeps = [&](const SaResult& r) {
      return static_cast<double>(r.success ? r.first_solution_sweep + 1 : r.sweeps_done);
    };
    sac.push_back(sweeps(rc));
    saq_k.push_back(sweeps(rk));
    saq_r.push_back(sweeps(rr));
  }
  double gc_ = geometric_mean(sac), gk = geometric_mean(saq_k), gr = geometric_mean(saq_r);
  double lo_k = bootstrap_ratio_low(saq_k, sac, 123);
  double lo_r = bootstrap_ratio_low(saq_r, sac, 456);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "geomean sweeps SAc=%.0f SAq(KZFD)=%.0f SAq(Ros)=%.0f; "
                "ratio CI lower bounds %.2f, %.2f (need > 1)",
                gc_, gk, gr, lo_k, lo_r);
  report("C7 SAc beats SAq", gk > gc_ && gr > gc_ && lo_k > 1.0 && lo_r > 1.0, buf);
}

void c8_phase_points() {
  auto uf50 = sat_instances(50, 20, 80000);
  SolverSpec aims_spec;
  aims_spec.id = "aims";
  aims_spec.budget = 1000;
  SolverSpec cbrim_spec;
  cbrim_spec.id = "cbrim";
  cbrim_spec.budget = 1000;
  cbrim_spec.rflip.p0 = 0.05;
  SuiteConfig suite;
  suite.reps = 2;
  suite.seed = 5;
  auto recs = run_suite(uf50, {aims_spec, cbrim_spec}, suite);
  auto reports = aggregate_reports(recs, "uf50");
  double adj_aims = 0, adj_cbrim = 0, p_aims = 0, p_cbrim = 0;
  for (const auto& r : reports) {
    if (r.solver == "aims") { adj_aims = r.phase_points_adj; p_aims = r.p_success; }
    if (r.solver == "cbrim") { adj_cbrim = r.phase_points_adj; p_cbrim = r.p_success; }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "adjusted phase points aims=%.3e (p=%.2f) cbrim=%.3e (p=%.2f), need <= 0.5x",
                adj_aims, p_aims, adj_cbrim, p_cbrim);
  report("C8 navigational efficiency", p_cbrim > 0 && adj_aims <= 0.5 * adj_cbrim, buf);
}

void c9_latching() {
  auto uf50 = sat_instances(50, 20, 90000);
  SolverSpec latched;
  latched.id = "aims";
  latched.budget = 1000;
  SolverSpec unlatched = latched;
  unlatched.tmb.latch = false;
  int both_solved = 0, order_bad = 0;
  std::vector<double> tl, tu;
  uint64_t seed = 40;
  for (const auto& [id, f] : uf50) {
    uint64_t s = seed++;
    RunRecord a = run_one(latched, id, f, s);
    RunRecord b = run_one(unlatched, id, f, s);
    if (a.success && b.success) {
      ++both_solved;
      if (a.t_run > b.t_run + 1e-9) ++order_bad;
      tl.push_back(a.t_run);
      tu.push_back(b.t_run);
    }
  }
  double factor = both_solved ? geometric_mean(tu) / geometric_mean(tl) : 0.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d/20 solved under both; per-seed violations %d; improvement factor %.2fx",
                both_solved, order_bad, factor);
  report("C9 latching ablation", both_solved > 0 && order_bad == 0 && factor >= 1.0, buf);
}

void c10_clamp_sweep() {
  auto uf50 = sat_instances(50, 10, 100000);
  const std::vector<double> grid = {0.02, 0.05, 0.14, 0.37, 1.0, 2.7, 5.0};
  std::vector<double> p;
  for (double clamp : grid) {
    SolverSpec spec;
    spec.id = "aims";
    spec.budget = 1000;
    spec.tmb.clamp_duration = clamp;  // evaluation cadence stays at default
    spec.machine.clamp_duration = clamp;
    SuiteConfig suite;
    suite.reps = 2;
    suite.seed = 3;
    auto recs = run_suite(uf50, {spec}, suite);
    p.push_back(aggregate_reports(recs, "x")[0].p_success);
  }
  size_t best = std::max_element(p.begin(), p.end()) - p.begin();
  bool interior = best > 0 && best + 1 < p.size();
  bool shortest_worse = p.front() < p[best];
  bool longest_worse = p.back() < p[best];
  std::string detail = "p(success) over clamp grid:";
  for (size_t i = 0; i < p.size(); ++i) {
    char b[32];
    std::snprintf(b, sizeof b, " %.2f", p[i]);
    detail += b;
  }
  report("C10 clamp sweep interior maximum",
         interior && shortest_worse && longest_worse, detail);
}

void c11_robustness() {
  auto uf50 = sat_instances(50, 20, 110000);
  SolverSpec ideal;
  ideal.id = "aims";
  ideal.budget = 2000;
  SolverSpec pert = ideal;
  pert.machine.variation = VariationModel{0.05, 0.0};
  pert.machine.noise_sigma = 0.03;
  SuiteConfig suite;
  suite.reps = 2;
  suite.seed = 8;
  double p_ideal = aggregate_reports(run_suite(uf50, {ideal}, suite), "x")[0].p_success;
  double p_pert = aggregate_reports(run_suite(uf50, {pert}, suite), "x")[0].p_success;
  char buf[96];
  std::snprintf(buf, sizeof buf, "ideal p=%.2f, perturbed p=%.2f (need >= 50%% of ideal)",
                p_ideal, p_pert);
  report("C11 device-variation robustness", p_ideal > 0 && p_pert >= 0.5 * p_ideal, buf);
}

void c12_tts_units() {
  bool ok = true;
  ok &= compute_tts(3.0, 0.995) == 3.0;
  ok &= std::fabs(compute_tts(1.0, 0.5) - 6.6439) < 1e-3;
  ok &= std::isinf(compute_tts(1.0, 0.0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.01, 0.98);
  for (int t = 0; t < 500 && ok; ++t) {
    double tr = 0.1 + uni(rng) * 5;
    double p1 = uni(rng), p2 = uni(rng);
    if (p1 > p2) std::swap(p1, p2);
    ok &= compute_tts(tr, p1) >= compute_tts(tr, p2) - 1e-12;
  }
  report("C12 TTS formula", ok, "fixed points, 6.6439 case, monotonicity");
}

void c13_boltzmann() {
  CnfFormula f = parse_dimacs("p cnf 3 3\n1 2 3 0\n-1 2 -3 0\n1 -2 3 0\n");
  PuboPolynomial p = pubo_from_cnf(f);
  const double T = 1.3;
  SaChain chain(p, 99);
  const int samples = 100000;
  std::map<int, long> counts;
  for (int burn = 0; burn < 200; ++burn) chain.sweep(T);
  for (int s = 0; s < samples; ++s) {
    chain.sweep(T);
    int state = 0;
    for (int i = 0; i < 3; ++i) state |= chain.state()[i] << i;
    ++counts[state];
  }
  double z = 0.0;
  std::vector<double> w(8);
  for (int mask = 0; mask < 8; ++mask) {
    Assignment a = bits_of(mask, 3);
    std::vector<double> pt(a.begin(), a.end());
    w[mask] = std::exp(-evaluate(p, pt) / T);
    z += w[mask];
  }
  double chi2 = 0.0;
  for (int mask = 0; mask < 8; ++mask) {
    double expected = samples * w[mask] / z;
    chi2 += (counts[mask] - expected) * (counts[mask] - expected) / expected;
  }
  char buf[96];
  // 18.475 is the df=7 critical value at p = 0.01
  std::snprintf(buf, sizeof buf, "chi2 = %.2f over 1e5 samples (need < 18.475)", chi2);
  report("C13 SA Boltzmann sampling", chi2 < 18.475, buf);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  c1_quadratization();
  c2_cnf_to_pubo();
  c3_gradient();
  c4_make_break_identity();
  c5_energy_descent();
  c6_solving_power();
  c7_sac_vs_saq();
  c8_phase_points();
  c9_latching();
  c10_clamp_sweep();
  c11_robustness();
  c12_tts_units();
  c13_boltzmann();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d/13 criteria passed in %.1f s\n", 13 - failures, secs);
  return failures;
}
