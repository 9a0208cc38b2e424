#include "aims/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace aims {

double compute_tts(double t_run, double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("probability out of range");
  if (t_run <= 0) throw std::invalid_argument("t_run must be positive");
  if (p >= 0.99) return t_run;
  if (p == 0.0) return std::numeric_limits<double>::infinity();
  return t_run * std::log(0.01) / std::log(1.0 - p);
}

namespace {

Clause draw_clause(const std::vector<int>& vars, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  Clause c;
  for (int v : vars) c.lits.push_back({v, coin(rng) == 1});
  return c;
}

}  // namespace

CnfFormula gen_uniform(const GeneratorConfig& cfg) {
  if (cfg.n_vars < 3 || cfg.clause_ratio <= 0)
    throw std::invalid_argument("invalid generator config");
  std::mt19937_64 rng(cfg.seed);
  const int m = static_cast<int>(std::llround(cfg.clause_ratio * cfg.n_vars));
  std::uniform_int_distribution<int> pick(0, cfg.n_vars - 1);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  while (static_cast<int>(clauses.size()) < m) {
    std::vector<int> vars;
    while (vars.size() < 3) {
      int v = pick(rng);
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    clauses.push_back(draw_clause(vars, rng));
  }
  return CnfFormula(cfg.n_vars, std::move(clauses));
}

CnfFormula gen_scale_free(const GeneratorConfig& cfg) {
  if (cfg.n_vars < 3 || cfg.clause_ratio <= 0 || cfg.power_exponent <= 1)
    throw std::invalid_argument("invalid generator config");
  std::mt19937_64 rng(cfg.seed);
  const int n = cfg.n_vars;
  const int m = static_cast<int>(std::llround(cfg.clause_ratio * n));
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 1);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<double> w(n);
  const double exponent = -1.0 / (cfg.power_exponent - 1.0);
  for (int i = 0; i < n; ++i) w[i] = std::pow(static_cast<double>(rank[i]), exponent);
  std::discrete_distribution<int> pick(w.begin(), w.end());
  std::vector<Clause> clauses;
  clauses.reserve(m);
  while (static_cast<int>(clauses.size()) < m) {
    std::vector<int> vars;
    while (vars.size() < 3) {
      int v = pick(rng);
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    clauses.push_back(draw_clause(vars, rng));
  }
  return CnfFormula(n, std::move(clauses));
}

CnfFormula generate(const GeneratorConfig& cfg) {
  return cfg.kind == GeneratorKind::uniform_random ? gen_uniform(cfg)
                                                   : gen_scale_free(cfg);
}

CnfFormula generate_satisfiable(GeneratorConfig cfg, int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    CnfFormula f = generate(cfg);
    if (dpll_satisfiable(f)) return f;
    cfg.seed += 1;
  }
  throw std::runtime_error("no satisfiable instance found in max_tries seeds");
}

RunRecord run_one(const SolverSpec& spec, const std::string& instance_id,
                  const CnfFormula& f, uint64_t seed) {
  RunRecord rec;
  rec.solver = spec.id;
  rec.instance = instance_id;
  rec.seed = seed;
  auto start = std::chrono::steady_clock::now();

  if (spec.id == "aims" || spec.id == "cbrim") {
    PuboPolynomial pubo = pubo_from_cnf(f);
    MachineConfig mc = spec.machine;
    mc.seed = seed;  // per-run variation draw
    ProgrammedMachine machine(pubo, mc);
    RunOptions opts;
    opts.budget = spec.budget;
    opts.seed = seed;
    opts.sample_stride = spec.sample_stride;
    Trajectory traj;
    if (spec.id == "aims") {
      TmbController ctl(f, spec.tmb);
      traj = run(machine, &ctl, opts);
    } else {
      RandomFlipController ctl(f, spec.rflip);
      traj = run(machine, &ctl, opts);
    }
    rec.success = traj.success && count_unsat(f, traj.witness) == 0;
    if (rec.success) rec.witness = traj.witness;
    // Time the machine actually ran: a latching run stops at the first
    // satisfying observation, a non-latching run always pays the budget.
    rec.t_run = traj.t_end;
    if (rec.t_run <= 0) rec.t_run = machine.config().dt;
    rec.phase_points = traj.phase_points;
    rec.flips_heuristic = traj.flips_heuristic;
    rec.flips_natural = traj.flips_natural;
  } else if (spec.id == "sac" || spec.id == "saq-kzfd" || spec.id == "saq-rosenberg") {
    PuboPolynomial pubo = pubo_from_cnf(f);
    SaConfig sc = spec.sa;
    sc.seed = seed;
    SaResult r;
    if (spec.id == "sac") {
      r = sa_solve(pubo, sc, &f);
    } else if (spec.id == "saq-kzfd") {
      r = sa_solve(quadratize_kzfd(pubo), sc, &f);
    } else {
      r = sa_solve(quadratize_rosenberg(pubo, spec.rosenberg_k), sc, &f);
    }
    rec.success = r.success;
    if (rec.success) {
      rec.witness.assign(r.best_bits.begin(), r.best_bits.begin() + f.num_vars());
      if (count_unsat(f, rec.witness) != 0) rec.success = false;
    }
    rec.t_run = static_cast<double>(r.success ? r.first_solution_sweep + 1
                                              : r.sweeps_done);
  } else if (spec.id == "schoning") {
    SlsResult r = schoning_solve(f, spec.schoning_restarts, seed);
    rec.success = r.success && count_unsat(f, r.assignment) == 0;
    if (rec.success) rec.witness = r.assignment;
    rec.t_run = static_cast<double>(std::max<long>(1, r.flips));
  } else if (spec.id == "walksat") {
    WalkSatConfig wc = spec.walksat;
    wc.seed = seed;
    SlsResult r = walksat_skc_solve(f, wc);
    rec.success = r.success && count_unsat(f, r.assignment) == 0;
    if (rec.success) rec.witness = r.assignment;
    rec.t_run = static_cast<double>(std::max<long>(1, r.flips));
  } else {
    throw std::invalid_argument("unknown solver id: " + spec.id);
  }

  rec.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rec;
}

std::vector<RunRecord> run_suite(
    const std::vector<std::pair<std::string, CnfFormula>>& instances,
    const std::vector<SolverSpec>& solvers, const SuiteConfig& suite) {
  struct Job {
    const std::string* instance_id;
    const CnfFormula* formula;
    const SolverSpec* spec;
    uint64_t seed;
  };
  std::vector<Job> jobs;
  uint64_t counter = 0;
  for (const auto& [id, f] : instances)
    for (const SolverSpec& spec : solvers)
      for (int rep = 0; rep < suite.reps; ++rep)
        jobs.push_back({&id, &f, &spec, suite.seed * 1000003ull + counter++});

  std::vector<RunRecord> results(jobs.size());
  std::atomic<size_t> next{0};
  int workers = suite.workers > 0
                    ? suite.workers
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& j = jobs[i];
      try {
        results[i] = run_one(*j.spec, *j.instance_id, *j.formula, j.seed);
      } catch (const std::exception& e) {
        RunRecord rec;
        rec.solver = j.spec->id;
        rec.instance = *j.instance_id;
        rec.seed = j.seed;
        rec.success = false;
        rec.t_run = 1.0;
        results[i] = rec;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

double geometric_mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double acc = 0.0;
  for (double x : xs) {
    if (x <= 0) throw std::invalid_argument("geometric mean needs positive values");
    acc += std::log(x);
  }
  return std::exp(acc / xs.size());
}

std::vector<TtsReport> aggregate_reports(const std::vector<RunRecord>& records,
                                         const std::string& benchmark_id) {
  std::vector<std::string> order;
  for (const RunRecord& r : records)
    if (std::find(order.begin(), order.end(), r.solver) == order.end())
      order.push_back(r.solver);

  std::vector<TtsReport> reports;
  for (const std::string& solver : order) {
    TtsReport rep;
    rep.solver = solver;
    rep.benchmark = benchmark_id;
    double t_sum = 0.0, pp_sum = 0.0;
    int succ = 0;
    for (const RunRecord& r : records) {
      if (r.solver != solver) continue;
      ++rep.runs;
      t_sum += r.t_run;
      pp_sum += static_cast<double>(r.phase_points);
      if (r.success) ++succ;
    }
    if (rep.runs == 0) continue;
    rep.p_success = static_cast<double>(succ) / rep.runs;
    rep.t_run = t_sum / rep.runs;
    rep.tts = compute_tts(rep.t_run, rep.p_success);
    double pp_mean = pp_sum / rep.runs;
    // phase points adjusted by solution probability, same multiplier as TTS
    if (rep.p_success >= 0.99)
      rep.phase_points_adj = pp_mean;
    else if (rep.p_success == 0.0)
      rep.phase_points_adj = std::numeric_limits<double>::infinity();
    else
      rep.phase_points_adj = pp_mean * std::log(0.01) / std::log(1.0 - rep.p_success);
    reports.push_back(rep);
  }
  return reports;
}

std::string records_to_csv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  out << "solver,instance,seed,success,t_run_rc,wall_ms,phase_points,flips_h,flips_n\n";
  for (const RunRecord& r : records)
    out << r.solver << ',' << r.instance << ',' << r.seed << ','
        << (r.success ? 1 : 0) << ',' << r.t_run << ',' << r.wall_ms << ','
        << r.phase_points << ',' << r.flips_heuristic << ',' << r.flips_natural
        << '\n';
  return out.str();
}

std::string reports_to_csv(const std::vector<TtsReport>& reports) {
  std::ostringstream out;
  out << "solver,benchmark,runs,p_success,t_run,tts,phase_points_adj\n";
  for (const TtsReport& r : reports)
    out << r.solver << ',' << r.benchmark << ',' << r.runs << ',' << r.p_success
        << ',' << r.t_run << ',' << r.tts << ',' << r.phase_points_adj << '\n';
  return out.str();
}

void write_svg_lines(
    const std::string& path,
    const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series,
    const std::string& x_label, const std::string& y_label, bool log_x) {
  const double W = 640, H = 420, ML = 60, MR = 20, MT = 20, MB = 50;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto tx = [&](double x) { return log_x ? std::log10(std::max(x, 1e-300)) : x; };
  for (const auto& [label, pts] : series)
    for (const auto& [x, y] : pts) {
      xmin = std::min(xmin, tx(x));
      xmax = std::max(xmax, tx(x));
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (xmin > xmax) { xmin = 0; xmax = 1; }
  if (ymin > ymax) { ymin = 0; ymax = 1; }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  auto px = [&](double x) { return ML + (tx(x) - xmin) / (xmax - xmin) * (W - ML - MR); };
  auto py = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                 "#9467bd", "#8c564b"};
  std::ofstream out(path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
      << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  out << "<line x1='" << ML << "' y1='" << H - MB << "' x2='" << W - MR << "' y2='"
      << H - MB << "' stroke='black'/>\n";
  out << "<line x1='" << ML << "' y1='" << MT << "' x2='" << ML << "' y2='" << H - MB
      << "' stroke='black'/>\n";
  out << "<text x='" << W / 2 << "' y='" << H - 10 << "' text-anchor='middle'>"
      << x_label << "</text>\n";
  out << "<text x='15' y='" << H / 2 << "' text-anchor='middle' transform='rotate(-90 15 "
      << H / 2 << ")'>" << y_label << "</text>\n";
  int ci = 0;
  for (const auto& [label, pts] : series) {
    const char* color = colors[ci % 6];
    out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
    for (const auto& [x, y] : pts) out << px(x) << ',' << py(y) << ' ';
    out << "'/>\n";
    for (const auto& [x, y] : pts)
      out << "<circle cx='" << px(x) << "' cy='" << py(y) << "' r='3' fill='" << color
          << "'/>\n";
    out << "<text x='" << W - MR - 150 << "' y='" << MT + 15 + 18 * ci << "' fill='"
        << color << "'>" << label << "</text>\n";
    ++ci;
  }
  out << "</svg>\n";
}

}  // namespace aims
