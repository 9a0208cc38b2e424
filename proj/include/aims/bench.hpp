#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aims/anneal.hpp"
#include "aims/baselines.hpp"
#include "aims/cnf.hpp"
#include "aims/dynsys.hpp"

namespace aims {

/// Time-to-solution at 99% target: t_run * log(0.01)/log(1-p) below the
/// target probability, t_run at or above it, +inf (DNF) at p = 0.
double compute_tts(double t_run, double p);

enum class GeneratorKind { uniform_random, scale_free };

struct GeneratorConfig {
  GeneratorKind kind = GeneratorKind::uniform_random;
  int n_vars = 50;
  double clause_ratio = 4.25;    // M = round(ratio * N)
  double power_exponent = 2.8;   // scale-free only
  uint64_t seed = 0;
};

/// Random 3-SAT: per clause, 3 distinct uniform variables, fair-coin
/// negations. Duplicate clauses are permitted.
CnfFormula gen_uniform(const GeneratorConfig& cfg);

/// Scale-free 3-SAT: variable pick probability proportional to
/// rank^(-1/(beta-1)) over a random permutation of ranks.
CnfFormula gen_scale_free(const GeneratorConfig& cfg);

CnfFormula generate(const GeneratorConfig& cfg);

/// Benchmark-style generation: retry with incremented seeds until the
/// instance is satisfiable (complete DPLL check), mirroring the filtered
/// "uf" benchmark sets. Throws after max_tries.
CnfFormula generate_satisfiable(GeneratorConfig cfg, int max_tries = 10000);

/// Everything needed to run one named solver on one instance.
struct SolverSpec {
  std::string id;  // aims | cbrim | sac | saq-kzfd | saq-rosenberg | schoning | walksat
  MachineConfig machine;
  TmbConfig tmb;
  RandomFlipConfig rflip;
  double budget = 500.0;  // RC units for the dynamical solvers
  int sample_stride = 0;
  SaConfig sa;
  WalkSatConfig walksat;
  int schoning_restarts = 1000;
  double rosenberg_k = 2.0;
};

struct RunRecord {
  std::string solver;
  std::string instance;
  uint64_t seed = 0;
  bool success = false;
  double t_run = 0.0;   // RC units for dynsys; sweeps/flips for discrete solvers
  double wall_ms = 0.0;
  uint64_t phase_points = 0;
  long flips_heuristic = 0;
  long flips_natural = 0;
  Assignment witness;   // verified satisfying assignment when success
};

struct TtsReport {
  std::string solver;
  std::string benchmark;
  int runs = 0;
  double p_success = 0.0;
  double t_run = 0.0;           // mean per-run time
  double tts = 0.0;
  double phase_points_adj = 0.0;  // mean phase points, probability-adjusted
};

RunRecord run_one(const SolverSpec& spec, const std::string& instance_id,
                  const CnfFormula& f, uint64_t seed);

struct SuiteConfig {
  int reps = 10;
  uint64_t seed = 1;
  int workers = 0;  // 0 = hardware concurrency
};

/// reps seeded runs per (instance, solver), executed by a bounded worker
/// pool; results ordered by (instance, solver, rep) regardless of
/// completion order. Per-run failures are recorded, not fatal.
std::vector<RunRecord> run_suite(
    const std::vector<std::pair<std::string, CnfFormula>>& instances,
    const std::vector<SolverSpec>& solvers, const SuiteConfig& suite);

/// One aggregate row per solver across the whole record set.
std::vector<TtsReport> aggregate_reports(const std::vector<RunRecord>& records,
                                         const std::string& benchmark_id);

std::string records_to_csv(const std::vector<RunRecord>& records);
std::string reports_to_csv(const std::vector<TtsReport>& reports);

double geometric_mean(const std::vector<double>& xs);

/// Minimal SVG line plot; each series is a (label, points) pair.
void write_svg_lines(const std::string& path,
                     const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series,
                     const std::string& x_label, const std::string& y_label,
                     bool log_x = false);

}  // namespace aims
