// Command-line frontend: every subcommand is a thin composition of
// library calls. Exit codes follow SAT-solver convention: 10 = solution
// found, 0 = no solution found (solvers are incomplete), 1 = error.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "aims/bench.hpp"

using aims::CnfFormula;
using json = nlohmann::json;

namespace {

void print_model(const aims::Assignment& a) {
  std::cout << "s SATISFIABLE\n";
  std::ostringstream line;
  line << "v";
  for (size_t i = 0; i < a.size(); ++i) {
    line << ' ' << (a[i] ? static_cast<long>(i) + 1 : -(static_cast<long>(i) + 1));
    if (line.str().size() > 72) {
      std::cout << line.str() << "\n";
      line.str("");
      line << "v";
    }
  }
  line << " 0";
  std::cout << line.str() << "\n";
}

// Accepts DIMACS v-lines or bare signed integers; 0 terminates.
aims::Assignment parse_model_file(const std::string& path, int num_vars) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  aims::Assignment a(num_vars, 0);
  std::vector<bool> seen(num_vars, false);
  std::string tok;
  while (in >> tok) {
    if (tok == "v" || tok == "s") continue;
    if (tok == "SATISFIABLE" || tok == "UNSATISFIABLE" || tok == "UNKNOWN") continue;
    long lit = 0;
    try {
      lit = std::stol(tok);
    } catch (const std::exception&) {
      throw std::runtime_error("bad token in model file: " + tok);
    }
    if (lit == 0) continue;
    long var = std::labs(lit) - 1;
    if (var >= num_vars) throw std::runtime_error("model literal out of range: " + tok);
    a[var] = lit > 0 ? 1 : 0;
    seen[var] = true;
  }
  for (int i = 0; i < num_vars; ++i)
    if (!seen[i]) throw std::runtime_error("model leaves variable " + std::to_string(i + 1) + " unassigned");
  return a;
}

aims::SolverSpec spec_from_json(const json& j) {
  aims::SolverSpec s;
  s.id = j.at("id").get<std::string>();
  if (j.contains("budget")) s.budget = j["budget"].get<double>();
  if (j.contains("sample_stride")) s.sample_stride = j["sample_stride"].get<int>();
  if (j.contains("rosenberg_k")) s.rosenberg_k = j["rosenberg_k"].get<double>();
  if (j.contains("schoning_restarts")) s.schoning_restarts = j["schoning_restarts"].get<int>();
  if (j.contains("machine")) {
    const json& m = j["machine"];
    if (m.contains("alpha")) s.machine.alpha = m["alpha"].get<double>();
    if (m.contains("dt")) s.machine.dt = m["dt"].get<double>();
    if (m.contains("fan_in_limit")) s.machine.fan_in_limit = m["fan_in_limit"].get<int>();
    if (m.contains("clamp_duration")) s.machine.clamp_duration = m["clamp_duration"].get<double>();
    if (m.contains("noise_sigma")) s.machine.noise_sigma = m["noise_sigma"].get<double>();
    if (m.contains("multiplier_mode"))
      s.machine.multiplier_mode = m["multiplier_mode"].get<std::string>() == "and_gate"
                                      ? aims::MultiplierMode::and_gate
                                      : aims::MultiplierMode::ideal;
    if (m.contains("coupling_sigma") || m.contains("gain_sigma")) {
      aims::VariationModel vm;
      if (m.contains("coupling_sigma")) vm.coupling_sigma = m["coupling_sigma"].get<double>();
      if (m.contains("gain_sigma")) vm.gain_sigma = m["gain_sigma"].get<double>();
      s.machine.variation = vm;
    }
  }
  if (j.contains("tmb")) {
    const json& t = j["tmb"];
    if (t.contains("c_m")) s.tmb.c_m = t["c_m"].get<double>();
    if (t.contains("c_b")) s.tmb.c_b = t["c_b"].get<double>();
    if (t.contains("eval_period")) s.tmb.eval_period = t["eval_period"].get<double>();
    if (t.contains("clamp_duration")) s.tmb.clamp_duration = t["clamp_duration"].get<double>();
    if (t.contains("latch")) s.tmb.latch = t["latch"].get<bool>();
  }
  if (j.contains("rflip")) {
    const json& r = j["rflip"];
    if (r.contains("p0")) s.rflip.p0 = r["p0"].get<double>();
    if (r.contains("decay")) s.rflip.decay = r["decay"].get<double>();
    if (r.contains("eval_period")) s.rflip.eval_period = r["eval_period"].get<double>();
    if (r.contains("clamp_duration")) s.rflip.clamp_duration = r["clamp_duration"].get<double>();
    if (r.contains("latch")) s.rflip.latch = r["latch"].get<bool>();
  }
  if (j.contains("sa")) {
    const json& a = j["sa"];
    if (a.contains("t_initial")) s.sa.t_initial = a["t_initial"].get<double>();
    if (a.contains("t_final")) s.sa.t_final = a["t_final"].get<double>();
    if (a.contains("sweeps")) s.sa.sweeps = a["sweeps"].get<int>();
    if (a.contains("schedule"))
      s.sa.schedule = a["schedule"].get<std::string>() == "linear" ? aims::SaSchedule::linear
                                                                   : aims::SaSchedule::geometric;
  }
  if (j.contains("walksat")) {
    const json& w = j["walksat"];
    if (w.contains("max_flips")) s.walksat.max_flips = w["max_flips"].get<long>();
    if (w.contains("noise")) s.walksat.noise = w["noise"].get<double>();
    if (w.contains("restarts")) s.walksat.restarts = w["restarts"].get<int>();
  }
  return s;
}

int suite_workers_from_env() {
  const char* env = std::getenv("AIMS_WORKERS");
  if (!env) return 0;
  return std::atoi(env);
}

struct SolveFlags {
  std::string file;
  std::string config_path;
  std::string json_out;
  std::string solver = "aims";
  uint64_t seed = 0;
  double budget = -1.0;
  double c_m = -1.0, c_b = -1.0, clamp = -1.0, eval_period = -1.0;
  double alpha = -1.0, dt = -1.0, noise_sigma = -1.0;
  double coupling_sigma = -1.0, gain_sigma = -1.0;
  int fan_in = -1;
  bool no_latch = false;
  bool and_gate = false;
  int sweeps = -1;
  double t_initial = -1.0, t_final = -1.0;
  long max_flips = -1;
  int restarts = -1;
  double walksat_noise = -1.0;
  double p0 = -1.0, decay = -1.0;
  double rosenberg_k = -1.0;
};

int cmd_solve(const SolveFlags& fl) {
  CnfFormula f = aims::parse_dimacs_file(fl.file);
  aims::SolverSpec spec;
  if (!fl.config_path.empty()) {
    std::ifstream cj(fl.config_path);
    if (!cj) throw std::runtime_error("cannot open config: " + fl.config_path);
    json j = json::parse(cj);
    if (!j.contains("id")) j["id"] = fl.solver;
    spec = spec_from_json(j);
  } else {
    spec.id = fl.solver;
  }
  if (fl.solver != "aims") spec.id = fl.solver;  // flag wins over config
  if (fl.budget >= 0) spec.budget = fl.budget;
  if (fl.c_m >= 0) spec.tmb.c_m = fl.c_m;
  if (fl.c_b >= 0) spec.tmb.c_b = fl.c_b;
  if (fl.clamp >= 0) {
    spec.machine.clamp_duration = fl.clamp;
    spec.tmb.clamp_duration = fl.clamp;
    spec.rflip.clamp_duration = fl.clamp;
  }
  if (fl.eval_period >= 0) {
    spec.tmb.eval_period = fl.eval_period;
    spec.rflip.eval_period = fl.eval_period;
  }
  if (fl.alpha >= 0) spec.machine.alpha = fl.alpha;
  if (fl.dt >= 0) spec.machine.dt = fl.dt;
  if (fl.noise_sigma >= 0) spec.machine.noise_sigma = fl.noise_sigma;
  if (fl.coupling_sigma >= 0 || fl.gain_sigma >= 0) {
    aims::VariationModel vm = spec.machine.variation.value_or(aims::VariationModel{});
    if (fl.coupling_sigma >= 0) vm.coupling_sigma = fl.coupling_sigma;
    if (fl.gain_sigma >= 0) vm.gain_sigma = fl.gain_sigma;
    spec.machine.variation = vm;
  }
  if (fl.fan_in >= 0) spec.machine.fan_in_limit = fl.fan_in;
  if (fl.no_latch) spec.tmb.latch = false;
  if (fl.and_gate) spec.machine.multiplier_mode = aims::MultiplierMode::and_gate;
  if (fl.sweeps >= 0) spec.sa.sweeps = fl.sweeps;
  if (fl.t_initial >= 0) spec.sa.t_initial = fl.t_initial;
  if (fl.t_final >= 0) spec.sa.t_final = fl.t_final;
  if (fl.max_flips >= 0) spec.walksat.max_flips = fl.max_flips;
  if (fl.restarts >= 0) {
    spec.walksat.restarts = fl.restarts;
    spec.schoning_restarts = fl.restarts;
  }
  if (fl.walksat_noise >= 0) spec.walksat.noise = fl.walksat_noise;
  if (fl.p0 >= 0) spec.rflip.p0 = fl.p0;
  if (fl.decay >= 0) spec.rflip.decay = fl.decay;
  if (fl.rosenberg_k >= 0) spec.rosenberg_k = fl.rosenberg_k;

  aims::RunRecord rec = aims::run_one(spec, fl.file, f, fl.seed);

  if (!fl.json_out.empty()) {
    json out = {{"solver", rec.solver},     {"instance", rec.instance},
                {"seed", rec.seed},         {"success", rec.success},
                {"t_run", rec.t_run},       {"wall_ms", rec.wall_ms},
                {"phase_points", rec.phase_points},
                {"flips_heuristic", rec.flips_heuristic},
                {"flips_natural", rec.flips_natural}};
    if (rec.success) {
      std::vector<int> bits(rec.witness.begin(), rec.witness.end());
      out["witness"] = bits;
    }
    std::ofstream jo(fl.json_out);
    jo << out.dump(2) << "\n";
  }
  if (rec.success) {
    if (aims::count_unsat(f, rec.witness) != 0)
      throw std::runtime_error("internal error: unverified witness");
    print_model(rec.witness);
    return 10;
  }
  std::cout << "s UNKNOWN\n";
  return 0;
}

int cmd_convert(const std::string& file, const std::string& rule, double k,
                const std::string& out_path) {
  CnfFormula f = aims::parse_dimacs_file(file);
  aims::PuboPolynomial p = aims::pubo_from_cnf(f);
  aims::QuboProblem q =
      rule == "rosenberg" ? aims::quadratize_rosenberg(p, k) : aims::quadratize_kzfd(p);
  std::string text = aims::qubo_to_json(q);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    out << text << "\n";
  }
  return 0;
}

int cmd_gen(const std::string& kind, int n, double ratio, double exp_, uint64_t seed,
            int count, bool satisfiable, const std::string& out_prefix) {
  aims::GeneratorConfig cfg;
  cfg.kind = kind == "scale_free" ? aims::GeneratorKind::scale_free
                                  : aims::GeneratorKind::uniform_random;
  cfg.n_vars = n;
  cfg.clause_ratio = ratio;
  cfg.power_exponent = exp_;
  for (int i = 0; i < count; ++i) {
    cfg.seed = seed + static_cast<uint64_t>(i) * 1000;
    CnfFormula f = satisfiable ? aims::generate_satisfiable(cfg) : aims::generate(cfg);
    if (out_prefix.empty()) {
      aims::write_dimacs(f, std::cout);
    } else {
      char name[512];
      std::snprintf(name, sizeof(name), "%s%03d.cnf", out_prefix.c_str(), i);
      std::ofstream out(name);
      aims::write_dimacs(f, out);
    }
  }
  return 0;
}

int cmd_bench(const std::string& suite_path, std::string out_dir) {
  std::ifstream in(suite_path);
  if (!in) throw std::runtime_error("cannot open suite file: " + suite_path);
  json j = json::parse(in);

  std::vector<std::pair<std::string, CnfFormula>> instances;
  if (j.contains("instances")) {
    for (const auto& p : j["instances"]) {
      std::string path = p.get<std::string>();
      instances.emplace_back(std::filesystem::path(path).filename().string(),
                             aims::parse_dimacs_file(path));
    }
  }
  if (j.contains("generator")) {
    const json& g = j["generator"];
    aims::GeneratorConfig cfg;
    if (g.contains("kind"))
      cfg.kind = g["kind"].get<std::string>() == "scale_free"
                     ? aims::GeneratorKind::scale_free
                     : aims::GeneratorKind::uniform_random;
    cfg.n_vars = g.value("n", 50);
    cfg.clause_ratio = g.value("ratio", 4.25);
    cfg.power_exponent = g.value("exp", 2.8);
    uint64_t seed = g.value("seed", 0);
    int count = g.value("count", 10);
    bool satisfiable = g.value("satisfiable", false);
    for (int i = 0; i < count; ++i) {
      cfg.seed = seed + static_cast<uint64_t>(i) * 1000;
      instances.emplace_back("gen-" + std::to_string(i),
                             satisfiable ? aims::generate_satisfiable(cfg)
                                         : aims::generate(cfg));
    }
  }
  if (instances.empty()) throw std::runtime_error("suite has no instances");

  std::vector<aims::SolverSpec> solvers;
  for (const auto& s : j.at("solvers")) solvers.push_back(spec_from_json(s));

  aims::SuiteConfig suite;
  suite.reps = j.value("reps", 10);
  suite.seed = j.value("seed", 1);
  suite.workers = j.value("workers", suite_workers_from_env());

  std::vector<aims::RunRecord> records = aims::run_suite(instances, solvers, suite);
  std::vector<aims::TtsReport> reports =
      aims::aggregate_reports(records, j.value("benchmark", "suite"));

  if (out_dir.empty()) out_dir = "bench_out";
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream runs(out_dir + "/runs.csv");
    runs << aims::records_to_csv(records);
    std::ofstream reps(out_dir + "/reports.csv");
    reps << aims::reports_to_csv(reports);
  }
  // runtime distribution plot: per solver, sorted successful run times
  std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series;
  for (const aims::TtsReport& rep : reports) {
    std::vector<double> ts;
    for (const aims::RunRecord& r : records)
      if (r.solver == rep.solver && r.success) ts.push_back(r.t_run);
    std::sort(ts.begin(), ts.end());
    std::vector<std::pair<double, double>> pts;
    for (size_t i = 0; i < ts.size(); ++i)
      pts.emplace_back(ts[i], static_cast<double>(i + 1) / rep.runs);
    if (!pts.empty()) series.emplace_back(rep.solver, std::move(pts));
  }
  if (!series.empty())
    aims::write_svg_lines(out_dir + "/runtime_cdf.svg", series, "t_run", "P(solved)", true);
  std::cout << aims::reports_to_csv(reports);
  return 0;
}

int cmd_sweep(const std::string& param, const std::vector<std::string>& files,
              int n_gen, int count_gen, double v_min, double v_max, int points,
              int reps, uint64_t seed, const std::string& out_path) {
  std::vector<std::pair<std::string, CnfFormula>> instances;
  for (const std::string& path : files)
    instances.emplace_back(std::filesystem::path(path).filename().string(),
                           aims::parse_dimacs_file(path));
  if (instances.empty()) {
    // success-probability curves need satisfiable instances
    aims::GeneratorConfig cfg;
    cfg.n_vars = n_gen;
    for (int i = 0; i < count_gen; ++i) {
      cfg.seed = seed * 1000 + static_cast<uint64_t>(i) * 37;
      instances.emplace_back("gen-" + std::to_string(i), aims::generate_satisfiable(cfg));
    }
  }
  std::ostringstream csv;
  std::vector<std::pair<double, double>> curve;
  if (param == "clamp") {
    csv << "clamp_duration,p_success,mean_t_run,tts\n";
    for (int i = 0; i < points; ++i) {
      double frac = points > 1 ? static_cast<double>(i) / (points - 1) : 0.0;
      double clamp = v_min * std::pow(v_max / v_min, frac);
      aims::SolverSpec spec;
      spec.id = "aims";
      // evaluation cadence stays fixed; only the hold time is swept
      spec.machine.clamp_duration = clamp;
      spec.tmb.clamp_duration = clamp;
      aims::SuiteConfig suite;
      suite.reps = reps;
      suite.seed = seed + static_cast<uint64_t>(i);
      suite.workers = suite_workers_from_env();
      std::vector<aims::RunRecord> recs = aims::run_suite(instances, {spec}, suite);
      std::vector<aims::TtsReport> rep = aims::aggregate_reports(recs, "sweep");
      csv << clamp << "," << rep[0].p_success << "," << rep[0].t_run << ","
          << rep[0].tts << "\n";
      curve.emplace_back(clamp, rep[0].p_success);
    }
  } else if (param == "gains") {
    csv << "c_m,c_b,p_success,mean_t_run,tts\n";
    for (int i = 0; i < points; ++i)
      for (int jj = 0; jj < points; ++jj) {
        double fi = points > 1 ? static_cast<double>(i) / (points - 1) : 0.0;
        double fj = points > 1 ? static_cast<double>(jj) / (points - 1) : 0.0;
        double cm = v_min + (v_max - v_min) * fi;
        double cb = v_min + (v_max - v_min) * fj;
        aims::SolverSpec spec;
        spec.id = "aims";
        spec.tmb.c_m = cm;
        spec.tmb.c_b = cb;
        aims::SuiteConfig suite;
        suite.reps = reps;
        suite.seed = seed + static_cast<uint64_t>(i * points + jj);
        suite.workers = suite_workers_from_env();
        std::vector<aims::RunRecord> recs = aims::run_suite(instances, {spec}, suite);
        std::vector<aims::TtsReport> rep = aims::aggregate_reports(recs, "sweep");
        csv << cm << "," << cb << "," << rep[0].p_success << "," << rep[0].t_run
            << "," << rep[0].tts << "\n";
      }
  } else {
    throw std::runtime_error("unknown sweep parameter: " + param);
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    out << csv.str();
    if (param == "clamp" && !curve.empty())
      aims::write_svg_lines(out_path + ".svg", {{"p_success", curve}},
                            "clamp_duration", "p_success", true);
  }
  return 0;
}

int cmd_verify(const std::string& file, const std::string& model_path) {
  CnfFormula f = aims::parse_dimacs_file(file);
  aims::Assignment a = parse_model_file(model_path, f.num_vars());
  int unsat = aims::count_unsat(f, a);
  if (unsat == 0) {
    std::cout << "s VERIFIED\n";
    return 10;
  }
  std::cout << "s NOT-SATISFYING unsat_clauses=" << unsat << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-SAT solver toolkit: continuous-time cubic dynamics with "
               "annealing heuristics, plus discrete baselines"};
  app.require_subcommand(1);

  SolveFlags fl;
  CLI::App* solve = app.add_subcommand("solve", "solve a DIMACS CNF file");
  solve->add_option("file", fl.file, "DIMACS CNF path")->required();
  solve->add_option("--solver", fl.solver,
                    "aims|cbrim|sac|saq-kzfd|saq-rosenberg|schoning|walksat");
  solve->add_option("--config", fl.config_path, "solver config JSON");
  solve->add_option("--json", fl.json_out, "write run record JSON here");
  solve->add_option("--seed", fl.seed, "RNG seed");
  solve->add_option("--budget", fl.budget, "time budget in RC units (dynamical solvers)");
  solve->add_option("--c-m", fl.c_m, "tanh make gain");
  solve->add_option("--c-b", fl.c_b, "tanh break gain");
  solve->add_option("--clamp", fl.clamp, "clamp duration in RC units");
  solve->add_option("--eval-period", fl.eval_period, "controller evaluation period");
  solve->add_option("--alpha", fl.alpha, "integration gain 1/(RC)");
  solve->add_option("--dt", fl.dt, "RK4 step size");
  solve->add_option("--noise-sigma", fl.noise_sigma, "additive slope noise std");
  solve->add_option("--coupling-sigma", fl.coupling_sigma, "coupler mismatch std");
  solve->add_option("--gain-sigma", fl.gain_sigma, "heuristic gain mismatch std");
  solve->add_option("--fan-in", fl.fan_in, "cubic fan-in limit, 0 = unlimited");
  solve->add_flag("--no-latch", fl.no_latch, "disable the TMB latch");
  solve->add_flag("--and-gate", fl.and_gate, "AND-gate multiplier surrogates");
  solve->add_option("--sweeps", fl.sweeps, "SA sweep count");
  solve->add_option("--t-initial", fl.t_initial, "SA initial temperature");
  solve->add_option("--t-final", fl.t_final, "SA final temperature");
  solve->add_option("--max-flips", fl.max_flips, "WalkSAT flip budget");
  solve->add_option("--restarts", fl.restarts, "restart count (schoning/walksat)");
  solve->add_option("--walksat-noise", fl.walksat_noise, "WalkSAT noise probability");
  solve->add_option("--p0", fl.p0, "random-flip initial probability (cbrim)");
  solve->add_option("--decay", fl.decay, "random-flip probability decay");
  solve->add_option("--k", fl.rosenberg_k, "Rosenberg penalty weight");

  std::string cv_file, cv_rule = "kzfd", cv_out;
  double cv_k = 2.0;
  CLI::App* convert = app.add_subcommand("convert", "quadratize a CNF to QUBO JSON");
  convert->add_option("file", cv_file, "DIMACS CNF path")->required();
  convert->add_option("--rule", cv_rule, "kzfd|rosenberg")
      ->check(CLI::IsMember({"kzfd", "rosenberg"}));
  convert->add_option("--k", cv_k, "Rosenberg penalty weight (> 1)");
  convert->add_option("-o,--output", cv_out, "output path (default stdout)");

  std::string g_kind = "uniform", g_prefix;
  int g_n = 50, g_count = 1;
  double g_ratio = 4.25, g_exp = 2.8;
  uint64_t g_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate random 3-SAT instances");
  gen->add_option("--kind", g_kind, "uniform|scale_free")
      ->check(CLI::IsMember({"uniform", "scale_free"}));
  gen->add_option("--n", g_n, "variable count")->required();
  gen->add_option("--ratio", g_ratio, "clause/variable ratio");
  gen->add_option("--exp", g_exp, "scale-free power-law exponent");
  gen->add_option("--seed", g_seed, "base seed; instance i uses seed+i");
  gen->add_option("--count", g_count, "number of instances");
  bool g_sat = false;
  gen->add_flag("--satisfiable", g_sat, "retry seeds until satisfiable (complete check)");
  gen->add_option("-o,--output", g_prefix, "output file prefix (default stdout)");

  std::string b_suite, b_out;
  CLI::App* bench = app.add_subcommand("bench", "run a benchmark suite JSON");
  bench->add_option("suite", b_suite, "suite JSON path")->required();
  bench->add_option("-o,--output", b_out, "output directory (default bench_out)");

  std::string sw_param, sw_out;
  std::vector<std::string> sw_files;
  int sw_n = 50, sw_count = 5, sw_points = 8, sw_reps = 10;
  double sw_min = 0.05, sw_max = 5.0;
  uint64_t sw_seed = 1;
  CLI::App* sweep = app.add_subcommand("sweep", "parameter grid sweep");
  sweep->add_option("--param", sw_param, "clamp|gains")
      ->required()
      ->check(CLI::IsMember({"clamp", "gains"}));
  sweep->add_option("--file", sw_files, "instance files (default: generated)");
  sweep->add_option("--n", sw_n, "generated instance size");
  sweep->add_option("--count", sw_count, "generated instance count");
  sweep->add_option("--min", sw_min, "grid minimum");
  sweep->add_option("--max", sw_max, "grid maximum");
  sweep->add_option("--points", sw_points, "grid points per axis");
  sweep->add_option("--reps", sw_reps, "runs per grid point per instance");
  sweep->add_option("--seed", sw_seed, "suite seed");
  sweep->add_option("-o,--output", sw_out, "CSV output path (default stdout)");

  std::string vf_file, vf_model;
  CLI::App* verify = app.add_subcommand("verify", "check a model against a CNF");
  verify->add_option("file", vf_file, "DIMACS CNF path")->required();
  verify->add_option("model", vf_model, "model file (v-lines or literals)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(fl);
    if (convert->parsed()) return cmd_convert(cv_file, cv_rule, cv_k, cv_out);
    if (gen->parsed())
      return cmd_gen(g_kind, g_n, g_ratio, g_exp, g_seed, g_count, g_sat, g_prefix);
    if (bench->parsed()) return cmd_bench(b_suite, b_out);
    if (sweep->parsed())
      return cmd_sweep(sw_param, sw_files, sw_n, sw_count, sw_min, sw_max,
                       sw_points, sw_reps, sw_seed, sw_out);
    if (verify->parsed()) return cmd_verify(vf_file, vf_model);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
