#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aims/bench.hpp"

namespace py = pybind11;
using namespace aims;

namespace {

CnfFormula parse_text(const std::string& text) { return parse_dimacs(text); }

GeneratorConfig make_gen_config(const std::string& kind, int n, double ratio,
                                double exponent, uint64_t seed) {
  GeneratorConfig cfg;
  if (kind == "scale_free")
    cfg.kind = GeneratorKind::scale_free;
  else if (kind == "uniform")
    cfg.kind = GeneratorKind::uniform_random;
  else
    throw std::invalid_argument("kind must be 'uniform' or 'scale_free'");
  cfg.n_vars = n;
  cfg.clause_ratio = ratio;
  cfg.power_exponent = exponent;
  cfg.seed = seed;
  return cfg;
}

py::dict record_to_dict(const RunRecord& r) {
  py::dict d;
  d["solver"] = r.solver;
  d["instance"] = r.instance;
  d["seed"] = r.seed;
  d["success"] = r.success;
  d["t_run"] = r.t_run;
  d["wall_ms"] = r.wall_ms;
  d["phase_points"] = r.phase_points;
  d["flips_heuristic"] = r.flips_heuristic;
  d["flips_natural"] = r.flips_natural;
  d["witness"] = std::vector<int>(r.witness.begin(), r.witness.end());
  return d;
}

}  // namespace

PYBIND11_MODULE(_aims, m) {
  m.doc() = "3-SAT toolkit: cubic continuous-time dynamics, annealing "
            "heuristics, quadratization, and discrete baselines";

  py::register_exception<CnfError>(m, "CnfError");

  py::class_<Literal>(m, "Literal")
      .def(py::init<>())
      .def_readwrite("var", &Literal::var)
      .def_readwrite("negated", &Literal::negated);

  py::class_<CnfFormula>(m, "CnfFormula")
      .def_property_readonly("num_vars", &CnfFormula::num_vars)
      .def_property_readonly("num_clauses", &CnfFormula::num_clauses)
      .def("to_dimacs", [](const CnfFormula& f) { return to_dimacs(f); })
      .def("__repr__", [](const CnfFormula& f) {
        return "<CnfFormula vars=" + std::to_string(f.num_vars()) +
               " clauses=" + std::to_string(f.num_clauses()) + ">";
      });

  m.def("parse_dimacs", &parse_text, py::arg("text"),
        "Parse DIMACS CNF text into a formula");
  m.def("parse_dimacs_file",
        [](const std::string& path) { return parse_dimacs_file(path); },
        py::arg("path"));
  m.def("count_unsat",
        [](const CnfFormula& f, const std::vector<int>& bits) {
          return count_unsat(f, Assignment(bits.begin(), bits.end()));
        },
        py::arg("formula"), py::arg("assignment"),
        "Number of clauses unsatisfied under the 0/1 assignment");
  m.def("make_break",
        [](const CnfFormula& f, const std::vector<int>& bits, int var) {
          MakeBreak mb = make_break_counts(f, Assignment(bits.begin(), bits.end()), var);
          return py::make_tuple(mb.make, mb.brk);
        },
        py::arg("formula"), py::arg("assignment"), py::arg("var"));

  py::class_<PuboPolynomial>(m, "PuboPolynomial")
      .def_property_readonly("num_vars", &PuboPolynomial::num_vars)
      .def_property_readonly("constant", &PuboPolynomial::constant)
      .def("to_json", [](const PuboPolynomial& p) { return pubo_to_json(p); });

  py::class_<QuboProblem>(m, "QuboProblem")
      .def_readonly("num_vars", &QuboProblem::num_vars)
      .def_readonly("num_original", &QuboProblem::num_original)
      .def_readonly("penalty_k", &QuboProblem::penalty_k)
      .def("to_json", [](const QuboProblem& q) { return qubo_to_json(q); });

  m.def("pubo_from_cnf", &pubo_from_cnf, py::arg("formula"),
        "Cubic polynomial whose value equals the unsat-clause count");
  m.def("pubo_from_json", &pubo_from_json, py::arg("text"));
  m.def("qubo_from_json", &qubo_from_json, py::arg("text"));
  m.def("evaluate_pubo",
        [](const PuboPolynomial& p, const std::vector<double>& v) {
          return evaluate(p, v);
        },
        py::arg("pubo"), py::arg("point"));
  m.def("evaluate_qubo",
        [](const QuboProblem& q, const std::vector<double>& x) {
          return evaluate(q, x);
        },
        py::arg("qubo"), py::arg("point"));
  m.def("gradient",
        [](const PuboPolynomial& p, const std::vector<double>& v) {
          return gradient(p, v);
        },
        py::arg("pubo"), py::arg("point"));
  m.def("quadratize_kzfd", &quadratize_kzfd, py::arg("pubo"));
  m.def("quadratize_rosenberg", &quadratize_rosenberg, py::arg("pubo"),
        py::arg("k") = 2.0);

  m.def("generate",
        [](const std::string& kind, int n, double ratio, double exponent,
           uint64_t seed) {
          return generate(make_gen_config(kind, n, ratio, exponent, seed));
        },
        py::arg("kind") = "uniform", py::arg("n") = 50, py::arg("ratio") = 4.25,
        py::arg("exponent") = 2.8, py::arg("seed") = 0,
        "Random 3-SAT instance; kind is 'uniform' or 'scale_free'");

  m.def("compute_tts", &compute_tts, py::arg("t_run"), py::arg("p_success"));

  m.def("solve",
        [](const CnfFormula& f, const std::string& solver, uint64_t seed,
           double budget, double c_m, double c_b, double clamp) {
          SolverSpec spec;
          spec.id = solver;
          if (budget > 0) spec.budget = budget;
          if (c_m > 0) spec.tmb.c_m = c_m;
          if (c_b > 0) spec.tmb.c_b = c_b;
          if (clamp > 0) {
            spec.machine.clamp_duration = clamp;
            spec.tmb.clamp_duration = clamp;
          }
          RunRecord rec;
          {
            py::gil_scoped_release release;
            rec = run_one(spec, "py", f, seed);
          }
          return record_to_dict(rec);
        },
        py::arg("formula"), py::arg("solver") = "aims", py::arg("seed") = 0,
        py::arg("budget") = -1.0, py::arg("c_m") = -1.0, py::arg("c_b") = -1.0,
        py::arg("clamp") = -1.0,
        "Run one solver on a formula; returns a result dict with a "
        "verified witness on success. Solver ids: aims, cbrim, sac, "
        "saq-kzfd, saq-rosenberg, schoning, walksat.");
}
