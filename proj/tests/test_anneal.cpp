#include <doctest.h>

#include <cmath>
#include <random>

#include "aims/anneal.hpp"
#include "aims/bench.hpp"

using namespace aims;

TEST_CASE("tmb probability closed form") {
  TmbConfig cfg;
  cfg.c_m = 1.0;
  cfg.c_b = 1.0;
  CHECK(tmb_probability(0, 0, cfg) == 0.0);
  CHECK(tmb_probability(0, 5, cfg) == 0.0);
  CHECK(tmb_probability(2, 1, cfg) ==
        doctest::Approx(std::tanh(2.0) * (1.0 - std::tanh(1.0))));
  CHECK(tmb_probability(2, 1, cfg) == doctest::Approx(0.22982).epsilon(1e-4));
  CHECK(tmb_probability(100, 0, cfg) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(tmb_probability(3, 50, cfg) < 1e-10);
  CHECK_THROWS_AS(tmb_probability(-1, 0, cfg), std::invalid_argument);
}

TEST_CASE("tmb probability monotonicity grid") {
  TmbConfig cfg;
  cfg.c_m = 0.3;
  cfg.c_b = 0.5;
  for (int b = 0; b < 8; ++b)
    for (int m = 0; m < 7; ++m) {
      CHECK(tmb_probability(m + 1, b, cfg) >= tmb_probability(m, b, cfg));
      CHECK(tmb_probability(m, b + 1, cfg) <= tmb_probability(m, b, cfg));
    }
}

TEST_CASE("tmb gain scale symmetry") {
  TmbConfig a, b;
  a.c_m = 0.4;
  a.c_b = 0.6;
  b.c_m = 0.8;
  b.c_b = 1.2;
  // doubling both gains is the same as doubling both counts
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= 8; ++k)
      CHECK(tmb_probability(m, k, b) == doctest::Approx(tmb_probability(2 * m, 2 * k, a)));
}

TEST_CASE("tmb observe latches exactly on satisfaction") {
  std::mt19937_64 rng(5);
  GeneratorConfig gc;
  gc.n_vars = 12;
  gc.seed = 8;
  CnfFormula f = gen_uniform(gc);
  ProgrammedMachine m(pubo_from_cnf(f), {});
  TmbController ctl(f, {});
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    SystemState s(m.num_nodes());
    for (auto& v : s.v) v = coin(rng) ? 1.0 : 0.0;
    ControllerOutput out = ctl.observe(m, s, rng);
    bool sat = count_unsat(f, s.bits(f.num_vars())) == 0;
    CHECK(out.latched == sat);
    if (sat) CHECK(out.flips.empty());
  }
}

TEST_CASE("tmb flip frequency matches closed form") {
  CnfFormula f = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
  ProgrammedMachine m(pubo_from_cnf(f), {});
  TmbConfig cfg;
  cfg.c_m = 0.7;
  cfg.c_b = 0.5;
  TmbController ctl(f, cfg);
  SystemState s(3);  // all-false state, every node has make=1, break=0
  std::mt19937_64 rng(17);
  const int trials = 10000;
  int flips = 0;
  for (int t = 0; t < trials; ++t) {
    ControllerOutput out = ctl.observe(m, s, rng);
    flips += static_cast<int>(out.flips.size());
  }
  double p = std::tanh(cfg.c_m);
  double sigma = std::sqrt(3.0 * trials * p * (1 - p));
  CHECK(std::abs(flips - 3.0 * trials * p) < 3.0 * sigma);
}

TEST_CASE("tmb never flips a clamped node and targets the complement") {
  GeneratorConfig gc;
  gc.n_vars = 10;
  gc.seed = 4;
  CnfFormula f = gen_uniform(gc);
  ProgrammedMachine m(pubo_from_cnf(f), {});
  TmbConfig cfg;
  cfg.c_m = 5.0;  // flip aggressively
  TmbController ctl(f, cfg);
  std::mt19937_64 rng(3);
  SystemState s(10);
  clamp_node(s, 2, 1, 100.0);
  clamp_node(s, 7, 0, 100.0);
  for (int t = 0; t < 100; ++t) {
    ControllerOutput out = ctl.observe(m, s, rng);
    for (const FlipDecision& fd : out.flips) {
      CHECK(fd.node != 2);
      CHECK(fd.node != 7);
      CHECK(fd.target == 1 - s.bit(fd.node));
    }
  }
}

TEST_CASE("random flip decay semantics") {
  CnfFormula f = parse_dimacs("p cnf 2 1\n1 2 0\n");
  ProgrammedMachine m(pubo_from_cnf(f), {});
  RandomFlipConfig cfg;
  cfg.p0 = 0.1;
  cfg.decay = 0.9;
  RandomFlipController ctl(f, cfg);
  std::mt19937_64 rng(1);
  SystemState s(2);
  CHECK(ctl.current_probability() == doctest::Approx(0.1));
  ctl.observe(m, s, rng);
  ctl.observe(m, s, rng);
  CHECK(ctl.current_probability() == doctest::Approx(0.1 * 0.9 * 0.9));
  ctl.observe(m, s, rng);
  CHECK(ctl.current_probability() == doctest::Approx(0.0729));
  ctl.reset();
  CHECK(ctl.current_probability() == doctest::Approx(0.1));
}

TEST_CASE("random flip with p0 zero never flips, decay one is stationary") {
  CnfFormula f = parse_dimacs("p cnf 2 1\n1 2 0\n");
  ProgrammedMachine m(pubo_from_cnf(f), {});
  std::mt19937_64 rng(2);
  SystemState s(2);
  RandomFlipConfig zero;
  zero.p0 = 0.0;
  RandomFlipController cz(f, zero);
  for (int t = 0; t < 100; ++t) CHECK(cz.observe(m, s, rng).flips.empty());
  RandomFlipConfig stat;
  stat.p0 = 0.5;
  stat.decay = 1.0;
  RandomFlipController cs(f, stat);
  for (int t = 0; t < 10; ++t) cs.observe(m, s, rng);
  CHECK(cs.current_probability() == doctest::Approx(0.5));
}

TEST_CASE("make count recovered from the incoming current") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int inst = 0; inst < 5; ++inst) {
    GeneratorConfig gc;
    gc.n_vars = 10;
    gc.seed = 300 + inst;
    CnfFormula f = gen_uniform(gc);
    MachineConfig cfg;
    cfg.alpha = 1.4;
    ProgrammedMachine m(pubo_from_cnf(f), cfg);
    for (int trial = 0; trial < 50; ++trial) {
      SystemState s(10);
      for (auto& v : s.v) v = coin(rng) ? 1.0 : 0.0;
      std::vector<double> d = m.derivative(s);
      Assignment a = s.bits();
      std::vector<MakeBreak> mb = all_make_break(f, a);
      for (int n = 0; n < 10; ++n) {
        double recovered = make_count_from_current(f, s.v, d[n], cfg.alpha, n);
        CHECK(recovered == doctest::Approx(mb[n].make));
      }
    }
  }
}
