#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "aims/energy.hpp"

namespace aims {

enum class MultiplierMode { ideal, and_gate };

/// Parametric surrogate for device mismatch: multiplicative Gaussian
/// perturbation per coupler instance and per-node heuristic gain,
/// drawn once at programming time.
struct VariationModel {
  double coupling_sigma = 0.0;
  double gain_sigma = 0.0;
};

struct MachineConfig {
  double alpha = 1.0;          // 1/(RC); time is measured in RC units
  double dt = 0.01;            // RK4 step
  MultiplierMode multiplier_mode = MultiplierMode::ideal;
  int fan_in_limit = 0;        // max cubic coupler instances per node, 0 = unlimited
  double clamp_duration = 0.5; // 50 * dt by default
  std::optional<VariationModel> variation;
  double noise_sigma = 0.0;    // additive Gaussian std on dv/dt per step
  uint64_t seed = 0;
};

/// One cubic coupler instance feeding a node: weight * prod(v_j, v_k).
struct CubicSlot {
  int j = 0;
  int k = 0;
  double weight = 0.0;
};

struct SystemState {
  std::vector<double> v;            // node voltages in [0,1]
  std::vector<double> clamp_until;  // absolute release time, 0 = unclamped
  std::vector<uint8_t> clamp_target;
  double t = 0.0;

  explicit SystemState(int n = 0)
      : v(n, 0.0), clamp_until(n, 0.0), clamp_target(n, 0) {}

  bool clamped(int n) const { return t < clamp_until[n]; }
  uint8_t bit(int n) const { return v[n] >= 0.5 ? 1 : 0; }
  Assignment bits(int count = -1) const;
};

/// A PUBO compiled onto the machine: fan-in-limited cubic coupler slots,
/// overflow terms folded to quadratic via KZFD (enlarging the node count),
/// and device-variation perturbations applied. Immutable once programmed.
class ProgrammedMachine {
 public:
  ProgrammedMachine(const PuboPolynomial& p, const MachineConfig& cfg);

  const MachineConfig& config() const { return cfg_; }
  int num_nodes() const { return num_nodes_; }
  int num_original() const { return num_original_; }
  int num_overflow_aux() const { return num_nodes_ - num_original_; }

  /// Effective energy after fan-in reduction and variation; defined over
  /// all num_nodes() variables.
  const PuboPolynomial& effective() const { return effective_; }
  const std::vector<std::vector<CubicSlot>>& cubic_slots() const { return slots_; }

  double gain_mult_make(int n) const { return gain_m_.empty() ? 1.0 : gain_m_[n]; }
  double gain_mult_break(int n) const { return gain_b_.empty() ? 1.0 : gain_b_[n]; }

  /// dv/dt = -alpha * dH/dv for the gradient dynamics; clamped nodes report 0.
  std::vector<double> derivative(const SystemState& s) const;
  void derivative_into(const SystemState& s, const std::vector<double>& v,
                       std::vector<double>& out) const;

 private:
  MachineConfig cfg_;
  int num_nodes_ = 0;
  int num_original_ = 0;
  PuboPolynomial effective_;
  std::vector<double> lin_;
  std::vector<std::vector<std::pair<int, double>>> quad_;
  std::vector<std::vector<CubicSlot>> slots_;
  std::vector<double> gain_m_, gain_b_;

  void compile();
};

SystemState make_initial_state(const ProgrammedMachine& m, std::mt19937_64& rng,
                               const std::optional<std::vector<double>>& init = {});

/// One RK4 step: saturate voltages to [0,1], hold clamped nodes at their
/// rail, release expired clamps, advance time by dt.
void step(const ProgrammedMachine& m, SystemState& s, std::mt19937_64& rng);

void clamp_node(SystemState& s, int n, uint8_t target, double duration);

struct FlipDecision {
  int node = 0;
  uint8_t target = 0;
  double duration = 0.0;
};

struct ControllerOutput {
  std::vector<FlipDecision> flips;
  bool latched = false;  // true iff the formula is satisfied at this state
};

class AnnealController {
 public:
  virtual ~AnnealController() = default;
  virtual double eval_period() const = 0;
  virtual bool latch_enabled() const = 0;
  virtual ControllerOutput observe(const ProgrammedMachine& m, const SystemState& s,
                                   std::mt19937_64& rng) = 0;
  virtual void reset() {}
};

struct TrajectorySample {
  double t = 0.0;
  double energy = 0.0;
  long flips_heuristic = 0;
  long flips_natural = 0;
  uint64_t phase_points = 0;
};

struct Trajectory {
  SystemState final_state{0};
  Assignment final_bits;     // original variables only
  bool success = false;      // a satisfying state was observed
  Assignment witness;        // the satisfying state, when success
  double first_sat_time = -1.0;
  double t_end = 0.0;
  long steps = 0;
  long flips_heuristic = 0;
  long flips_natural = 0;
  uint64_t phase_points = 0; // distinct quantized states visited
  std::vector<TrajectorySample> samples;
};

struct RunOptions {
  double budget = 100.0;            // simulation time limit (RC units)
  int sample_stride = 0;            // record every k-th step, 0 = off
  std::optional<std::vector<double>> init;
  uint64_t seed = 0;                // run-level RNG (initial state, noise, controller)
};

/// Main loop: controller observations at its eval period, flips enacted
/// as clamps, RK4 steps in between. Terminates at the budget or as soon
/// as a latching controller reports satisfaction.
Trajectory run(const ProgrammedMachine& m, AnnealController* controller,
               const RunOptions& opts);

}  // namespace aims
