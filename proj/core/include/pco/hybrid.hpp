#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "pco/digraph.hpp"
#include "pco/lyapunov.hpp"
#include "pco/rng.hpp"
#include "pco/sync_config.hpp"
#include "pco/trajectory.hpp"

namespace pco {

/// Pulse-delivery predicate consulted once per out-edge of a firing agent:
/// (from, to, jump index, canonical edge index) -> deliver or drop.
/// An empty filter delivers every pulse (the deterministic dynamics).
using EdgeFilter = std::function<bool(int from, int to, std::int64_t jump, int edge_index)>;

/// Binary phase-update rule: a pulsed phase resets backward to 0 below its
/// threshold r and forward to 1 above it. Within tie_eps of r the update
/// set is {0, 1} and the tie policy selects the branch; CoinFlip consumes
/// one fair bit from `coin`.
int apply_bpr(double tau, double r, TiePolicy policy, double tie_eps,
              const std::function<bool()>& coin = {});

/// Oscillator phases under the common-rate flow, in event form.
///
/// Each agent stores the (period-normalized) time at which its phase is 0,
/// so phases never accumulate rounding during flows: every event time is a
/// sum of an initial phase and an integer, circle positions are exact, and
/// agents reset together stay bitwise coincident forever.
class PhaseState {
 public:
  PhaseState(std::span<const double> phases, double period = 1.0);

  int size() const { return static_cast<int>(anchor_.size()); }
  double period() const { return period_; }
  double t() const { return s_ * period_; }         // seconds
  double time_normalized() const { return s_; }     // multiples of the period
  std::int64_t jumps() const { return j_; }

  double phase(int i) const { return at_one_[i] ? 1.0 : s_ - anchor_[i]; }
  std::vector<double> phases() const;

  bool at_threshold(int i) const { return at_one_[i] != 0; }
  bool in_jump_set() const { return n_at_one_ > 0; }

  /// Circle position in co-moving coordinates: constant during flows,
  /// bitwise-preserved by resets of the firing agent.
  double position(int i) const { return wrap01(-anchor_[i]); }

  /// Normalized time of the next organic firing (+inf if already in the
  /// jump set is not checked here).
  double next_fire_time() const;

  // Event-level mutators used by the executor.
  void advance_time(double s_new) { s_ = s_new; }
  void mark_at_threshold(int i);
  void fire_reset(int i);
  void pulse_to_zero(int i);
  void pulse_to_one(int i);
  void bump_jump() { ++j_; }

 private:
  std::vector<double> anchor_;  // normalized time at which phase = 0
  std::vector<char> at_one_;
  int n_at_one_ = 0;
  double s_ = 0.0;
  double period_;
  std::int64_t j_ = 0;
};

/// Phases under bounded flow-rate and firing-threshold disturbances.
/// Stored directly (per-agent rates break the shared-anchor trick); no
/// bitwise exactness is promised on this path.
class DriftPhaseState {
 public:
  DriftPhaseState(std::span<const double> phases, const SyncConfig& cfg, const Disturbance& dist);

  int size() const { return static_cast<int>(phase_.size()); }
  double period() const { return period_; }
  double t() const { return s_ * period_; }
  double time_normalized() const { return s_; }
  std::int64_t jumps() const { return j_; }

  double phase(int i) const { return phase_[i]; }
  std::vector<double> phases() const { return phase_; }
  bool at_threshold(int i) const { return at_one_[i] != 0; }
  bool in_jump_set() const { return n_at_one_ > 0; }
  double position(int i) const { return wrap01(phase_[i]); }

  double threshold(int i) const { return threshold_[i]; }

  void advance_time(double s_new);  // advances phases at per-agent rates
  void mark_at_threshold(int i);
  void fire_reset(int i);
  void pulse_to_zero(int i);
  void pulse_to_one(int i);
  void bump_jump() { ++j_; }

  /// Normalized time at which the first agent reaches its threshold.
  double next_fire_time() const;

 private:
  std::vector<double> phase_, rate_, threshold_;
  std::vector<char> at_one_;
  int n_at_one_ = 0;
  double s_ = 0.0;
  double period_;
  std::int64_t j_ = 0;
};

/// Advance to the next firing event: every phase gains dt/T and at least
/// one lands exactly on the threshold. Returns dt in seconds. Throws
/// errors::AlreadyInJumpSet if some phase is already there.
double flow_to_next_event(PhaseState& state, const SyncConfig& cfg);
double flow_to_next_event(DriftPhaseState& state, const SyncConfig& cfg);

/// Run one complete jump cascade from a state with at least one phase at
/// the threshold: agents at 1 fire sequentially (ordered by the firing
/// policy), each reset pulses its out-neighbors through the binary phase
/// rule, and neighbors pushed to 1 join the queue. On return no phase is
/// at the threshold. Fires and pulses are appended to `record`.
///
/// Throws errors::ZenoDetected when the cascade exceeds its jump budget
/// (zeno_budget_multiplier * N * ceil(1/r_min), or * N^2 when r_min = 0).
void fire_cascade(PhaseState& state, const Digraph& g, const SyncConfig& cfg,
                  const EdgeFilter& filter, TrajectoryRecord& record);

struct SimulateOptions {
  RecordDetail detail = RecordDetail::Events;
  std::uint64_t trajectory_id = 0;
  /// Extra simulated time (seconds) after the first hit; the tail verifies
  /// forward invariance of the synchronized set. Infinity = run to horizon.
  double post_hit_horizon = std::numeric_limits<double>::infinity();
};

/// Event-driven execution of the coupled dynamics from `init` until
/// t >= horizon (seconds). Records the first time the covering-arc value
/// reaches zero as hit_time and keeps simulating to check invariance.
/// A Zeno cascade stops the run and sets record.zeno instead of escaping,
/// so Monte Carlo drivers can treat it as data.
TrajectoryRecord simulate(const Digraph& g, const SyncConfig& cfg, std::span<const double> init,
                          double horizon, const Disturbance* dist = nullptr,
                          const EdgeFilter& filter = {}, const SimulateOptions& opts = {});

}  // namespace pco
