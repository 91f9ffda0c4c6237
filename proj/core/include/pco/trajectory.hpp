#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

namespace pco {

enum class EventKind { Flow, Fire, Pulse };

enum class PulseOutcome {
  None,      // not a pulse event
  ToZero,    // target reset backward to 0
  ToOne,     // target pushed forward to the firing point (will fire)
  Absorbed,  // target already at the firing threshold; no update
  Inactive,  // edge not drawn by the random pulse model; no update
};

struct TrajectoryEvent {
  double t = 0.0;  // seconds
  std::int64_t j = 0;
  EventKind kind = EventKind::Flow;
  int agent = -1;   // firing agent for Fire/Pulse events
  int target = -1;  // pulse target
  PulseOutcome outcome = PulseOutcome::None;
  double lyapunov = 0.0;
  std::vector<double> phases;  // populated at RecordDetail::Full only
};

enum class RecordDetail {
  Summary,  // streaming checks and hit bookkeeping only
  Events,   // event list without phase snapshots
  Full,     // event list with phase snapshots
};

/// Event log and streaming invariant checks for one trajectory.
///
/// The covering-arc value is checked to be non-increasing event to event;
/// fire counts are tracked over sliding half-open windows of one period.
/// Both checks run regardless of detail level; only event storage is
/// affected by it. They apply to unperturbed runs (under a disturbance
/// the arc value may legitimately grow between events).
struct TrajectoryRecord {
  RecordDetail detail = RecordDetail::Events;
  double period = 1.0;
  std::vector<TrajectoryEvent> events;

  std::optional<double> hit_time;  // first time the arc value reaches 0 (seconds)
  std::int64_t jumps_to_hit = -1;
  bool zeno = false;
  std::int64_t total_jumps = 0;
  double final_time = 0.0;  // seconds

  int lyapunov_violations = 0;    // events where the arc value increased
  int invariance_violations = 0;  // post-hit events with arc value > tie_eps
  std::int64_t max_fires_per_window = 0;
  double last_lyapunov = 0.0;

  bool hit() const { return hit_time.has_value(); }

  // internal streaming state
  std::deque<double> recent_fires_;  // normalized fire times within one period
  bool checks_enabled_ = true;
  bool primed_ = false;  // last_lyapunov holds a real value
};

}  // namespace pco
