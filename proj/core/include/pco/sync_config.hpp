#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pco/errors.hpp"

namespace pco {

/// Behavior of the binary phase rule when a pulsed phase sits exactly on
/// its threshold (within tie_eps): the update set is {0, 1} and a policy
/// selects the branch.
enum class TiePolicy { ToZero, ToOne, CoinFlip };

/// Order in which simultaneous firings are serialized.
enum class FiringOrder { AscendingIndex, DescendingIndex, RandomPermutation };

TiePolicy parse_tie_policy(const std::string& name);
FiringOrder parse_firing_order(const std::string& name);
std::string to_string(TiePolicy p);
std::string to_string(FiringOrder o);

/// Tuning of the coupled-reset dynamics: per-agent thresholds r, common
/// period T, and the selection policies that pick one trajectory out of
/// the set-valued dynamics.
struct SyncConfig {
  std::vector<double> r;
  double period = 1.0;
  TiePolicy tie_policy = TiePolicy::ToZero;
  FiringOrder firing_order = FiringOrder::AscendingIndex;
  double tie_eps = 1e-12;
  int zeno_budget_multiplier = 4;
  std::uint64_t seed = 42;

  double r_min() const;

  /// Validate against an agent count; throws errors::BadParams.
  void validate(int n) const;

  static SyncConfig from_json(const std::string& text);
  std::string to_json() const;

  /// Convenience: same threshold for every agent.
  static SyncConfig uniform(int n, double r_value, double period = 1.0);
};

/// Bounded additive disturbances: per-agent flow-rate offsets (applied to
/// the nominal rate 1/T) and firing-threshold offsets (threshold becomes
/// 1 + offset, clipped to (0, 1]). All entries must lie within [-bound, bound].
struct Disturbance {
  std::vector<double> freq_offsets;
  std::vector<double> threshold_offsets;
  double bound = 0.0;

  bool is_zero() const;
  void validate(int n) const;
};

}  // namespace pco
