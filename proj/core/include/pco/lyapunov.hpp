#pragma once

#include <cmath>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace pco {

/// Reduce to the circle [0, 1), identifying 0 and 1.
inline double wrap01(double x) {
  double w = x - std::floor(x);
  return w == 1.0 ? 0.0 : w;  // floor rounding can land exactly on 1
}

/// Length of the shortest circular arc covering all the given phases:
/// one minus the largest gap between circularly consecutive occupied
/// points. Zero iff all agents share one point (0 identified with 1);
/// at most 1 - 1/N for N agents. Inputs must lie in [0, 1].
double arc_lyapunov(std::span<const double> phases);

/// Incrementally maintained occupied-point set on the circle with the
/// covering-arc value of `arc_lyapunov` available in O(1).
///
/// Gap bookkeeping uses the same subtraction formulas as the fresh
/// computation (neighbor minus neighbor, and (first - last) + 1 across
/// the seam), so queries agree bitwise with `arc_lyapunov` on the same
/// multiset of positions.
class GapTracker {
 public:
  void reset(std::span<const double> positions);

  /// Move one agent's occupied point. No-op when from == to.
  void move(double from, double to);

  int distinct_points() const { return static_cast<int>(count_.size()); }

  double value() const {
    if (count_.size() <= 1) return 0.0;
    return 1.0 - *gaps_.rbegin();
  }

 private:
  void add_point(double p);
  void remove_point(double p);
  void erase_gap(double g);

  std::map<double, int> count_;  // position -> multiplicity
  std::multiset<double> gaps_;   // circular gaps between consecutive points
};

}  // namespace pco
