#include "pco/lyapunov.hpp"

#include <algorithm>

#include "pco/errors.hpp"

namespace pco {

double arc_lyapunov(std::span<const double> phases) {
  if (phases.empty()) throw errors::OutOfRange("arc_lyapunov needs at least one phase");
  std::vector<double> pos;
  pos.reserve(phases.size());
  for (double p : phases) {
    if (!(p >= 0.0 && p <= 1.0)) throw errors::OutOfRange("phase outside [0, 1]");
    pos.push_back(wrap01(p));
  }
  std::sort(pos.begin(), pos.end());
  double max_gap = (pos.front() - pos.back()) + 1.0;  // across the 0/1 seam
  for (std::size_t k = 0; k + 1 < pos.size(); ++k)
    max_gap = std::max(max_gap, pos[k + 1] - pos[k]);
  double v = 1.0 - max_gap;
  return v < 0.0 ? 0.0 : v;
}

void GapTracker::reset(std::span<const double> positions) {
  count_.clear();
  gaps_.clear();
  for (double p : positions) count_[p]++;
  if (count_.size() <= 1) return;
  auto it = count_.begin();
  auto prev = it++;
  for (; it != count_.end(); prev = it++) gaps_.insert(it->first - prev->first);
  gaps_.insert((count_.begin()->first - count_.rbegin()->first) + 1.0);
}

void GapTracker::erase_gap(double g) {
  auto it = gaps_.find(g);
  gaps_.erase(it);
}

void GapTracker::remove_point(double p) {
  auto it = count_.find(p);
  if (--it->second > 0) return;
  if (count_.size() == 1) {
    count_.erase(it);
    return;
  }
  if (count_.size() == 2) {
    count_.erase(it);
    gaps_.clear();
    return;
  }
  auto next = std::next(it);
  const bool is_first = (it == count_.begin());
  const bool is_last = (next == count_.end());
  const double first = count_.begin()->first;
  const double last = count_.rbegin()->first;
  if (is_first) {
    erase_gap(next->first - p);
    erase_gap((p - last) + 1.0);
    gaps_.insert((next->first - last) + 1.0);
  } else if (is_last) {
    auto prev = std::prev(it);
    erase_gap(p - prev->first);
    erase_gap((first - p) + 1.0);
    gaps_.insert((first - prev->first) + 1.0);
  } else {
    auto prev = std::prev(it);
    erase_gap(p - prev->first);
    erase_gap(next->first - p);
    gaps_.insert(next->first - prev->first);
  }
  count_.erase(it);
}

void GapTracker::add_point(double p) {
  auto [it, inserted] = count_.try_emplace(p, 0);
  it->second++;
  if (!inserted) return;
  if (count_.size() == 1) return;
  if (count_.size() == 2) {
    const double first = count_.begin()->first;
    const double last = count_.rbegin()->first;
    gaps_.insert(last - first);
    gaps_.insert((first - last) + 1.0);
    return;
  }
  auto next = std::next(it);
  const bool is_first = (it == count_.begin());
  const bool is_last = (next == count_.end());
  if (is_first) {
    const double last = count_.rbegin()->first;
    erase_gap((next->first - last) + 1.0);
    gaps_.insert(next->first - p);
    gaps_.insert((p - last) + 1.0);
  } else if (is_last) {
    auto prev = std::prev(it);
    const double first = count_.begin()->first;
    erase_gap((first - prev->first) + 1.0);
    gaps_.insert(p - prev->first);
    gaps_.insert((first - p) + 1.0);
  } else {
    auto prev = std::prev(it);
    erase_gap(next->first - prev->first);
    gaps_.insert(p - prev->first);
    gaps_.insert(next->first - p);
  }
}

void GapTracker::move(double from, double to) {
  if (from == to) return;
  remove_point(from);
  add_point(to);
}

}  // namespace pco
