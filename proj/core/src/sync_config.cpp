#include "pco/sync_config.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace pco {

TiePolicy parse_tie_policy(const std::string& name) {
  if (name == "to_zero") return TiePolicy::ToZero;
  if (name == "to_one") return TiePolicy::ToOne;
  if (name == "coin_flip") return TiePolicy::CoinFlip;
  throw errors::ParseError("unknown tie policy: " + name);
}

FiringOrder parse_firing_order(const std::string& name) {
  if (name == "ascending") return FiringOrder::AscendingIndex;
  if (name == "descending") return FiringOrder::DescendingIndex;
  if (name == "random") return FiringOrder::RandomPermutation;
  throw errors::ParseError("unknown firing order: " + name);
}

std::string to_string(TiePolicy p) {
  switch (p) {
    case TiePolicy::ToZero: return "to_zero";
    case TiePolicy::ToOne: return "to_one";
    case TiePolicy::CoinFlip: return "coin_flip";
  }
  return "?";
}

std::string to_string(FiringOrder o) {
  switch (o) {
    case FiringOrder::AscendingIndex: return "ascending";
    case FiringOrder::DescendingIndex: return "descending";
    case FiringOrder::RandomPermutation: return "random";
  }
  return "?";
}

double SyncConfig::r_min() const {
  return *std::min_element(r.begin(), r.end());
}

void SyncConfig::validate(int n) const {
  if (static_cast<int>(r.size()) != n)
    throw errors::BadParams("threshold vector has " + std::to_string(r.size()) +
                            " entries for " + std::to_string(n) + " agents");
  for (double v : r)
    if (!(v >= 0.0 && v <= 1.0)) throw errors::BadParams("thresholds must lie in [0, 1]");
  if (!(period > 0.0)) throw errors::BadParams("period must be positive");
  if (!(tie_eps >= 0.0)) throw errors::BadParams("tie_eps must be non-negative");
  if (zeno_budget_multiplier < 1) throw errors::BadParams("zeno_budget_multiplier must be >= 1");
}

SyncConfig SyncConfig::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw errors::ParseError(std::string("invalid config JSON: ") + e.what());
  }
  SyncConfig cfg;
  if (!doc.contains("r")) throw errors::ParseError("config needs an \"r\" array");
  cfg.r = doc["r"].get<std::vector<double>>();
  cfg.period = doc.value("T", 1.0);
  cfg.tie_policy = parse_tie_policy(doc.value("tie_policy", std::string("to_zero")));
  cfg.firing_order = parse_firing_order(doc.value("firing_order", std::string("ascending")));
  cfg.tie_eps = doc.value("tie_eps", 1e-12);
  cfg.zeno_budget_multiplier = doc.value("zeno_budget_multiplier", 4);
  cfg.seed = doc.value("seed", std::uint64_t{42});
  return cfg;
}

std::string SyncConfig::to_json() const {
  nlohmann::json doc;
  doc["r"] = r;
  doc["T"] = period;
  doc["tie_policy"] = to_string(tie_policy);
  doc["firing_order"] = to_string(firing_order);
  doc["tie_eps"] = tie_eps;
  doc["zeno_budget_multiplier"] = zeno_budget_multiplier;
  doc["seed"] = seed;
  return doc.dump();
}

SyncConfig SyncConfig::uniform(int n, double r_value, double period) {
  SyncConfig cfg;
  cfg.r.assign(n, r_value);
  cfg.period = period;
  return cfg;
}

bool Disturbance::is_zero() const {
  auto zero = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
  };
  return zero(freq_offsets) && zero(threshold_offsets);
}

void Disturbance::validate(int n) const {
  if (static_cast<int>(freq_offsets.size()) != n || static_cast<int>(threshold_offsets.size()) != n)
    throw errors::BadParams("disturbance vectors must have one entry per agent");
  if (!(bound >= 0.0)) throw errors::BadParams("disturbance bound must be non-negative");
  for (double v : freq_offsets)
    if (std::abs(v) > bound) throw errors::BadParams("frequency offset exceeds bound");
  for (double v : threshold_offsets)
    if (std::abs(v) > bound) throw errors::BadParams("threshold offset exceeds bound");
}

}  // namespace pco
