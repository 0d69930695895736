#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdmorl/agent/preference.hpp"
#include "pdmorl/world/world.hpp"

namespace pdmorl::harness {

class PlanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Preference components in lambda order.
inline constexpr std::array<std::string_view, 4> kObjectiveNames{"agg", "comfort", "speed", "eff"};
std::size_t objective_index(std::string_view name);

/// Stepwise sweep of one weight with the remaining mass drawn uniformly from the
/// complementary sub-simplex.
struct SweepPlan {
  std::vector<std::size_t> objectives{0, 1, 2, 3};
  std::vector<double> levels{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  int episodes_per_level = 20;
  std::uint64_t seed = 0;
  world::WorldConfig world;
  bool persist_logs = true;

  std::size_t total_episodes() const {
    return objectives.size() * levels.size() * static_cast<std::size_t>(episodes_per_level);
  }
  void validate() const;
};

SweepPlan sweep_plan_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepPlan& p);

/// lambda[objective] == level exactly; the others are level-complement times a flat
/// Dirichlet draw.
agent::PreferenceVector complementary_preference(std::size_t objective, double level,
                                                 std::mt19937_64& rng);

inline constexpr int kDenseGridDenominator = 13;
inline constexpr std::size_t kDenseGridSize = 540;

/// 540 simplex points: the lattice k/13 (560 points) with every 11th strictly interior
/// point removed. All vertices and all boundary points are kept.
std::vector<agent::PreferenceVector> dense_preference_grid();

struct DenseEvalPlan {
  std::vector<agent::PreferenceVector> preferences = dense_preference_grid();
  std::vector<int> scenarios{1, 2, 3, 4, 5, 6, 7};
  std::vector<std::uint64_t> seeds{0};
  /// Evaluate only the first `limit` (preference, scenario, seed) combinations; 0 = all.
  std::size_t limit = 0;

  std::size_t total_episodes() const;
  void validate() const;
};

DenseEvalPlan dense_eval_plan_from_json(const nlohmann::json& j);

}  // namespace pdmorl::harness
