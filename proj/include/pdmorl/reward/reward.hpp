#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pdmorl/world/types.hpp"
#include "pdmorl/world/world.hpp"

namespace pdmorl::reward {

/// Reward coefficients. Defaults are the reference weight table.
struct RewardParams {
  // aggressiveness
  double alpha_l = 0.10;
  double alpha_yaw = 0.30;
  double alpha_l_acc = 0.20;
  // comfort
  double beta_steer = 0.10;
  double beta_throttle = 0.05;
  double beta_v = 0.30;
  double beta_long = 0.30;
  double beta_jerk = 0.03;
  double beta_b = 1.20;
  // speed
  double delta_speed = 1.75;
  // core
  double c_col = 5.0;
  double c_acc = 0.1;
  double c_brake = 2.75;
  double w_type = 1.7;          // environment collisions
  double w_type_vehicle = 1.0;  // vehicle collisions
  double c_spd_high = 0.3;
  double c_idle = 3.5;
  double c_osc = 0.2;
  double c_steer = 0.6;
  double c_throttle = 0.4;
  double c_off = 1.2;
  double c_inv = 1.0;
  double w_lane = 2.0;
  double c_dev = 0.15;
  double c_lat = 1.0 / 3.0;
  double c_head = 1.0 / 90.0;
  double c_wp = 0.25;
  double c_junc = 0.1;
  double c_goal = 20.0;
  double c_termination = -5.0;

  friend bool operator==(const RewardParams&, const RewardParams&) = default;
};

struct ParamField {
  std::string_view name;
  double RewardParams::*member;
};

inline constexpr std::array<ParamField, 30> kRewardParamFields{{
    {"alpha_l", &RewardParams::alpha_l},
    {"alpha_yaw", &RewardParams::alpha_yaw},
    {"alpha_l_acc", &RewardParams::alpha_l_acc},
    {"beta_steer", &RewardParams::beta_steer},
    {"beta_throttle", &RewardParams::beta_throttle},
    {"beta_v", &RewardParams::beta_v},
    {"beta_long", &RewardParams::beta_long},
    {"beta_jerk", &RewardParams::beta_jerk},
    {"beta_b", &RewardParams::beta_b},
    {"delta_speed", &RewardParams::delta_speed},
    {"c_col", &RewardParams::c_col},
    {"c_acc", &RewardParams::c_acc},
    {"c_brake", &RewardParams::c_brake},
    {"w_type", &RewardParams::w_type},
    {"w_type_vehicle", &RewardParams::w_type_vehicle},
    {"c_spd_high", &RewardParams::c_spd_high},
    {"c_idle", &RewardParams::c_idle},
    {"c_osc", &RewardParams::c_osc},
    {"c_steer", &RewardParams::c_steer},
    {"c_throttle", &RewardParams::c_throttle},
    {"c_off", &RewardParams::c_off},
    {"c_inv", &RewardParams::c_inv},
    {"w_lane", &RewardParams::w_lane},
    {"c_dev", &RewardParams::c_dev},
    {"c_lat", &RewardParams::c_lat},
    {"c_head", &RewardParams::c_head},
    {"c_wp", &RewardParams::c_wp},
    {"c_junc", &RewardParams::c_junc},
    {"c_goal", &RewardParams::c_goal},
    {"c_termination", &RewardParams::c_termination},
}};

nlohmann::json to_json(const RewardParams& p);
/// Overrides fields present in `j`; unknown keys are rejected.
RewardParams params_from_json(const nlohmann::json& j, RewardParams base = {});

inline constexpr std::size_t kObjectiveCount = 5;
inline constexpr std::size_t kPreferenceCount = 4;

/// Ordered (core, agg, comfort, speed, eff).
struct RewardVector {
  double core = 0.0;
  double agg = 0.0;
  double comfort = 0.0;
  double speed = 0.0;
  double eff = 0.0;

  std::array<double, kObjectiveCount> as_array() const { return {core, agg, comfort, speed, eff}; }
  std::array<double, kPreferenceCount> preference_part() const { return {agg, comfort, speed, eff}; }
  static RewardVector from_array(const std::array<double, kObjectiveCount>& a) {
    return {a[0], a[1], a[2], a[3], a[4]};
  }
  friend bool operator==(const RewardVector&, const RewardVector&) = default;
};

struct StepContext {
  world::VehicleState state;
  world::VehicleState previous;
  world::Action action;
  world::Action previous_action;
  world::EventSet events;
  double impact_accel = 0.0;
  std::optional<world::TerminationReason> termination;

  double d_center = 0.0;
  double d_lat = 0.0;
  double d_route = 0.0;
  double heading_error_deg = 0.0;
  double progress_fraction = 0.0;

  double v_target = 0.0;
  double v_max = 0.0;
  double a_max = 0.0;
  std::array<double, 2> jerk{};  // (long, lat), m/s^3

  bool clear_path = true;
  bool obstacle_ahead = false;
  bool idle = false;
  bool oscillating = false;
  bool abrupt = false;

  /// v_target and v_max are both the current speed limit; jerk is the finite difference of
  /// (a_long, a_lat) over one control step.
  static StepContext from(const world::StepResult& r, double a_max, double dt = world::kDt);
};

double collision_reward(const StepContext& ctx, const RewardParams& p);
double boundary_reward(const StepContext& ctx, const RewardParams& p);
double lane_reward(const StepContext& ctx, const RewardParams& p);
double nav_reward(const StepContext& ctx, const RewardParams& p);
double perf_reward(const StepContext& ctx, const RewardParams& p);
double core_reward(const StepContext& ctx, const RewardParams& p);

double agg_reward(const StepContext& ctx, const RewardParams& p);
double comfort_reward(const StepContext& ctx, const RewardParams& p);
/// Throws std::invalid_argument when v_target <= 0.
double speed_reward(const StepContext& ctx, const RewardParams& p);
double eff_reward(const StepContext& ctx, const RewardParams& p);

/// Unweighted reward vector; preference weighting happens in the agent.
RewardVector assemble(const StepContext& ctx, const RewardParams& p);

}  // namespace pdmorl::reward
