#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdmorl/world/route.hpp"
#include "pdmorl/world/types.hpp"

namespace pdmorl::world {

class WorldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scenario/world configuration. Loadable from a `key = value` file:
///   scenario        = 0..7      (0 selects random-route training mode)
///   map_seed        = integer   (mixed into random-route generation)
///   traffic_density = real      (vehicles per km, both directions; <0 uses scenario default)
///   weather         = tag       (cosmetic metadata)
///   town            = any|grid|t_junction|roundabout|highway   (random-route mode only)
struct WorldConfig {
  int scenario = 0;
  std::uint64_t map_seed = 0;
  double traffic_density = -1.0;
  std::string weather = "clear_noon";
  std::optional<Town> town;

  static WorldConfig parse_key_value(const std::string& text);
  static WorldConfig load(const std::filesystem::path& path);
  std::string to_key_value() const;
};

struct VehicleDynamics {
  double wheelbase = 2.7;
  double max_accel = 3.5;        // m/s^2 at full throttle
  double max_brake = 8.0;        // m/s^2 at full brake
  double accel_time_constant = 0.2;
  double rolling_drag = 0.15;    // m/s^2
  double air_drag = 0.0004;      // 1/m, times v^2
  double max_speed = 25.0;
  double max_heading_step = 11.0 * kPi / 180.0;  // per control step at full steer
  double full_steer_speed = 1.0; // below this speed the heading authority scales with v
};

/// Advances an ego vehicle one control step under the kinematic model.
VehicleState integrate(const VehicleState& s, const Action& a, const VehicleDynamics& dyn,
                       double dt = kDt);

struct TrafficAgent {
  VehicleState state;
  double s = 0.0;            // arc length along the route
  bool oncoming = false;     // drives the opposite lane towards s = 0
  double desired_fraction = 0.8;  // target speed as a fraction of the local limit
  double speed_limit = 0.0;  // limit at the agent's current position
};

inline constexpr double kVehicleLength = 4.5;
inline constexpr double kVehicleWidth = 2.0;

/// Oriented-rectangle overlap test for two vehicle footprints.
bool footprints_overlap(const VehicleState& a, const VehicleState& b);

struct TerminationRules {
  double max_route_deviation = 6.0;
  int stagnation_steps = 200;
  int step_limit = 1400;
};

struct TerminationInputs {
  bool collision = false;
  double route_deviation = 0.0;
  int step = 0;               // steps taken so far in the episode
  int last_progress_step = 0;
  bool goal_reached = false;
};

/// Returns the single reason that ends the episode, using the priority
/// collision > route_deviation > stagnation > goal > step_limit.
std::optional<TerminationReason> check_termination(const TerminationInputs& in,
                                                   const TerminationRules& rules = {});

/// Per-step geometric quantities and situation flags used by the reward terms.
struct StepMeasurements {
  double d_center = 0.0;          // |offset| from the ego lane centre
  double d_lat = 0.0;             // |offset| from the route polyline
  double d_route = 0.0;           // distance to the route beyond a 1 m dead zone
  double heading_error_deg = 0.0; // ego heading minus route tangent, degrees
  double progress_fraction = 0.0; // P_prog, clipped to [-1, 1]
  double speed_limit = 0.0;
  double route_progress = 0.0;    // fraction of route arc length covered
  bool obstacle_ahead = false;    // closing on a vehicle within the brake horizon
  bool clear_path = true;         // no vehicle within the clear-path horizon in the lane fan
  bool idle = false;
  bool oscillating = false;
  bool abrupt = false;
};

struct PerceptionConfig {
  double fov_deg = 110.0;
  double max_range = 50.0;
  double lane_fan_half_width = 2.0;  // lateral half-width of the ego lane fan
  double clear_path_distance = 20.0;
  double idle_speed = 0.1;
  int idle_steps = 20;
  double oscillation_delta = 0.2;
  int oscillation_reversals = 3;
  int oscillation_window = 10;
  double abrupt_steer_delta = 0.3;
  double abrupt_throttle_delta = 0.3;
  double progress_epsilon = 0.5;    // arc advance that counts as progress
  double waypoint_lookahead = 2.5;  // next waypoint is the first one beyond s + lookahead
  double route_deadzone = 1.0;
  double speeding_tolerance = 0.0;
};

/// Everything `observe` needs besides the ego state itself.
struct ObservationInputs {
  const Route* route = nullptr;
  RouteProjection projection;
  std::span<const TrafficAgent> traffic;
  std::span<const Action> action_history;  // most recent last, up to 3 entries
  int steps_since_waypoint = 0;
};

/// Casts the 64-ray forward fan against traffic footprints and road barriers.
/// Returns 64 normalized ranges followed by 64 occupant-class flags
/// (1 = vehicle, 0.5 = barrier, 0 = nothing).
std::array<double, kPerceptionDim> raycast(const VehicleState& ego, const Route& route,
                                           const RouteProjection& projection,
                                           std::span<const TrafficAgent> traffic,
                                           const PerceptionConfig& cfg);

Observation observe(const VehicleState& ego, const ObservationInputs& in,
                    const PerceptionConfig& cfg = {});

struct StepResult {
  VehicleState previous_state;
  VehicleState state;
  Action previous_action;
  Action action;
  Observation observation;
  StepOutcome outcome;
  StepMeasurements measurements;
  int step = 0;
};

/// Deterministic single-threaded 2D driving world.
class DrivingWorld {
 public:
  struct Options {
    VehicleDynamics dynamics;
    TerminationRules termination;
    PerceptionConfig perception;
    int max_generation_attempts = 64;
  };

  explicit DrivingWorld(WorldConfig config);
  DrivingWorld(WorldConfig config, Options options);

  struct ResetResult {
    VehicleState state;
    Observation observation;
  };
  ResetResult reset(std::uint64_t seed);
  StepResult step(const Action& action);

  const WorldConfig& config() const { return config_; }
  const Options& options() const { return options_; }
  const Route& route() const { return *route_; }
  std::span<const TrafficAgent> traffic() const { return traffic_; }
  const VehicleState& ego() const { return ego_; }
  bool terminated() const { return terminated_; }
  int step_count() const { return step_; }
  double route_progress() const;
  std::optional<Town> town() const { return town_; }

  /// Replaces the ego state (tests and scripted scenarios).
  void set_ego(const VehicleState& s);
  /// Removes all traffic (tests and scripted scenarios).
  void clear_traffic() { traffic_.clear(); }
  void add_traffic(const TrafficAgent& agent) { traffic_.push_back(agent); }

 private:
  void generate_route(std::uint64_t seed);
  void spawn_traffic(std::mt19937_64& rng, double density);
  void advance_traffic();
  std::optional<double> vehicle_collision() const;
  std::pair<bool, double> nearest_ahead(double horizon) const;
  Observation make_observation() const;

  WorldConfig config_;
  Options options_;
  std::optional<Route> route_;
  std::optional<Town> town_;
  std::vector<TrafficAgent> traffic_;
  VehicleState ego_;
  RouteProjection projection_;
  std::deque<Action> action_history_;
  std::deque<double> steer_deltas_;
  Action last_action_;
  int step_ = 0;
  int last_progress_step_ = 0;
  double best_progress_s_ = 0.0;
  std::size_t next_waypoint_ = 1;
  int steps_since_waypoint_ = 0;
  int idle_counter_ = 0;
  bool invading_ = false;
  bool off_road_ = false;
  bool in_junction_ = false;
  bool terminated_ = false;
};

}  // namespace pdmorl::world
