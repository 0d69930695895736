#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace pdmorl::world {

/// Control period of the state-action loop (10 Hz).
inline constexpr double kDt = 0.1;
inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;

  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
};

inline Vec2 unit(double heading) { return {std::cos(heading), std::sin(heading)}; }

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

struct VehicleState {
  Vec2 position;
  double heading = 0.0;  // rad, (-pi, pi]
  double speed = 0.0;    // m/s, >= 0
  double a_long = 0.0;   // m/s^2
  double a_lat = 0.0;    // m/s^2
  double yaw_rate = 0.0; // rad/s
  double throttle_pos = 0.0;
  double brake_pos = 0.0;
  double steer_pos = 0.0;

  friend bool operator==(const VehicleState&, const VehicleState&) = default;
};

/// Agent action: steering adjustment and combined throttle/brake signal, both in [-1, 1].
struct Action {
  double steer = 0.0;
  double longitudinal = 0.0;

  Action clipped() const;
  friend bool operator==(const Action&, const Action&) = default;
};

/// Throttle/brake positions produced by the longitudinal control mapping.
struct PedalCommand {
  double throttle = 0.0;
  double brake = 0.0;
};

/// u > -0.5 maps linearly to throttle, u < -0.5 to brake; both are zero at u = -0.5.
PedalCommand map_longitudinal(double u);

enum class Event : std::uint8_t {
  CollisionVehicle,
  CollisionEnvironment,
  LaneInvasion,
  OffRoad,
  WaypointReached,
  JunctionTraversed,
  GoalReached,
};
inline constexpr std::array kAllEvents{Event::CollisionVehicle,  Event::CollisionEnvironment,
                                       Event::LaneInvasion,      Event::OffRoad,
                                       Event::WaypointReached,   Event::JunctionTraversed,
                                       Event::GoalReached};

std::string_view to_string(Event e);
std::optional<Event> event_from_string(std::string_view s);

class EventSet {
 public:
  void insert(Event e) { bits_ |= mask(e); }
  bool contains(Event e) const { return (bits_ & mask(e)) != 0; }
  bool empty() const { return bits_ == 0; }
  bool collision() const {
    return contains(Event::CollisionVehicle) || contains(Event::CollisionEnvironment);
  }
  friend bool operator==(EventSet, EventSet) = default;

 private:
  static std::uint32_t mask(Event e) { return 1u << static_cast<unsigned>(e); }
  std::uint32_t bits_ = 0;
};

enum class TerminationReason : std::uint8_t {
  Collision,
  RouteDeviation,
  Stagnation,
  Goal,
  StepLimit,
};

std::string_view to_string(TerminationReason r);
std::optional<TerminationReason> termination_from_string(std::string_view s);

struct StepOutcome {
  EventSet events;
  double impact_accel = 0.0;  // m/s^2, meaningful only with a collision event
  std::optional<TerminationReason> termination;
};

// Observation layout: f | o | a_hist | wp | v_limit
inline constexpr std::size_t kRayCount = 64;
inline constexpr std::size_t kPerceptionDim = 2 * kRayCount;
inline constexpr std::size_t kOdometryDim = 17;
inline constexpr std::size_t kActionHistoryDim = 6;
inline constexpr std::size_t kWaypointDim = 2;
inline constexpr std::size_t kObservationDim =
    kPerceptionDim + kOdometryDim + kActionHistoryDim + kWaypointDim + 1;
static_assert(kObservationDim == 154);

struct Observation {
  std::array<double, kObservationDim> values{};

  std::span<const double> perception() const { return {values.data(), kPerceptionDim}; }
  std::span<const double> odometry() const {
    return {values.data() + kPerceptionDim, kOdometryDim};
  }
  std::span<const double> action_history() const {
    return {values.data() + kPerceptionDim + kOdometryDim, kActionHistoryDim};
  }
  std::span<const double> waypoint() const {
    return {values.data() + kPerceptionDim + kOdometryDim + kActionHistoryDim, kWaypointDim};
  }
  double speed_limit() const { return values.back(); }

  friend bool operator==(const Observation&, const Observation&) = default;
};

}  // namespace pdmorl::world
