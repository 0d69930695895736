#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "pdmorl/world/types.hpp"

namespace pdmorl::world {

// Cross-section of the two-lane road around the route polyline. The route runs down the
// centre of the ego lane; positive lateral offsets point to the left (oncoming lane).
inline constexpr double kLaneWidth = 3.5;
inline constexpr double kRoadRightEdge = -0.5 * kLaneWidth;
inline constexpr double kRoadLeftEdge = 1.5 * kLaneWidth;
inline constexpr double kRightBarrier = kRoadRightEdge - 1.5;
inline constexpr double kLeftBarrier = kRoadLeftEdge + 1.5;

inline constexpr double kWaypointSpacing = 5.0;
inline constexpr double kCenterlineResolution = 0.5;
inline constexpr std::size_t kTrainingWaypoints = 500;

/// One geometric primitive of a route: a straight (turn == 0) or a circular arc.
struct RoutePiece {
  double length = 0.0;  // arc length, m
  double turn = 0.0;    // signed heading change over the piece, rad (left positive)
  double speed_limit = 8.33;
  bool junction = false;

  static RoutePiece straight(double length, double limit, bool junction = false) {
    return {length, 0.0, limit, junction};
  }
  static RoutePiece arc(double radius, double turn, double limit, bool junction = false) {
    return {radius * std::abs(turn), turn, limit, junction};
  }
};

struct RouteProjection {
  double s = 0.0;        // arc length of the foot point
  double lateral = 0.0;  // signed offset, left positive
  double distance = 0.0; // Euclidean distance to the polyline
  double tangent = 0.0;  // route heading at the foot point
  std::size_t index = 0; // centerline segment index, usable as the next search hint
};

struct Pose {
  Vec2 position;
  double heading = 0.0;
};

class Route {
 public:
  /// Integrates the pieces into a dense centerline. When `waypoint_count` is given the
  /// route is cut to exactly that many waypoints; otherwise every full 5 m step is kept.
  static std::optional<Route> build(Pose start, std::span<const RoutePiece> pieces,
                                    std::optional<std::size_t> waypoint_count = std::nullopt);

  std::span<const Vec2> waypoints() const { return waypoints_; }
  std::size_t waypoint_count() const { return waypoints_.size(); }
  double waypoint_arc(std::size_t i) const { return static_cast<double>(i) * kWaypointSpacing; }
  bool junction_waypoint(std::size_t i) const;
  /// Speed limit of the segment that starts at waypoint i.
  double segment_speed_limit(std::size_t i) const;

  double length() const { return length_; }
  double speed_limit_at(double s) const;
  bool junction_at(double s) const;
  Pose pose_at(double s, double lateral = 0.0) const;

  /// Closest point search restricted to a window of centerline segments around `hint`.
  RouteProjection project(Vec2 p, std::size_t hint) const;
  RouteProjection project_global(Vec2 p) const;

  std::span<const Vec2> centerline() const { return centerline_; }
  /// Barrier polylines, sampled every `kBarrierStride` centerline points.
  std::span<const Vec2> left_barrier() const { return left_barrier_; }
  std::span<const Vec2> right_barrier() const { return right_barrier_; }
  static constexpr std::size_t kBarrierStride = 4;

  /// Minimum distance between centerline points that are at least `arc_gap` apart along
  /// the route. Used to reject self-overlapping layouts.
  double self_clearance(double arc_gap) const;

 private:
  RouteProjection project_range(Vec2 p, std::size_t first, std::size_t last) const;

  std::vector<Vec2> centerline_;
  std::vector<double> headings_;
  std::vector<double> limits_;
  std::vector<bool> junctions_;
  std::vector<Vec2> waypoints_;
  std::vector<Vec2> left_barrier_;
  std::vector<Vec2> right_barrier_;
  double length_ = 0.0;
};

enum class Town { Grid, TJunction, Roundabout, Highway };
inline constexpr std::array kTowns{Town::Grid, Town::TJunction, Town::Roundabout, Town::Highway};
std::string_view to_string(Town t);

struct ScenarioSpec {
  int id = 0;
  std::string_view name;
  Town town = Town::Grid;
  Pose start;
  std::vector<RoutePiece> pieces;
  std::uint64_t traffic_seed = 0;
  double traffic_density = 0.0;
  std::string_view elevation;  // metadata only
};

inline constexpr int kScenarioCount = 7;
/// Fixed evaluation scenarios 1..7; scenario 1 is the right turn at a T-intersection.
std::optional<ScenarioSpec> scenario(int id);

/// Random piece sequence for one of the four towns with total length >= `min_length`.
/// Cumulative heading stays within +-90 deg of the start so layouts rarely self-overlap.
std::vector<RoutePiece> random_town_pieces(Town town, double min_length, std::mt19937_64& rng);

}  // namespace pdmorl::world
