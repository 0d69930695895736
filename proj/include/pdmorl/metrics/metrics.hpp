#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdmorl/metrics/episode_log.hpp"

namespace pdmorl::metrics {

enum class Infraction { VehicleCollision, EnvironmentCollision, Timeout, Speeding, LaneViolation };
inline constexpr std::size_t kInfractionCount = 5;

struct InfractionCounts {
  std::array<int, kInfractionCount> n{};
  int& operator[](Infraction i) { return n[static_cast<std::size_t>(i)]; }
  int operator[](Infraction i) const { return n[static_cast<std::size_t>(i)]; }
};

/// Per-infraction multiplicative penalty factors in (0, 1].
struct PenaltyTable {
  std::array<double, kInfractionCount> p{0.60, 0.65, 0.70, 0.90, 0.90};
  double operator[](Infraction i) const { return p[static_cast<std::size_t>(i)]; }
  bool valid() const;
};

/// Speeding is counted once per excursion above limit * (1 + tolerance).
struct InfractionRules {
  double speeding_tolerance = 0.10;
};

InfractionCounts count_infractions(const EpisodeLog& log, const InfractionRules& rules = {});

/// RC * prod p_i^n_i, in percent.
double driving_score(double route_completion, const InfractionCounts& counts,
                     const PenaltyTable& penalties = {});

struct CollisionRates {
  double vehicle = 0.0;
  double environment = 0.0;
};
CollisionRates collision_rate(const EpisodeLog& log);
double lane_invasion_rate(const EpisodeLog& log);
/// Mean |d_lat| in meters.
double lane_deviation(const EpisodeLog& log);
/// (1/T) sum_t omega . r_pref,t
double preference_score(const EpisodeLog& log, const agent::Weights& omega);
/// Mean angle in degrees between omega and Q's preference components.
double preference_alignment(std::span<const std::pair<agent::Weights, agent::QVector>> samples);

double mean_speed(const EpisodeLog& log);
double mean_abs_acceleration(const EpisodeLog& log);  // |(a_long, a_lat)|
double mean_jerk(const EpisodeLog& log);              // |(j_long, j_lat)|

struct EpisodeMetrics {
  double driving_score = 0.0;
  double preference_score = 0.0;
  std::optional<double> preference_alignment;  // only when the log carries Q-values
  double route_completion = 0.0;
  CollisionRates collision_rate;
  double lane_invasion_rate = 0.0;
  double lane_deviation = 0.0;
  double mean_speed = 0.0;
  double mean_abs_acceleration = 0.0;
  double mean_jerk = 0.0;
  InfractionCounts infractions;
  int duration = 0;
};

/// All per-episode metrics; PS and PA use the per-step preference recorded in the log.
EpisodeMetrics evaluate(const EpisodeLog& log, const PenaltyTable& penalties = {},
                        const InfractionRules& rules = {});
nlohmann::json to_json(const EpisodeMetrics& m);

struct Summary {
  double mean = 0.0;
  std::optional<double> std;  // sample standard deviation, absent for a single value
  std::size_t n = 0;
};
Summary summarize(std::span<const double> xs);
nlohmann::json to_json(const Summary& s);

struct WelchResult {
  double t = 0.0;
  double dof = 0.0;
  double p = 1.0;
};

/// Two-sided Welch t-test. Throws std::invalid_argument for samples smaller than 2;
/// returns nullopt when both samples have zero variance (statistic not computable).
std::optional<WelchResult> welch_t_test(std::span<const double> xs, std::span<const double> ys);

/// I_x(a, b) by Lentz's continued fraction, relative tolerance 1e-9.
double regularized_incomplete_beta(double a, double b, double x);
/// Two-sided tail P(|T| >= |t|) of Student's t with `dof` degrees of freedom.
double student_t_two_sided(double t, double dof);

/// "n.s." for p >= 0.05, then "*", "**", "***" below 0.05, 0.01, 0.001.
std::string significance_stars(double p);

}  // namespace pdmorl::metrics
