#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdmorl/agent/td3.hpp"
#include "pdmorl/harness/plans.hpp"
#include "pdmorl/metrics/episode_log.hpp"
#include "pdmorl/metrics/metrics.hpp"

namespace pdmorl::harness {

using Progress = std::function<void(const std::string&)>;

/// Greedy rollout that records every step. Q-values of the executed action are recorded
/// when `record_q` is set.
metrics::EpisodeLog rollout(const agent::PdMorlAgent& agent, world::DrivingWorld& world,
                            std::uint64_t seed, const agent::PreferenceVector& lambda,
                            const reward::RewardParams& params, bool record_q = false);

struct SweepLevelStats {
  double level = 0.0;
  metrics::Summary mean_speed;
  metrics::Summary mean_abs_acceleration;
  metrics::Summary mean_jerk;
};

struct SweepTest {
  std::string metric;
  std::optional<metrics::WelchResult> result;  // nullopt when not computable
  std::string stars;
};

struct SweepObjectiveReport {
  std::size_t objective = 0;
  std::vector<SweepLevelStats> levels;
  std::vector<SweepTest> tests;  // weight 0 versus weight 1, empty without both levels
};

struct SweepEpisode {
  std::size_t objective = 0;
  double level = 0.0;
  int episode = 0;
  agent::PreferenceVector lambda;
  metrics::EpisodeMetrics metrics;
  std::string log_file;  // relative to the output directory, empty when not persisted
};

struct SweepReport {
  SweepPlan plan;
  std::vector<SweepObjectiveReport> objectives;
  std::vector<SweepEpisode> episodes;
};

inline constexpr std::array<const char*, 3> kSweepMetrics{"mean_speed", "mean_abs_acceleration",
                                                          "mean_jerk"};

/// Aggregates per-episode values into level statistics and 0-vs-1 Welch tests.
std::vector<SweepObjectiveReport> aggregate_sweep(const SweepPlan& plan,
                                                  const std::vector<SweepEpisode>& episodes);
SweepReport cmd_sweep(const agent::PdMorlAgent& agent, const SweepPlan& plan,
                      const std::optional<std::filesystem::path>& output_dir,
                      const reward::RewardParams& params = {}, const Progress& progress = {});
nlohmann::json to_json(const SweepReport& r);
std::string format_sweep(const SweepReport& r);

struct DenseEpisode {
  std::size_t checkpoint = 0;
  std::size_t preference = 0;
  int scenario = 0;
  std::uint64_t seed = 0;
  agent::PreferenceVector lambda;
  metrics::EpisodeMetrics metrics;
};

struct DenseEvalReport {
  std::vector<DenseEpisode> episodes;
  nlohmann::json aggregate;  // metric name -> {mean, std?, n}
};

inline constexpr std::array<const char*, 8> kDenseMetrics{
    "driving_score",          "preference_score",           "preference_alignment",
    "route_completion",       "collision_rate_vehicle",     "collision_rate_environment",
    "lane_invasion_rate",     "lane_deviation"};

/// Mean and sample std over episodes of every dense-evaluation metric.
nlohmann::json aggregate_dense(const std::vector<DenseEpisode>& episodes);
DenseEvalReport cmd_dense_eval(const std::vector<const agent::PdMorlAgent*>& agents,
                               const DenseEvalPlan& plan,
                               const std::optional<std::filesystem::path>& output_dir,
                               const reward::RewardParams& params = {},
                               const Progress& progress = {});
nlohmann::json to_json(const DenseEvalReport& r);
std::string format_dense(const DenseEvalReport& r);

/// s_0 = x_0, s_t = beta s_{t-1} + (1 - beta) x_t.
std::vector<double> exponential_smoothing(const std::vector<double>& xs, double beta);
/// Linear interpolation of `values` (indexed by the monotone `distance`) at 0, 1, 2, ... m.
std::vector<double> resample_per_meter(const std::vector<double>& distance,
                                       const std::vector<double>& values);

struct QualitativeRun {
  std::size_t objective = 0;  // index of the one-hot weight
  metrics::EpisodeLog log;
  std::vector<double> meters;
  std::vector<double> steering, throttle, velocity, lateral_acceleration;  // smoothed
  double peak_velocity = 0.0;
  double peak_abs_lateral_acceleration = 0.0;
};

struct QualitativeReport {
  int scenario = 1;
  double beta = 0.6;
  std::vector<QualitativeRun> runs;
};

QualitativeReport cmd_qualitative(const agent::PdMorlAgent& agent, int scenario,
                                  const std::optional<std::filesystem::path>& output_dir,
                                  double beta = 0.6, std::uint64_t seed = 0,
                                  const reward::RewardParams& params = {});
nlohmann::json to_json(const QualitativeRun& r);

}  // namespace pdmorl::harness
