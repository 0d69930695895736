#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdmorl/agent/preference.hpp"
#include "pdmorl/reward/reward.hpp"
#include "pdmorl/world/world.hpp"

namespace pdmorl::metrics {

inline constexpr int kTrajectorySchemaVersion = 1;

class LogFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StepRecord {
  int step = 0;
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  double speed = 0.0;
  double a_long = 0.0;
  double a_lat = 0.0;
  double yaw_rate = 0.0;
  std::array<double, 2> jerk{};  // (long, lat)
  world::Action action;
  double throttle = 0.0;
  double brake = 0.0;
  world::EventSet events;
  reward::RewardVector reward;
  agent::Weights lambda{};
  double d_lat = 0.0;
  double speed_limit = 0.0;
  double route_progress = 0.0;
  std::optional<agent::QVector> q;

  /// Record of one world step; `lambda` is the preference in force for that step.
  static StepRecord from(const world::StepResult& r, const reward::RewardVector& rv,
                         const agent::Weights& lambda, double route_progress);
};

struct EpisodeLog {
  agent::Weights lambda{};  // preference at episode start
  int scenario = 0;
  std::uint64_t seed = 0;
  world::TerminationReason termination = world::TerminationReason::StepLimit;
  double route_completion = 0.0;  // RC in [0, 1]
  std::vector<StepRecord> steps;

  int duration() const { return static_cast<int>(steps.size()); }  // T
  /// Throws LogFormatError unless RC is in [0,1], T >= 1 and step indices are contiguous.
  void validate() const;
};

nlohmann::json to_json(const StepRecord& r);
StepRecord step_record_from_json(const nlohmann::json& j);

/// JSON-lines: a header line, one line per step, and a footer line.
void write_jsonl(std::ostream& out, const EpisodeLog& log);
EpisodeLog read_jsonl(std::istream& in);
void save_jsonl(const std::filesystem::path& path, const EpisodeLog& log);
EpisodeLog load_jsonl(const std::filesystem::path& path);

}  // namespace pdmorl::metrics
