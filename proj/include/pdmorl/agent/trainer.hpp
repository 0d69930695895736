#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdmorl/agent/td3.hpp"
#include "pdmorl/reward/reward.hpp"
#include "pdmorl/world/world.hpp"

namespace pdmorl::agent {

struct TrainConfig {
  std::uint64_t seed = 0;
  std::int64_t total_steps = 200000;
  std::int64_t warmup_steps = 5000;      // uniform random actions, no updates
  std::int64_t eval_interval = 20000;    // env steps; evaluated at the next episode boundary
  int eval_episodes = 5;
  std::int64_t checkpoint_interval = 50000;
  std::int64_t log_interval = 1000;      // gradient updates per losses.jsonl line
  bool checkpoint_replay = true;         // store the replay buffer so resumes are bit-exact
  world::WorldConfig world;
  reward::RewardParams reward;
  AgentConfig agent;
  std::filesystem::path output_dir;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Strict JSON schema: `total_steps` and `output_dir` are required, unknown keys are
/// rejected by name. Nested objects: "world", "reward", "agent".
TrainConfig train_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TrainConfig& c);
nlohmann::json to_json(const world::WorldConfig& c);
world::WorldConfig world_config_from_json(const nlohmann::json& j);

/// Reward of one world step under the given coefficients.
reward::RewardVector step_reward(const world::StepResult& r, const reward::RewardParams& p,
                                 const world::VehicleDynamics& dyn);

/// Deterministic per-episode seed derived from a run seed and an index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t stream);

struct EpisodeSummary {
  std::int64_t episode = 0;
  int steps = 0;
  PreferenceVector lambda;
  std::array<double, kQDim> returns{};
  world::TerminationReason termination = world::TerminationReason::StepLimit;
  double route_progress = 0.0;
  double mean_speed = 0.0;
};

/// Plays one greedy (or noisy) episode without learning.
EpisodeSummary run_episode(const PdMorlAgent& agent, world::DrivingWorld& world,
                           std::uint64_t world_seed, const PreferenceVector& lambda,
                           const reward::RewardParams& params, double exploration_std,
                           std::mt19937_64& rng);

struct TrainResult {
  std::int64_t steps = 0;
  std::int64_t episodes = 0;
  std::int64_t updates = 0;
  std::filesystem::path checkpoint;  // final agent
};

/// Runs (or resumes from `output_dir/state.bin`) a training run. Writes config.json,
/// losses.jsonl, episodes.jsonl, eval.jsonl, periodic state snapshots and agent.bin.
TrainResult train(const TrainConfig& config, bool resume = true,
                  const std::function<void(const std::string&)>& progress = {});

}  // namespace pdmorl::agent
