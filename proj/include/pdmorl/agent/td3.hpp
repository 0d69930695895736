#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdmorl/agent/preference.hpp"
#include "pdmorl/agent/replay.hpp"
#include "pdmorl/nn/dense_network.hpp"

namespace pdmorl::agent {

struct AgentConfig {
  std::vector<int> hidden{250, 125};
  double actor_lr = 3e-4;
  double critic_lr = 3e-4;
  double gamma = 0.99;
  double tau = 0.005;
  int batch_size = 256;
  int policy_delay = 2;
  double target_noise = 0.2;
  double target_noise_clip = 0.5;
  double exploration_noise = 0.1;
  double angle_weight_actor = 1.0;
  double angle_weight_critic = 0.0;
  int her_k = 4;
  std::size_t replay_capacity = 300000;
};

nlohmann::json to_json(const AgentConfig& c);
AgentConfig agent_config_from_json(const nlohmann::json& j, AgentConfig base = {});

inline constexpr int kActionDim = 2;
inline constexpr int kActorInput = static_cast<int>(world::kObservationDim + kPrefDim);
inline constexpr int kCriticInput = kActorInput + kActionDim;

/// [s; lambda] and [s; lambda; a] column stacks.
nn::Matrix actor_input(const nn::Matrix& s, const nn::Matrix& lambda);
nn::Matrix critic_input(const nn::Matrix& s, const nn::Matrix& lambda, const nn::Matrix& a);
/// Interpolated preference directions, one column per sample.
nn::Matrix interpolate_columns(const PreferenceInterpolator& interp, const nn::Matrix& lambda);

/// Vector TD target y = r + gamma (1 - done) q_sel(s', a~'), where q_sel is the target
/// critic output with the smaller scalarized value per sample. `noise` is the already
/// clipped smoothing noise (2 x n).
nn::Matrix td_targets(const nn::DenseNetwork& target_actor, const nn::DenseNetwork& target_q1,
                      const nn::DenseNetwork& target_q2, const Batch& batch, double gamma,
                      const nn::Matrix& noise);

/// Mean over batch and objectives of (Q - y)^2, plus `angle_weight` times the mean angle
/// between the interpolated preference and Q's preference part.
double critic_loss(const nn::DenseNetwork& critic, const Batch& batch, const nn::Matrix& targets,
                   const nn::Matrix& lambda_p, double angle_weight, nn::Gradients* grads);

/// -mean[(1, lambda) . Q1(s, pi(s, lambda))] + angle_weight * mean[angle(lambda_p, Q1_pref)].
double actor_loss(const nn::DenseNetwork& actor, const nn::DenseNetwork& critic, const Batch& batch,
                  const nn::Matrix& lambda_p, double angle_weight, nn::Gradients* grads);

struct UpdateStats {
  double critic_loss = 0.0;
  std::optional<double> actor_loss;
};

class AgentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Single preference-conditioned TD3 policy with twin vector-valued critics.
class PdMorlAgent {
 public:
  PdMorlAgent(AgentConfig config, std::uint64_t seed);

  const AgentConfig& config() const { return config_; }
  const nn::DenseNetwork& actor() const { return actor_; }
  const nn::DenseNetwork& critic1() const { return critic1_; }
  const nn::DenseNetwork& critic2() const { return critic2_; }
  const PreferenceInterpolator& interpolator() const { return interpolator_; }
  void set_interpolator(PreferenceInterpolator p) { interpolator_ = std::move(p); }

  /// clip(actor(s, lambda) + N(0, std), -1, 1); `rng` is only drawn from when std > 0.
  world::Action select_action(const world::Observation& s, const PreferenceVector& lambda,
                              double exploration_std, std::mt19937_64& rng) const;
  world::Action act(const world::Observation& s, const PreferenceVector& lambda) const;
  QVector q_values(const world::Observation& s, const PreferenceVector& lambda,
                   const world::Action& a) const;

  double critic_update(const Batch& batch);
  double actor_update(const Batch& batch);
  /// One critic step; every `policy_delay` calls also an actor step and target soft updates.
  UpdateStats update(const Batch& batch);
  std::int64_t update_count() const { return updates_; }

  void write(std::ostream& out) const;
  static PdMorlAgent read(std::istream& in);
  void save(const std::filesystem::path& path) const;
  static PdMorlAgent load(const std::filesystem::path& path);

 private:
  PdMorlAgent() = default;

  AgentConfig config_;
  PreferenceInterpolator interpolator_;
  nn::DenseNetwork actor_, critic1_, critic2_;
  nn::DenseNetwork target_actor_, target_critic1_, target_critic2_;
  nn::Adam actor_opt_, critic1_opt_, critic2_opt_;
  std::mt19937_64 rng_;
  std::int64_t updates_ = 0;
};

}  // namespace pdmorl::agent
