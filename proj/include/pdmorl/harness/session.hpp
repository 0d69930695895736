#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdmorl/agent/td3.hpp"
#include "pdmorl/reward/reward.hpp"
#include "pdmorl/world/world.hpp"

namespace pdmorl::harness {

/// One live episode loop driven by the agent. Messages may arrive from any thread;
/// they take effect atomically before the next environment step.
///
/// Client to server:
///   {"type":"set_preference","lambda":[a,b,c,d]}
///   {"type":"reset","scenario":id}
/// Server to client:
///   {"type":"frame", step, episode, pose, v, a_long, a_lat, jerk, lambda, reward_vector, events}
///   {"type":"error", reason}
class RolloutSession {
 public:
  RolloutSession(const agent::PdMorlAgent& agent, int scenario, agent::PreferenceVector lambda = {},
                 reward::RewardParams params = {}, std::uint64_t seed = 0);

  /// Validates and queues a client message. Returns an error frame when it is rejected.
  std::optional<nlohmann::json> handle_message(const std::string& text);
  /// Applies queued messages, advances one step and returns the frame. A finished episode
  /// restarts on the same scenario.
  nlohmann::json step();

  agent::PreferenceVector lambda() const;
  int scenario() const;

 private:
  void start_episode(int scenario);

  const agent::PdMorlAgent& agent_;
  reward::RewardParams params_;
  std::uint64_t seed_;
  mutable std::mutex mutex_;
  std::optional<agent::PreferenceVector> pending_lambda_;
  std::optional<int> pending_reset_;

  agent::PreferenceVector lambda_;
  int scenario_;
  std::unique_ptr<world::DrivingWorld> world_;
  world::Observation obs_;
  std::int64_t episode_ = 0;
};

nlohmann::json error_frame(const std::string& reason);

/// HTTP transport: GET /stream opens a server-sent-event stream of frames, POST /message
/// submits a client message. The first stream opened with ?role=controller receives a
/// controller token in its hello event; messages must carry that token (header
/// X-Controller-Token or ?token=). Any number of viewers may stream. Streamed frames carry
/// a server-wide sequence number "seq"; rejected messages also reach the controller stream.
class RolloutServer {
 public:
  struct Options {
    std::string host = "127.0.0.1";
    int port = 8765;               // 0 picks a free port
    double steps_per_second = 10;  // <= 0 runs unthrottled
  };

  RolloutServer(RolloutSession& session, Options options);
  ~RolloutServer();
  RolloutServer(const RolloutServer&) = delete;
  RolloutServer& operator=(const RolloutServer&) = delete;

  /// Binds and starts the simulation and HTTP threads; returns the bound port.
  int start();
  void stop();
  std::int64_t frames_sent() const { return frames_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::atomic<std::int64_t> frames_{0};
};

}  // namespace pdmorl::harness
