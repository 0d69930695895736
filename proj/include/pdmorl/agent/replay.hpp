#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "pdmorl/agent/preference.hpp"
#include "pdmorl/nn/dense_network.hpp"
#include "pdmorl/reward/reward.hpp"
#include "pdmorl/world/types.hpp"

namespace pdmorl::agent {

struct Transition {
  world::Observation s;
  world::Action a;
  reward::RewardVector r;
  world::Observation s_next;
  bool done = false;
  PreferenceVector lambda;
};

/// For every transition, keeps the original and appends `k` copies whose preference is
/// replaced by a fresh simplex sample. States, actions, rewards and done flags are untouched.
std::vector<Transition> her_relabel(const std::vector<Transition>& episode, std::mt19937_64& rng,
                                    int k);

/// Column-major training batch; column j is sample j.
struct Batch {
  nn::Matrix s;       // obs x n
  nn::Matrix a;       // 2 x n
  nn::Matrix r;       // 5 x n
  nn::Matrix s_next;  // obs x n
  nn::Vector done;    // n, 0 or 1
  nn::Matrix lambda;  // 4 x n

  Eigen::Index size() const { return s.cols(); }
  static Batch from(const std::vector<Transition>& ts);
};

/// FIFO ring buffer with uniform sampling over the filled region. Observations are stored
/// in single precision.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void add(const Transition& t);
  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }
  Transition at(std::size_t i) const;  // i-th oldest
  Batch sample(std::size_t n, std::mt19937_64& rng) const;

  void write(std::ostream& out) const;
  static ReplayBuffer read(std::istream& in);

 private:
  std::size_t slot(std::size_t i) const { return (head_ + capacity_ - size_ + i) % capacity_; }

  std::size_t capacity_;
  std::size_t head_ = 0;  // next write slot
  std::size_t size_ = 0;
  std::vector<float> obs_;
  std::vector<float> next_obs_;
  std::vector<double> actions_;
  std::vector<double> rewards_;
  std::vector<double> lambdas_;
  std::vector<std::uint8_t> done_;
};

}  // namespace pdmorl::agent
