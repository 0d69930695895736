#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "pdmorl/reward/reward.hpp"

namespace pdmorl::agent {

inline constexpr std::size_t kPrefDim = reward::kPreferenceCount;
inline constexpr std::size_t kQDim = reward::kObjectiveCount;

using Weights = std::array<double, kPrefDim>;
using QVector = std::array<double, kQDim>;

class InvalidPreference : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Weights over (agg, comfort, speed, eff) on the probability simplex.
class PreferenceVector {
 public:
  static constexpr double kTolerance = 1e-9;

  PreferenceVector() : w_{0.25, 0.25, 0.25, 0.25} {}
  /// Throws InvalidPreference unless every weight is finite, in [0, 1] and they sum to 1.
  explicit PreferenceVector(const Weights& w);

  static bool valid(const Weights& w, double tol = kTolerance);
  static PreferenceVector one_hot(std::size_t i);

  const Weights& weights() const { return w_; }
  double operator[](std::size_t i) const { return w_[i]; }
  std::size_t dominant() const;

  friend bool operator==(const PreferenceVector&, const PreferenceVector&) = default;

 private:
  Weights w_;
};

/// Uniform sample from the 3-simplex (flat Dirichlet via normalized exponentials).
PreferenceVector sample_preference(std::mt19937_64& rng);

/// Maps a preference to a unit direction in the critic's preference-value space.
class PreferenceInterpolator {
 public:
  struct Anchor {
    Weights preference;
    Weights direction;
  };

  /// Default: direction-normalization, I(lambda) = lambda / |lambda|.
  PreferenceInterpolator() = default;
  /// Anchor table: inverse-distance blend of stored directions, exact at the anchors.
  static PreferenceInterpolator anchor_table(std::vector<Anchor> anchors);

  Weights operator()(const Weights& lambda) const;
  bool uses_table() const { return !anchors_.empty(); }

 private:
  std::vector<Anchor> anchors_;
};

/// Angle in radians between a preference direction and the preference part of a Q-vector.
/// Throws std::invalid_argument if either vector has zero norm.
double angle_loss(const Weights& lambda_p, const Weights& q_pref);
/// d angle / d q_pref, with the arccos derivative clamped away from the poles.
Weights angle_loss_grad(const Weights& lambda_p, const Weights& q_pref);

/// (1, lambda) . q: the core objective always carries unit weight.
double scalarize(const Weights& lambda, const QVector& q);
double scalarize_augmented(const QVector& weights, const QVector& q);
QVector augmented_weights(const Weights& lambda);

inline Weights preference_part(const QVector& q) { return {q[1], q[2], q[3], q[4]}; }

}  // namespace pdmorl::agent
