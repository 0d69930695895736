#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pdmorl::nn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputActivation : std::uint8_t { Identity, Tanh };

struct DenseLayer {
  Matrix weight;  // out x in
  Vector bias;    // out
};

/// Intermediate values of one batched forward pass. Columns are samples.
struct ForwardCache {
  std::vector<Matrix> inputs;  // input to each layer
  std::vector<Matrix> pre;     // pre-activation of each layer
  Matrix output;
};

struct Gradients {
  std::vector<Matrix> weight;
  std::vector<Vector> bias;
  Matrix input;  // dL/dx, same shape as the forward input

  Gradients& operator+=(const Gradients& o);
  Gradients& operator*=(double k);
};

/// Fully connected ReLU network with a tanh or identity output layer.
class DenseNetwork {
 public:
  DenseNetwork() = default;
  /// He-uniform hidden layers, uniform(+-output_init) output layer, zero biases.
  DenseNetwork(std::vector<int> sizes, OutputActivation out, std::mt19937_64& rng,
               double output_init = 3e-3);
  static DenseNetwork zeros(std::vector<int> sizes, OutputActivation out);

  Matrix forward(const Matrix& x) const;
  ForwardCache forward_cached(const Matrix& x) const;
  /// Reverse pass for `upstream` = dL/d(output). Gradients are summed over the batch.
  Gradients backward(const ForwardCache& cache, const Matrix& upstream,
                     bool parameter_grads = true) const;

  const std::vector<int>& sizes() const { return sizes_; }
  int input_size() const { return sizes_.front(); }
  int output_size() const { return sizes_.back(); }
  OutputActivation output_activation() const { return output_; }
  std::vector<DenseLayer>& layers() { return layers_; }
  const std::vector<DenseLayer>& layers() const { return layers_; }

  std::size_t parameter_count() const;
  /// Flat indexing over (W0, b0, W1, b1, ...), column-major within each matrix.
  double& parameter(std::size_t i);
  double parameter(std::size_t i) const;
  bool all_finite() const;

  void write(std::ostream& out) const;
  /// Throws ShapeError when the stored layout differs from `expected_sizes` (if non-empty).
  static DenseNetwork read(std::istream& in, const std::vector<int>& expected_sizes = {});

  friend bool operator==(const DenseNetwork& a, const DenseNetwork& b);

 private:
  std::vector<int> sizes_;
  OutputActivation output_ = OutputActivation::Identity;
  std::vector<DenseLayer> layers_;
};

/// target <- tau * source + (1 - tau) * target, elementwise.
void soft_update(DenseNetwork& target, const DenseNetwork& source, double tau);

struct AdamConfig {
  double learning_rate = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

class Adam {
 public:
  Adam() = default;
  Adam(const DenseNetwork& net, AdamConfig config);

  void step(DenseNetwork& net, const Gradients& grads);
  std::int64_t step_count() const { return steps_; }
  const AdamConfig& config() const { return config_; }

  void write(std::ostream& out) const;
  static Adam read(std::istream& in, const DenseNetwork& net);

 private:
  AdamConfig config_;
  std::int64_t steps_ = 0;
  std::vector<Matrix> m_w_, v_w_;
  std::vector<Vector> m_b_, v_b_;
};

namespace io {
void write_u64(std::ostream& out, std::uint64_t v);
std::uint64_t read_u64(std::istream& in);
void write_f64(std::ostream& out, double v);
double read_f64(std::istream& in);
void write_doubles(std::ostream& out, const double* data, std::size_t n);
void read_doubles(std::istream& in, double* data, std::size_t n);
void write_string(std::ostream& out, const std::string& s);
std::string read_string(std::istream& in);
}  // namespace io

}  // namespace pdmorl::nn
