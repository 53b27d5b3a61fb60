// Copyright 2026 The qcsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcs/circuit/genome.hpp"
#include "qcs/data/dataset.hpp"

namespace qcs {

struct TrainConfig {
  int epochs = 200;
  int batch_size = 256;
  double learning_rate = 0.01;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  /// Prediction = mean <Z> over these qubits.
  std::vector<int> measurement_qubits{0};
  std::uint64_t seed = 0;

  std::vector<std::string> violations() const;
};

struct TrainReport {
  std::vector<double> params;
  /// Mean training loss per epoch, accumulated over the epoch's batches at the
  /// parameters each batch saw.
  std::vector<double> loss_trace;
  double wall_seconds = 0.0;
};

double predict(const CircuitGenome& genome, std::span<const double> params,
               std::span<const double> features, std::span<const int> measurement_qubits);

double mse_loss(std::span<const double> preds, std::span<const double> targets);

struct BatchGradient {
  std::vector<double> grad;
  /// Predictions at the unshifted parameters, one per sample.
  std::vector<double> preds;
  double loss = 0.0;
};

/// Gradient of the batch MSE. Each trainable gate occurrence contributes
/// [E(theta + pi/2) - E(theta - pi/2)] / 2 to d<Z>/d theta_slot.
BatchGradient param_shift_grad(const CircuitGenome& genome, std::span<const double> params,
                               std::span<const std::vector<double>> batch_features,
                               std::span<const double> batch_targets,
                               std::span<const int> measurement_qubits);

/// Adam with bias correction.
class AdamOptimizer {
 public:
  AdamOptimizer(std::size_t n_params, double learning_rate, double beta1 = 0.9,
                double beta2 = 0.999, double eps = 1e-8);

  void step(std::span<double> params, std::span<const double> grad);
  int steps_taken() const { return t_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  int t_ = 0;
  std::vector<double> m_, v_;
};

/// Variational training on `train` (all rows are used). Parameters start
/// uniform in [0, 2pi); every epoch reshuffles and walks the batches in order.
TrainReport train(const CircuitGenome& genome, const Dataset& train, const TrainConfig& config);

/// Predictions for every row of `ds`.
std::vector<double> predict_all(const CircuitGenome& genome, std::span<const double> params,
                                const Dataset& ds, std::span<const int> measurement_qubits);

}  // namespace qcs
