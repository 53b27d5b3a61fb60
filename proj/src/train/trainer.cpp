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

#include "qcs/train/trainer.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

#include "qcs/common.hpp"
#include "qcs/random.hpp"
#include "qcs/sim/statevector.hpp"

namespace qcs {

std::vector<std::string> TrainConfig::violations() const {
  std::vector<std::string> out;
  if (epochs < 1) out.push_back("epochs must be at least 1");
  if (batch_size < 1) out.push_back("batch_size must be at least 1");
  if (!(learning_rate > 0.0)) out.push_back("learning_rate must be positive");
  if (measurement_qubits.empty()) out.push_back("measurement_qubits must not be empty");
  return out;
}

double predict(const CircuitGenome& genome, std::span<const double> params,
               std::span<const double> features, std::span<const int> measurement_qubits) {
  return expectation_z(run_circuit(genome, params, features), measurement_qubits);
}

double mse_loss(std::span<const double> preds, std::span<const double> targets) {
  if (preds.size() != targets.size()) throw std::invalid_argument("mse_loss: length mismatch");
  if (preds.empty()) throw std::invalid_argument("mse_loss: empty input");
  double s = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const double e = preds[i] - targets[i];
    s += e * e;
  }
  return s / static_cast<double>(preds.size());
}

namespace {

/// Per-sample evaluation with the state cached before every trainable gate,
/// so each shifted run only replays the circuit suffix.
class ShiftEvaluator {
 public:
  ShiftEvaluator(const CircuitGenome& genome, std::span<const int> measure)
      : genome_(genome), measure_(measure) {
    for (std::size_t i = 0; i < genome.gates.size(); ++i) {
      if (genome.gates[i].is_trainable()) trainable_pos_.push_back(i);
    }
  }

  /// Returns <Z> and adds d<Z>/d theta into `dz` (length n_params).
  double evaluate(std::span<const double> params, std::span<const double> features,
                  std::span<double> dz) {
    QuantumState state(genome_.n_qubits);
    prefixes_.clear();
    std::size_t next = 0;
    for (std::size_t i = 0; i < genome_.gates.size(); ++i) {
      const auto& g = genome_.gates[i];
      if (next < trainable_pos_.size() && trainable_pos_[next] == i) {
        prefixes_.push_back(state);
        ++next;
      }
      detail::apply_in_place(StateMutator::amplitudes(state), g,
                             detail::resolve_angle(g, params, features));
    }
    const double value = expectation_z(state, measure_);

    for (std::size_t k = 0; k < trainable_pos_.size(); ++k) {
      const std::size_t pos = trainable_pos_[k];
      const int slot = std::get<TrainableSlot>(genome_.gates[pos].angle_source()).slot;
      const double theta = params[static_cast<std::size_t>(slot)];
      const double plus = shifted(prefixes_[k], pos, theta + kPi / 2, params, features);
      const double minus = shifted(prefixes_[k], pos, theta - kPi / 2, params, features);
      dz[static_cast<std::size_t>(slot)] += 0.5 * (plus - minus);
    }
    return value;
  }

 private:
  double shifted(const QuantumState& prefix, std::size_t pos, double angle,
                 std::span<const double> params, std::span<const double> features) {
    QuantumState s = prefix;
    auto amps = StateMutator::amplitudes(s);
    detail::apply_in_place(amps, genome_.gates[pos], angle);
    for (std::size_t i = pos + 1; i < genome_.gates.size(); ++i) {
      const auto& g = genome_.gates[i];
      detail::apply_in_place(amps, g, detail::resolve_angle(g, params, features));
    }
    return expectation_z(s, measure_);
  }

  const CircuitGenome& genome_;
  std::span<const int> measure_;
  std::vector<std::size_t> trainable_pos_;
  std::vector<QuantumState> prefixes_;
};

void check_shiftable(const CircuitGenome& genome) {
  for (const auto& g : genome.gates) {
    if (g.is_trainable() && !is_rotation(g.kind())) {
      throw std::invalid_argument("parameter-shift rule needs RX/RY/RZ trainable gates");
    }
  }
}

}  // namespace

BatchGradient param_shift_grad(const CircuitGenome& genome, std::span<const double> params,
                               std::span<const std::vector<double>> batch_features,
                               std::span<const double> batch_targets,
                               std::span<const int> measurement_qubits) {
  if (batch_features.size() != batch_targets.size()) {
    throw std::invalid_argument("param_shift_grad: features/targets length mismatch");
  }
  if (batch_features.empty()) throw std::invalid_argument("param_shift_grad: empty batch");
  check_shiftable(genome);
  const auto n = static_cast<std::size_t>(genome.n_params);
  BatchGradient out;
  out.grad.assign(n, 0.0);
  out.preds.reserve(batch_features.size());
  ShiftEvaluator eval(genome, measurement_qubits);
  std::vector<double> dz(n);
  for (std::size_t b = 0; b < batch_features.size(); ++b) {
    detail::check_inputs(genome, params, batch_features[b]);
    std::fill(dz.begin(), dz.end(), 0.0);
    const double pred = eval.evaluate(params, batch_features[b], dz);
    const double err = pred - batch_targets[b];
    for (std::size_t k = 0; k < n; ++k) out.grad[k] += 2.0 * err * dz[k];
    out.loss += err * err;
    out.preds.push_back(pred);
  }
  const double inv = 1.0 / static_cast<double>(batch_features.size());
  for (auto& g : out.grad) g *= inv;
  out.loss *= inv;
  return out;
}

AdamOptimizer::AdamOptimizer(std::size_t n_params, double learning_rate, double beta1,
                             double beta2, double eps)
    : lr_(learning_rate), beta1_(beta1), beta2_(beta2), eps_(eps), m_(n_params), v_(n_params) {}

void AdamOptimizer::step(std::span<double> params, std::span<const double> grad) {
  if (params.size() != m_.size() || grad.size() != m_.size()) {
    throw std::invalid_argument("AdamOptimizer: size mismatch");
  }
  ++t_;
  const double c1 = 1.0 - std::pow(beta1_, t_);
  const double c2 = 1.0 - std::pow(beta2_, t_);
  for (std::size_t k = 0; k < m_.size(); ++k) {
    m_[k] = beta1_ * m_[k] + (1.0 - beta1_) * grad[k];
    v_[k] = beta2_ * v_[k] + (1.0 - beta2_) * grad[k] * grad[k];
    const double m_hat = m_[k] / c1;
    const double v_hat = v_[k] / c2;
    params[k] -= lr_ * m_hat / (std::sqrt(v_hat) + eps_);
  }
}

TrainReport train(const CircuitGenome& genome, const Dataset& train, const TrainConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (const auto v = config.violations(); !v.empty()) {
    throw std::invalid_argument("invalid train config: " + v.front());
  }
  if (train.size() == 0) throw Error("train: empty training split");
  for (const double y : train.targets) {
    if (!(y >= -1.0 && y <= 1.0)) throw Error("train: targets must lie in [-1, 1]");
  }
  TrainReport report;
  Rng init_rng(derive_seed(config.seed, 0));
  report.params.resize(static_cast<std::size_t>(genome.n_params));
  for (auto& p : report.params) p = uniform(init_rng, 0.0, 2.0 * kPi);

  const std::size_t n = train.size();
  if (genome.n_params == 0) {
    const auto preds = predict_all(genome, report.params, train, config.measurement_qubits);
    report.loss_trace.assign(static_cast<std::size_t>(config.epochs), mse_loss(preds, train.targets));
  } else {
    Rng order_rng(derive_seed(config.seed, 1));
    AdamOptimizer adam(report.params.size(), config.learning_rate, config.adam_beta1,
                       config.adam_beta2, config.adam_eps);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::vector<double>> bx;
    std::vector<double> by;
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
      shuffle(std::span<std::size_t>(order), order_rng);
      double epoch_sq = 0.0;
      for (std::size_t start_row = 0; start_row < n;
           start_row += static_cast<std::size_t>(config.batch_size)) {
        const std::size_t end_row =
            std::min(n, start_row + static_cast<std::size_t>(config.batch_size));
        bx.clear();
        by.clear();
        for (std::size_t i = start_row; i < end_row; ++i) {
          bx.push_back(train.features[order[i]]);
          by.push_back(train.targets[order[i]]);
        }
        const auto g = param_shift_grad(genome, report.params, bx, by, config.measurement_qubits);
        epoch_sq += g.loss * static_cast<double>(end_row - start_row);
        adam.step(report.params, g.grad);
      }
      report.loss_trace.push_back(epoch_sq / static_cast<double>(n));
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<double> predict_all(const CircuitGenome& genome, std::span<const double> params,
                                const Dataset& ds, std::span<const int> measurement_qubits) {
  std::vector<double> out;
  out.reserve(ds.size());
  for (const auto& x : ds.features) out.push_back(predict(genome, params, x, measurement_qubits));
  return out;
}

}  // namespace qcs
