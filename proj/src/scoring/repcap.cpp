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

#include "qcs/scoring/repcap.hpp"

#include <algorithm>
#include <cmath>

#include "qcs/common.hpp"
#include "qcs/random.hpp"
#include "qcs/sim/statevector.hpp"

namespace qcs {

namespace {

void check_square(const Eigen::MatrixXd& m, int d, const char* name) {
  if (m.rows() != d || m.cols() != d) {
    throw std::invalid_argument(std::string(name) + " must be " + std::to_string(d) + "x" +
                                std::to_string(d));
  }
}

void check_labels(std::span<const double> labels) {
  for (const double y : labels) {
    if (y != 1.0 && y != -1.0) throw std::invalid_argument("labels must be -1 or +1");
  }
}

}  // namespace

SimilarityMatrix similarity_matrix(const CircuitGenome& genome,
                                   std::span<const std::vector<double>> samples, int n_param_draws,
                                   std::uint64_t seed) {
  if (samples.empty()) throw std::invalid_argument("similarity_matrix: empty subset");
  if (n_param_draws < 1) throw std::invalid_argument("similarity_matrix: need at least one draw");
  const auto d = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(d, d);
  Rng rng(seed);
  std::vector<double> params(static_cast<std::size_t>(genome.n_params));
  std::vector<QuantumState> states;
  states.reserve(samples.size());
  for (int draw = 0; draw < n_param_draws; ++draw) {
    for (auto& p : params) p = uniform(rng, 0.0, 2.0 * kPi);
    states.clear();
    for (const auto& x : samples) states.push_back(run_circuit(genome, params, x));
    for (Eigen::Index i = 0; i < d; ++i) {
      acc(i, i) += state_fidelity(states[static_cast<std::size_t>(i)],
                                  states[static_cast<std::size_t>(i)]);
      for (Eigen::Index j = i + 1; j < d; ++j) {
        const double f = state_fidelity(states[static_cast<std::size_t>(i)],
                                        states[static_cast<std::size_t>(j)]);
        acc(i, j) += f;
        acc(j, i) += f;
      }
    }
  }
  return {acc / static_cast<double>(n_param_draws)};
}

ReferenceMatrix reference_classification(std::span<const double> labels) {
  check_labels(labels);
  const auto d = static_cast<Eigen::Index>(labels.size());
  ReferenceMatrix r{Eigen::MatrixXd(d, d), TaskKind::kClassification};
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      r.entries(i, j) = labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

WeightMatrix class_weight_matrix(std::span<const double> labels) {
  check_labels(labels);
  const auto d = static_cast<Eigen::Index>(labels.size());
  const auto n_pos = std::count(labels.begin(), labels.end(), 1.0);
  const auto n_neg = static_cast<std::ptrdiff_t>(labels.size()) - n_pos;
  WeightMatrix w{Eigen::MatrixXd::Ones(d, d), false};
  if (n_pos == 0 || n_neg == 0) {
    w.single_class = true;
    return w;
  }
  constexpr double kClasses = 2.0;
  const double w_pos = static_cast<double>(d) / (kClasses * static_cast<double>(n_pos));
  const double w_neg = static_cast<double>(d) / (kClasses * static_cast<double>(n_neg));
  for (Eigen::Index i = 0; i < d; ++i) {
    const double wi = labels[static_cast<std::size_t>(i)] > 0 ? w_pos : w_neg;
    for (Eigen::Index j = 0; j < d; ++j) {
      const double wj = labels[static_cast<std::size_t>(j)] > 0 ? w_pos : w_neg;
      w.entries(i, j) = std::sqrt(wi * wj);
    }
  }
  return w;
}

ReferenceMatrix reference_regression(std::span<const double> targets, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("reference_regression: sigma must be positive");
  const auto d = static_cast<Eigen::Index>(targets.size());
  ReferenceMatrix r{Eigen::MatrixXd(d, d), TaskKind::kRegression};
  const double denom = 2.0 * sigma * sigma;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const double diff = targets[static_cast<std::size_t>(i)] - targets[static_cast<std::size_t>(j)];
      r.entries(i, j) = std::exp(-(diff * diff) / denom);
    }
  }
  return r;
}

double median_sigma(std::span<const double> targets) {
  std::vector<double> dist;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (std::size_t j = i + 1; j < targets.size(); ++j) dist.push_back(std::abs(targets[i] - targets[j]));
  }
  if (dist.empty()) throw std::invalid_argument("median_sigma: need at least two targets");
  std::sort(dist.begin(), dist.end());
  const std::size_t m = dist.size();
  const double median = m % 2 ? dist[m / 2] : 0.5 * (dist[m / 2 - 1] + dist[m / 2]);
  if (!(median > 0.0)) throw std::invalid_argument("median_sigma: median pairwise distance is 0");
  return median;
}

double repcap_classification(const Eigen::MatrixXd& r_c, const Eigen::MatrixXd& r_ref,
                             const Eigen::MatrixXd& r_w, int n_classes, int d_c) {
  check_square(r_c, d_c, "R_c");
  check_square(r_ref, d_c, "R_ref");
  check_square(r_w, d_c, "R_w");
  if (n_classes < 1 || d_c < 1) throw std::invalid_argument("n_c and d_c must be positive");
  const double dev = (r_c - r_w.cwiseProduct(r_ref)).squaredNorm();
  return 1.0 - dev / (2.0 * n_classes * static_cast<double>(d_c) * d_c);
}

double repcap_regression(const Eigen::MatrixXd& r_c, const Eigen::MatrixXd& r_ref,
                         RegressionMode mode, int d_c) {
  check_square(r_c, d_c, "R_c");
  check_square(r_ref, d_c, "R_ref");
  if (d_c < 1) throw std::invalid_argument("d_c must be positive");
  if (mode == RegressionMode::kPlain) {
    return 1.0 - (r_c - r_ref).squaredNorm() / (2.0 * static_cast<double>(d_c) * d_c);
  }
  const Eigen::ArrayXXd diff = (r_c - r_ref).array();
  const double weighted = (r_ref.array() * diff.square()).sum();
  return 1.0 - weighted / (2.0 * r_ref.sum());
}

double final_score(double cnr, double repcap, double alpha) {
  return std::pow(cnr, alpha) * repcap;
}

}  // namespace qcs
