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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qcs/circuit/genome.hpp"
#include "qcs/data/dataset.hpp"

namespace qcs {

/// R_c: mean pairwise state fidelity of a circuit's outputs over a sample subset.
struct SimilarityMatrix {
  Eigen::MatrixXd entries;
};

/// R_ref: ideal similarity derived from labels (0/1) or targets (Gaussian).
struct ReferenceMatrix {
  Eigen::MatrixXd entries;
  TaskKind kind = TaskKind::kClassification;
};

/// R_w: positive symmetric weights from the class distribution.
struct WeightMatrix {
  Eigen::MatrixXd entries;
  /// Set when only one class is present; entries are then all ones.
  bool single_class = false;
};

enum class RegressionMode { kPlain, kGaussianWeighted };

inline constexpr int kDefaultParamDraws = 4;
inline constexpr double kDefaultAlpha = 0.25;

/// For each of `n_param_draws` parameter vectors drawn uniformly from
/// [0, 2pi)^n_params (sequentially from `seed`), runs every sample through the
/// circuit and averages the pairwise fidelities.
SimilarityMatrix similarity_matrix(const CircuitGenome& genome,
                                   std::span<const std::vector<double>> samples,
                                   int n_param_draws = kDefaultParamDraws, std::uint64_t seed = 0);

/// 1 where labels agree, 0 otherwise. Labels must be +/-1.
ReferenceMatrix reference_classification(std::span<const double> labels);

/// Inverse-frequency class weights w_k = d / (2 count_k), combined per pair
/// as sqrt(w_{y_i} w_{y_j}). All ones for balanced labels.
WeightMatrix class_weight_matrix(std::span<const double> labels);

/// exp(-(y_i - y_j)^2 / (2 sigma^2)).
ReferenceMatrix reference_regression(std::span<const double> targets, double sigma);

/// Median pairwise |y_i - y_j|; throws when that median is 0.
double median_sigma(std::span<const double> targets);

/// 1 - ||R_c - R_w (.) R_ref||_F^2 / (2 n_c d_c^2), (.) the elementwise product.
double repcap_classification(const Eigen::MatrixXd& r_c, const Eigen::MatrixXd& r_ref,
                             const Eigen::MatrixXd& r_w, int n_classes, int d_c);

/// Plain:    1 - ||R_c - R_ref||_F^2 / (2 d_c^2).
/// Weighted: 1 - sum R_ref (R_c - R_ref)^2 / (2 sum R_ref), so pairs with
///           close targets dominate.
double repcap_regression(const Eigen::MatrixXd& r_c, const Eigen::MatrixXd& r_ref,
                         RegressionMode mode, int d_c);

/// cnr^alpha * repcap. cnr is expected in [0, 1].
double final_score(double cnr, double repcap, double alpha = kDefaultAlpha);

}  // namespace qcs
