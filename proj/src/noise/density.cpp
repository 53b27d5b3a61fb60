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

#include "qcs/noise/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcs/sim/kernels.hpp"

namespace qcs {

namespace {

void check_size(int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxDensityQubits) {
    throw std::invalid_argument("density simulation supports at most " +
                                std::to_string(kMaxDensityQubits) + " qubits, got " +
                                std::to_string(n_qubits));
  }
}

Mat2 elementwise_conj(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[1]), std::conj(m[2]), std::conj(m[3])};
}

}  // namespace

DensityState::DensityState(int n_qubits) : n_qubits_(n_qubits) {
  check_size(n_qubits);
  rho_.assign(dim() * dim(), Complex{});
  rho_[0] = 1.0;
}

DensityState::DensityState(const QuantumState& pure) : n_qubits_(pure.n_qubits()) {
  check_size(n_qubits_);
  const auto a = pure.amplitudes();
  const std::size_t n = dim();
  rho_.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rho_[r * n + c] = a[r] * std::conj(a[c]);
  }
}

// The flat index is row * 2^n + col: column bits are 0..n-1 and row bits are
// n..2n-1, so U acts on bit q + n and conj(U) on bit q.
void DensityState::apply_gate(const GateSpec& gate, std::optional<double> angle) {
  for (int i = 0; i < gate.arity(); ++i) {
    if (gate.qubit(i) >= n_qubits_) throw std::out_of_range("gate qubit out of range");
  }
  const int n = n_qubits_;
  switch (gate.kind()) {
    case GateKind::CX:
      kernels::apply_cx(rho_, gate.qubit(0) + n, gate.qubit(1) + n);
      kernels::apply_cx(rho_, gate.qubit(0), gate.qubit(1));
      return;
    case GateKind::CZ:
      kernels::apply_cz(rho_, gate.qubit(0) + n, gate.qubit(1) + n);
      kernels::apply_cz(rho_, gate.qubit(0), gate.qubit(1));
      return;
    case GateKind::I:
      return;
    default: {
      const Mat2 u = single_qubit_matrix(gate.kind(), angle);
      kernels::apply_1q(rho_, gate.qubit(0) + n, u);
      kernels::apply_1q(rho_, gate.qubit(0), elementwise_conj(u));
    }
  }
}

void DensityState::depolarize(std::span<const int> qubits, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarizing probability outside [0,1]");
  if (p == 0.0 || qubits.empty()) return;
  std::size_t smask = 0;
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits_) throw std::out_of_range("depolarize: qubit out of range");
    smask |= std::size_t{1} << q;
  }
  // Enumerate every assignment of the subsystem bits.
  std::vector<std::size_t> patterns{0};
  for (int q : qubits) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t m = patterns.size();
    for (std::size_t i = 0; i < m; ++i) patterns.push_back(patterns[i] | bit);
  }
  const double mix = p / static_cast<double>(patterns.size());
  const std::size_t n = dim();
  std::vector<Complex> out(rho_.size());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Complex v = (1.0 - p) * rho_[r * n + c];
      if ((r & smask) == (c & smask)) {
        const std::size_t r0 = r & ~smask;
        const std::size_t c0 = c & ~smask;
        Complex partial{};
        for (const std::size_t s : patterns) partial += rho_[(r0 | s) * n + (c0 | s)];
        v += mix * partial;
      }
      out[r * n + c] = v;
    }
  }
  rho_ = std::move(out);
}

Complex DensityState::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim(); ++i) t += rho_[i * dim() + i];
  return t;
}

double DensityState::hermiticity_error() const {
  double worst = 0.0;
  const std::size_t n = dim();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      worst = std::max(worst, std::abs(rho_[r * n + c] - std::conj(rho_[c * n + r])));
    }
  }
  return worst;
}

std::vector<double> DensityState::probabilities() const {
  std::vector<double> p(dim());
  for (std::size_t i = 0; i < dim(); ++i) p[i] = std::max(0.0, rho_[i * dim() + i].real());
  return p;
}

std::vector<double> apply_readout_flips(std::span<const double> probs, int n_qubits, double flip) {
  if (probs.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("readout: distribution length must be 2^n_qubits");
  }
  if (!(flip >= 0.0 && flip <= 1.0)) throw std::invalid_argument("readout flip outside [0,1]");
  std::vector<double> cur(probs.begin(), probs.end());
  if (flip == 0.0) return cur;
  std::vector<double> next(cur.size());
  for (int q = 0; q < n_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] = (1.0 - flip) * cur[i] + flip * cur[i ^ bit];
    }
    std::swap(cur, next);
  }
  return cur;
}

}  // namespace qcs
