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

// In-place gate kernels over a flat amplitude array. Basis index bit q holds
// qubit q (little endian). The density-matrix simulator reuses these on the
// vectorised matrix, so the array length only has to be a power of two.

#include <cstddef>
#include <span>

#include "qcs/common.hpp"
#include "qcs/sim/gates.hpp"

namespace qcs::kernels {

inline void apply_1q(std::span<Complex> amps, int qubit, const Mat2& m) {
  const std::size_t stride = std::size_t{1} << qubit;
  const std::size_t n = amps.size();
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amps[i];
      const Complex a1 = amps[i + stride];
      amps[i] = m[0] * a0 + m[1] * a1;
      amps[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

inline void apply_cx(std::span<Complex> amps, int control, int target) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
  }
}

inline void apply_cz(std::span<Complex> amps, int a, int b) {
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) == mask) amps[i] = -amps[i];
  }
}

}  // namespace qcs::kernels
