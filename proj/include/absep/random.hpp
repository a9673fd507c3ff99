// Copyright 2026 The absep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random frames and Haar unitaries. Everything is deterministic for a
// given seed within one build.

#ifndef ABSEP_RANDOM_HPP
#define ABSEP_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "absep/linalg.hpp"

namespace absep {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  Complex complex_normal() { return {normal(), normal()}; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// `count` orthonormal vectors in C^dim from Gram-Schmidt on complex Gaussians.
std::vector<ComplexVector> random_orthonormal_frame(std::size_t dim, std::size_t count, Rng& rng);

/// Haar-distributed n x n unitary (QR of a complex Gaussian matrix with the
/// phases of R's diagonal fixed to be positive).
ComplexMatrix haar_unitary(std::size_t n, Rng& rng);

/// Random Hermitian matrix with independent Gaussian entries.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);

/// Full-rank 2 x d density matrix U diag(p) U^dagger with Haar U and the
/// given spectrum.
DensityMatrix random_state_with_spectrum(std::span<const double> spectrum, std::size_t dim_b,
                                         Rng& rng);

}  // namespace absep

#endif  // ABSEP_RANDOM_HPP
