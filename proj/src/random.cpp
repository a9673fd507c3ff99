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

#include "absep/random.hpp"

#include <cmath>

#include <fmt/core.h>

#include "absep/errors.hpp"

namespace absep {

namespace {

// Orthonormalises `v` against `basis` (modified Gram-Schmidt, two passes) and
// returns false if it is numerically dependent.
bool orthonormalise_against(ComplexVector& v, const std::vector<ComplexVector>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& e : basis) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) overlap += std::conj(e[i]) * v[i];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= overlap * e[i];
    }
  }
  double norm2 = 0.0;
  for (const auto& x : v) norm2 += std::norm(x);
  if (norm2 < 1e-20) return false;
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x *= inv;
  return true;
}

}  // namespace

std::vector<ComplexVector> random_orthonormal_frame(std::size_t dim, std::size_t count, Rng& rng) {
  if (count > dim) {
    throw DomainError(fmt::format("cannot fit {} orthonormal vectors in dimension {}", count, dim));
  }
  std::vector<ComplexVector> frame;
  frame.reserve(count);
  while (frame.size() < count) {
    ComplexVector v(dim);
    for (auto& x : v) x = rng.complex_normal();
    if (orthonormalise_against(v, frame)) frame.push_back(std::move(v));
  }
  return frame;
}

ComplexMatrix haar_unitary(std::size_t n, Rng& rng) {
  // Gram-Schmidt on the columns is QR with a positive diagonal in R, which is
  // exactly the phase fix that makes the distribution Haar.
  const auto frame = random_orthonormal_frame(n, n, rng);
  ComplexMatrix u(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) u(r, c) = frame[c][r];
  return u;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = rng.complex_normal();
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

DensityMatrix random_state_with_spectrum(std::span<const double> spectrum, std::size_t dim_b,
                                         Rng& rng) {
  const auto u = haar_unitary(spectrum.size(), rng);
  ComplexMatrix m = conjugate(u, ComplexMatrix::diagonal(spectrum));
  // Restore exact Hermiticity lost to roundoff in the product.
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(m), dim_b);
}

}  // namespace absep
