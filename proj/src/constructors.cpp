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

#include "absep/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "absep/criteria.hpp"
#include "absep/errors.hpp"

namespace absep {

namespace {

constexpr double kFrameTolerance = 1e-10;
constexpr double kWeightTolerance = 1e-12;
constexpr double kOverlapTolerance = 1e-12;
constexpr double kGenerationTolerance = 1e-10;
constexpr double kKappaMatchTolerance = 1e-9;

void require_pure_params(const PureStateParams& p) {
  if (!(p.x >= 0.0 && p.x <= std::numbers::pi)) {
    throw DomainError(fmt::format("x = {} outside [0, pi]", p.x));
  }
  if (!(p.phi >= 0.0 && p.phi <= 2.0 * std::numbers::pi)) {
    throw DomainError(fmt::format("phi = {} outside [0, 2 pi]", p.phi));
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

ComplexVector pure_state_vector(const PureStateParams& p) {
  require_pure_params(p);
  ComplexVector v(4);
  v[0] = std::cos(p.x / 2.0);
  v[3] = std::polar(1.0, -p.phi) * std::sin(p.x / 2.0);
  return v;
}

DensityMatrix pure_state(const PureStateParams& p) {
  return DensityMatrix(ComplexMatrix::projector(pure_state_vector(p)), 2);
}

DensityMatrix werner(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError(fmt::format("Werner q = {} outside [0, 1]", q));
  const double h = 1.0 / std::numbers::sqrt2;
  const ComplexVector phi_plus{h, 0.0, 0.0, h};
  ComplexMatrix m = q * ComplexMatrix::projector(phi_plus) +
                    ((1.0 - q) / 4.0) * ComplexMatrix::identity(4);
  return DensityMatrix(std::move(m), 2);
}

DensityMatrix extreme_point(std::size_t d, std::span<const ComplexVector> frame) {
  if (d < 2) throw DomainError(fmt::format("d must be >= 2, got {}", d));
  const std::size_t n = 2 * d;
  if (frame.size() != n - 1) {
    throw DomainError(fmt::format("extreme point in 2x{} needs {} frame vectors, got {}", d,
                                  n - 1, frame.size()));
  }
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (frame[i].size() != n) {
      throw DomainError(fmt::format("frame vector {} has length {}, expected {}", i,
                                    frame[i].size(), n));
    }
    for (std::size_t j = i; j < frame.size(); ++j) {
      Complex overlap = 0.0;
      for (std::size_t k = 0; k < n; ++k) overlap += std::conj(frame[i][k]) * frame[j][k];
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(overlap - expected) > kFrameTolerance) {
        throw DomainError(fmt::format(
            "frame is not orthonormal: <v{}|v{}> = {:.3e}{:+.3e}i (tolerance {:.0e})", i, j,
            overlap.real(), overlap.imag(), kFrameTolerance));
      }
    }
  }
  ComplexMatrix m(n, n);
  for (const auto& v : frame) m += ComplexMatrix::projector(v);
  m *= 1.0 / static_cast<double>(n - 1);
  return DensityMatrix(std::move(m), d);
}

DensityMatrix extreme_point(std::size_t d, std::uint64_t seed) {
  if (d < 2) throw DomainError(fmt::format("d must be >= 2, got {}", d));
  Rng rng(seed);
  const auto frame = random_orthonormal_frame(2 * d, 2 * d - 1, rng);
  return extreme_point(d, frame);
}

DensityMatrix rank3_seed_state(double p1, double p2, double p3) {
  if (!(p1 > 0.0 && p2 > 0.0 && p3 > 0.0)) {
    throw DomainError(fmt::format("weights must be positive, got ({}, {}, {})", p1, p2, p3));
  }
  if (std::abs(p1 + p2 + p3 - 1.0) > kWeightTolerance) {
    throw DomainError(fmt::format("weights sum to {:.17g}, not 1", p1 + p2 + p3));
  }
  if (std::max({p1, p2, p3}) - std::min({p1, p2, p3}) <= kWeightTolerance) {
    throw DomainError("equal weights give the rank-3 extreme point, which is absolutely separable");
  }
  const double w[4] = {p1, p2, p3, 0.0};
  return diagonal_state(w, 2);
}

GenerationResult generate_outside_ball(const DensityMatrix& seed, const DensityMatrix& pure) {
  const std::size_t d = seed.dim_b();
  if (pure.dim_b() != d) {
    throw DomainError(fmt::format("seed is 2x{} but pure state is 2x{}", d, pure.dim_b()));
  }
  const Spectrum seed_spectrum = spectrum(seed);
  if (seed_spectrum.rank() != 2 * d - 1) {
    throw DomainError(fmt::format("seed must have rank {}, got {}", 2 * d - 1,
                                  seed_spectrum.rank()));
  }
  const double seed_lhs = eq1_lhs(seed_spectrum, d);
  if (seed_lhs <= kBoundaryBand) {
    throw DomainError(fmt::format(
        "seed must not be absolutely separable (eq1_lhs = {:.3e} <= {:.0e})", seed_lhs,
        kBoundaryBand));
  }
  if (spectrum(pure).rank() != 1) throw DomainError("second input must be a pure state");
  const double overlap = (seed.matrix() * pure.matrix()).trace().real();
  if (std::abs(overlap) > kOverlapTolerance) {
    throw DomainError(fmt::format("pure state is not orthogonal to the seed: Tr = {:.3e}", overlap));
  }

  auto mixture = [&](double q) {
    return hermitian_part(q * seed.matrix() + (1.0 - q) * pure.matrix());
  };
  const Predicate absolutely_separable = [&](double q) {
    return eq1_lhs(spectrum(mixture(q)), d) <= 0.0;
  };

  auto window = find_windows(absolutely_separable, 0.0, 1.0, kGenerationTolerance);
  if (window.empty()) {
    throw NumericalError("no absolutely separable mixture of the seed and pure state was found");
  }
  const double q_star = window.back().hi;
  DensityMatrix state(mixture(q_star), d);
  const double p = purity(state);
  return {q_star, std::move(state), p, p > maximal_ball_purity(d) + kBallSlack,
          std::move(window)};
}

Spectrum kappa_family_spectrum(const KappaFamilyParams& p) {
  if (!(p.kappa > 0.0)) throw DomainError(fmt::format("kappa = {} must be > 0", p.kappa));
  if (!(p.lambda4 > 0.0)) throw DomainError(fmt::format("lambda4 = {} must be > 0", p.lambda4));
  const double l4 = p.lambda4;
  const double base = 1.0 - (1.0 + p.kappa) * l4;
  const double spread = 2.0 * std::sqrt(p.kappa) * l4;
  const double l1 = 0.5 * (base + spread);
  const double l2 = p.kappa * l4;
  const double l3 = 0.5 * (base - spread);
  if (!(l1 >= l2 && l2 >= l3 && l3 >= l4)) {
    throw DomainError(fmt::format(
        "kappa = {}, lambda4 = {} gives {{{:.6g}, {:.6g}, {:.6g}, {:.6g}}}, which is not "
        "descending",
        p.kappa, p.lambda4, l1, l2, l3, l4));
  }
  return Spectrum({l1, l2, l3, l4});
}

Spectrum mix_spectra(const Spectrum& a, const Spectrum& b, double x) {
  if (a.size() != b.size()) {
    throw DomainError(fmt::format("spectra lengths differ: {} vs {}", a.size(), b.size()));
  }
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError(fmt::format("weight x = {} outside [0, 1]", x));
  std::vector<double> mu(a.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = x * a[i] + (1.0 - x) * b[i];
  return Spectrum(std::move(mu));
}

Spectrum kappa_family_mix(const Spectrum& a, const Spectrum& b, double x) {
  if (a.size() != 4 || b.size() != 4) throw DomainError("kappa family spectra have 4 values");
  if (!(a[3] > 0.0 && b[3] > 0.0)) throw DomainError("kappa family spectra are full rank");
  const double kappa_a = a[1] / a[3];
  const double kappa_b = b[1] / b[3];
  if (std::abs(kappa_a - kappa_b) > kKappaMatchTolerance * std::max(kappa_a, kappa_b)) {
    throw DomainError(fmt::format("kappa mismatch: {:.12g} vs {:.12g}", kappa_a, kappa_b));
  }
  return mix_spectra(a, b, x);
}

DensityMatrix rank3_psi_state(const PureStateParams& p) {
  ComplexMatrix m = ComplexMatrix::projector(pure_state_vector(p));
  m(1, 1) += 1.0;
  m(2, 2) += 1.0;
  m *= 1.0 / 3.0;
  return DensityMatrix(std::move(m), 2);
}

DensityMatrix diagonal_state(std::span<const double> weights, std::size_t dim_b) {
  return DensityMatrix(ComplexMatrix::diagonal(weights), dim_b);
}

DensityMatrix basis_projector(std::size_t k, std::size_t dim_b) {
  if (k >= 2 * dim_b) {
    throw DomainError(fmt::format("basis index {} outside a 2x{} space", k, dim_b));
  }
  std::vector<double> w(2 * dim_b, 0.0);
  w[k] = 1.0;
  return diagonal_state(w, dim_b);
}

}  // namespace absep
