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

// Named states and state families: pure two-qubit inputs, Werner states,
// rank-(2d-1) extreme points, the outside-maximal-ball generator, and the
// kappa-parametrised boundary family.

#ifndef ABSEP_CONSTRUCTORS_HPP
#define ABSEP_CONSTRUCTORS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "absep/linalg.hpp"
#include "absep/random.hpp"
#include "absep/roots.hpp"

namespace absep {

/// cos(x/2)|00> + e^{-i phi} sin(x/2)|11>, x in [0, pi], phi in [0, 2 pi].
struct PureStateParams {
  double x = 0.0;
  double phi = 0.0;
};

struct KappaFamilyParams {
  double kappa = 0.0;
  double lambda4 = 0.0;
};

struct GenerationResult {
  double q_star;
  DensityMatrix state;
  double purity;
  bool outside_ball;
  /// Every q in [0, 1] for which q * seed + (1 - q) * pure is absolutely separable.
  std::vector<Interval> absep_window;
};

ComplexVector pure_state_vector(const PureStateParams& p);
DensityMatrix pure_state(const PureStateParams& p);

/// q |phi+><phi+| + (1 - q) I/4.
DensityMatrix werner(double q);

/// Equal mixture of 2d - 1 orthonormal vectors in C^(2d).
DensityMatrix extreme_point(std::size_t d, std::span<const ComplexVector> frame);
/// As above with a frame drawn from `seed`.
DensityMatrix extreme_point(std::size_t d, std::uint64_t seed);

/// p1|00><00| + p2|01><01| + p3|10><10|; the weights must not all be equal.
DensityMatrix rank3_seed_state(double p1, double p2, double p3);

/// Scans q -> eq1_lhs(q * seed + (1 - q) * pure) on a 1000-interval grid,
/// bisects each sign change to 1e-10 and returns the largest boundary root.
/// Throws NumericalError if no absolutely separable mixture is found.
GenerationResult generate_outside_ball(const DensityMatrix& seed, const DensityMatrix& pure);

/// {l1, kappa l4, l3, l4} with l1, l3 = [1 - (1 + kappa) l4 +/- 2 sqrt(kappa) l4] / 2.
/// Rejects parameters that do not give a descending nonnegative list.
Spectrum kappa_family_spectrum(const KappaFamilyParams& p);

/// Elementwise x * a + (1 - x) * b, with no family check.
Spectrum mix_spectra(const Spectrum& a, const Spectrum& b, double x);

/// mix_spectra restricted to two members of one kappa family (equal l2 / l4).
Spectrum kappa_family_mix(const Spectrum& a, const Spectrum& b, double x);

/// (1/3)|psi><psi| + (1/3)|01><01| + (1/3)|10><10|.
DensityMatrix rank3_psi_state(const PureStateParams& p);

/// Diagonal 2 x d state with the given weights on the computational basis.
DensityMatrix diagonal_state(std::span<const double> weights, std::size_t dim_b);
/// |k><k| in a 2 x d space.
DensityMatrix basis_projector(std::size_t k, std::size_t dim_b);

}  // namespace absep

#endif  // ABSEP_CONSTRUCTORS_HPP
