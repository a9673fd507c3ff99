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

// Spectral absolute-separability test for 2 x d states, maximal-ball
// membership, the PPT test, and the extreme / boundary / interior
// classification built on top of them.
//
// A state with eigenvalues l1 >= ... >= l2d is absolutely separable iff
//
//     l1 - l(2d-1) - 2 sqrt(l(2d-2) * l2d) <= 0.
//
// The left-hand side is what `eq1_lhs` returns.

#ifndef ABSEP_CRITERIA_HPP
#define ABSEP_CRITERIA_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "absep/linalg.hpp"

namespace absep {

/// |eq1_lhs| at or below this counts as the boundary of the set.
inline constexpr double kBoundaryBand = 1e-9;
/// Partial-transpose eigenvalues below -kNptTolerance certify entanglement.
inline constexpr double kNptTolerance = 1e-12;
inline constexpr double kBallSlack = 1e-12;
/// Equality band for the nonzero eigenvalues of a rank-(2d-1) extreme point.
inline constexpr double kExtremeTolerance = 1e-9;

enum class EntanglementStatus { NptEntangled, PptSeparableExact, PptUndecided };
enum class AbsSepClass { NotAbsSep, AbsBoundary, AbsInterior };

std::string_view to_string(EntanglementStatus status);
std::string_view to_string(AbsSepClass cls);

struct PptResult {
  double pt_min_eig;
  EntanglementStatus status;
};

struct ClassificationReport {
  std::size_t dim_a = 2;
  std::size_t dim_b = 2;
  std::size_t rank = 0;
  double eq1_lhs = 0.0;
  double purity = 0.0;
  bool in_maximal_ball = false;
  double pt_min_eig = 0.0;
  EntanglementStatus entanglement_status = EntanglementStatus::PptUndecided;
  AbsSepClass absep_class = AbsSepClass::NotAbsSep;
  bool is_extreme_certified = false;
  std::vector<double> spectrum;
};

struct InteriorDecomposition {
  double epsilon;
  Spectrum boundary_spectrum;
  double mixing_weight;  // 2d * epsilon, the weight of the maximally mixed state
};

/// Throws DomainError unless s has exactly 2d entries.
double eq1_lhs(const Spectrum& s, std::size_t d);
bool is_absolutely_separable(const Spectrum& s, std::size_t d, double band = kBoundaryBand);

/// Purity radius of the maximal ball in 2 x d: 1 / (2d - 1).
double maximal_ball_purity(std::size_t d);
bool in_maximal_ball(const DensityMatrix& rho);

/// Minimum eigenvalue of the partial transpose and the verdict it supports.
/// PPT is only conclusive for d <= 3.
PptResult entanglement_status(const DensityMatrix& rho);

/// Rank 2d - 1 with every nonzero eigenvalue equal to 1 / (2d - 1).
bool is_certified_extreme(const Spectrum& s, std::size_t d);

AbsSepClass absep_class(double lhs, double band = kBoundaryBand);

ClassificationReport classify(const DensityMatrix& rho, double band = kBoundaryBand);

/// Writes an interior spectrum as (1 - 2d eps) sigma + 2d eps (I / 2d) with
/// sigma on the boundary. eps is the smaller root of
///   (l(2d-2) - eps)(l2d - eps) = ((l1 - l(2d-1)) / 2)^2,
/// which lies in (0, l2d]. Rejects boundary, exterior and maximally mixed input.
InteriorDecomposition interior_decompose(const Spectrum& s, std::size_t d);

}  // namespace absep

#endif  // ABSEP_CRITERIA_HPP
